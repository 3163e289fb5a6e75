// Command-line front end. Exit codes: 0 done or agreement, 10 YES, 20 NO, 1 verification
// disagreement, 2 usage, parse or validation error, 3 resource cap exceeded, 4 internal error.

#include <ilpk/corpus.hpp>
#include <ilpk/cover_kernel.hpp>
#include <ilpk/error.hpp>
#include <ilpk/gadgets.hpp>
#include <ilpk/io.hpp>
#include <ilpk/oracle.hpp>
#include <ilpk/packing_kernel.hpp>
#include <ilpk/trivial_kernels.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace ilpk;

namespace
{
    constexpr int exit_ok = 0, exit_disagree = 1, exit_usage = 2, exit_resource = 3, exit_internal = 4;
    constexpr int exit_yes = 10, exit_no = 20;

    auto decision_exit(Decision d) -> int
    {
        return d == Decision::yes ? exit_yes : exit_no;
    }

    auto usage(const std::string & what) -> Error
    {
        return Error(ErrorKind::invalid_input, what);
    }

    auto is_table_text(std::string_view text) -> bool
    {
        return text.substr(0, 6) == "tbl-v1";
    }

    struct KernelizeArgs
    {
        std::string in, out, report, tables, problem = "cover", pipeline = "full";
    };

    auto run_pipeline(const CoverPackInstance & inst, const std::string & pipeline) -> CoverPackReduction
    {
        if (inst.sense == Sense::packing) {
            if (pipeline != "basic" && pipeline != "full")
                throw usage("packing instances support the basic and full pipelines only");
            return basic_reduce_packing(inst);
        }
        if (pipeline == "basic")
            return basic_reduce_cover(inst);
        if (pipeline == "sunflower")
            return kernelize_cover(inst);
        if (pipeline == "kqr")
            return reduce_cover_kqr(inst);
        auto kernel = kernelize_cover(inst);
        if (kernel.report.early_decision)
            return kernel;
        auto kqr = reduce_cover_kqr(kernel.instance);
        kernel.report.absorb(kqr.report);
        kernel.instance = std::move(kqr.instance);
        return kernel;
    }

    auto cmd_kernelize(const KernelizeArgs & a) -> int
    {
        auto inst = parse_cover_pack(read_file(a.in));
        if (to_string(inst.sense) != a.problem)
            throw usage("--problem " + a.problem + " does not match instance kind " + std::string(to_string(inst.sense)));
        auto result = run_pipeline(inst, a.pipeline);
        result.report.note("pipeline", a.pipeline);
        result.report.note("input", a.in);
        if (! a.out.empty())
            write_file(a.out, serialize_instance(result.instance));
        if (! a.report.empty())
            write_file(a.report, serialize_report(result.report));
        if (! a.tables.empty()) {
            auto tables = result.instance.sense == Sense::cover ? compress_cover(result.instance) : compress_packing(result.instance);
            write_file(a.tables, serialize_table_instance(tables));
        }
        const auto & before = result.report.stats_before;
        const auto & after = result.report.stats_after;
        std::cout << "kernelize " << a.pipeline << ": n " << before.num_vars << " -> " << after.num_vars << ", m " << before.num_constraints
                  << " -> " << after.num_constraints << ", r " << after.row_sparseness << ", q " << after.column_sparseness << '\n';
        if (const auto & d = result.report.early_decision) {
            std::cout << "decided " << to_string(d->decision) << " by " << d->rule << ": " << d->reason << '\n';
            return decision_exit(d->decision);
        }
        return exit_ok;
    }

    struct SolveArgs
    {
        std::string in, out, box, method = "oracle";
        std::optional<std::uint64_t> node_cap;
    };

    auto cmd_solve(const SolveArgs & a) -> int
    {
        std::uint64_t cap = a.node_cap.value_or(node_cap_from_env());
        auto text = read_file(a.in);
        OracleVerdict verdict;
        std::string method = a.method;
        if (is_table_text(text)) {
            verdict = solve_table(parse_table_instance(text), cap);
            method = "table";
        }
        else {
            auto any = parse_instance(text);
            if (auto * general = std::get_if<IlpInstance>(&any)) {
                if (a.box.empty())
                    throw usage("general instances need --box");
                verdict = solve_feasibility(*general, parse_box(read_file(a.box)), cap);
            }
            else {
                const auto & inst = std::get<CoverPackInstance>(any);
                if (a.method == "branch") {
                    if (inst.sense != Sense::cover)
                        throw usage("--method branch needs a cover instance");
                    auto result = branch_solve_cover(inst);
                    verdict = result.verdict;
                    std::cout << "leaves " << result.leaves << '\n';
                }
                else
                    verdict = solve(inst, cap);
            }
        }
        if (! a.out.empty())
            write_file(a.out, serialize_verdict(verdict, method));
        std::cout << to_string(verdict.decision) << " (" << method << ", " << verdict.nodes_explored << " nodes)\n";
        return decision_exit(verdict.decision);
    }

    struct ComposeArgs
    {
        std::vector<std::string> graphs;
        std::string out, box_out, report;
    };

    auto graph_files(const std::vector<std::string> & inputs) -> std::vector<std::string>
    {
        std::vector<std::string> files;
        for (const auto & in : inputs) {
            if (fs::is_directory(in)) {
                std::vector<std::string> found;
                for (const auto & entry : fs::directory_iterator(in))
                    if (entry.is_regular_file() && entry.path().extension() == ".json")
                        found.push_back(entry.path().string());
                std::sort(found.begin(), found.end());
                files.insert(files.end(), found.begin(), found.end());
            }
            else
                files.push_back(in);
        }
        if (files.empty())
            throw usage("no graph files found");
        return files;
    }

    auto cmd_compose(const ComposeArgs & a) -> int
    {
        std::vector<GraphInstance> graphs;
        for (const auto & f : graph_files(a.graphs))
            graphs.push_back(parse_graph(read_file(f)));
        auto comp = cross_compose(graphs);
        write_file(a.out, serialize_instance(comp.instance));
        write_file(a.box_out, serialize_box(comp.box));
        if (! a.report.empty())
            write_file(a.report, serialize_report(comp.report));
        std::cout << "composed " << graphs.size() << " graphs (padded to " << comp.padded_count << "): " << comp.instance.num_vars << " variables, "
                  << comp.instance.constraints.size() << " constraints\n";
        return exit_ok;
    }

    struct TransformArgs
    {
        std::string op, in, out, box, box_out, map_out, report;
    };

    auto write_report(const std::string & path, const ReductionReport & report) -> void
    {
        if (! path.empty())
            write_file(path, serialize_report(report));
    }

    auto cmd_transform(const TransformArgs & a) -> int
    {
        auto text = read_file(a.in);
        if (a.op == "sparsify3") {
            auto result = sparsify_3(parse_general(text));
            write_file(a.out, serialize_instance(result.instance));
            if (! a.box.empty() && ! a.box_out.empty())
                write_file(a.box_out, serialize_box(result.lift_box(parse_box(read_file(a.box)))));
            write_report(a.report, result.report);
            const auto & s = result.report.stats_after;
            std::cout << "sparsify3: r " << s.row_sparseness << ", q " << s.column_sparseness << ", n " << s.num_vars << ", m " << s.num_constraints << '\n';
        }
        else if (a.op == "to-cover") {
            if (a.box.empty())
                throw usage("to-cover needs --box for the variable bounds");
            auto inst = parse_general(text);
            auto box = parse_box(read_file(a.box));
            if (box.size() != inst.num_vars)
                throw usage("box size differs from num_vars");
            std::vector<Integer> bounds;
            for (const auto & r : box) {
                if (r.lo != 0)
                    throw usage("to-cover needs boxes starting at 0");
                bounds.push_back(r.hi);
            }
            auto result = to_cover(inst, bounds);
            write_file(a.out, serialize_instance(result.instance));
            write_report(a.report, result.report);
            std::cout << "to-cover: " << result.instance.num_vars << " variables, " << result.instance.constraints.size() << " constraints, k " << result.instance.budget << '\n';
        }
        else if (a.op == "dedup") {
            auto result = dedup_constraints(parse_general(text));
            write_file(a.out, serialize_instance(result.instance));
            write_report(a.report, result.report);
            std::cout << "dedup: removed " << result.report.total_constraints_removed() << " constraints\n";
        }
        else if (a.op == "merge-patterns") {
            auto result = merge_pattern_variables(parse_general(text));
            write_file(a.out, serialize_instance(result.instance));
            if (! a.map_out.empty())
                write_file(a.map_out, serialize_merge_map(result.survivor_of));
            write_report(a.report, result.report);
            std::cout << "merge-patterns: removed " << result.report.total_variables_removed() << " variables\n";
        }
        else if (a.op == "is2pack")
            write_file(a.out, serialize_instance(independent_set_to_packing(parse_graph(text))));
        else if (a.op == "ss2pack")
            write_file(a.out, serialize_instance(subset_sum_to_packing(parse_subset_sum(text))));
        else if (a.op == "ss2cover")
            write_file(a.out, serialize_instance(subset_sum_to_cover(parse_subset_sum(text))));
        else if (a.op == "hs2cover")
            write_file(a.out, serialize_instance(hitting_set_to_cover(parse_hitting_set(text))));
        else
            throw usage("unknown --op " + a.op);
        return exit_ok;
    }

    struct LiftArgs
    {
        std::string map, verdict_in, out;
    };

    auto cmd_lift(const LiftArgs & a) -> int
    {
        auto survivor_of = parse_merge_map(read_file(a.map));
        std::istringstream in(read_file(a.verdict_in));
        std::vector<Integer> merged;
        for (std::string word; in >> word;) {
            Integer v;
            if (! parse_integer(word, v))
                throw Error(ErrorKind::parse_error, "witness entry \"" + word + "\" is not an integer");
            merged.push_back(v);
        }
        auto original = lift_merged_witness(merged, survivor_of);
        std::ostringstream out;
        for (std::size_t i = 0; i < original.size(); ++i)
            out << (i ? " " : "") << original[i];
        out << '\n';
        write_file(a.out, out.str());
        return exit_ok;
    }

    struct VerifyArgs
    {
        std::string before, after, box, after_box, report, problem = "cover", pipeline = "basic", corpus;
        std::optional<std::uint64_t> node_cap;
        std::uint64_t seed = 1;
        std::size_t count = 20;
        CoverPackParams params;
    };

    struct PairOutcome
    {
        std::string name, status;
        std::optional<Decision> before, after;
        std::optional<Assignment> witness;
        std::string note;
    };

    auto decide_any(const AnyInstance & inst, const std::string & box_path, std::uint64_t cap) -> OracleVerdict
    {
        if (const auto * general = std::get_if<IlpInstance>(&inst)) {
            if (box_path.empty())
                throw usage("general instances need a box");
            return solve_feasibility(*general, parse_box(read_file(box_path)), cap);
        }
        return solve(std::get<CoverPackInstance>(inst), cap);
    }

    auto compare(const std::string & name, const std::function<OracleVerdict()> & before, const std::function<OracleVerdict()> & after) -> PairOutcome
    {
        PairOutcome o;
        o.name = name;
        try {
            auto b = before();
            auto a = after();
            o.before = b.decision;
            o.after = a.decision;
            o.status = b.decision == a.decision ? "agree" : "disagree";
            if (b.decision != a.decision)
                o.witness = b.witness ? b.witness : a.witness;
        }
        catch (const Error & e) {
            if (e.kind() != ErrorKind::search_space_exceeded)
                throw;
            o.status = "skipped";
            o.note = e.what();
        }
        return o;
    }

    auto verify_report(const std::vector<PairOutcome> & outcomes, const VerifyArgs & a, bool corpus) -> std::string
    {
        std::size_t agree = 0, disagree = 0, skipped = 0;
        std::ostringstream out;
        out << "{\n  \"schema\": \"rep-v1\",\n  \"command\": \"verify\",\n";
        if (corpus)
            out << "  \"seed\": " << a.seed << ",\n  \"count\": " << a.count << ",\n  \"pipeline\": \"" << a.pipeline << "\",\n";
        out << "  \"pairs\": [";
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            const auto & o = outcomes[i];
            agree += o.status == "agree";
            disagree += o.status == "disagree";
            skipped += o.status == "skipped";
            out << (i ? ",\n" : "\n") << "    {\"name\": \"" << o.name << "\", \"status\": \"" << o.status << "\"";
            if (o.before)
                out << ", \"before\": \"" << to_string(*o.before) << "\", \"after\": \"" << to_string(*o.after) << "\"";
            if (o.witness) {
                out << ", \"witness\": [";
                for (std::size_t j = 0; j < o.witness->size(); ++j)
                    out << (j ? ", " : "") << (*o.witness)[j];
                out << "]";
            }
            if (! o.note.empty())
                out << ", \"note\": \"" << o.note << "\"";
            out << "}";
        }
        out << (outcomes.empty() ? "]" : "\n  ]") << ",\n  \"agree\": " << agree << ",\n  \"disagree\": " << disagree << ",\n  \"skipped\": " << skipped << "\n}\n";
        return out.str();
    }

    auto cmd_verify(VerifyArgs a) -> int
    {
        std::uint64_t cap = a.node_cap.value_or(node_cap_from_env());
        std::vector<PairOutcome> outcomes;
        bool corpus = ! a.corpus.empty();
        if (corpus) {
            if (a.problem != "cover" && a.problem != "packing")
                throw usage("corpus mode supports --problem cover or packing");
            a.params.sense = a.problem == "cover" ? Sense::cover : Sense::packing;
            fs::create_directories(a.corpus);
            CorpusRng rng(a.seed);
            for (std::size_t i = 0; i < a.count; ++i) {
                auto before = random_cover_pack(rng, a.params);
                auto result = run_pipeline(before, a.pipeline);
                char name[32];
                std::snprintf(name, sizeof name, "inst-%04zu", i);
                write_file((fs::path(a.corpus) / (std::string(name) + ".before.json")).string(), serialize_instance(before));
                write_file((fs::path(a.corpus) / (std::string(name) + ".after.json")).string(), serialize_instance(result.instance));
                outcomes.push_back(compare(name, [&] { return solve(before, cap); }, [&] { return solve(result.instance, cap); }));
            }
        }
        else {
            if (a.before.empty() || a.after.empty())
                throw usage("verify needs --before and --after, or --corpus");
            auto before = parse_instance(read_file(a.before));
            auto after_text = read_file(a.after);
            std::string after_box = a.after_box.empty() ? a.box : a.after_box;
            if (is_table_text(after_text)) {
                auto tables = parse_table_instance(after_text);
                outcomes.push_back(compare(a.after, [&] { return decide_any(before, a.box, cap); }, [&] { return solve_table(tables, cap); }));
            }
            else {
                auto after = parse_instance(after_text);
                outcomes.push_back(compare(a.after, [&] { return decide_any(before, a.box, cap); }, [&] { return decide_any(after, after_box, cap); }));
            }
        }
        auto report = verify_report(outcomes, a, corpus);
        if (! a.report.empty())
            write_file(a.report, report);
        else if (corpus)
            write_file((fs::path(a.corpus) / "report.json").string(), report);
        std::size_t disagree = std::count_if(outcomes.begin(), outcomes.end(), [](const PairOutcome & o) { return o.status == "disagree"; });
        std::size_t skipped = std::count_if(outcomes.begin(), outcomes.end(), [](const PairOutcome & o) { return o.status == "skipped"; });
        std::cout << "verify: " << outcomes.size() << " pairs, " << disagree << " disagreements, " << skipped << " skipped\n";
        for (const auto & o : outcomes)
            if (o.status == "disagree")
                std::cout << "  " << o.name << ": before " << to_string(*o.before) << ", after " << to_string(*o.after) << '\n';
        return disagree == 0 ? exit_ok : exit_disagree;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"ilpk: kernelization and reduction toolkit for integer linear programs"};
    app.require_subcommand(1);

    KernelizeArgs ka;
    auto * kernelize = app.add_subcommand("kernelize", "Reduce a cover or packing instance");
    kernelize->add_option("--in", ka.in, "Instance file")->required();
    kernelize->add_option("--problem", ka.problem, "cover or packing")->check(CLI::IsMember({"cover", "packing"}));
    kernelize->add_option("--pipeline", ka.pipeline, "basic, sunflower, kqr or full")->check(CLI::IsMember({"basic", "sunflower", "kqr", "full"}));
    kernelize->add_option("--out", ka.out, "Reduced instance file");
    kernelize->add_option("--report", ka.report, "Report file (rep-v1)");
    kernelize->add_option("--tables", ka.tables, "Also write the compressed tbl-v1 form");

    SolveArgs sa;
    auto * solve_cmd = app.add_subcommand("solve", "Decide an instance");
    solve_cmd->add_option("--in", sa.in, "Instance or tbl-v1 file")->required();
    solve_cmd->add_option("--method", sa.method, "oracle or branch")->check(CLI::IsMember({"oracle", "branch"}));
    solve_cmd->add_option("--box", sa.box, "Variable box for general instances");
    solve_cmd->add_option("--node-cap", sa.node_cap, "Search node cap (default from ILPK_NODE_CAP or 10^7)");
    solve_cmd->add_option("--out", sa.out, "Verdict file");

    ComposeArgs ca;
    auto * compose = app.add_subcommand("compose", "Cross-compose independent-set graphs into one ILP");
    compose->add_option("--graphs", ca.graphs, "Graph files or directories")->required();
    compose->add_option("--out", ca.out, "Instance file")->required();
    compose->add_option("--box-out", ca.box_out, "Box sidecar file")->required();
    compose->add_option("--report", ca.report, "Report file");

    TransformArgs ta;
    auto * transform = app.add_subcommand("transform", "Apply a construction or trivial kernel");
    transform->add_option("--op", ta.op, "Operation")
        ->required()
        ->check(CLI::IsMember({"sparsify3", "to-cover", "dedup", "merge-patterns", "is2pack", "ss2pack", "ss2cover", "hs2cover"}));
    transform->add_option("--in", ta.in, "Input file")->required();
    transform->add_option("--out", ta.out, "Output instance file")->required();
    transform->add_option("--box", ta.box, "Input box (sparsify3, to-cover)");
    transform->add_option("--box-out", ta.box_out, "Output box (sparsify3)");
    transform->add_option("--map-out", ta.map_out, "Merge map (merge-patterns)");
    transform->add_option("--report", ta.report, "Report file");

    LiftArgs la;
    auto * lift = app.add_subcommand("lift", "Lift a merged witness back through a merge map");
    lift->add_option("--map", la.map, "Merge map file")->required();
    lift->add_option("--witness", la.verdict_in, "Whitespace-separated merged witness")->required();
    lift->add_option("--out", la.out, "Lifted witness file")->required();

    VerifyArgs va;
    auto * verify = app.add_subcommand("verify", "Check that instances have equal verdicts");
    verify->add_option("--before", va.before, "Original instance");
    verify->add_option("--after", va.after, "Transformed instance or tbl-v1 file");
    verify->add_option("--box", va.box, "Box for a general before instance");
    verify->add_option("--after-box", va.after_box, "Box for a general after instance (default: --box)");
    verify->add_option("--problem", va.problem, "cover, packing or general")->check(CLI::IsMember({"cover", "packing", "general"}));
    verify->add_option("--node-cap", va.node_cap, "Search node cap");
    verify->add_option("--report", va.report, "Report file");
    verify->add_option("--corpus", va.corpus, "Generate a seeded corpus into this directory and verify it");
    verify->add_option("--seed", va.seed, "Corpus seed");
    verify->add_option("--count", va.count, "Corpus size");
    verify->add_option("--pipeline", va.pipeline, "Pipeline applied in corpus mode")->check(CLI::IsMember({"basic", "sunflower", "kqr", "full"}));
    verify->add_option("--max-vars", va.params.max_vars, "Corpus: maximum variables")->capture_default_str();
    verify->add_option("--max-constraints", va.params.max_constraints, "Corpus: maximum constraints")->capture_default_str();
    verify->add_option("--min-row", va.params.min_row, "Corpus: minimum row size")->capture_default_str();
    verify->add_option("--max-row", va.params.max_row, "Corpus: maximum row size r")->capture_default_str();
    verify->add_option("--max-column", va.params.max_column, "Corpus: maximum column size q, 0 for none")->capture_default_str();
    verify->add_option("--k", va.params.k, "Corpus: budget k")->capture_default_str();
    verify->add_option("--max-coeff", va.params.max_coeff, "Corpus: maximum coefficient")->capture_default_str();
    verify->add_option("--max-rhs", va.params.max_rhs, "Corpus: maximum right-hand side")->capture_default_str();
    verify->add_option("--max-cost", va.params.max_cost, "Corpus: maximum cost")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*kernelize)
            return cmd_kernelize(ka);
        if (*solve_cmd)
            return cmd_solve(sa);
        if (*compose)
            return cmd_compose(ca);
        if (*transform)
            return cmd_transform(ta);
        if (*lift)
            return cmd_lift(la);
        if (*verify)
            return cmd_verify(va);
    }
    catch (const Error & e) {
        std::cerr << "ilpk: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::search_space_exceeded:
        case ErrorKind::table_too_large: return exit_resource;
        case ErrorKind::internal_error: return exit_internal;
        default: return exit_usage;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "ilpk: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
