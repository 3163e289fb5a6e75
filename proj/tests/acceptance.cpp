// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "brute_force.hpp"

#include <ilpk/corpus.hpp>
#include <ilpk/cover_kernel.hpp>
#include <ilpk/error.hpp>
#include <ilpk/gadgets.hpp>
#include <ilpk/packing_kernel.hpp>
#include <ilpk/trivial_kernels.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

using namespace ilpk;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string detail;
        std::vector<std::string> failures;

        auto fail(const std::string & why) -> void
        {
            pass = false;
            if (failures.size() < 5)
                failures.push_back(why);
        }
    };

    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto run(int id, const std::string & name, double limit_seconds, const std::function<Outcome()> & body) -> bool
    {
        auto start = Clock::now();
        Outcome o;
        try {
            o = body();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double took = seconds_since(start);
        if (limit_seconds > 0 && took > limit_seconds)
            o.fail("took " + std::to_string(took) + " s, limit " + std::to_string(limit_seconds) + " s");
        char line[512];
        std::snprintf(line, sizeof line, "%s %2d %s: %s (%.2f s)", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), took);
        std::cout << line << std::endl;
        for (const auto & f : o.failures)
            std::cout << "        " << f << std::endl;
        return o.pass;
    }

    auto str(const Integer & v) -> std::string
    {
        return to_string(v);
    }

    auto yes(const OracleVerdict & v) -> bool
    {
        return v.decision == Decision::yes;
    }

    auto binom2(std::size_t n) -> std::size_t
    {
        return n * (n - 1) / 2;
    }

    auto ceil_log2(std::size_t x) -> std::size_t
    {
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < x)
            ++bits;
        return bits;
    }

    // 1
    auto power_gadget_exactness() -> Outcome
    {
        Outcome o;
        std::size_t cases = 0;
        for (std::int64_t b_max = 0; b_max <= 3; ++b_max)
            for (std::size_t p_max = 0; p_max <= 4; ++p_max) {
                ++cases;
                IlpInstance inst;
                auto a = inst.add_var(), b = inst.add_var(), p = inst.add_var();
                auto h = power_gadget(inst, a, b, b_max, p, p_max);
                std::string tag = "b_max=" + std::to_string(b_max) + " p_max=" + std::to_string(p_max);
                std::size_t ell = std::max<std::size_t>(1, ceil_log2(p_max + 1));
                std::size_t want_rows = b_max == 0 ? 4 : 6 * ell + 7;
                std::size_t want_aux = b_max == 0 ? 0 : 2 * ell - 1;
                if (h.num_constraints != want_rows || inst.constraints.size() != want_rows)
                    o.fail(tag + ": " + std::to_string(h.num_constraints) + " rows, expected " + std::to_string(want_rows));
                if (h.aux_count() != want_aux || inst.num_vars != 3 + want_aux)
                    o.fail(tag + ": " + std::to_string(h.aux_count()) + " aux, expected " + std::to_string(want_aux));
                Integer top = Integer(b_max) * pow2(p_max);
                Box box{{-1, top + 1}, {-1, b_max + 1}, {-1, Integer(p_max) + 1}};
                for (const auto & [v, r] : h.aux_ranges())
                    box.push_back(r);
                std::set<std::tuple<Integer, Integer, Integer>> got, want;
                (void)enumerate_feasible(inst, box, default_node_cap, [&](std::span<const Integer> x) {
                    got.emplace(x[0], x[1], x[2]);
                    return true;
                });
                for (std::int64_t bv = 0; bv <= b_max; ++bv)
                    for (std::size_t pv = 0; pv <= p_max; ++pv)
                        want.emplace(Integer(bv) * pow2(pv), bv, pv);
                if (got != want)
                    o.fail(tag + ": " + std::to_string(got.size()) + " projections, expected " + std::to_string(want.size()));
            }
        o.detail = std::to_string(cases) + " (b_max, p_max) pairs";
        return o;
    }

    struct ComposeCase
    {
        std::vector<GraphInstance> graphs;
        std::size_t t, n;
    };

    auto compose_corpus() -> std::vector<ComposeCase>
    {
        std::vector<ComposeCase> cases;
        CorpusRng rng(20240601);
        for (std::size_t t : {1, 2, 4})
            for (std::size_t n : {3, 4})
                for (std::size_t k : {1, 2})
                    for (int rep = 0; rep < 5; ++rep) {
                        ComposeCase c{{}, t, n};
                        // dense graphs keep the k = 2 answers mixed
                        for (std::size_t g = 0; g < t; ++g)
                            c.graphs.push_back(random_graph(rng, n, k, static_cast<unsigned>(rng.between(70, 100))));
                        cases.push_back(std::move(c));
                    }
        return cases;
    }

    // 2
    auto composition_correctness(const std::vector<ComposeCase> & corpus) -> Outcome
    {
        Outcome o;
        std::size_t yes_count = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto & c = corpus[i];
            bool expected = false;
            for (const auto & g : c.graphs)
                expected = expected || brute::has_independent_set(g);
            auto comp = cross_compose(c.graphs);
            auto v = solve_feasibility(comp.instance, comp.box);
            yes_count += yes(v);
            if (yes(v) != expected)
                o.fail("corpus " + std::to_string(i) + ": composed " + std::string(to_string(v.decision)) + ", OR of inputs " + (expected ? "YES" : "NO"));
            if (v.witness && ! is_feasible(comp.instance, *v.witness))
                o.fail("corpus " + std::to_string(i) + ": witness fails re-check");
        }
        o.detail = std::to_string(corpus.size()) + " corpora, " + std::to_string(yes_count) + " YES";
        return o;
    }

    // 3
    auto composition_tally(const std::vector<ComposeCase> & corpus) -> Outcome
    {
        Outcome o;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto & c = corpus[i];
            auto comp = cross_compose(c.graphs);
            std::size_t ell = std::max<std::size_t>(1, ceil_log2(c.t));
            std::size_t pairs = binom2(c.n);
            // per pair: e, alpha, beta, gamma, delta, epsilon, b' and three gadgets' auxiliaries
            std::size_t vars = 2 + c.n + pairs * (7 + 3 * (2 * ell - 1));
            // per pair: three gadgets and six linking rows; global: one = 1 twice, 2n vertex ranges, target
            std::size_t rows = 3 + 2 * c.n + pairs * (3 * (6 * ell + 7) + 6);
            if (comp.instance.num_vars != vars || comp.instance.constraints.size() != rows)
                o.fail("corpus " + std::to_string(i) + ": " + std::to_string(comp.instance.num_vars) + "/" + std::to_string(comp.instance.constraints.size())
                    + " vars/rows, expected " + std::to_string(vars) + "/" + std::to_string(rows));
        }
        o.detail = std::to_string(corpus.size()) + " corpora match the closed form exactly";
        return o;
    }

    auto general_corpus() -> std::vector<GeneralSample>
    {
        CorpusRng rng(777);
        std::vector<GeneralSample> out;
        for (int i = 0; i < 100; ++i)
            out.push_back(random_general(rng, GeneralParams{}));
        return out;
    }

    // 4
    auto sparsifier(const std::vector<GeneralSample> & corpus) -> Outcome
    {
        Outcome o;
        std::size_t feasible = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto & s = corpus[i];
            auto sp = sparsify_3(s.instance);
            auto stats = compute_stats(sp.instance);
            if (stats.row_sparseness > 3 || stats.column_sparseness > 3)
                o.fail("instance " + std::to_string(i) + ": r=" + std::to_string(stats.row_sparseness) + " q=" + std::to_string(stats.column_sparseness));
            bool before = yes(solve_feasibility(s.instance, s.box));
            bool after = yes(solve_feasibility(sp.instance, sp.lift_box(s.box)));
            feasible += before;
            if (before != after || before != brute::feasible(s.instance, s.box))
                o.fail("instance " + std::to_string(i) + ": verdict changed");
        }
        o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(feasible) + " feasible";
        return o;
    }

    // 5
    auto covering_transformation(const std::vector<GeneralSample> & corpus) -> Outcome
    {
        Outcome o;
        std::size_t feasible = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto & s = corpus[i];
            std::vector<Integer> bounds;
            for (const auto & r : s.box)
                bounds.push_back(r.hi);
            auto c = to_cover(s.instance, bounds);
            std::string tag = "instance " + std::to_string(i) + ": ";
            validate(c.instance);
            std::size_t n = s.instance.num_vars, m = s.instance.constraints.size();
            if (c.instance.sense != Sense::cover || c.instance.num_vars != 2 * n || c.instance.constraints.size() > n + 2 * m)
                o.fail(tag + "shape " + std::to_string(c.instance.num_vars) + " vars, " + std::to_string(c.instance.constraints.size()) + " rows");
            for (const auto & row : c.instance.constraints) {
                bool ok = row.rel == Relation::ge && row.rhs >= 0;
                for (const auto & t : row.terms)
                    ok = ok && t.coeff > 0;
                if (! ok)
                    o.fail(tag + "row is not a nonnegative GE row");
            }
            bool before = yes(solve_feasibility(s.instance, s.box));
            bool after = yes(solve(c.instance));
            feasible += before;
            if (before != after || before != brute::feasible(s.instance, s.box))
                o.fail(tag + "verdict changed");
        }
        o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(feasible) + " feasible";
        return o;
    }

    auto with_random_bounds(CorpusRng & rng, CoverPackInstance inst) -> CoverPackInstance
    {
        if (! rng.chance(30))
            return inst;
        inst.upper_bounds.assign(inst.num_vars, std::nullopt);
        for (auto & ub : inst.upper_bounds)
            if (rng.chance(50))
                ub = Integer(rng.between(0, 2));
        return inst;
    }

    // With n <= 12 only r = 2, k = 1 can exceed the sunflower threshold 2!(t-1)^2 = 32 scopes,
    // so these families use more than 32 distinct pairs over 12 variables.
    auto dense_pairs(CorpusRng & rng) -> CoverPackInstance
    {
        CoverPackInstance inst;
        inst.num_vars = 12;
        inst.budget = 1;
        inst.cost.assign(12, 1);
        std::set<Scope> scopes;
        // pairs touching the hubs 0..3 have no 5 disjoint members, which forces a nonempty core
        bool hubs = rng.chance(50);
        auto want = static_cast<std::size_t>(hubs ? rng.between(33, 38) : rng.between(36, 60));
        while (scopes.size() < want) {
            auto pick = rng.distinct(12, 2);
            if (! hubs || pick[0] < 4)
                scopes.insert(Scope(pick.begin(), pick.end()));
        }
        for (const auto & scope : scopes) {
            auto copies = rng.between(1, 2);
            for (std::int64_t c = 0; c < copies; ++c)
                inst.constraints.push_back(make_constraint({{scope[0], rng.between(1, 2)}, {scope[1], rng.between(1, 2)}}, Relation::ge, rng.between(1, 2)));
        }
        return inst;
    }

    auto cover_corpus() -> std::vector<CoverPackInstance>
    {
        CorpusRng rng(31337);
        std::vector<CoverPackInstance> out;
        for (int i = 0; i < 300; ++i) {
            CoverPackParams p;
            p.max_vars = 12;
            p.max_row = static_cast<std::size_t>(rng.between(2, 3));
            p.k = rng.between(1, 2);
            p.max_constraints = 16;
            if (rng.chance(33)) {
                out.push_back(dense_pairs(rng));
                continue;
            }
            p.max_coeff = 2;
            p.max_rhs = 3;
            p.max_cost = 2;
            out.push_back(with_random_bounds(rng, random_cover_pack(rng, p)));
        }
        return out;
    }

    auto max_per_scope(const CoverPackInstance & inst) -> std::pair<std::size_t, bool>
    {
        std::map<Scope, std::size_t> count;
        bool within = true;
        for (const auto & c : inst.constraints)
            ++count[c.scope()];
        std::size_t worst = 0;
        for (const auto & [scope, n] : count) {
            worst = std::max(worst, n);
            Integer cap = 1;
            for (std::size_t d = 0; d < scope.size(); ++d)
                cap *= inst.budget + 1;
            within = within && Integer(n) <= cap;
        }
        return {worst, within};
    }

    auto has_rule(const ReductionReport & r, const std::string & rule) -> bool
    {
        return std::any_of(r.steps.begin(), r.steps.end(), [&](const ReductionStep & s) { return s.rule == rule; });
    }

    // 6
    auto cover_kernel(const std::vector<CoverPackInstance> & corpus) -> Outcome
    {
        Outcome o;
        std::size_t marking_runs = 0, empty_core = 0, decided = 0, checked_brute = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto & inst = corpus[i];
            std::string tag = "instance " + std::to_string(i) + ": ";
            auto truth = solve(inst).decision;
            auto box = brute::search_box(inst);
            Integer points = 1;
            for (const auto & r : box)
                points *= r.hi - r.lo + 1;
            if (points <= 200000) {
                ++checked_brute;
                if (brute::solution_exists(inst) != (truth == Decision::yes))
                    o.fail(tag + "oracle disagrees with naive enumeration");
            }
            auto basic = basic_reduce_cover(inst);
            auto [worst, within] = max_per_scope(basic.instance);
            if (! within)
                o.fail(tag + "a scope keeps " + std::to_string(worst) + " constraints after basic reduction");
            auto kernel = kernelize_cover(inst);
            auto kqr = reduce_cover_kqr(kernel.instance);
            for (const auto & [stage, out] : {std::pair{"basic", &basic.instance}, {"sunflower", &kernel.instance}, {"full", &kqr.instance}})
                if (solve(*out).decision != truth)
                    o.fail(tag + stage + " stage changed the verdict");
            marking_runs += has_rule(kernel.report, "sunflower-marking");
            empty_core += has_rule(kernel.report, "sunflower-empty-core");
            decided += kernel.report.early_decision.has_value();
            auto r = compute_stats(inst).row_sparseness;
            Integer bound = cover_kernel_bound(r, inst.budget);
            if (Integer(kernel.instance.constraints.size()) > bound || Integer(kernel.instance.num_vars) > bound * r)
                o.fail(tag + "kernel has " + std::to_string(kernel.instance.constraints.size()) + " rows, bound " + str(bound));
        }
        o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(marking_runs) + " used sunflower marking, " + std::to_string(empty_core) + " closed by an empty core, " + std::to_string(decided)
            + " decided early, " + std::to_string(checked_brute) + " also brute-forced";
        return o;
    }

    // 7
    auto packing_reduction() -> Outcome
    {
        Outcome o;
        CorpusRng rng(4242);
        std::size_t decided = 0;
        for (int i = 0; i < 300; ++i) {
            CoverPackParams p;
            p.sense = Sense::packing;
            p.max_vars = 10;
            p.max_constraints = 10;
            p.max_row = static_cast<std::size_t>(rng.between(1, 3));
            p.max_column = static_cast<std::size_t>(rng.between(1, 3));
            p.k = rng.between(0, 3);
            p.max_cost = 3;
            auto inst = random_cover_pack(rng, p);
            std::string tag = "instance " + std::to_string(i) + ": ";
            auto s = compute_stats(inst);
            auto r = basic_reduce_packing(inst);
            decided += r.report.early_decision.has_value();
            if (solve(r.instance).decision != solve(inst).decision || brute::solution_exists(inst) != yes(solve(inst)))
                o.fail(tag + "verdict changed");
            Integer kq = inst.budget * s.column_sparseness;
            if (Integer(r.instance.num_vars) > kq * s.row_sparseness || Integer(r.instance.constraints.size()) > kq * s.column_sparseness * s.row_sparseness)
                o.fail(tag + "size " + std::to_string(r.instance.num_vars) + "x" + std::to_string(r.instance.constraints.size()) + " over the bound");
            for (const auto & c : r.instance.cost)
                if (c < 1 || c > r.instance.budget - 1)
                    o.fail(tag + "surviving cost " + str(c) + " outside 1..k-1");
        }
        o.detail = "300 instances, " + std::to_string(decided) + " decided early";
        return o;
    }

    // 8
    auto cover_kqr() -> Outcome
    {
        Outcome o;
        CorpusRng rng(8888);
        std::size_t decided = 0;
        for (int i = 0; i < 300; ++i) {
            CoverPackParams p;
            p.max_vars = 12;
            p.max_constraints = 12;
            p.max_row = static_cast<std::size_t>(rng.between(2, 3));
            p.max_column = static_cast<std::size_t>(rng.between(1, 3));
            p.k = rng.between(1, 3);
            auto inst = with_random_bounds(rng, random_cover_pack(rng, p));
            std::string tag = "instance " + std::to_string(i) + ": ";
            auto s = compute_stats(inst);
            auto r = reduce_cover_kqr(inst);
            decided += r.report.early_decision.has_value();
            if (solve(r.instance).decision != solve(inst).decision)
                o.fail(tag + "verdict changed");
            Integer kq = inst.budget * s.column_sparseness;
            if (Integer(r.instance.constraints.size()) > kq || Integer(r.instance.num_vars) > kq * s.row_sparseness)
                o.fail(tag + "size " + std::to_string(r.instance.num_vars) + "x" + std::to_string(r.instance.constraints.size()) + " over the bound");
        }
        o.detail = "300 instances, " + std::to_string(decided) + " decided early";
        return o;
    }

    // Branching factor after cost-zero cleanup: rows a cost-zero unbounded variable can satisfy
    // are gone, and only variables with positive cost are ever incremented.
    auto branching_width(const CoverPackInstance & inst) -> std::size_t
    {
        std::size_t width = 1;
        for (const auto & c : inst.constraints) {
            bool free_row = false;
            std::size_t paid = 0;
            for (const auto & t : c.terms) {
                if (inst.cost[t.var] == 0 && ! inst.upper_bound(t.var))
                    free_row = true;
                paid += inst.cost[t.var] > 0;
            }
            if (! free_row)
                width = std::max(width, paid);
        }
        return width;
    }

    // 9
    auto branch_solver(const std::vector<CoverPackInstance> & corpus) -> Outcome
    {
        Outcome o;
        std::uint64_t most = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto & inst = corpus[i];
            auto b = branch_solve_cover(inst);
            if (b.verdict.decision != solve_cover(inst).decision)
                o.fail("instance " + std::to_string(i) + ": branch verdict differs");
            if (b.verdict.witness && ! is_solution(inst, *b.verdict.witness))
                o.fail("instance " + std::to_string(i) + ": branch witness fails re-check");
            Integer cap = boost::multiprecision::pow(Integer(branching_width(inst)), to_size(inst.budget, "k"));
            if (Integer(b.leaves) > cap)
                o.fail("instance " + std::to_string(i) + ": " + std::to_string(b.leaves) + " leaves, bound " + str(cap));
            most = std::max(most, b.leaves);
        }
        o.detail = std::to_string(corpus.size()) + " instances, at most " + std::to_string(most) + " leaves";
        return o;
    }

    auto table_sizes_exact(const TableInstance & t) -> bool
    {
        for (const auto & table : t.tables) {
            Integer want = 1;
            for (std::size_t d = 0; d < table.scope.size(); ++d)
                want *= t.budget + 1;
            if (Integer(table.bits.size()) != want)
                return false;
        }
        return true;
    }

    // 10
    auto compression() -> Outcome
    {
        Outcome o;
        CorpusRng rng(1010);
        std::size_t tables = 0;
        for (auto sense : {Sense::cover, Sense::packing})
            for (int i = 0; i < 200; ++i) {
                CoverPackParams p;
                p.sense = sense;
                p.max_vars = 8;
                p.max_constraints = 8;
                p.max_row = 3;
                p.k = rng.between(0, 3);
                p.max_cost = 3;
                auto inst = random_cover_pack(rng, p);
                std::string tag = std::string(to_string(sense)) + " instance " + std::to_string(i) + ": ";
                TableInstance t;
                if (sense == Sense::cover) {
                    inst = with_random_bounds(rng, inst);
                    t = compress_cover(basic_reduce_cover(inst).instance);
                }
                else
                    t = compress_packing(inst);
                tables += t.tables.size();
                if (solve_table(t).decision != solve(inst).decision)
                    o.fail(tag + "table verdict differs");
                if (! table_sizes_exact(t))
                    o.fail(tag + "a table is not (k+1)^d bits");
            }
        o.detail = "200 cover and 200 packing instances, " + std::to_string(tables) + " tables";
        return o;
    }

    // 11
    auto hardness_generators() -> Outcome
    {
        Outcome o;
        CorpusRng rng(1111);
        std::size_t ss_yes = 0, is_yes = 0, hs_yes = 0;
        for (int i = 0; i < 100; ++i) {
            auto s = random_subset_sum(rng, 10, 30, 4);
            bool truth = brute::has_subset_sum(s);
            ss_yes += truth;
            if (yes(solve(subset_sum_to_packing(s))) != truth)
                o.fail("subset sum " + std::to_string(i) + ": packing encoding disagrees");
            if (yes(solve(subset_sum_to_cover(s))) != truth)
                o.fail("subset sum " + std::to_string(i) + ": cover encoding disagrees");
        }
        for (int i = 0; i < 100; ++i) {
            auto n = static_cast<std::size_t>(rng.between(1, 8));
            auto g = random_graph(rng, n, static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(n))), static_cast<unsigned>(rng.between(10, 80)));
            bool truth = brute::has_independent_set(g);
            is_yes += truth;
            if (yes(solve(independent_set_to_packing(g))) != truth)
                o.fail("graph " + std::to_string(i) + ": packing encoding disagrees");
        }
        for (int i = 0; i < 100; ++i) {
            auto h = random_hitting_set(rng, 9, 8, 3, 4);
            bool truth = brute::has_hitting_set(h);
            hs_yes += truth;
            if (yes(solve(hitting_set_to_cover(h))) != truth)
                o.fail("hitting set " + std::to_string(i) + ": cover encoding disagrees");
        }
        o.detail = "YES counts: subset sum " + std::to_string(ss_yes) + "/100, independent set " + std::to_string(is_yes) + "/100, hitting set "
            + std::to_string(hs_yes) + "/100";
        return o;
    }

    auto saturated(std::size_t n, std::size_t r, std::int64_t c) -> IlpInstance
    {
        IlpInstance inst;
        for (std::size_t v = 0; v < n; ++v)
            inst.add_var();
        std::vector<Constraint> rows;
        // every scope of size <= r, every nonzero coefficient vector and rhs in [-c, c]
        brute::for_each_subset(n, [&](const std::vector<std::size_t> & scope) {
            if (scope.size() > r)
                return true;
            Box coeff_box(scope.size(), Range{-c, c - 1});
            brute::each_point(coeff_box, [&](const std::vector<Integer> & raw) {
                std::vector<Term> terms;
                for (std::size_t i = 0; i < scope.size(); ++i)
                    terms.push_back(Term{scope[i], raw[i] >= 0 ? raw[i] + 1 : raw[i]});
                for (auto rel : {Relation::le, Relation::ge, Relation::eq})
                    for (std::int64_t rhs = -c; rhs <= c; ++rhs)
                        rows.push_back(make_constraint(terms, rel, rhs));
                return true;
            });
            return true;
        });
        // twice, so deduplication has work to do
        for (int copy = 0; copy < 2; ++copy)
            for (const auto & row : rows)
                inst.constraints.push_back(row);
        return inst;
    }

    // 12
    auto trivial_kernels() -> Outcome
    {
        Outcome o;
        std::ostringstream sizes;
        for (auto [n, r, c] : {std::tuple<std::size_t, std::size_t, std::int64_t>{2, 1, 1}, {2, 2, 1}, {3, 2, 1}, {2, 1, 2}, {3, 3, 1}}) {
            auto inst = saturated(n, r, c);
            auto stats = compute_stats(inst);
            auto d = dedup_constraints(inst);
            Integer bound = dedup_bound(n, stats.row_sparseness, stats.max_abs_coeff);
            sizes << (sizes.tellp() ? ", " : "") << d.instance.constraints.size() << "<=" << str(bound);
            if (stats.row_sparseness != r || stats.max_abs_coeff != c || Integer(d.instance.constraints.size()) > bound)
                o.fail("saturated n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + std::to_string(d.instance.constraints.size()) + " > " + str(bound));
            if (d.instance.constraints.size() * 2 != inst.constraints.size())
                o.fail("saturated n=" + std::to_string(n) + ": duplicates left behind");
        }

        CorpusRng rng(1212);
        std::size_t merged_away = 0, lifted = 0;
        for (int i = 0; i < 100; ++i) {
            auto s = random_general(rng, GeneralParams{4, 4, 2, 4, 2});
            std::string tag = "instance " + std::to_string(i) + ": ";

            // dedup: repeat a few rows
            auto dup = s.instance;
            for (std::size_t j = 0; j < dup.constraints.size() && j < 2; ++j)
                dup.constraints.push_back(dup.constraints[j]);
            auto d = dedup_constraints(dup);
            if (yes(solve_feasibility(d.instance, s.box)) != yes(solve_feasibility(dup, s.box)))
                o.fail(tag + "dedup changed the verdict");

            // merge: append copies of existing columns
            auto wide = s.instance;
            Box box = s.box;
            auto copies = static_cast<std::size_t>(rng.between(1, 2));
            for (std::size_t j = 0; j < copies; ++j) {
                auto source = static_cast<VarIndex>(rng.between(0, static_cast<std::int64_t>(s.instance.num_vars - 1)));
                auto v = wide.add_var();
                for (auto & row : wide.constraints)
                    if (auto a = row.coeff_of(source); a != 0) {
                        row.terms.push_back(Term{v, a});
                        sort_terms(row);
                    }
                box.push_back(box[source]);
            }
            validate(wide);
            auto m = merge_pattern_variables(wide);
            merged_away += wide.num_vars - m.instance.num_vars;
            Box merged_box(m.instance.num_vars, Range{0, 0});
            for (VarIndex v = 0; v < wide.num_vars; ++v)
                merged_box[m.survivor_of[v]].hi += box[v].hi;
            auto before = solve_feasibility(wide, box);
            auto after = solve_feasibility(m.instance, merged_box);
            if (before.decision != after.decision)
                o.fail(tag + "merge changed the verdict");
            if (after.witness) {
                auto x = lift_merged_witness(*after.witness, m.survivor_of);
                if (! is_feasible(wide, x))
                    o.fail(tag + "lifted witness fails the original");
                else
                    ++lifted;
            }
        }
        o.detail = "saturated sizes " + sizes.str() + "; 100 merge instances, " + std::to_string(merged_away) + " variables merged, " + std::to_string(lifted)
            + " witnesses lifted";
        return o;
    }

    // 13
    auto end_to_end() -> Outcome
    {
        Outcome o;
        CorpusRng rng(1313);
        std::size_t runs = 0, yes_count = 0;
        for (std::size_t k : {1, 2, 3})
            for (int rep = 0; rep < 6; ++rep) {
                std::vector<GraphInstance> graphs{random_graph(rng, 3, k, 60), random_graph(rng, 3, k, 60)};
                bool expected = brute::has_independent_set(graphs[0]) || brute::has_independent_set(graphs[1]);
                auto comp = cross_compose(graphs);
                std::vector<Integer> bounds;
                for (const auto & r : comp.box)
                    bounds.push_back(r.hi);
                auto cover = to_cover(comp.instance, bounds);
                auto v = solve(cover.instance);
                ++runs;
                yes_count += yes(v);
                if (yes(v) != expected)
                    o.fail("k=" + std::to_string(k) + " run " + std::to_string(rep) + ": cover " + std::string(to_string(v.decision)) + ", expected "
                        + (expected ? "YES" : "NO"));
            }
        o.detail = std::to_string(runs) + " t=2, n=3 pipelines, " + std::to_string(yes_count) + " YES";
        return o;
    }
}

auto main() -> int
{
    bool all = true;
    auto compose = compose_corpus();
    auto general = general_corpus();
    auto covers = cover_corpus();
    all &= run(1, "power gadget exactness", 10, power_gadget_exactness);
    all &= run(2, "cross-composition correctness", 300, [&] { return composition_correctness(compose); });
    all &= run(3, "cross-composition size tally", 0, [&] { return composition_tally(compose); });
    all &= run(4, "sparsifier", 0, [&] { return sparsifier(general); });
    all &= run(5, "covering transformation", 0, [&] { return covering_transformation(general); });
    all &= run(6, "cover kernel", 600, [&] { return cover_kernel(covers); });
    all &= run(7, "packing reduction", 0, packing_reduction);
    all &= run(8, "cover k+q+r reduction", 0, cover_kqr);
    all &= run(9, "branch solver", 0, [&] { return branch_solver(covers); });
    all &= run(10, "compression roundtrip", 0, compression);
    all &= run(11, "hardness-reduction generators", 0, hardness_generators);
    all &= run(12, "trivial kernels", 0, trivial_kernels);
    all &= run(13, "end-to-end pipeline", 120, end_to_end);
    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}
