#include "json.hpp"

#include <ilpk/error.hpp>
#include <ilpk/io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ilpk
{
    using namespace json;

    namespace
    {
        auto parse_relation(const Value & v, const std::string & where) -> Relation
        {
            const auto & s = as_string(v, where);
            if (s == "le")
                return Relation::le;
            if (s == "ge")
                return Relation::ge;
            if (s == "eq")
                return Relation::eq;
            fail(where + ": relation must be \"le\", \"ge\" or \"eq\", got \"" + s + "\"");
        }

        auto parse_constraints(const Value & list) -> std::vector<Constraint>
        {
            std::vector<Constraint> result;
            const auto & rows = as_array(list, "constraints");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::string where = "constraints[" + std::to_string(i) + "]";
                as_object(rows[i], where);
                only_keys(rows[i], {"coeffs", "rel", "rhs"});
                Constraint c;
                const auto & coeffs = as_array(require(rows[i], "coeffs"), where + ".coeffs");
                for (std::size_t j = 0; j < coeffs.size(); ++j) {
                    std::string at = where + ".coeffs[" + std::to_string(j) + "]";
                    const auto & pair = as_array(coeffs[j], at);
                    if (pair.size() != 2)
                        fail(at + ": expected [var, coef]");
                    const auto & var = as_integer(pair[0], at + "[0]");
                    if (var < 0)
                        throw Error(ErrorKind::validation_error, at + ": negative variable index " + to_string(var));
                    c.terms.push_back(Term{as_size(pair[0], at + "[0]"), as_integer(pair[1], at + "[1]")});
                }
                c.rel = parse_relation(require(rows[i], "rel"), where + ".rel");
                c.rhs = as_integer(require(rows[i], "rhs"), where + ".rhs");
                sort_terms(c);
                for (std::size_t j = 1; j < c.terms.size(); ++j)
                    if (c.terms[j - 1].var == c.terms[j].var)
                        throw Error(ErrorKind::validation_error, where + " lists variable " + std::to_string(c.terms[j].var) + " twice");
                result.push_back(std::move(c));
            }
            return result;
        }

        // Bound lists are either arrays of (integer | null) with one entry per variable, or
        // objects mapping decimal variable indices to integers.
        auto parse_bounds(const Value & v, std::size_t n, std::string_view name, std::optional<Integer> fill) -> std::vector<std::optional<Integer>>
        {
            std::vector<std::optional<Integer>> result(n, fill);
            std::string where(name);
            if (v.is_array()) {
                const auto & list = as_array(v, where);
                if (list.size() != n)
                    throw Error(ErrorKind::validation_error, where + " has " + std::to_string(list.size()) + " entries for " + std::to_string(n) + " variables");
                for (std::size_t i = 0; i < n; ++i)
                    result[i] = list[i].is_null() ? std::nullopt : std::optional<Integer>(as_integer(list[i], where + "[" + std::to_string(i) + "]"));
                return result;
            }
            for (const auto & [key, value] : as_object(v, where)) {
                Integer index;
                if (! parse_integer(key, index) || index < 0)
                    fail(where + ": key \"" + key + "\" is not a variable index");
                if (index >= n)
                    throw Error(ErrorKind::validation_error, where + " references variable " + key + " but num_vars is " + std::to_string(n));
                result[index.convert_to<std::size_t>()] = value.is_null() ? std::nullopt : std::optional<Integer>(as_integer(value, where + "." + key));
            }
            return result;
        }

        auto write_constraints(std::ostringstream & out, std::span<const Constraint> constraints) -> void
        {
            out << "  \"constraints\": [";
            for (std::size_t i = 0; i < constraints.size(); ++i) {
                const auto & c = constraints[i];
                out << (i == 0 ? "\n" : ",\n") << "    {\"coeffs\": [";
                for (std::size_t j = 0; j < c.terms.size(); ++j)
                    out << (j ? ", " : "") << "[" << c.terms[j].var << ", " << c.terms[j].coeff << "]";
                out << "], \"rel\": \"" << to_string(c.rel) << "\", \"rhs\": " << c.rhs << "}";
            }
            out << (constraints.empty() ? "]" : "\n  ]");
        }

        auto write_integer_list(std::ostringstream & out, std::span<const Integer> values) -> void
        {
            out << "[";
            for (std::size_t i = 0; i < values.size(); ++i)
                out << (i ? ", " : "") << values[i];
            out << "]";
        }

        auto write_optional_list(std::ostringstream & out, std::span<const std::optional<Integer>> values, std::size_t n, const std::optional<Integer> & missing) -> void
        {
            out << "[";
            for (std::size_t i = 0; i < n; ++i) {
                const auto & v = i < values.size() ? values[i] : missing;
                out << (i ? ", " : "");
                if (v)
                    out << *v;
                else
                    out << "null";
            }
            out << "]";
        }

        auto parse_any(std::string_view text) -> AnyInstance
        {
            auto doc = parse(text);
            as_object(doc, "instance");
            const auto & kind = as_string(require(doc, "kind"), "kind");
            std::size_t n = as_size(require(doc, "num_vars"), "num_vars");
            auto constraints = parse_constraints(require(doc, "constraints"));
            if (kind == "general") {
                only_keys(doc, {"kind", "num_vars", "constraints", "lb", "ub"});
                IlpInstance inst;
                inst.num_vars = n;
                inst.constraints = std::move(constraints);
                if (const auto * lb = find(doc, "lb"))
                    inst.lower_bounds = parse_bounds(*lb, n, "lb", Integer(0));
                if (const auto * ub = find(doc, "ub"))
                    inst.upper_bounds = parse_bounds(*ub, n, "ub", std::nullopt);
                validate(inst);
                return inst;
            }
            if (kind != "cover" && kind != "packing")
                fail("kind must be \"general\", \"cover\" or \"packing\", got \"" + kind + "\"");
            only_keys(doc, {"kind", "num_vars", "constraints", "cost", "k", "ub"});
            CoverPackInstance inst;
            inst.sense = kind == "cover" ? Sense::cover : Sense::packing;
            inst.num_vars = n;
            inst.constraints = std::move(constraints);
            const auto & cost = as_array(require(doc, "cost"), "cost");
            for (std::size_t i = 0; i < cost.size(); ++i)
                inst.cost.push_back(as_integer(cost[i], "cost[" + std::to_string(i) + "]"));
            inst.budget = as_integer(require(doc, "k"), "k");
            if (const auto * ub = find(doc, "ub"))
                inst.upper_bounds = parse_bounds(*ub, n, "ub", std::nullopt);
            validate(inst);
            return inst;
        }

        auto parse_size_list(const Value & v, const std::string & where) -> std::vector<std::size_t>
        {
            std::vector<std::size_t> result;
            const auto & list = as_array(v, where);
            for (std::size_t i = 0; i < list.size(); ++i)
                result.push_back(as_size(list[i], where + "[" + std::to_string(i) + "]"));
            return result;
        }
    }

    auto parse_instance(std::string_view text) -> AnyInstance
    {
        return parse_any(text);
    }

    auto parse_general(std::string_view text) -> IlpInstance
    {
        auto any = parse_any(text);
        if (auto * g = std::get_if<IlpInstance>(&any))
            return std::move(*g);
        return as_general(std::get<CoverPackInstance>(any));
    }

    auto parse_cover_pack(std::string_view text) -> CoverPackInstance
    {
        auto any = parse_any(text);
        if (auto * c = std::get_if<CoverPackInstance>(&any))
            return std::move(*c);
        throw Error(ErrorKind::invalid_input, "expected a cover or packing instance, got kind \"general\"");
    }

    auto serialize_instance(const IlpInstance & inst) -> std::string
    {
        std::ostringstream out;
        out << "{\n  \"kind\": \"general\",\n  \"num_vars\": " << inst.num_vars << ",\n";
        write_constraints(out, inst.constraints);
        bool has_lb = std::any_of(inst.lower_bounds.begin(), inst.lower_bounds.end(), [](const auto & b) { return b != Integer(0); });
        bool has_ub = std::any_of(inst.upper_bounds.begin(), inst.upper_bounds.end(), [](const auto & b) { return b.has_value(); });
        if (has_lb) {
            out << ",\n  \"lb\": ";
            write_optional_list(out, inst.lower_bounds, inst.num_vars, Integer(0));
        }
        if (has_ub) {
            out << ",\n  \"ub\": ";
            write_optional_list(out, inst.upper_bounds, inst.num_vars, std::nullopt);
        }
        out << "\n}\n";
        return out.str();
    }

    auto serialize_instance(const CoverPackInstance & inst) -> std::string
    {
        std::ostringstream out;
        out << "{\n  \"kind\": \"" << to_string(inst.sense) << "\",\n  \"num_vars\": " << inst.num_vars << ",\n";
        write_constraints(out, inst.constraints);
        out << ",\n  \"cost\": ";
        write_integer_list(out, inst.cost);
        out << ",\n  \"k\": " << inst.budget;
        if (std::any_of(inst.upper_bounds.begin(), inst.upper_bounds.end(), [](const auto & b) { return b.has_value(); })) {
            out << ",\n  \"ub\": ";
            write_optional_list(out, inst.upper_bounds, inst.num_vars, std::nullopt);
        }
        out << "\n}\n";
        return out.str();
    }

    auto serialize_instance(const AnyInstance & inst) -> std::string
    {
        return std::visit([](const auto & i) { return serialize_instance(i); }, inst);
    }

    auto parse_graph(std::string_view text) -> GraphInstance
    {
        auto doc = parse(text);
        as_object(doc, "graph");
        only_keys(doc, {"n", "edges", "k"});
        GraphInstance g;
        g.n = as_size(require(doc, "n"), "n");
        g.k = as_size(require(doc, "k"), "k");
        const auto & edges = as_array(require(doc, "edges"), "edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto pair = parse_size_list(edges[i], "edges[" + std::to_string(i) + "]");
            if (pair.size() != 2)
                fail("edges[" + std::to_string(i) + "]: expected [u, v]");
            g.edges.emplace_back(pair[0], pair[1]);
        }
        normalize(g);
        return g;
    }

    auto serialize_graph(const GraphInstance & g) -> std::string
    {
        std::ostringstream out;
        out << "{\"n\": " << g.n << ", \"edges\": [";
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            out << (i ? ", " : "") << "[" << g.edges[i].first << ", " << g.edges[i].second << "]";
        out << "], \"k\": " << g.k << "}\n";
        return out.str();
    }

    auto parse_subset_sum(std::string_view text) -> SubsetSumInstance
    {
        auto doc = parse(text);
        as_object(doc, "subset-sum instance");
        only_keys(doc, {"values", "target", "k"});
        SubsetSumInstance s;
        const auto & values = as_array(require(doc, "values"), "values");
        for (std::size_t i = 0; i < values.size(); ++i)
            s.values.push_back(as_integer(values[i], "values[" + std::to_string(i) + "]"));
        s.target = as_integer(require(doc, "target"), "target");
        s.k = as_size(require(doc, "k"), "k");
        validate(s);
        return s;
    }

    auto serialize_subset_sum(const SubsetSumInstance & s) -> std::string
    {
        std::ostringstream out;
        out << "{\"values\": ";
        write_integer_list(out, s.values);
        out << ", \"target\": " << s.target << ", \"k\": " << s.k << "}\n";
        return out.str();
    }

    auto parse_hitting_set(std::string_view text) -> HittingSetInstance
    {
        auto doc = parse(text);
        as_object(doc, "hitting-set instance");
        only_keys(doc, {"universe", "sets", "k"});
        HittingSetInstance h;
        h.universe_size = as_size(require(doc, "universe"), "universe");
        const auto & sets = as_array(require(doc, "sets"), "sets");
        for (std::size_t i = 0; i < sets.size(); ++i) {
            auto set = parse_size_list(sets[i], "sets[" + std::to_string(i) + "]");
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            h.sets.push_back(std::move(set));
        }
        h.k = as_size(require(doc, "k"), "k");
        validate(h);
        return h;
    }

    auto serialize_hitting_set(const HittingSetInstance & h) -> std::string
    {
        std::ostringstream out;
        out << "{\"universe\": " << h.universe_size << ", \"sets\": [";
        for (std::size_t i = 0; i < h.sets.size(); ++i) {
            out << (i ? ", " : "") << "[";
            for (std::size_t j = 0; j < h.sets[i].size(); ++j)
                out << (j ? ", " : "") << h.sets[i][j];
            out << "]";
        }
        out << "], \"k\": " << h.k << "}\n";
        return out.str();
    }

    auto parse_box(std::string_view text) -> Box
    {
        auto doc = parse(text);
        Box box;
        const auto & list = as_array(doc, "box");
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string where = "box[" + std::to_string(i) + "]";
            const auto & pair = as_array(list[i], where);
            if (pair.size() != 2)
                fail(where + ": expected [lo, hi]");
            box.push_back(Range{as_integer(pair[0], where + "[0]"), as_integer(pair[1], where + "[1]")});
        }
        return box;
    }

    auto serialize_box(const Box & box) -> std::string
    {
        std::ostringstream out;
        out << "[";
        for (std::size_t i = 0; i < box.size(); ++i)
            out << (i ? ",\n " : "") << "[" << box[i].lo << ", " << box[i].hi << "]";
        out << "]\n";
        return out.str();
    }

    auto parse_merge_map(std::string_view text) -> std::vector<VarIndex>
    {
        auto doc = parse(text);
        as_object(doc, "merge map");
        only_keys(doc, {"survivor_of"});
        return parse_size_list(require(doc, "survivor_of"), "survivor_of");
    }

    auto serialize_merge_map(const std::vector<VarIndex> & survivor_of) -> std::string
    {
        std::ostringstream out;
        out << "{\"survivor_of\": [";
        for (std::size_t i = 0; i < survivor_of.size(); ++i)
            out << (i ? ", " : "") << survivor_of[i];
        out << "]}\n";
        return out.str();
    }

    namespace
    {
        auto table_fail(std::size_t line, const std::string & what) -> void
        {
            throw Error(ErrorKind::parse_error, "tbl-v1 line " + std::to_string(line) + ": " + what);
        }

        auto hex_digit(char c) -> int
        {
            if (c >= '0' && c <= '9')
                return c - '0';
            if (c >= 'a' && c <= 'f')
                return c - 'a' + 10;
            return -1;
        }
    }

    auto serialize_table_instance(const TableInstance & inst) -> std::string
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::ostringstream out;
        out << "tbl-v1\nsense " << to_string(inst.sense) << "\nn " << inst.num_vars << "\nk " << inst.budget << "\ncost";
        for (const auto & c : inst.cost)
            out << ' ' << c;
        out << "\ntables " << inst.tables.size() << '\n';
        for (const auto & t : inst.tables) {
            out << "scope";
            for (auto v : t.scope)
                out << ' ' << v;
            out << "\nbits ";
            for (std::size_t i = 0; i < t.bits.size(); i += 8) {
                unsigned byte = 0;
                for (std::size_t b = 0; b < 8 && i + b < t.bits.size(); ++b)
                    if (t.bits[i + b])
                        byte |= 1u << b;
                out << digits[byte >> 4] << digits[byte & 15];
            }
            out << '\n';
        }
        return out.str();
    }

    auto parse_table_instance(std::string_view text) -> TableInstance
    {
        std::vector<std::string> lines;
        std::istringstream in{std::string(text)};
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        std::size_t at = 0;
        auto next = [&](std::string_view tag) -> std::vector<std::string> {
            if (at >= lines.size())
                table_fail(at + 1, "unexpected end of input, expected \"" + std::string(tag) + "\"");
            std::istringstream words(lines[at]);
            std::vector<std::string> parts;
            for (std::string w; words >> w;)
                parts.push_back(w);
            if (parts.empty() || parts[0] != tag)
                table_fail(at + 1, "expected \"" + std::string(tag) + "\"");
            ++at;
            return {parts.begin() + 1, parts.end()};
        };
        auto number = [&](const std::string & word) -> Integer {
            Integer v;
            if (! parse_integer(word, v))
                table_fail(at, "malformed integer \"" + word + "\"");
            return v;
        };
        auto count = [&](const std::string & word) -> std::size_t {
            Integer v = number(word);
            if (v < 0 || v > Integer(std::numeric_limits<std::uint32_t>::max()))
                table_fail(at, "expected a nonnegative count, got \"" + word + "\"");
            return v.convert_to<std::size_t>();
        };
        auto single = [&](std::string_view tag) -> std::string {
            auto parts = next(tag);
            if (parts.size() != 1)
                table_fail(at, "expected one value after \"" + std::string(tag) + "\"");
            return parts[0];
        };

        if (lines.empty() || lines[0] != "tbl-v1")
            table_fail(1, "missing \"tbl-v1\" header");
        at = 1;
        TableInstance inst;
        auto sense = single("sense");
        if (sense != "cover" && sense != "packing")
            table_fail(at, "sense must be cover or packing");
        inst.sense = sense == "cover" ? Sense::cover : Sense::packing;
        inst.num_vars = count(single("n"));
        inst.budget = number(single("k"));
        for (const auto & w : next("cost"))
            inst.cost.push_back(number(w));
        std::size_t num_tables = count(single("tables"));
        if (inst.budget < 0)
            table_fail(4, "k is negative");
        std::uint64_t radix = inst.radix();
        for (std::size_t i = 0; i < num_tables; ++i) {
            Table t;
            for (const auto & w : next("scope"))
                t.scope.push_back(count(w));
            std::uint64_t length = saturating_pow(radix, t.scope.size(), std::uint64_t{1} << 40);
            if (length > (std::uint64_t{1} << 40))
                table_fail(at, "table too large");
            std::string hex = single("bits");
            if (hex.size() != 2 * ((length + 7) / 8))
                table_fail(at, "expected " + std::to_string(2 * ((length + 7) / 8)) + " hex digits for " + std::to_string(length) + " bits");
            t.bits.assign(length, false);
            for (std::size_t byte = 0; byte < hex.size() / 2; ++byte) {
                int hi = hex_digit(hex[2 * byte]), lo = hex_digit(hex[2 * byte + 1]);
                if (hi < 0 || lo < 0)
                    table_fail(at, "malformed hex digit");
                unsigned value = unsigned(hi * 16 + lo);
                for (std::size_t b = 0; b < 8; ++b) {
                    bool bit = (value >> b) & 1u;
                    if (8 * byte + b < length)
                        t.bits[8 * byte + b] = bit;
                    else if (bit)
                        table_fail(at, "padding bits must be zero");
                }
            }
            inst.tables.push_back(std::move(t));
        }
        for (; at < lines.size(); ++at)
            if (! lines[at].empty())
                table_fail(at + 1, "trailing content");
        validate(inst);
        return inst;
    }

    auto serialize_stats(const SparsenessStats & s) -> std::string
    {
        std::ostringstream out;
        out << "{\"r\": " << s.row_sparseness << ", \"q\": " << s.column_sparseness << ", \"C\": " << s.max_abs_coeff
            << ", \"n\": " << s.num_vars << ", \"m\": " << s.num_constraints << "}";
        return out.str();
    }

    auto serialize_report(const ReductionReport & report) -> std::string
    {
        std::ostringstream out;
        out << "{\n  \"schema\": \"rep-v1\",\n  \"stats_before\": " << serialize_stats(report.stats_before)
            << ",\n  \"stats_after\": " << serialize_stats(report.stats_after) << ",\n  \"steps\": [";
        for (std::size_t i = 0; i < report.steps.size(); ++i) {
            const auto & s = report.steps[i];
            out << (i ? ",\n" : "\n") << "    {\"rule\": " << quote(s.rule) << ", \"constraints_removed\": " << s.constraints_removed
                << ", \"variables_removed\": " << s.variables_removed << ", \"detail\": " << quote(s.detail) << "}";
        }
        out << (report.steps.empty() ? "]" : "\n  ]") << ",\n  \"early_decision\": ";
        if (report.early_decision)
            out << "{\"decision\": \"" << to_string(report.early_decision->decision) << "\", \"rule\": " << quote(report.early_decision->rule)
                << ", \"reason\": " << quote(report.early_decision->reason) << "}";
        else
            out << "null";
        out << ",\n  \"notes\": {";
        for (std::size_t i = 0; i < report.notes.size(); ++i)
            out << (i ? ", " : "") << quote(report.notes[i].first) << ": " << quote(report.notes[i].second);
        out << "}\n}\n";
        return out.str();
    }

    auto serialize_verdict(const OracleVerdict & verdict, std::string_view method) -> std::string
    {
        std::ostringstream out;
        out << "{\"method\": " << quote(method) << ", \"decision\": \"" << to_string(verdict.decision) << "\", \"witness\": ";
        if (verdict.witness)
            write_integer_list(out, *verdict.witness);
        else
            out << "null";
        out << ", \"nodes_explored\": " << verdict.nodes_explored << "}\n";
        return out.str();
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error(ErrorKind::invalid_input, "cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const std::string & path, std::string_view content) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error(ErrorKind::invalid_input, "cannot write " + path);
        out << content;
        if (! out)
            throw Error(ErrorKind::invalid_input, "write failed for " + path);
    }
}
