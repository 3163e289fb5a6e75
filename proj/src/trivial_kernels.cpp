#include <ilpk/error.hpp>
#include <ilpk/trivial_kernels.hpp>

#include <map>
#include <set>
#include <string>

namespace ilpk
{
    namespace
    {
        auto binomial(std::size_t n, std::size_t d) -> Integer
        {
            if (d > n)
                return 0;
            Integer result = 1;
            for (std::size_t i = 0; i < d; ++i)
                result = result * (n - i) / (i + 1);
            return result;
        }

        using RowKey = std::tuple<std::vector<std::pair<VarIndex, Integer>>, int, Integer>;

        auto key_of(const Constraint & c) -> RowKey
        {
            std::vector<std::pair<VarIndex, Integer>> terms;
            for (const auto & t : c.terms)
                terms.emplace_back(t.var, t.coeff);
            return {std::move(terms), static_cast<int>(c.rel), c.rhs};
        }
    }

    auto dedup_constraints(const IlpInstance & inst) -> IlpReduction
    {
        validate(inst);
        IlpReduction result{inst, {}};
        auto & out = result.instance;
        std::set<RowKey> seen;
        std::vector<Constraint> kept;
        for (const auto & c : inst.constraints)
            if (seen.insert(key_of(c)).second)
                kept.push_back(c);
        std::size_t removed = inst.constraints.size() - kept.size();
        out.constraints = std::move(kept);
        result.report.stats_before = compute_stats(inst);
        result.report.stats_after = compute_stats(out);
        if (removed > 0)
            result.report.record("duplicate-constraints", removed, 0, "identical coefficients, relation and right-hand side");
        auto s = result.report.stats_before;
        result.report.note("count_bound", to_string(dedup_bound(s.num_vars, s.row_sparseness, s.max_abs_coeff)));
        return result;
    }

    auto dedup_bound(std::size_t n, std::size_t r, const Integer & c) -> Integer
    {
        Integer total = 0;
        for (std::size_t d = 1; d <= r; ++d)
            total += 3 * binomial(n, d) * pow(2 * c + 1, static_cast<unsigned>(d + 1));
        return total;
    }

    auto merge_pattern_variables(const IlpInstance & inst) -> MergeResult
    {
        validate(inst);
        for (VarIndex v = 0; v < inst.num_vars; ++v) {
            if (inst.upper_bound(v))
                throw Error(ErrorKind::invalid_input, "variable " + std::to_string(v) + " has an upper bound; merging needs unbounded variables");
            if (inst.lower_bound(v) != Integer(0))
                throw Error(ErrorKind::invalid_input, "variable " + std::to_string(v) + " needs lower bound 0 for merging");
        }
        std::vector<std::vector<std::pair<std::size_t, Integer>>> column(inst.num_vars);
        for (std::size_t i = 0; i < inst.constraints.size(); ++i)
            for (const auto & t : inst.constraints[i].terms)
                column[t.var].emplace_back(i, t.coeff);

        MergeResult result;
        result.survivor_of.assign(inst.num_vars, 0);
        std::map<std::vector<std::pair<std::size_t, Integer>>, VarIndex> first_with;
        std::vector<char> removed(inst.num_vars, 0);
        std::size_t next = 0;
        for (VarIndex v = 0; v < inst.num_vars; ++v) {
            auto [it, fresh] = first_with.try_emplace(column[v], next);
            if (fresh)
                ++next;
            else
                removed[v] = 1;
            result.survivor_of[v] = it->second;
        }

        auto & out = result.instance;
        out.num_vars = next;
        for (const auto & c : inst.constraints) {
            Constraint merged{{}, c.rel, c.rhs};
            for (const auto & t : c.terms)
                if (! removed[t.var])
                    merged.terms.push_back(Term{result.survivor_of[t.var], t.coeff});
            out.constraints.push_back(std::move(merged));
        }
        validate(out);
        result.report.stats_before = compute_stats(inst);
        result.report.stats_after = compute_stats(out);
        if (std::size_t gone = inst.num_vars - next)
            result.report.record("same-pattern-variables", 0, gone, "identical columns folded into the lowest index");
        return result;
    }

    auto lift_merged_witness(std::span<const Integer> merged, const std::vector<VarIndex> & survivor_of) -> Assignment
    {
        Assignment original(survivor_of.size(), 0);
        std::vector<char> placed(merged.size(), 0);
        for (VarIndex v = 0; v < survivor_of.size(); ++v) {
            VarIndex s = survivor_of[v];
            if (s >= merged.size())
                throw Error(ErrorKind::invalid_input, "merge map points past the merged variables");
            if (! placed[s]) {
                original[v] = merged[s];
                placed[s] = 1;
            }
        }
        return original;
    }

    auto project_to_merged(std::span<const Integer> original, const std::vector<VarIndex> & survivor_of, std::size_t merged_vars) -> Assignment
    {
        Assignment merged(merged_vars, 0);
        for (VarIndex v = 0; v < survivor_of.size(); ++v)
            merged[survivor_of[v]] += original[v];
        return merged;
    }
}
