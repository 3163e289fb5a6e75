#include "reduce_util.hpp"

#include <ilpk/error.hpp>
#include <ilpk/packing_kernel.hpp>

#include <algorithm>
#include <string>

namespace ilpk
{
    namespace
    {
        auto require_packing(const CoverPackInstance & inst, std::string_view op) -> void
        {
            validate(inst);
            if (inst.sense != Sense::packing)
                throw Error(ErrorKind::invalid_input, std::string(op) + " needs a packing instance");
        }

        /// Variables whose unit vector already breaks a row.
        auto unit_infeasible(const CoverPackInstance & inst) -> std::vector<char>
        {
            std::vector<char> bad(inst.num_vars, 0);
            for (const auto & c : inst.constraints)
                for (const auto & t : c.terms)
                    if (t.coeff > c.rhs)
                        bad[t.var] = 1;
            return bad;
        }
    }

    auto basic_reduce_packing(const CoverPackInstance & input) -> CoverPackReduction
    {
        require_packing(input, "basic_reduce_packing");
        if (std::any_of(input.upper_bounds.begin(), input.upper_bounds.end(), [](const auto & b) { return b.has_value(); }))
            throw Error(ErrorKind::invalid_input, "the packing reduction does not accept variable upper bounds; state them as rows");
        CoverPackReduction result{input, {}};
        auto & inst = result.instance;
        auto & report = result.report;
        report.stats_before = compute_stats(inst);
        auto done = [&] {
            report.stats_after = compute_stats(inst);
            return result;
        };

        if (inst.budget <= 0) {
            settle(inst, report, Decision::yes, "nonpositive-target", "x = 0 reaches a target of at most zero");
            return done();
        }

        std::vector<char> zero_cost(inst.num_vars, 0);
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            zero_cost[v] = inst.cost[v] == 0;
        if (auto removed = drop_variables(inst, zero_cost))
            report.record("cost-zero-variables", 0, removed, "variables adding no value set to zero");

        std::size_t rounds = 0;
        while (true) {
            auto bad = unit_infeasible(inst);
            auto removed = drop_variables(inst, bad);
            if (removed == 0)
                break;
            ++rounds;
            report.record("unit-infeasible", 0, removed, "setting the variable to one breaks a row");
        }
        if (rounds > 1)
            throw Error(ErrorKind::internal_error, "unit-infeasibility did not settle after one pass");

        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (inst.cost[v] >= inst.budget) {
                settle(inst, report, Decision::yes, "cost-reaches-k", "x_" + std::to_string(v) + " = 1 alone reaches k");
                return done();
            }

        std::vector<std::vector<std::size_t>> rows_of(inst.num_vars);
        for (std::size_t i = 0; i < inst.constraints.size(); ++i)
            for (const auto & t : inst.constraints[i].terms)
                rows_of[t.var].push_back(i);
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (rows_of[v].empty()) {
                settle(inst, report, Decision::yes, "unconstrained-variable", "x_" + std::to_string(v) + " = k meets the target without touching a row");
                return done();
            }

        std::vector<char> row_used(inst.constraints.size(), 0);
        std::vector<VarIndex> greedy;
        for (VarIndex v = 0; v < inst.num_vars; ++v) {
            if (std::any_of(rows_of[v].begin(), rows_of[v].end(), [&](std::size_t i) { return row_used[i]; }))
                continue;
            greedy.push_back(v);
            for (auto i : rows_of[v])
                row_used[i] = 1;
        }
        report.note("greedy_set_size", std::to_string(greedy.size()));
        if (Integer(greedy.size()) >= inst.budget) {
            settle(inst, report, Decision::yes, "greedy-disjoint-set", std::to_string(greedy.size()) + " variables share no row; setting them to one reaches k");
            return done();
        }

        // every variable shares a row with the greedy set by maximality, so only constant rows go
        std::vector<char> near(inst.num_vars, 0);
        for (std::size_t i = 0; i < inst.constraints.size(); ++i)
            if (row_used[i])
                for (const auto & t : inst.constraints[i].terms)
                    near[t.var] = 1;
        std::vector<char> far(inst.num_vars, 0);
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            far[v] = ! near[v];
        if (auto removed = drop_variables(inst, far))
            throw Error(ErrorKind::internal_error, std::to_string(removed) + " variables outside the greedy neighbourhood");
        std::size_t before = inst.constraints.size();
        std::erase_if(inst.constraints, [](const Constraint & c) { return c.terms.empty(); });
        if (std::size_t removed = before - inst.constraints.size())
            report.record("constant-rows", removed, 0, "rows without variables hold since b >= 0");
        return done();
    }

    auto compress_packing(const CoverPackInstance & inst, std::uint64_t cap) -> TableInstance
    {
        require_packing(inst, "compress_packing");
        TableInstance out;
        out.sense = Sense::packing;
        out.num_vars = inst.num_vars;
        out.budget = inst.budget;
        out.cost = inst.cost;
        std::uint64_t k = inst.budget < 0 ? 0 : static_cast<std::uint64_t>(to_int64(inst.budget, "k"));
        for (const auto & c : inst.constraints)
            out.tables.push_back(build_table(c, k, cap));
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (auto ub = inst.upper_bound(v); ub && *ub < inst.budget)
                out.tables.push_back(build_table(Constraint{{Term{v, 1}}, Relation::le, *ub}, k, cap));
        validate(out);
        return out;
    }
}
