#include "reduce_util.hpp"

namespace ilpk
{
    auto drop_variables(CoverPackInstance & inst, const std::vector<char> & remove) -> std::size_t
    {
        std::vector<VarIndex> renumber(inst.num_vars, 0);
        std::size_t next = 0;
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (! remove[v])
                renumber[v] = next++;
        std::size_t removed = inst.num_vars - next;
        if (removed == 0)
            return 0;
        std::vector<Integer> cost;
        std::vector<std::optional<Integer>> ub;
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (! remove[v]) {
                cost.push_back(inst.cost[v]);
                if (! inst.upper_bounds.empty())
                    ub.push_back(inst.upper_bounds[v]);
            }
        for (auto & c : inst.constraints) {
            std::erase_if(c.terms, [&](const Term & t) { return remove[t.var]; });
            for (auto & t : c.terms)
                t.var = renumber[t.var];
        }
        inst.cost = std::move(cost);
        inst.upper_bounds = std::move(ub);
        inst.num_vars = next;
        return removed;
    }

    auto drop_unused_variables(CoverPackInstance & inst, ReductionReport & report) -> void
    {
        std::vector<char> unused(inst.num_vars, 1);
        for (const auto & c : inst.constraints)
            for (const auto & t : c.terms)
                unused[t.var] = 0;
        if (std::size_t removed = drop_variables(inst, unused))
            report.record("unused-variables", 0, removed, "variables occurring in no constraint set to zero");
    }

    auto settle(CoverPackInstance & inst, ReductionReport & report, Decision decision, std::string rule, std::string reason) -> void
    {
        auto replacement = trivial_instance(inst.sense, inst.budget, decision);
        std::size_t m_before = inst.constraints.size(), m_after = replacement.constraints.size();
        std::size_t removed = m_before >= m_after ? m_before - m_after : 0;
        report.record(rule, removed, inst.num_vars, reason);
        if (m_after > m_before)
            report.note("constraints_added", rule + ": " + std::to_string(m_after - m_before));
        report.decide(decision, std::move(rule), std::move(reason));
        inst = std::move(replacement);
    }
}
