#include <ilpk/report.hpp>

namespace ilpk
{
    auto ReductionReport::record(std::string rule, std::size_t constraints_removed, std::size_t variables_removed, std::string detail) -> void
    {
        steps.push_back(ReductionStep{std::move(rule), constraints_removed, variables_removed, std::move(detail)});
    }

    auto ReductionReport::decide(Decision decision, std::string rule, std::string reason) -> void
    {
        early_decision = EarlyDecision{decision, std::move(rule), std::move(reason)};
    }

    auto ReductionReport::note(std::string key, std::string value) -> void
    {
        notes.emplace_back(std::move(key), std::move(value));
    }

    auto ReductionReport::absorb(const ReductionReport & later) -> void
    {
        steps.insert(steps.end(), later.steps.begin(), later.steps.end());
        notes.insert(notes.end(), later.notes.begin(), later.notes.end());
        if (later.early_decision)
            early_decision = later.early_decision;
        stats_after = later.stats_after;
    }

    auto ReductionReport::total_constraints_removed() const -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & s : steps)
            total += s.constraints_removed;
        return total;
    }

    auto ReductionReport::total_variables_removed() const -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & s : steps)
            total += s.variables_removed;
        return total;
    }
}
