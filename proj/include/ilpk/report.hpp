#pragma once

#include <ilpk/instance.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ilpk
{
    struct ReductionStep
    {
        std::string rule;
        std::size_t constraints_removed = 0;
        std::size_t variables_removed = 0;
        std::string detail;
    };

    struct EarlyDecision
    {
        Decision decision = Decision::no;
        std::string rule;
        std::string reason;
    };

    /// Ordered trace of applied rules. Removal counts add up to the difference between the
    /// before and after statistics.
    struct ReductionReport
    {
        std::vector<ReductionStep> steps;
        std::optional<EarlyDecision> early_decision;
        SparsenessStats stats_before;
        SparsenessStats stats_after;
        std::vector<std::pair<std::string, std::string>> notes;

        auto record(std::string rule, std::size_t constraints_removed, std::size_t variables_removed, std::string detail = {}) -> void;
        auto decide(Decision decision, std::string rule, std::string reason) -> void;
        auto note(std::string key, std::string value) -> void;

        /// Appends the steps and notes of a later stage; keeps this report's stats_before.
        auto absorb(const ReductionReport & later) -> void;

        [[nodiscard]] auto total_constraints_removed() const -> std::size_t;
        [[nodiscard]] auto total_variables_removed() const -> std::size_t;
    };

    struct CoverPackReduction
    {
        CoverPackInstance instance;
        ReductionReport report;
    };

    struct IlpReduction
    {
        IlpInstance instance;
        ReductionReport report;
    };
}
