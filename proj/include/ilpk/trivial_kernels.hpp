#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/report.hpp>

#include <vector>

namespace ilpk
{
    /// Keeps the first of every group of identical constraints.
    [[nodiscard]] auto dedup_constraints(const IlpInstance & inst) -> IlpReduction;

    /// Sum over d = 1..r of 3 C(n,d) (2C+1)^(d+1).
    [[nodiscard]] auto dedup_bound(std::size_t n, std::size_t r, const Integer & c) -> Integer;

    struct MergeResult
    {
        IlpInstance instance;
        ReductionReport report;
        /// Merged-instance index of the survivor each original variable folded into.
        std::vector<VarIndex> survivor_of;
    };

    /// Merges variables with identical columns into the lowest-index one. All variables must have
    /// lower bound 0 and no upper bound.
    [[nodiscard]] auto merge_pattern_variables(const IlpInstance & inst) -> MergeResult;

    /// Puts each survivor's value on the lowest original variable mapped to it, zero elsewhere.
    [[nodiscard]] auto lift_merged_witness(std::span<const Integer> merged, const std::vector<VarIndex> & survivor_of) -> Assignment;

    /// Sums original values per survivor.
    [[nodiscard]] auto project_to_merged(std::span<const Integer> original, const std::vector<VarIndex> & survivor_of, std::size_t merged_vars) -> Assignment;
}
