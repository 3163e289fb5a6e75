#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/oracle.hpp>
#include <ilpk/report.hpp>
#include <ilpk/table.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ilpk
{
    struct Sunflower
    {
        Scope core;
        std::vector<Scope> petals;
        std::vector<Scope> members;
    };

    /// Checks equal member sizes, core strictly smaller, pairwise intersections equal to the core,
    /// and petals equal to member minus core.
    [[nodiscard]] auto is_valid_sunflower(const Sunflower & s) -> bool;

    // Every reduction below returns an instance with the same answer as its input. When a rule
    // decides the instance, the output is the trivial instance with that answer: no variables and
    // either no constraints (YES) or the single constraint 0 >= 1 (NO).

    /// Drops rows satisfied at zero, fixes cost-zero variables at their upper bound (dropping
    /// the rows they can satisfy when unbounded), strips over-budget variables from rows, keeps at
    /// most (k+1)^d constraints per scope, and drops variables that no longer occur.
    [[nodiscard]] auto basic_reduce_cover(const CoverPackInstance & inst, std::uint64_t dedup_cap = default_table_cap) -> CoverPackReduction;

    /// Classic recursive search. Succeeds whenever |scopes| > d!(t-1)^d and may succeed below.
    /// Returns every member of the disjoint subfamily it finds, so the cardinality can exceed t.
    [[nodiscard]] auto find_sunflower(std::span<const Scope> scopes, std::size_t t) -> std::optional<Sunflower>;

    /// Marks, per core assignment in {0..k}^s, up to k+1 member constraints that the core alone
    /// leaves unsatisfied, then deletes the unmarked ones. The member for a scope is the first
    /// constraint with that scope.
    [[nodiscard]] auto sunflower_reduce_step(const CoverPackInstance & inst, const Sunflower & sunflower) -> CoverPackReduction;

    [[nodiscard]] auto kernelize_cover(const CoverPackInstance & inst) -> CoverPackReduction;

    /// Constraint bound of the kernel: sum over d = 1..r of d! ((k+1)^r)^d (k+1)^d.
    [[nodiscard]] auto cover_kernel_bound(std::size_t r, const Integer & k) -> Integer;

    /// Normalization followed by the kq constraint bound.
    [[nodiscard]] auto reduce_cover_kqr(const CoverPackInstance & inst) -> CoverPackReduction;

    struct BranchResult
    {
        OracleVerdict verdict;
        std::uint64_t leaves = 0;
    };

    /// Bounded search tree: from x = 0, repeatedly increment one variable of the first violated row.
    [[nodiscard]] auto branch_solve_cover(const CoverPackInstance & inst) -> BranchResult;

    /// One table per constraint over {0..k}^d, plus a unary table for every upper bound below k.
    /// Costs must already lie in 1..k.
    [[nodiscard]] auto compress_cover(const CoverPackInstance & inst, std::uint64_t cap = default_table_cap) -> TableInstance;

    /// The instance with no variables and no constraints (YES) or with the constraint 0 >= 1 (NO).
    [[nodiscard]] auto trivial_instance(Sense sense, const Integer & budget, Decision decision) -> CoverPackInstance;
}
