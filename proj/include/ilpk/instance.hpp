#pragma once

#include <ilpk/integer.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ilpk
{
    using VarIndex = std::size_t;

    /// Sorted set of variable indices with nonzero coefficient in a constraint.
    using Scope = std::vector<VarIndex>;

    using Assignment = std::vector<Integer>;

    enum class Relation
    {
        le,
        ge,
        eq
    };

    enum class Sense
    {
        cover,
        packing
    };

    enum class Decision
    {
        yes,
        no
    };

    [[nodiscard]] auto to_string(Relation rel) -> std::string_view;
    [[nodiscard]] auto to_string(Sense sense) -> std::string_view;
    [[nodiscard]] auto to_string(Decision decision) -> std::string_view;

    struct Term
    {
        VarIndex var;
        Integer coeff;

        [[nodiscard]] auto operator==(const Term &) const -> bool = default;
    };

    /// One row sum(coeff * x[var]) <rel> rhs. Terms are sorted by var and hold no zeros.
    struct Constraint
    {
        std::vector<Term> terms;
        Relation rel = Relation::ge;
        Integer rhs = 0;

        [[nodiscard]] auto scope() const -> Scope;
        [[nodiscard]] auto activity(std::span<const Integer> x) const -> Integer;
        [[nodiscard]] auto satisfied_by(std::span<const Integer> x) const -> bool;
        [[nodiscard]] auto holds(const Integer & lhs) const -> bool;
        [[nodiscard]] auto coeff_of(VarIndex var) const -> Integer;

        [[nodiscard]] auto operator==(const Constraint &) const -> bool = default;
    };

    /// Sorts terms by variable and merges nothing; duplicates and zeros are left for validation.
    auto sort_terms(Constraint & c) -> void;

    /// Builds a canonical constraint: sorted, zero coefficients dropped, repeated variables summed.
    [[nodiscard]] auto make_constraint(std::vector<Term> terms, Relation rel, Integer rhs) -> Constraint;

    /// General integer program. Unset lower bound means unbounded below, unset upper bound unbounded above.
    struct IlpInstance
    {
        std::size_t num_vars = 0;
        std::vector<Constraint> constraints;
        std::vector<std::optional<Integer>> lower_bounds;
        std::vector<std::optional<Integer>> upper_bounds;

        /// Appends a variable with the given bounds and returns its index.
        auto add_var(std::optional<Integer> lb = Integer(0), std::optional<Integer> ub = std::nullopt) -> VarIndex;
        auto add(std::vector<Term> terms, Relation rel, Integer rhs) -> void;

        [[nodiscard]] auto lower_bound(VarIndex v) const -> std::optional<Integer>;
        [[nodiscard]] auto upper_bound(VarIndex v) const -> std::optional<Integer>;

        [[nodiscard]] auto operator==(const IlpInstance &) const -> bool = default;
    };

    /// Covering (Ax >= b, c^T x <= k) or packing (Ax <= b, c^T x >= k) program over x >= 0.
    struct CoverPackInstance
    {
        Sense sense = Sense::cover;
        std::size_t num_vars = 0;
        std::vector<Constraint> constraints;
        std::vector<Integer> cost;
        Integer budget = 0;
        /// Either empty or one entry per variable.
        std::vector<std::optional<Integer>> upper_bounds;

        [[nodiscard]] auto relation() const -> Relation { return sense == Sense::cover ? Relation::ge : Relation::le; }
        [[nodiscard]] auto upper_bound(VarIndex v) const -> std::optional<Integer>;
        [[nodiscard]] auto objective(std::span<const Integer> x) const -> Integer;

        [[nodiscard]] auto operator==(const CoverPackInstance &) const -> bool = default;
    };

    struct SparsenessStats
    {
        std::size_t row_sparseness = 0;
        std::size_t column_sparseness = 0;
        Integer max_abs_coeff = 0;
        std::size_t num_vars = 0;
        std::size_t num_constraints = 0;

        [[nodiscard]] auto operator==(const SparsenessStats &) const -> bool = default;
    };

    /// r, q, n, m and C, where C ranges over both matrix entries and right-hand sides.
    [[nodiscard]] auto compute_stats(const IlpInstance & inst) -> SparsenessStats;
    [[nodiscard]] auto compute_stats(const CoverPackInstance & inst) -> SparsenessStats;
    [[nodiscard]] auto compute_stats(std::size_t num_vars, std::span<const Constraint> constraints) -> SparsenessStats;

    /// Throws Error(VALIDATION_ERROR) naming the violated invariant.
    auto validate(const IlpInstance & inst) -> void;
    auto validate(const CoverPackInstance & inst) -> void;

    /// Whether x (of length num_vars) satisfies every constraint and bound.
    [[nodiscard]] auto is_feasible(const IlpInstance & inst, std::span<const Integer> x) -> bool;

    /// Whether x is a feasible point meeting the budget (c^T x <= k for cover, >= k for packing).
    [[nodiscard]] auto is_solution(const CoverPackInstance & inst, std::span<const Integer> x) -> bool;

    /// Views a covering or packing instance as a general program with lower bounds 0.
    [[nodiscard]] auto as_general(const CoverPackInstance & inst) -> IlpInstance;
}
