#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/table.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ilpk
{
    inline constexpr std::uint64_t default_node_cap = 10'000'000;

    /// Node cap taken from ILPK_NODE_CAP when set, else default_node_cap.
    [[nodiscard]] auto node_cap_from_env() -> std::uint64_t;

    struct Range
    {
        Integer lo;
        Integer hi;

        [[nodiscard]] auto operator==(const Range &) const -> bool = default;
    };

    /// Inclusive integer range for every variable.
    using Box = std::vector<Range>;

    struct OracleVerdict
    {
        Decision decision = Decision::no;
        std::optional<Assignment> witness;
        std::uint64_t nodes_explored = 0;
    };

    // All deciders below are exhaustive depth-first searches. Variables are branched in index
    // order with values ascending, so the witness is the lexicographically smallest solution;
    // solve_cover tries values descending and returns the lexicographically largest one.
    // Every search node counts against node_cap; exceeding it throws SEARCH_SPACE_EXCEEDED.
    // Interval propagation on the linear rows removes only values that cannot occur in any
    // solution of the current subtree.

    [[nodiscard]] auto solve_feasibility(const IlpInstance & inst, const Box & box, std::uint64_t node_cap = default_node_cap) -> OracleVerdict;

    /// Calls `visit` for every feasible point of `inst` inside `box`, in lexicographic order.
    /// Stops early when `visit` returns false. Returns the number of nodes explored.
    auto enumerate_feasible(const IlpInstance & inst, const Box & box, std::uint64_t node_cap,
        const std::function<bool(std::span<const Integer>)> & visit) -> std::uint64_t;

    /// Exists x in {0..floor(k/c_i)} (and below any upper bound) with Ax >= b and c^T x <= k.
    /// Cost-zero variables without an upper bound are removed together with their constraints and
    /// raised afterwards so that the witness satisfies those constraints too.
    [[nodiscard]] auto solve_cover(const CoverPackInstance & inst, std::uint64_t node_cap = default_node_cap) -> OracleVerdict;

    /// Exists x in {0..k}^n (and below any upper bound) with Ax <= b and c^T x >= k.
    [[nodiscard]] auto solve_packing(const CoverPackInstance & inst, std::uint64_t node_cap = default_node_cap) -> OracleVerdict;

    /// Dispatches on the instance sense.
    [[nodiscard]] auto solve(const CoverPackInstance & inst, std::uint64_t node_cap = default_node_cap) -> OracleVerdict;

    /// Exists x in {0..k}^n meeting the budget whose projection on every table is marked feasible.
    [[nodiscard]] auto solve_table(const TableInstance & inst, std::uint64_t node_cap = default_node_cap) -> OracleVerdict;

    [[nodiscard]] auto table_accepts(const TableInstance & inst, std::span<const Integer> x) -> bool;
}
