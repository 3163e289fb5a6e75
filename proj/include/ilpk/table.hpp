#pragma once

#include <ilpk/instance.hpp>

#include <cstdint>
#include <vector>

namespace ilpk
{
    /// Default cap on the number of bits a single feasibility table may hold.
    inline constexpr std::uint64_t default_table_cap = std::uint64_t{1} << 20;

    /// Feasibility table of one constraint over {0..k}^d. Entry i corresponds to the local
    /// assignment whose mixed-radix digits (base k+1, first scope variable most significant) spell i.
    struct Table
    {
        Scope scope;
        std::vector<bool> bits;

        [[nodiscard]] auto operator==(const Table &) const -> bool = default;
    };

    /// Compressed instance: every constraint replaced by the set of local assignments it allows.
    struct TableInstance
    {
        Sense sense = Sense::cover;
        std::size_t num_vars = 0;
        Integer budget = 0;
        std::vector<Integer> cost;
        std::vector<Table> tables;

        [[nodiscard]] auto radix() const -> std::uint64_t;
        [[nodiscard]] auto operator==(const TableInstance &) const -> bool = default;
    };

    auto validate(const TableInstance & inst) -> void;

    /// Evaluates `c` on every point of {0..k}^d. Throws TABLE_TOO_LARGE above `cap` bits.
    [[nodiscard]] auto build_table(const Constraint & c, std::uint64_t k, std::uint64_t cap = default_table_cap) -> Table;

    /// Position of the local assignment `x` restricted to `scope` inside a table with the given radix.
    [[nodiscard]] auto table_index(const Scope & scope, std::span<const Integer> x, std::uint64_t radix) -> std::uint64_t;
}
