#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/report.hpp>
#include <ilpk/table.hpp>

#include <cstdint>

namespace ilpk
{
    /// Deletes cost-zero variables and variables that cannot be set to one, answers YES when a
    /// single variable reaches k, when an unconstrained variable exists, or when a greedy set of
    /// k variables without shared constraints exists, and drops constant rows. Upper bounds are
    /// not supported here.
    [[nodiscard]] auto basic_reduce_packing(const CoverPackInstance & inst) -> CoverPackReduction;

    /// One LE table per constraint over {0..k}^d, plus a unary table for every upper bound below k.
    [[nodiscard]] auto compress_packing(const CoverPackInstance & inst, std::uint64_t cap = default_table_cap) -> TableInstance;
}
