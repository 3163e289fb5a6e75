#pragma once

#include <ilpk/cover_kernel.hpp>
#include <ilpk/instance.hpp>
#include <ilpk/report.hpp>

#include <string>
#include <vector>

namespace ilpk
{
    /// Removes the marked variables from rows, costs and bounds, renumbering the rest in order.
    auto drop_variables(CoverPackInstance & inst, const std::vector<char> & remove) -> std::size_t;

    /// Drops variables that occur in no constraint and records the step.
    auto drop_unused_variables(CoverPackInstance & inst, ReductionReport & report) -> void;

    /// Replaces `inst` by the trivial instance with the given answer and records the removal so
    /// that the report's counts still match the statistics.
    auto settle(CoverPackInstance & inst, ReductionReport & report, Decision decision, std::string rule, std::string reason) -> void;
}
