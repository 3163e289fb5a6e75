#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/oracle.hpp>
#include <ilpk/problems.hpp>
#include <ilpk/report.hpp>

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace ilpk
{
    /// Either a variable or a fixed integer.
    using Operand = std::variant<VarIndex, Integer>;

    struct GadgetHandle
    {
        std::size_t first_constraint = 0;
        std::size_t num_constraints = 0;
        VarIndex a = 0;
        Operand b;
        VarIndex p = 0;
        std::vector<VarIndex> bits;
        std::vector<VarIndex> partials;
        std::size_t ell = 0;
        Integer big_m = 0;
        Integer b_max = 0;
        std::size_t p_max = 0;

        [[nodiscard]] auto aux_count() const -> std::size_t { return bits.size() + partials.size(); }
        /// Inclusive range of every auxiliary variable, in bits-then-partials order.
        [[nodiscard]] auto aux_ranges() const -> std::vector<std::pair<VarIndex, Range>>;
    };

    [[nodiscard]] auto gadget_ell(std::size_t p_max) -> std::size_t;

    /// Smallest constant that switches every push row off when its bit is zero.
    [[nodiscard]] auto gadget_big_m(const Integer & b_max, std::size_t p_max) -> Integer;

    /// Appends rows forcing 0 <= b <= b_max, 0 <= p <= p_max and a = b * 2^p. With b_max >= 1 this
    /// adds 6l+7 rows and 2l-1 auxiliary variables (l bits of p, then l-1 partial products);
    /// with b_max = 0 it adds the four rows a = 0, b = 0, p >= 0, p <= p_max.
    auto power_gadget(IlpInstance & builder, VarIndex a, const Operand & b, const Integer & b_max, VarIndex p, std::size_t p_max) -> GadgetHandle;

    struct Composition
    {
        IlpInstance instance;
        Box box;
        std::vector<std::string> names;
        ReductionReport report;
        std::size_t padded_count = 0;
    };

    /// Feasible iff some input graph has an independent set of size k. Inputs are padded to a
    /// power of two by repeating the first graph; the returned box bounds every variable.
    [[nodiscard]] auto cross_compose(const std::vector<GraphInstance> & graphs) -> Composition;

    struct Sparsified
    {
        IlpInstance instance;
        ReductionReport report;
        /// For every output variable: the original variable it copies, or nothing for partial sums.
        std::vector<std::optional<VarIndex>> copy_of;
        /// Maps a box for the input to a box for the output that contains every value the new
        /// variables can take; partial sums get interval sums.
        std::function<Box(const Box &)> lift_box;
    };

    /// Rewrites rows longer than three with partial sums and copies variables used more than
    /// three times along an equality chain. The original variables keep their indices.
    [[nodiscard]] auto sparsify_3(const IlpInstance & inst) -> Sparsified;

    /// Variables z_0..z_{n-1} then complements zhat_0..zhat_{n-1}; rows z_i + zhat_i >= B_i come
    /// first, unit costs, budget sum B. Each bound is capped by the instance upper bound.
    [[nodiscard]] auto to_cover(const IlpInstance & inst, const std::vector<Integer> & bounds) -> CoverPackReduction;

    [[nodiscard]] auto independent_set_to_packing(const GraphInstance & g) -> CoverPackInstance;

    /// Values above the target are dropped and k zeros appended before encoding.
    [[nodiscard]] auto subset_sum_to_packing(const SubsetSumInstance & s) -> CoverPackInstance;
    [[nodiscard]] auto subset_sum_to_cover(const SubsetSumInstance & s) -> CoverPackInstance;
    [[nodiscard]] auto normalized_values(const SubsetSumInstance & s) -> std::vector<Integer>;

    [[nodiscard]] auto hitting_set_to_cover(const HittingSetInstance & h) -> CoverPackInstance;
}
