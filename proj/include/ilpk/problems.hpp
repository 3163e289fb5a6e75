#pragma once

#include <ilpk/integer.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace ilpk
{
    /// Undirected graph with vertices 0..n-1 and an independent-set target k.
    struct GraphInstance
    {
        std::size_t n = 0;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::size_t k = 0;

        [[nodiscard]] auto operator==(const GraphInstance &) const -> bool = default;
    };

    struct SubsetSumInstance
    {
        std::vector<Integer> values;
        Integer target = 0;
        std::size_t k = 0;

        [[nodiscard]] auto operator==(const SubsetSumInstance &) const -> bool = default;
    };

    struct HittingSetInstance
    {
        std::size_t universe_size = 0;
        std::vector<std::vector<std::size_t>> sets;
        std::size_t k = 0;

        [[nodiscard]] auto operator==(const HittingSetInstance &) const -> bool = default;
    };

    /// Sorts each edge as (min, max) and the edge list; rejects self-loops, bad vertices and k > n.
    auto normalize(GraphInstance & g) -> void;
    auto validate(const GraphInstance & g) -> void;
    auto validate(const SubsetSumInstance & s) -> void;
    auto validate(const HittingSetInstance & h) -> void;
}
