#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/oracle.hpp>
#include <ilpk/problems.hpp>

#include <cstdint>
#include <random>

namespace ilpk
{
    /// Seeded generator whose draws depend only on the seed, not on the standard library.
    class CorpusRng
    {
    private:
        std::mt19937_64 _engine;

    public:
        explicit CorpusRng(std::uint64_t seed) : _engine(seed) {}

        /// Uniform-ish integer in [lo, hi].
        auto between(std::int64_t lo, std::int64_t hi) -> std::int64_t;
        auto chance(unsigned percent) -> bool;
        /// `count` distinct values from 0..n-1, sorted.
        auto distinct(std::size_t n, std::size_t count) -> std::vector<std::size_t>;
    };

    struct CoverPackParams
    {
        Sense sense = Sense::cover;
        std::size_t max_vars = 8;
        std::size_t max_constraints = 8;
        std::size_t min_row = 1;
        std::size_t max_row = 2;
        /// Column cap; 0 means none.
        std::size_t max_column = 0;
        std::int64_t k = 2;
        std::int64_t max_coeff = 2;
        std::int64_t max_rhs = 3;
        std::int64_t max_cost = 2;
    };

    [[nodiscard]] auto random_cover_pack(CorpusRng & rng, const CoverPackParams & params) -> CoverPackInstance;

    struct GeneralParams
    {
        std::size_t max_vars = 5;
        std::size_t max_constraints = 4;
        std::int64_t max_abs_coeff = 2;
        std::int64_t max_abs_rhs = 4;
        std::int64_t max_range = 3;
    };

    struct GeneralSample
    {
        IlpInstance instance;
        /// Box with lower ends 0.
        Box box;
    };

    [[nodiscard]] auto random_general(CorpusRng & rng, const GeneralParams & params) -> GeneralSample;

    /// Each of the n(n-1)/2 possible edges appears with the given percentage.
    [[nodiscard]] auto random_graph(CorpusRng & rng, std::size_t n, std::size_t k, unsigned edge_percent) -> GraphInstance;
    [[nodiscard]] auto random_subset_sum(CorpusRng & rng, std::size_t max_values, std::int64_t max_target, std::size_t max_k) -> SubsetSumInstance;
    [[nodiscard]] auto random_hitting_set(CorpusRng & rng, std::size_t max_universe, std::size_t max_sets, std::size_t max_set_size, std::size_t max_k) -> HittingSetInstance;
}
