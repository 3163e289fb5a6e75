#include <ilpk/corpus.hpp>
#include <ilpk/error.hpp>

#include <algorithm>

namespace ilpk
{
    auto CorpusRng::between(std::int64_t lo, std::int64_t hi) -> std::int64_t
    {
        if (hi <= lo)
            return lo;
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(_engine() % span);
    }

    auto CorpusRng::chance(unsigned percent) -> bool
    {
        return between(0, 99) < static_cast<std::int64_t>(percent);
    }

    auto CorpusRng::distinct(std::size_t n, std::size_t count) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i)
            pool[i] = i;
        count = std::min(count, n);
        for (std::size_t i = 0; i < count; ++i)
            std::swap(pool[i], pool[i + static_cast<std::size_t>(between(0, static_cast<std::int64_t>(n - i - 1)))]);
        pool.resize(count);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    auto random_cover_pack(CorpusRng & rng, const CoverPackParams & p) -> CoverPackInstance
    {
        CoverPackInstance inst;
        inst.sense = p.sense;
        inst.num_vars = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_vars)));
        inst.budget = p.k;
        for (std::size_t v = 0; v < inst.num_vars; ++v)
            inst.cost.emplace_back(rng.chance(10) ? 0 : rng.between(1, p.max_cost));
        std::size_t m = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(p.max_constraints)));
        std::vector<std::size_t> load(inst.num_vars, 0);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::size_t> open;
            for (std::size_t v = 0; v < inst.num_vars; ++v)
                if (p.max_column == 0 || load[v] < p.max_column)
                    open.push_back(v);
            if (open.empty())
                break;
            auto widest = std::min(p.max_row, open.size());
            auto size = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(std::min(p.min_row, widest)), static_cast<std::int64_t>(widest)));
            Constraint c{{}, inst.relation(), rng.between(0, p.max_rhs)};
            for (auto pick : rng.distinct(open.size(), size)) {
                ++load[open[pick]];
                c.terms.push_back(Term{open[pick], rng.between(1, p.max_coeff)});
            }
            inst.constraints.push_back(std::move(c));
        }
        validate(inst);
        return inst;
    }

    auto random_general(CorpusRng & rng, const GeneralParams & p) -> GeneralSample
    {
        GeneralSample s;
        auto & inst = s.instance;
        inst.num_vars = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_vars)));
        for (std::size_t v = 0; v < inst.num_vars; ++v)
            s.box.push_back(Range{0, rng.between(1, p.max_range)});
        std::size_t m = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_constraints)));
        for (std::size_t i = 0; i < m; ++i) {
            auto size = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(inst.num_vars)));
            std::vector<Term> terms;
            for (auto v : rng.distinct(inst.num_vars, size)) {
                std::int64_t c = rng.between(1, p.max_abs_coeff);
                terms.push_back(Term{v, rng.chance(50) ? c : -c});
            }
            auto rel = static_cast<Relation>(rng.between(0, 2));
            inst.add(std::move(terms), rel, rng.between(-p.max_abs_rhs, p.max_abs_rhs));
        }
        validate(inst);
        return s;
    }

    auto random_graph(CorpusRng & rng, std::size_t n, std::size_t k, unsigned edge_percent) -> GraphInstance
    {
        GraphInstance g;
        g.n = n;
        g.k = std::min(k, n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng.chance(edge_percent))
                    g.edges.emplace_back(u, v);
        validate(g);
        return g;
    }

    auto random_subset_sum(CorpusRng & rng, std::size_t max_values, std::int64_t max_target, std::size_t max_k) -> SubsetSumInstance
    {
        SubsetSumInstance s;
        auto n = rng.between(1, static_cast<std::int64_t>(max_values));
        for (std::int64_t i = 0; i < n; ++i)
            s.values.emplace_back(rng.between(0, max_target));
        s.target = rng.between(0, max_target);
        s.k = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_k)));
        return s;
    }

    auto random_hitting_set(CorpusRng & rng, std::size_t max_universe, std::size_t max_sets, std::size_t max_set_size, std::size_t max_k) -> HittingSetInstance
    {
        HittingSetInstance h;
        h.universe_size = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_universe)));
        auto m = rng.between(1, static_cast<std::int64_t>(max_sets));
        for (std::int64_t i = 0; i < m; ++i) {
            auto size = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::min(max_set_size, h.universe_size))));
            h.sets.push_back(rng.distinct(h.universe_size, size));
        }
        h.k = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(max_k)));
        validate(h);
        return h;
    }
}
