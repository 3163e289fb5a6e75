#include <ilpk/error.hpp>
#include <ilpk/problems.hpp>

#include <algorithm>
#include <string>

namespace ilpk
{
    namespace
    {
        auto fail(const std::string & what) -> void
        {
            throw Error(ErrorKind::validation_error, what);
        }
    }

    auto normalize(GraphInstance & g) -> void
    {
        for (auto & [u, v] : g.edges)
            if (u > v)
                std::swap(u, v);
        std::sort(g.edges.begin(), g.edges.end());
        g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
        validate(g);
    }

    auto validate(const GraphInstance & g) -> void
    {
        for (const auto & [u, v] : g.edges) {
            if (u >= g.n || v >= g.n)
                fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} references a vertex outside 0.." + std::to_string(g.n) + "-1");
            if (u == v)
                fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is a self-loop");
        }
        if (g.k > g.n)
            fail("graph target k exceeds n");
    }

    auto validate(const SubsetSumInstance & s) -> void
    {
        for (const auto & a : s.values)
            if (a < 0)
                fail("subset-sum value " + to_string(a) + " is negative");
        if (s.target < 0)
            fail("subset-sum target is negative");
    }

    auto validate(const HittingSetInstance & h) -> void
    {
        for (std::size_t i = 0; i < h.sets.size(); ++i) {
            if (h.sets[i].empty())
                fail("set " + std::to_string(i) + " is empty");
            for (auto e : h.sets[i])
                if (e >= h.universe_size)
                    fail("set " + std::to_string(i) + " contains element " + std::to_string(e) + " outside the universe");
        }
    }
}
