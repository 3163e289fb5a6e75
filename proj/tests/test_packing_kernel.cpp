#include "brute_force.hpp"

#include <ilpk/error.hpp>
#include <ilpk/packing_kernel.hpp>

#include <doctest.h>

using namespace ilpk;

namespace
{
    auto packing(std::size_t n, std::vector<Constraint> rows, std::vector<Integer> cost, Integer k) -> CoverPackInstance
    {
        CoverPackInstance inst;
        inst.sense = Sense::packing;
        inst.num_vars = n;
        inst.constraints = std::move(rows);
        inst.cost = std::move(cost);
        inst.budget = std::move(k);
        return inst;
    }

    auto le(std::vector<Term> terms, Integer rhs) -> Constraint
    {
        return make_constraint(std::move(terms), Relation::le, std::move(rhs));
    }
}

TEST_CASE("a variable worth k decides YES")
{
    auto inst = packing(2, {le({{0, 1}, {1, 1}}, 1)}, {2, 1}, 2);
    auto r = basic_reduce_packing(inst);
    REQUIRE(r.report.early_decision);
    CHECK(r.report.early_decision->decision == Decision::yes);
    CHECK(brute::solution_exists(inst));
}

TEST_CASE("a variable pinned at zero is deleted")
{
    auto inst = packing(2, {le({{0, 1}}, 0), le({{0, 1}, {1, 1}}, 1)}, {1, 1}, 2);
    auto r = basic_reduce_packing(inst);
    CHECK(r.instance.num_vars < inst.num_vars);
    CHECK(solve(r.instance).decision == solve(inst).decision);
}

TEST_CASE("greedy disjoint set decides YES")
{
    // q = 1, r = 2, k = 2: three rows on disjoint variables, each with a cost-one variable
    auto inst = packing(6, {le({{0, 1}, {1, 1}}, 1), le({{2, 1}, {3, 1}}, 1), le({{4, 1}, {5, 1}}, 1)}, {1, 1, 1, 1, 1, 1}, 2);
    auto r = basic_reduce_packing(inst);
    REQUIRE(r.report.early_decision);
    CHECK(r.report.early_decision->decision == Decision::yes);
    CHECK(solve(inst).decision == Decision::yes);
}

TEST_CASE("surviving costs lie strictly below k")
{
    auto inst = packing(3, {le({{0, 1}, {1, 1}, {2, 1}}, 1)}, {1, 0, 2}, 3);
    auto r = basic_reduce_packing(inst);
    REQUIRE_FALSE(r.report.early_decision);
    for (const auto & c : r.instance.cost) {
        CHECK(c >= 1);
        CHECK(c <= r.instance.budget - 1);
    }
    CHECK(solve(r.instance).decision == solve(inst).decision);
}

TEST_CASE("upper bounds are rejected")
{
    auto inst = packing(1, {le({{0, 1}}, 3)}, {1}, 2);
    inst.upper_bounds = {Integer(1)};
    CHECK_THROWS_AS((void)basic_reduce_packing(inst), Error);
}

TEST_CASE("packing tables")
{
    auto inst = packing(2, {le({{0, 1}, {1, 1}}, 1)}, {1, 1}, 1);
    auto t = compress_packing(inst);
    REQUIRE(t.tables.size() == 1);
    CHECK(t.tables[0].bits == std::vector<bool>{true, true, true, false});
    CHECK(solve_table(t).decision == solve(inst).decision);
}
