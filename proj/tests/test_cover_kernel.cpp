#include "brute_force.hpp"

#include <ilpk/corpus.hpp>
#include <ilpk/cover_kernel.hpp>
#include <ilpk/error.hpp>

#include <doctest.h>

#include <map>

using namespace ilpk;

namespace
{
    auto cover(std::size_t n, std::vector<Constraint> rows, std::vector<Integer> cost, Integer k) -> CoverPackInstance
    {
        CoverPackInstance inst;
        inst.num_vars = n;
        inst.constraints = std::move(rows);
        inst.cost = std::move(cost);
        inst.budget = std::move(k);
        return inst;
    }

    auto ge(std::vector<Term> terms, Integer rhs) -> Constraint
    {
        return make_constraint(std::move(terms), Relation::ge, std::move(rhs));
    }

    auto is_trivial(const CoverPackInstance & inst, Decision d) -> bool
    {
        if (inst.num_vars != 0)
            return false;
        if (d == Decision::yes)
            return inst.constraints.empty();
        return inst.constraints.size() == 1 && inst.constraints[0].terms.empty() && inst.constraints[0].rhs == 1;
    }

    auto counts_add_up(const ReductionReport & r) -> bool
    {
        return r.stats_before.num_constraints - r.total_constraints_removed() == r.stats_after.num_constraints
            && r.stats_before.num_vars - r.total_variables_removed() == r.stats_after.num_vars;
    }
}

TEST_CASE("rows satisfied at zero are dropped")
{
    auto r = basic_reduce_cover(cover(1, {ge({{0, 3}}, 0), ge({{0, 1}}, 1)}, {1}, 1));
    CHECK(r.instance.constraints.size() == 1);
    CHECK(counts_add_up(r.report));
}

TEST_CASE("over-budget variables leave their rows")
{
    auto r = basic_reduce_cover(cover(2, {ge({{0, 1}, {1, 1}}, 1)}, {3, 1}, 2));
    REQUIRE(r.instance.constraints.size() == 1);
    CHECK(r.instance.num_vars == 1);
    CHECK(r.instance.constraints[0] == ge({{0, 1}}, 1));
    CHECK(r.instance.cost == std::vector<Integer>{1});
    CHECK(counts_add_up(r.report));
}

TEST_CASE("one constraint per infeasible local assignment")
{
    auto inst = cover(1, {ge({{0, 1}}, 1), ge({{0, 2}}, 2), ge({{0, 5}}, 3)}, {1}, 1);
    auto r = basic_reduce_cover(inst);
    CHECK(r.instance.constraints.size() == 1);
    CHECK(r.instance.constraints.size() <= 2);
    CHECK(solve(r.instance).decision == solve(inst).decision);
    CHECK(counts_add_up(r.report));
}

TEST_CASE("an emptied row decides NO")
{
    auto r = basic_reduce_cover(cover(1, {ge({{0, 1}}, 1)}, {2}, 1));
    REQUIRE(r.report.early_decision);
    CHECK(r.report.early_decision->decision == Decision::no);
    CHECK(is_trivial(r.instance, Decision::no));
    CHECK(counts_add_up(r.report));
}

TEST_CASE("sunflower search")
{
    std::vector<Scope> star{{1, 2}, {1, 3}, {1, 4}};
    auto s = find_sunflower(star, 3);
    REQUIRE(s);
    CHECK(s->core == Scope{1});
    CHECK(s->petals == std::vector<Scope>{{2}, {3}, {4}});
    CHECK(is_valid_sunflower(*s));

    std::vector<Scope> disjoint{{1, 2}, {3, 4}, {5, 6}};
    auto d = find_sunflower(disjoint, 3);
    REQUIRE(d);
    CHECK(d->core.empty());
    CHECK(d->petals == disjoint);

    std::vector<Scope> uneven{{1, 2}, {3}};
    CHECK_THROWS_AS((void)find_sunflower(uneven, 2), Error);
}

TEST_CASE("sunflower search always succeeds above the bound")
{
    // d = 2, t = 3: any 2!(t-1)^2 + 1 = 9 distinct pairs contain a sunflower of 3 members
    CorpusRng rng(5);
    for (int round = 0; round < 200; ++round) {
        std::set<Scope> family;
        while (family.size() < 9) {
            auto pick = rng.distinct(7, 2);
            family.insert(Scope(pick.begin(), pick.end()));
        }
        std::vector<Scope> scopes(family.begin(), family.end());
        auto s = find_sunflower(scopes, 3);
        REQUIRE(s);
        CHECK(is_valid_sunflower(*s));
        CHECK(s->members.size() >= 3);
    }
}

TEST_CASE("empty-core sunflower with more than k members decides NO")
{
    auto inst = cover(2, {ge({{0, 1}}, 1), ge({{1, 1}}, 1)}, {1, 1}, 1);
    Sunflower s{{}, {{0}, {1}}, {{0}, {1}}};
    auto r = sunflower_reduce_step(inst, s);
    REQUIRE(r.report.early_decision);
    CHECK(r.report.early_decision->decision == Decision::no);
    CHECK_FALSE(brute::solution_exists(inst));
}

TEST_CASE("core assignments that satisfy every member mark nothing")
{
    // core {x0}; x0 = 1 satisfies every member on its own
    std::vector<Constraint> rows;
    for (VarIndex v = 1; v <= 4; ++v)
        rows.push_back(ge({{0, 1}, {v, 1}}, 1));
    auto inst = cover(5, rows, {1, 1, 1, 1, 1}, 1);
    Sunflower s{{0}, {{1}, {2}, {3}, {4}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    REQUIRE(is_valid_sunflower(s));
    auto r = sunflower_reduce_step(inst, s);
    // x0 = 0 marks k+1 = 2 members, x0 = 1 marks none
    CHECK(r.instance.constraints.size() == 2);
    CHECK(solve(r.instance).decision == solve(inst).decision);
    CHECK(brute::solution_exists(inst));
}

TEST_CASE("kernel constraint bound")
{
    CHECK(cover_kernel_bound(2, 1) == 136);
    CHECK(cover_kernel_bound(1, 1) == 1 * 2 * 2);
    CHECK(cover_kernel_bound(3, 2) == 1 * 27 * 3 + 2 * 27 * 27 * 9 + 6 * 27 * 27 * 27 * 27);
}

TEST_CASE("small instances pass through the kernel unchanged")
{
    auto inst = cover(3, {ge({{0, 1}, {1, 1}}, 1), ge({{1, 1}, {2, 1}}, 1)}, {1, 1, 1}, 2);
    auto basic = basic_reduce_cover(inst);
    auto kernel = kernelize_cover(inst);
    CHECK(kernel.instance == basic.instance);
    CHECK(kernel.instance == inst);
}

TEST_CASE("kernel shrinks a large hitting-set family")
{
    // all 66 pairs of 12 elements with k = 1: far above the d!(t-1)^d threshold for d = 2 is 32
    std::vector<Constraint> rows;
    for (VarIndex u = 0; u < 12; ++u)
        for (VarIndex v = u + 1; v < 12; ++v)
            rows.push_back(ge({{u, 1}, {v, 1}}, 1));
    auto inst = cover(12, rows, std::vector<Integer>(12, 1), 1);
    auto r = kernelize_cover(inst);
    CHECK(counts_add_up(r.report));
    CHECK(solve(r.instance).decision == Decision::no);
    CHECK(r.instance.constraints.size() <= 32);
}

TEST_CASE("kqr bound decides NO")
{
    auto inst = cover(4, {ge({{0, 1}, {1, 1}}, 1), ge({{2, 1}, {3, 1}}, 1)}, {1, 1, 1, 1}, 1);
    auto r = reduce_cover_kqr(inst);
    REQUIRE(r.report.early_decision);
    CHECK(r.report.early_decision->decision == Decision::no);
    CHECK(is_trivial(r.instance, Decision::no));
    CHECK(counts_add_up(r.report));
}

TEST_CASE("kqr leaves small instances alone")
{
    auto inst = cover(3, {ge({{0, 1}, {1, 1}}, 1), ge({{1, 1}, {2, 1}}, 1)}, {1, 1, 1}, 2);
    CHECK(reduce_cover_kqr(inst).instance == inst);
}

TEST_CASE("branching examples")
{
    auto one = branch_solve_cover(cover(1, {ge({{0, 1}}, 1)}, {1}, 1));
    CHECK(one.verdict.decision == Decision::yes);
    CHECK(one.leaves == 1);
    auto none = branch_solve_cover(cover(1, {ge({{0, 1}}, 1)}, {1}, 0));
    CHECK(none.verdict.decision == Decision::no);
    CHECK(none.leaves <= 1);

    auto path = cover(4, {ge({{0, 1}, {1, 1}}, 1), ge({{1, 1}, {2, 1}}, 1), ge({{2, 1}, {3, 1}}, 1)}, {1, 1, 1, 1}, 2);
    auto r = branch_solve_cover(path);
    CHECK(r.verdict.decision == solve(path).decision);
    CHECK(r.leaves <= 4);
}

TEST_CASE("compression keeps verdicts")
{
    auto inst = cover(2, {ge({{0, 2}, {1, 1}}, 2)}, {1, 1}, 1);
    auto t = compress_cover(inst);
    REQUIRE(t.tables.size() == 1);
    CHECK(t.tables[0].bits == std::vector<bool>{false, false, true, true});
    CHECK(solve_table(t).decision == solve(inst).decision);
}

TEST_CASE("trivial instances")
{
    auto yes = trivial_instance(Sense::cover, 3, Decision::yes);
    CHECK(solve(yes).decision == Decision::yes);
    auto no = trivial_instance(Sense::cover, 3, Decision::no);
    CHECK(solve(no).decision == Decision::no);
    auto pyes = trivial_instance(Sense::packing, 2, Decision::yes);
    CHECK(solve(pyes).decision == Decision::yes);
    auto pno = trivial_instance(Sense::packing, 2, Decision::no);
    CHECK(solve(pno).decision == Decision::no);
}
