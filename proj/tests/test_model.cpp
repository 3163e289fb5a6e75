#include <ilpk/error.hpp>
#include <ilpk/gadgets.hpp>
#include <ilpk/io.hpp>

#include <doctest.h>

using namespace ilpk;

namespace
{
    auto kind_of(const std::function<void()> & f) -> std::optional<ErrorKind>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    auto cover(std::size_t n, std::vector<Constraint> rows, std::vector<Integer> cost, Integer k) -> CoverPackInstance
    {
        CoverPackInstance inst;
        inst.num_vars = n;
        inst.constraints = std::move(rows);
        inst.cost = std::move(cost);
        inst.budget = std::move(k);
        return inst;
    }
}

TEST_CASE("stats of a two-row cover")
{
    auto inst = cover(3, {make_constraint({{0, 1}, {1, 1}}, Relation::ge, 1), make_constraint({{1, 1}, {2, 1}}, Relation::ge, 1)}, {1, 1, 1}, 1);
    auto s = compute_stats(inst);
    CHECK(s.row_sparseness == 2);
    CHECK(s.column_sparseness == 2);
    CHECK(s.max_abs_coeff == 1);
    CHECK(s.num_vars == 3);
    CHECK(s.num_constraints == 2);
}

TEST_CASE("stats of an empty constraint list")
{
    auto s = compute_stats(cover(2, {}, {1, 1}, 1));
    CHECK(s.row_sparseness == 0);
    CHECK(s.column_sparseness == 0);
    CHECK(s.num_constraints == 0);
}

TEST_CASE("power gadget max coefficient equals M")
{
    IlpInstance inst;
    auto a = inst.add_var(), b = inst.add_var(), p = inst.add_var();
    auto h = power_gadget(inst, a, b, 1, p, 1);
    CHECK(h.num_constraints == 13);
    CHECK(h.big_m == 3);
    CHECK(compute_stats(inst).max_abs_coeff == 3);
}

TEST_CASE("make_constraint canonicalizes")
{
    auto c = make_constraint({{2, 1}, {0, 3}, {2, -1}, {1, 0}}, Relation::le, 4);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0] == Term{0, 3});
    CHECK(c.scope() == Scope{0});
}

TEST_CASE("graph parse")
{
    auto g = parse_graph(R"({"n": 3, "edges": [[1, 0], [1, 2]], "k": 2})");
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 2);
    CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(parse_graph(serialize_graph(g)) == g);
    CHECK(kind_of([] { (void)parse_graph(R"({"n": 3, "edges": [[1, 1]], "k": 1})"); }) == ErrorKind::validation_error);
}

TEST_CASE("instance validation errors")
{
    CHECK(kind_of([] {
        (void)parse_instance(R"({"kind": "cover", "num_vars": 3, "constraints": [{"coeffs": [[7, 1]], "rel": "ge", "rhs": 1}], "cost": [1, 1, 1], "k": 1})");
    }) == ErrorKind::validation_error);
    CHECK(kind_of([] {
        (void)parse_instance(R"({"kind": "cover", "num_vars": 3, "constraints": [{"coeffs": [[1, 1], [1, 2]], "rel": "ge", "rhs": 1}], "cost": [1, 1, 1], "k": 1})");
    }) == ErrorKind::validation_error);
    CHECK(kind_of([] {
        (void)parse_instance(R"({"kind": "cover", "num_vars": 1, "constraints": [{"coeffs": [[0, -1]], "rel": "ge", "rhs": 1}], "cost": [1], "k": 1})");
    }) == ErrorKind::validation_error);
    CHECK(kind_of([] {
        (void)parse_instance(R"({"kind": "packing", "num_vars": 1, "constraints": [{"coeffs": [[0, 1]], "rel": "ge", "rhs": 1}], "cost": [1], "k": 1})");
    }) == ErrorKind::validation_error);
    CHECK(kind_of([] { (void)parse_instance(R"({"kind": "cover", "num_vars": 1,)"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { (void)parse_instance(R"({"kind": "cover", "num_vars": 1.5, "constraints": [], "cost": [1], "k": 1})"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { (void)parse_instance(R"({"kind": "cover", "kind": "cover"})"); }) == ErrorKind::parse_error);
}

TEST_CASE("serialization round trip and canonical bytes")
{
    std::string text = R"({"kind": "general", "num_vars": 2, "constraints": [{"coeffs": [[1, 123456789012345678901234567890], [0, -2]], "rel": "eq", "rhs": -5}], "ub": {"1": 4}})";
    auto inst = parse_general(text);
    REQUIRE(inst.constraints[0].terms[0].var == 0);
    auto once = serialize_instance(inst);
    CHECK(parse_general(once) == inst);
    CHECK(serialize_instance(parse_general(once)) == once);
    CHECK(once.find("123456789012345678901234567890") != std::string::npos);

    std::string reordered = R"({"ub": [null, 4], "num_vars": 2, "kind": "general", "constraints": [{"rhs": -5, "rel": "eq", "coeffs": [[0, -2], [1, 123456789012345678901234567890]]}]})";
    CHECK(serialize_instance(parse_general(reordered)) == once);
}

TEST_CASE("zero budget is written explicitly")
{
    auto text = serialize_instance(cover(1, {}, {1}, 0));
    CHECK(text.find("\"k\": 0") != std::string::npos);
    auto back = parse_cover_pack(text);
    CHECK(back.budget == 0);
}

TEST_CASE("cover instances view as general programs")
{
    auto inst = cover(2, {make_constraint({{0, 1}, {1, 2}}, Relation::ge, 2)}, {1, 1}, 1);
    auto g = as_general(inst);
    CHECK(g.num_vars == 2);
    CHECK(g.lower_bound(0) == Integer(0));
    CHECK_FALSE(g.upper_bound(0).has_value());
    CHECK(is_feasible(g, std::vector<Integer>{0, 1}));
    CHECK(is_solution(inst, std::vector<Integer>{0, 1}));
    CHECK_FALSE(is_solution(inst, std::vector<Integer>{2, 0}));
}

TEST_CASE("box and table files round trip")
{
    Box box{{0, 3}, {-2, 5}};
    CHECK(parse_box(serialize_box(box)) == box);

    TableInstance t;
    t.sense = Sense::packing;
    t.num_vars = 2;
    t.budget = 2;
    t.cost = {1, 2};
    t.tables.push_back(build_table(make_constraint({{0, 1}, {1, 1}}, Relation::le, 2), 2));
    auto text = serialize_table_instance(t);
    CHECK(text.rfind("tbl-v1", 0) == 0);
    CHECK(parse_table_instance(text) == t);
    CHECK(kind_of([] { (void)parse_table_instance("tbl-v1\nsense cover\nn 1\n"); }) == ErrorKind::parse_error);
}
