#include "reduce_util.hpp"

#include <ilpk/cover_kernel.hpp>
#include <ilpk/error.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ilpk
{
    auto trivial_instance(Sense sense, const Integer & budget, Decision decision) -> CoverPackInstance
    {
        CoverPackInstance t;
        t.sense = sense;
        t.budget = budget;
        if (sense == Sense::cover) {
            if (decision == Decision::no)
                t.constraints.push_back(Constraint{{}, Relation::ge, 1});
        }
        else if (decision == Decision::yes)
            t.budget = 0;
        else if (t.budget < 1)
            t.budget = 1;
        return t;
    }

    namespace
    {
        auto require_cover(const CoverPackInstance & inst, std::string_view op) -> void
        {
            validate(inst);
            if (inst.sense != Sense::cover)
                throw Error(ErrorKind::invalid_input, std::string(op) + " needs a covering instance");
        }

        /// Cost-zero variables take their largest value for free: rows with an unbounded one are
        /// satisfied and dropped, bounded ones are substituted at their upper bound.
        auto fix_free_variables(CoverPackInstance & inst, ReductionReport & report) -> void
        {
            std::size_t free_count = 0, dropped = 0;
            std::vector<char> is_free(inst.num_vars, 0);
            for (VarIndex v = 0; v < inst.num_vars; ++v)
                if (inst.cost[v] == 0) {
                    is_free[v] = 1;
                    ++free_count;
                }
            if (free_count == 0)
                return;
            std::vector<Constraint> kept;
            for (auto & c : inst.constraints) {
                bool satisfied = false;
                std::vector<Term> rest;
                for (auto & t : c.terms) {
                    if (! is_free[t.var])
                        rest.push_back(t);
                    else if (auto ub = inst.upper_bound(t.var))
                        c.rhs -= t.coeff * *ub;
                    else
                        satisfied = true;
                }
                if (satisfied) {
                    ++dropped;
                    continue;
                }
                c.terms = std::move(rest);
                if (c.rhs < 0)
                    c.rhs = 0;
                kept.push_back(std::move(c));
            }
            inst.constraints = std::move(kept);
            std::size_t removed = drop_variables(inst, is_free);
            report.record("cost-zero-variables", dropped, removed, std::to_string(free_count) + " cost-zero variables fixed at their largest value");
        }

        auto drop_zero_satisfied(CoverPackInstance & inst, ReductionReport & report) -> void
        {
            std::size_t before = inst.constraints.size();
            std::erase_if(inst.constraints, [](const Constraint & c) { return c.rhs <= 0; });
            if (std::size_t removed = before - inst.constraints.size())
                report.record("satisfied-at-zero", removed, 0, "rows with rhs <= 0");
        }

        auto strip_over_budget(CoverPackInstance & inst, ReductionReport & report) -> void
        {
            std::size_t stripped = 0;
            std::vector<char> over(inst.num_vars, 0);
            for (VarIndex v = 0; v < inst.num_vars; ++v)
                over[v] = inst.cost[v] > inst.budget || inst.upper_bound(v) == Integer(0);
            for (auto & c : inst.constraints)
                stripped += std::erase_if(c.terms, [&](const Term & t) { return over[t.var]; });
            if (stripped > 0)
                report.record("over-budget-variables", 0, 0, std::to_string(stripped) + " occurrences of variables with cost above k or upper bound 0 removed from rows");
        }

        /// Empty rows remaining here have rhs >= 1.
        auto has_empty_row(const CoverPackInstance & inst) -> bool
        {
            return std::any_of(inst.constraints.begin(), inst.constraints.end(), [](const Constraint & c) { return c.terms.empty(); });
        }

        auto dedup_scopes(CoverPackInstance & inst, ReductionReport & report, std::uint64_t cap) -> void
        {
            std::map<Scope, std::vector<std::size_t>> groups;
            for (std::size_t i = 0; i < inst.constraints.size(); ++i)
                groups[inst.constraints[i].scope()].push_back(i);
            std::uint64_t radix = static_cast<std::uint64_t>(to_int64(inst.budget, "k")) + 1;
            std::vector<char> keep(inst.constraints.size(), 1);
            std::size_t skipped = 0;
            for (const auto & [scope, members] : groups) {
                if (members.size() < 2)
                    continue;
                std::size_t d = scope.size();
                std::uint64_t points = saturating_pow(radix, d, cap);
                if (points > cap) {
                    ++skipped;
                    continue;
                }
                for (auto i : members)
                    keep[i] = 0;
                std::vector<std::uint64_t> digits(d, 0);
                for (std::uint64_t index = 0; index < points; ++index) {
                    for (auto i : members) {
                        const auto & c = inst.constraints[i];
                        Integer lhs = 0;
                        for (std::size_t j = 0; j < d; ++j)
                            lhs += c.terms[j].coeff * digits[j];
                        if (lhs < c.rhs) {
                            keep[i] = 1;
                            break;
                        }
                    }
                    for (std::size_t pos = d; pos-- > 0;) {
                        if (++digits[pos] < radix)
                            break;
                        digits[pos] = 0;
                    }
                }
            }
            std::vector<Constraint> kept;
            for (std::size_t i = 0; i < inst.constraints.size(); ++i)
                if (keep[i])
                    kept.push_back(std::move(inst.constraints[i]));
            std::size_t removed = inst.constraints.size() - kept.size();
            inst.constraints = std::move(kept);
            if (removed > 0)
                report.record("per-scope-dedup", removed, 0, "kept one constraint per infeasible local assignment in {0..k}^d");
            if (skipped > 0)
                report.note("per-scope-dedup-skipped", std::to_string(skipped) + " scopes above the enumeration cap");
        }

        /// Rules shared by the basic reduction and the kq normalization.
        auto normalize(CoverPackInstance & inst, ReductionReport & report) -> bool
        {
            fix_free_variables(inst, report);
            drop_zero_satisfied(inst, report);
            strip_over_budget(inst, report);
            if (has_empty_row(inst)) {
                settle(inst, report, Decision::no, "empty-row", "a row with rhs >= 1 has no variable within budget");
                return false;
            }
            return true;
        }

        auto finish(CoverPackInstance & inst, ReductionReport & report) -> void
        {
            if (! report.early_decision) {
                drop_unused_variables(inst, report);
                if (inst.constraints.empty())
                    settle(inst, report, Decision::yes, "no-constraints", "x = 0 satisfies every remaining row");
            }
            report.stats_after = compute_stats(inst);
        }
    }

    auto basic_reduce_cover(const CoverPackInstance & input, std::uint64_t dedup_cap) -> CoverPackReduction
    {
        require_cover(input, "basic_reduce_cover");
        CoverPackReduction result{input, {}};
        auto & inst = result.instance;
        auto & report = result.report;
        report.stats_before = compute_stats(inst);
        if (normalize(inst, report))
            dedup_scopes(inst, report, dedup_cap);
        finish(inst, report);
        return result;
    }

    auto is_valid_sunflower(const Sunflower & s) -> bool
    {
        if (s.members.empty() || s.members.size() != s.petals.size())
            return false;
        std::size_t d = s.members[0].size();
        if (s.core.size() >= d || ! std::is_sorted(s.core.begin(), s.core.end()))
            return false;
        for (std::size_t i = 0; i < s.members.size(); ++i) {
            const auto & m = s.members[i];
            if (m.size() != d || ! std::is_sorted(m.begin(), m.end()))
                return false;
            Scope petal;
            std::set_difference(m.begin(), m.end(), s.core.begin(), s.core.end(), std::back_inserter(petal));
            if (petal != s.petals[i] || petal.size() + s.core.size() != d)
                return false;
            for (std::size_t j = 0; j < i; ++j) {
                Scope common;
                std::set_intersection(m.begin(), m.end(), s.members[j].begin(), s.members[j].end(), std::back_inserter(common));
                if (common != s.core)
                    return false;
            }
        }
        return true;
    }

    namespace
    {
        auto sunflower_search(const std::vector<Scope> & family, std::size_t t) -> std::optional<Sunflower>
        {
            if (family.empty() || family[0].empty())
                return std::nullopt;
            std::vector<Scope> disjoint;
            std::set<VarIndex> covered;
            for (const auto & s : family)
                if (std::none_of(s.begin(), s.end(), [&](VarIndex v) { return covered.contains(v); })) {
                    disjoint.push_back(s);
                    covered.insert(s.begin(), s.end());
                }
            if (disjoint.size() >= t)
                return Sunflower{{}, disjoint, disjoint};

            std::map<VarIndex, std::size_t> frequency;
            for (const auto & s : family)
                for (auto v : s)
                    ++frequency[v];
            VarIndex best = frequency.begin()->first;
            for (const auto & [v, f] : frequency)
                if (f > frequency[best])
                    best = v;

            std::vector<Scope> reduced;
            for (const auto & s : family)
                if (std::binary_search(s.begin(), s.end(), best)) {
                    Scope rest;
                    for (auto v : s)
                        if (v != best)
                            rest.push_back(v);
                    reduced.push_back(std::move(rest));
                }
            auto inner = sunflower_search(reduced, t);
            if (! inner)
                return std::nullopt;
            inner->core.insert(std::upper_bound(inner->core.begin(), inner->core.end(), best), best);
            for (auto & m : inner->members)
                m.insert(std::upper_bound(m.begin(), m.end(), best), best);
            return inner;
        }
    }

    auto find_sunflower(std::span<const Scope> scopes, std::size_t t) -> std::optional<Sunflower>
    {
        if (scopes.empty())
            return std::nullopt;
        std::size_t d = scopes[0].size();
        if (d == 0)
            throw Error(ErrorKind::invalid_input, "sunflower search needs nonempty sets");
        std::set<Scope> seen;
        for (const auto & s : scopes) {
            if (s.size() != d)
                throw Error(ErrorKind::invalid_input, "sunflower search needs sets of equal size");
            if (! std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
                throw Error(ErrorKind::invalid_input, "sunflower search needs sorted sets without repeats");
            if (! seen.insert(s).second)
                throw Error(ErrorKind::invalid_input, "sunflower search needs distinct sets");
        }
        auto result = sunflower_search({scopes.begin(), scopes.end()}, std::max<std::size_t>(t, 1));
        if (result && ! is_valid_sunflower(*result))
            throw Error(ErrorKind::internal_error, "sunflower search produced an invalid sunflower");
        return result;
    }

    auto sunflower_reduce_step(const CoverPackInstance & input, const Sunflower & sunflower) -> CoverPackReduction
    {
        require_cover(input, "sunflower_reduce_step");
        if (! is_valid_sunflower(sunflower))
            throw Error(ErrorKind::invalid_input, "sunflower violates its invariants");
        CoverPackReduction result{input, {}};
        auto & inst = result.instance;
        auto & report = result.report;
        report.stats_before = compute_stats(inst);

        std::vector<std::size_t> members;
        for (const auto & scope : sunflower.members) {
            auto it = std::find_if(inst.constraints.begin(), inst.constraints.end(), [&](const Constraint & c) {
                return c.terms.size() == scope.size() && std::equal(scope.begin(), scope.end(), c.terms.begin(), [](VarIndex v, const Term & t) { return v == t.var; });
            });
            if (it == inst.constraints.end())
                throw Error(ErrorKind::invalid_input, "a sunflower member matches no constraint scope");
            members.push_back(std::size_t(it - inst.constraints.begin()));
        }
        std::sort(members.begin(), members.end());

        std::size_t k = to_size(inst.budget, "k");
        if (sunflower.core.empty() && members.size() > k) {
            settle(inst, report, Decision::no, "sunflower-empty-core",
                std::to_string(members.size()) + " constraints on disjoint variables each need a unit of cost, budget " + std::to_string(k));
            report.stats_after = compute_stats(inst);
            return result;
        }

        std::size_t s = sunflower.core.size();
        std::uint64_t points = saturating_pow(k + 1, s, default_table_cap);
        if (points > default_table_cap)
            throw Error(ErrorKind::table_too_large, "too many core assignments to enumerate");
        std::vector<char> marked(members.size(), 0);
        std::vector<std::uint64_t> digits(s, 0);
        for (std::uint64_t index = 0; index < points; ++index) {
            std::size_t marks = 0;
            for (std::size_t i = 0; i < members.size() && marks <= k; ++i) {
                const auto & c = inst.constraints[members[i]];
                Integer lhs = 0;
                for (std::size_t j = 0; j < s; ++j)
                    lhs += c.coeff_of(sunflower.core[j]) * digits[j];
                if (lhs < c.rhs) {
                    marked[i] = 1;
                    ++marks;
                }
            }
            for (std::size_t pos = s; pos-- > 0;) {
                if (++digits[pos] <= k)
                    break;
                digits[pos] = 0;
            }
        }
        std::vector<char> drop(inst.constraints.size(), 0);
        std::size_t removed = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (! marked[i]) {
                drop[members[i]] = 1;
                ++removed;
            }
        std::vector<Constraint> kept;
        for (std::size_t i = 0; i < inst.constraints.size(); ++i)
            if (! drop[i])
                kept.push_back(std::move(inst.constraints[i]));
        inst.constraints = std::move(kept);
        report.record("sunflower-marking", removed, 0,
            "core size " + std::to_string(s) + ", " + std::to_string(members.size()) + " petals, " + std::to_string(members.size() - removed) + " marked");
        report.stats_after = compute_stats(inst);
        return result;
    }

    namespace
    {
        auto factorial(std::size_t d) -> Integer
        {
            Integer f = 1;
            for (std::size_t i = 2; i <= d; ++i)
                f *= i;
            return f;
        }
    }

    auto cover_kernel_bound(std::size_t r, const Integer & k) -> Integer
    {
        Integer base = pow(Integer(k + 1), static_cast<unsigned>(r));
        Integer total = 0;
        for (std::size_t d = 1; d <= r; ++d)
            total += factorial(d) * pow(base, static_cast<unsigned>(d)) * pow(Integer(k + 1), static_cast<unsigned>(d));
        return total;
    }

    auto kernelize_cover(const CoverPackInstance & input) -> CoverPackReduction
    {
        require_cover(input, "kernelize_cover");
        CoverPackReduction result{input, {}};
        auto & inst = result.instance;
        auto & report = result.report;
        report.stats_before = compute_stats(inst);
        while (true) {
            auto basic = basic_reduce_cover(inst);
            report.absorb(basic.report);
            inst = std::move(basic.instance);
            if (report.early_decision)
                break;
            std::size_t r = report.stats_after.row_sparseness;
            std::uint64_t k = static_cast<std::uint64_t>(to_int64(inst.budget, "k"));
            std::uint64_t petals = saturating_pow(k + 1, r, std::uint64_t{1} << 40);
            Integer t = Integer(petals) + 1;
            bool changed = false;
            for (std::size_t d = 1; d <= r && ! report.early_decision; ++d) {
                Integer threshold = factorial(d) * pow(t - 1, static_cast<unsigned>(d));
                while (true) {
                    std::vector<Scope> family;
                    std::set<Scope> seen;
                    for (const auto & c : inst.constraints)
                        if (c.terms.size() == d) {
                            auto scope = c.scope();
                            if (seen.insert(scope).second)
                                family.push_back(std::move(scope));
                        }
                    if (Integer(family.size()) <= threshold)
                        break;
                    auto sunflower = find_sunflower(family, t.convert_to<std::size_t>());
                    if (! sunflower)
                        throw Error(ErrorKind::internal_error, "no sunflower found above the size threshold");
                    auto step = sunflower_reduce_step(inst, *sunflower);
                    if (step.report.total_constraints_removed() == 0 && ! step.report.early_decision)
                        throw Error(ErrorKind::internal_error, "sunflower step removed nothing");
                    report.absorb(step.report);
                    inst = std::move(step.instance);
                    changed = true;
                    if (report.early_decision)
                        break;
                }
            }
            if (report.early_decision || ! changed)
                break;
        }
        report.note("kernel_constraint_bound", to_string(cover_kernel_bound(report.stats_before.row_sparseness, input.budget)));
        report.stats_after = compute_stats(inst);
        return result;
    }

    auto reduce_cover_kqr(const CoverPackInstance & input) -> CoverPackReduction
    {
        require_cover(input, "reduce_cover_kqr");
        CoverPackReduction result{input, {}};
        auto & inst = result.instance;
        auto & report = result.report;
        report.stats_before = compute_stats(inst);
        if (normalize(inst, report)) {
            auto q = compute_stats(inst).column_sparseness;
            Integer limit = inst.budget * q;
            if (Integer(inst.constraints.size()) > limit)
                settle(inst, report, Decision::no, "kq-bound",
                    std::to_string(inst.constraints.size()) + " constraints exceed k*q = " + to_string(limit));
        }
        finish(inst, report);
        return result;
    }

    namespace
    {
        class Brancher
        {
        private:
            const CoverPackInstance & _inst;
            std::vector<std::size_t> _rows;
            std::vector<char> _branchable;
            Assignment _x;
            Integer _spent = 0;
            std::uint64_t _nodes = 0, _leaves = 0;

            auto first_violated() const -> std::optional<std::size_t>
            {
                for (auto i : _rows)
                    if (! _inst.constraints[i].satisfied_by(_x))
                        return i;
                return std::nullopt;
            }

            auto search() -> bool
            {
                ++_nodes;
                auto row = first_violated();
                if (! row) {
                    ++_leaves;
                    return true;
                }
                bool any_child = false;
                for (const auto & t : _inst.constraints[*row].terms) {
                    VarIndex v = t.var;
                    if (! _branchable[v] || _spent + _inst.cost[v] > _inst.budget)
                        continue;
                    if (auto ub = _inst.upper_bound(v); ub && _x[v] >= *ub)
                        continue;
                    any_child = true;
                    ++_x[v];
                    _spent += _inst.cost[v];
                    if (search())
                        return true;
                    --_x[v];
                    _spent -= _inst.cost[v];
                }
                if (! any_child)
                    ++_leaves;
                return false;
            }

        public:
            explicit Brancher(const CoverPackInstance & inst) :
                _inst(inst),
                _branchable(inst.num_vars, 0),
                _x(inst.num_vars, 0)
            {
                std::vector<char> unbounded_free(inst.num_vars, 0);
                for (VarIndex v = 0; v < inst.num_vars; ++v) {
                    if (inst.cost[v] != 0)
                        _branchable[v] = 1;
                    else if (auto ub = inst.upper_bound(v))
                        _x[v] = *ub;
                    else
                        unbounded_free[v] = 1;
                }
                for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
                    const auto & terms = inst.constraints[i].terms;
                    if (std::none_of(terms.begin(), terms.end(), [&](const Term & t) { return unbounded_free[t.var]; }))
                        _rows.push_back(i);
                }
            }

            auto run() -> BranchResult
            {
                BranchResult result;
                if (search()) {
                    // rows skipped above are met by raising their unbounded cost-zero variable
                    for (const auto & c : _inst.constraints) {
                        Integer deficit = c.rhs - c.activity(_x);
                        if (deficit <= 0)
                            continue;
                        for (const auto & t : c.terms)
                            if (_inst.cost[t.var] == 0 && ! _inst.upper_bound(t.var)) {
                                _x[t.var] += ceil_div(deficit, t.coeff);
                                break;
                            }
                    }
                    if (! is_solution(_inst, _x))
                        throw Error(ErrorKind::internal_error, "branching witness fails the independent re-check");
                    result.verdict.decision = Decision::yes;
                    result.verdict.witness = _x;
                }
                result.verdict.nodes_explored = _nodes;
                result.leaves = _leaves;
                return result;
            }
        };
    }

    auto branch_solve_cover(const CoverPackInstance & inst) -> BranchResult
    {
        require_cover(inst, "branch_solve_cover");
        return Brancher(inst).run();
    }

    auto compress_cover(const CoverPackInstance & inst, std::uint64_t cap) -> TableInstance
    {
        require_cover(inst, "compress_cover");
        TableInstance out;
        out.sense = Sense::cover;
        out.num_vars = inst.num_vars;
        out.budget = inst.budget;
        out.cost = inst.cost;
        std::uint64_t k = static_cast<std::uint64_t>(to_int64(inst.budget, "k"));
        for (const auto & c : inst.constraints)
            out.tables.push_back(build_table(c, k, cap));
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (auto ub = inst.upper_bound(v); ub && *ub < inst.budget)
                out.tables.push_back(build_table(Constraint{{Term{v, 1}}, Relation::le, *ub}, k, cap));
        validate(out);
        return out;
    }
}
