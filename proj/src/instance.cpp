#include <ilpk/error.hpp>
#include <ilpk/instance.hpp>

#include <algorithm>

namespace ilpk
{
    auto to_string(Relation rel) -> std::string_view
    {
        switch (rel) {
        case Relation::le: return "le";
        case Relation::ge: return "ge";
        case Relation::eq: return "eq";
        }
        return "?";
    }

    auto to_string(Sense sense) -> std::string_view
    {
        return sense == Sense::cover ? "cover" : "packing";
    }

    auto to_string(Decision decision) -> std::string_view
    {
        return decision == Decision::yes ? "YES" : "NO";
    }

    auto Constraint::scope() const -> Scope
    {
        Scope result;
        result.reserve(terms.size());
        for (const auto & t : terms)
            result.push_back(t.var);
        return result;
    }

    auto Constraint::activity(std::span<const Integer> x) const -> Integer
    {
        Integer sum = 0;
        for (const auto & t : terms)
            sum += t.coeff * x[t.var];
        return sum;
    }

    auto Constraint::holds(const Integer & lhs) const -> bool
    {
        switch (rel) {
        case Relation::le: return lhs <= rhs;
        case Relation::ge: return lhs >= rhs;
        case Relation::eq: return lhs == rhs;
        }
        return false;
    }

    auto Constraint::satisfied_by(std::span<const Integer> x) const -> bool
    {
        return holds(activity(x));
    }

    auto Constraint::coeff_of(VarIndex var) const -> Integer
    {
        auto it = std::lower_bound(terms.begin(), terms.end(), var, [](const Term & t, VarIndex v) { return t.var < v; });
        if (it != terms.end() && it->var == var)
            return it->coeff;
        return 0;
    }

    auto sort_terms(Constraint & c) -> void
    {
        std::stable_sort(c.terms.begin(), c.terms.end(), [](const Term & a, const Term & b) { return a.var < b.var; });
    }

    auto make_constraint(std::vector<Term> terms, Relation rel, Integer rhs) -> Constraint
    {
        Constraint c{std::move(terms), rel, std::move(rhs)};
        sort_terms(c);
        std::vector<Term> merged;
        for (auto & t : c.terms) {
            if (! merged.empty() && merged.back().var == t.var)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term & t) { return t.coeff == 0; });
        c.terms = std::move(merged);
        return c;
    }

    auto IlpInstance::add_var(std::optional<Integer> lb, std::optional<Integer> ub) -> VarIndex
    {
        lower_bounds.resize(num_vars, Integer(0));
        upper_bounds.resize(num_vars);
        lower_bounds.push_back(std::move(lb));
        upper_bounds.push_back(std::move(ub));
        return num_vars++;
    }

    auto IlpInstance::add(std::vector<Term> terms, Relation rel, Integer rhs) -> void
    {
        constraints.push_back(make_constraint(std::move(terms), rel, std::move(rhs)));
    }

    auto IlpInstance::lower_bound(VarIndex v) const -> std::optional<Integer>
    {
        if (v < lower_bounds.size())
            return lower_bounds[v];
        return Integer(0);
    }

    auto IlpInstance::upper_bound(VarIndex v) const -> std::optional<Integer>
    {
        if (v < upper_bounds.size())
            return upper_bounds[v];
        return std::nullopt;
    }

    auto CoverPackInstance::upper_bound(VarIndex v) const -> std::optional<Integer>
    {
        if (v < upper_bounds.size())
            return upper_bounds[v];
        return std::nullopt;
    }

    auto CoverPackInstance::objective(std::span<const Integer> x) const -> Integer
    {
        Integer sum = 0;
        for (std::size_t i = 0; i < num_vars; ++i)
            sum += cost[i] * x[i];
        return sum;
    }

    auto compute_stats(std::size_t num_vars, std::span<const Constraint> constraints) -> SparsenessStats
    {
        SparsenessStats s;
        s.num_vars = num_vars;
        s.num_constraints = constraints.size();
        std::vector<std::size_t> occurrences(num_vars, 0);
        for (const auto & c : constraints) {
            s.row_sparseness = std::max(s.row_sparseness, c.terms.size());
            for (const auto & t : c.terms) {
                ++occurrences[t.var];
                s.max_abs_coeff = std::max(s.max_abs_coeff, Integer(abs(t.coeff)));
            }
            s.max_abs_coeff = std::max(s.max_abs_coeff, Integer(abs(c.rhs)));
        }
        for (auto o : occurrences)
            s.column_sparseness = std::max(s.column_sparseness, o);
        return s;
    }

    auto compute_stats(const IlpInstance & inst) -> SparsenessStats
    {
        return compute_stats(inst.num_vars, inst.constraints);
    }

    auto compute_stats(const CoverPackInstance & inst) -> SparsenessStats
    {
        return compute_stats(inst.num_vars, inst.constraints);
    }

    namespace
    {
        auto fail(const std::string & what) -> void
        {
            throw Error(ErrorKind::validation_error, what);
        }

        auto validate_rows(std::size_t num_vars, std::span<const Constraint> constraints) -> void
        {
            for (std::size_t i = 0; i < constraints.size(); ++i) {
                const auto & c = constraints[i];
                for (std::size_t j = 0; j < c.terms.size(); ++j) {
                    const auto & t = c.terms[j];
                    if (t.var >= num_vars)
                        fail("constraint " + std::to_string(i) + " references variable " + std::to_string(t.var) + " but num_vars is " + std::to_string(num_vars));
                    if (t.coeff == 0)
                        fail("constraint " + std::to_string(i) + " stores an explicit zero coefficient for variable " + std::to_string(t.var));
                    if (j > 0 && c.terms[j - 1].var >= t.var)
                        fail("constraint " + std::to_string(i) + " has variable indices that are not strictly increasing (variable " + std::to_string(t.var) + ")");
                }
            }
        }
    }

    auto validate(const IlpInstance & inst) -> void
    {
        validate_rows(inst.num_vars, inst.constraints);
        if (inst.lower_bounds.size() > inst.num_vars || inst.upper_bounds.size() > inst.num_vars)
            fail("bound list longer than num_vars");
        for (std::size_t v = 0; v < inst.upper_bounds.size(); ++v) {
            const auto & ub = inst.upper_bounds[v];
            if (! ub)
                continue;
            auto lb = inst.lower_bound(v);
            if (lb && *lb > *ub)
                fail("variable " + std::to_string(v) + " has lower bound above upper bound");
        }
    }

    auto validate(const CoverPackInstance & inst) -> void
    {
        validate_rows(inst.num_vars, inst.constraints);
        Relation expected = inst.relation();
        for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
            const auto & c = inst.constraints[i];
            if (c.rel != expected)
                fail("constraint " + std::to_string(i) + " has relation " + std::string(to_string(c.rel)) + " in a " + std::string(to_string(inst.sense)) + " instance");
            if (c.rhs < 0)
                fail("constraint " + std::to_string(i) + " has a negative right-hand side");
            for (const auto & t : c.terms)
                if (t.coeff < 0)
                    fail("constraint " + std::to_string(i) + " has a negative coefficient");
        }
        if (inst.cost.size() != inst.num_vars)
            fail("cost vector length " + std::to_string(inst.cost.size()) + " differs from num_vars " + std::to_string(inst.num_vars));
        for (std::size_t v = 0; v < inst.cost.size(); ++v)
            if (inst.cost[v] < 0)
                fail("variable " + std::to_string(v) + " has a negative cost");
        if (inst.budget < 0)
            fail("budget k is negative");
        if (! inst.upper_bounds.empty() && inst.upper_bounds.size() != inst.num_vars)
            fail("upper bound list length differs from num_vars");
        for (std::size_t v = 0; v < inst.upper_bounds.size(); ++v)
            if (inst.upper_bounds[v] && *inst.upper_bounds[v] < 0)
                fail("variable " + std::to_string(v) + " has a negative upper bound");
    }

    auto is_feasible(const IlpInstance & inst, std::span<const Integer> x) -> bool
    {
        if (x.size() != inst.num_vars)
            return false;
        for (std::size_t v = 0; v < inst.num_vars; ++v) {
            if (auto lb = inst.lower_bound(v); lb && x[v] < *lb)
                return false;
            if (auto ub = inst.upper_bound(v); ub && x[v] > *ub)
                return false;
        }
        return std::all_of(inst.constraints.begin(), inst.constraints.end(), [&](const Constraint & c) { return c.satisfied_by(x); });
    }

    auto is_solution(const CoverPackInstance & inst, std::span<const Integer> x) -> bool
    {
        if (x.size() != inst.num_vars)
            return false;
        for (std::size_t v = 0; v < inst.num_vars; ++v) {
            if (x[v] < 0)
                return false;
            if (auto ub = inst.upper_bound(v); ub && x[v] > *ub)
                return false;
        }
        for (const auto & c : inst.constraints)
            if (! c.satisfied_by(x))
                return false;
        Integer value = inst.objective(x);
        return inst.sense == Sense::cover ? value <= inst.budget : value >= inst.budget;
    }

    auto as_general(const CoverPackInstance & inst) -> IlpInstance
    {
        IlpInstance g;
        g.num_vars = inst.num_vars;
        g.constraints = inst.constraints;
        g.lower_bounds.assign(inst.num_vars, Integer(0));
        g.upper_bounds.assign(inst.num_vars, std::nullopt);
        for (std::size_t v = 0; v < inst.upper_bounds.size(); ++v)
            g.upper_bounds[v] = inst.upper_bounds[v];
        return g;
    }
}
