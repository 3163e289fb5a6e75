#include <ilpk/error.hpp>
#include <ilpk/gadgets.hpp>

#include <algorithm>
#include <string>

namespace ilpk
{
    auto gadget_ell(std::size_t p_max) -> std::size_t
    {
        std::size_t ell = 0;
        while ((std::size_t{1} << ell) < p_max + 1)
            ++ell;
        return std::max<std::size_t>(ell, 1);
    }

    auto gadget_big_m(const Integer & b_max, std::size_t p_max) -> Integer
    {
        // With bit j at zero the push row reads a_{j-1} + M >= 2^{2^j} a_{j-1}, and a_{j-1} can be
        // as large as b_max * 2^(p mod 2^j).
        Integer largest = b_max * pow2(p_max);
        for (std::size_t j = 0; j < gadget_ell(p_max); ++j) {
            std::size_t span = std::size_t{1} << j;
            Integer need = b_max * (pow2(span) - 1) * pow2(std::min(span - 1, p_max));
            largest = std::max(largest, need);
        }
        return largest + 1;
    }

    auto GadgetHandle::aux_ranges() const -> std::vector<std::pair<VarIndex, Range>>
    {
        std::vector<std::pair<VarIndex, Range>> result;
        for (auto v : bits)
            result.emplace_back(v, Range{0, 1});
        for (auto v : partials)
            result.emplace_back(v, Range{0, b_max * pow2(p_max)});
        return result;
    }

    namespace
    {
        /// Linear expression with a constant part, so operands may be fixed numbers.
        struct Expr
        {
            std::vector<Term> terms;
            Integer constant = 0;

            auto add(const Operand & o, const Integer & coeff) -> Expr &
            {
                if (const auto * v = std::get_if<VarIndex>(&o))
                    terms.push_back(Term{*v, coeff});
                else
                    constant += coeff * std::get<Integer>(o);
                return *this;
            }
        };

        auto emit(IlpInstance & builder, Expr e, Relation rel, const Integer & rhs) -> void
        {
            builder.add(std::move(e.terms), rel, rhs - e.constant);
        }

        auto expr(const Operand & o, const Integer & coeff = 1) -> Expr
        {
            Expr e;
            e.add(o, coeff);
            return e;
        }
    }

    auto power_gadget(IlpInstance & builder, VarIndex a, const Operand & b, const Integer & b_max, VarIndex p, std::size_t p_max) -> GadgetHandle
    {
        if (b_max < 0)
            throw Error(ErrorKind::invalid_input, "power gadget needs b_max >= 0");
        GadgetHandle h;
        h.first_constraint = builder.constraints.size();
        h.a = a;
        h.b = b;
        h.p = p;
        h.b_max = b_max;
        h.p_max = p_max;

        if (b_max == 0) {
            emit(builder, expr(a), Relation::eq, 0);
            emit(builder, expr(b), Relation::eq, 0);
            emit(builder, expr(p), Relation::ge, 0);
            emit(builder, expr(p), Relation::le, p_max);
            h.num_constraints = 4;
            return h;
        }

        h.ell = gadget_ell(p_max);
        h.big_m = gadget_big_m(b_max, p_max);
        Integer top = b_max * pow2(p_max);
        const Integer & m = h.big_m;

        emit(builder, expr(b), Relation::ge, 0);
        emit(builder, expr(p), Relation::ge, 0);
        emit(builder, expr(a), Relation::ge, 0);
        emit(builder, expr(b), Relation::le, b_max);
        emit(builder, expr(p), Relation::le, p_max);
        emit(builder, expr(a), Relation::le, top);

        for (std::size_t i = 0; i < h.ell; ++i) {
            VarIndex bit = builder.add_var();
            h.bits.push_back(bit);
            emit(builder, expr(bit), Relation::ge, 0);
            emit(builder, expr(bit), Relation::le, 1);
        }
        Expr expansion = expr(p);
        for (std::size_t i = 0; i < h.ell; ++i)
            expansion.add(h.bits[i], -pow2(i));
        emit(builder, expansion, Relation::eq, 0);

        for (std::size_t j = 0; j + 1 < h.ell; ++j)
            h.partials.push_back(builder.add_var());

        for (std::size_t j = 0; j < h.ell; ++j) {
            Operand prev = j == 0 ? b : Operand(h.partials[j - 1]);
            VarIndex cur = j + 1 == h.ell ? a : h.partials[j];
            VarIndex bit = h.bits[j];
            Integer factor = pow2(std::size_t{1} << j);
            emit(builder, expr(cur).add(prev, -1), Relation::ge, 0);
            emit(builder, expr(cur).add(prev, -factor), Relation::le, 0);
            emit(builder, expr(cur).add(bit, -m).add(prev, -factor), Relation::ge, -m);
            emit(builder, expr(cur).add(prev, -1).add(bit, -m), Relation::le, 0);
        }
        h.num_constraints = builder.constraints.size() - h.first_constraint;
        return h;
    }

    auto cross_compose(const std::vector<GraphInstance> & input) -> Composition
    {
        if (input.empty())
            throw Error(ErrorKind::invalid_input, "cross composition needs at least one graph");
        std::vector<GraphInstance> graphs = input;
        for (auto & g : graphs) {
            normalize(g);
            if (g.n != graphs[0].n || g.k != graphs[0].k)
                throw Error(ErrorKind::invalid_input, "all graphs must share n and k");
        }
        std::size_t t = 1;
        while (t < graphs.size())
            t *= 2;
        while (graphs.size() < t)
            graphs.push_back(graphs[0]);
        std::size_t n = graphs[0].n;
        std::size_t p_max = t - 1;

        Composition out;
        out.padded_count = t;
        auto & inst = out.instance;
        auto named = [&](std::string name, Range range) {
            VarIndex v = inst.add_var();
            out.names.push_back(std::move(name));
            out.box.push_back(std::move(range));
            return v;
        };
        auto add_aux = [&](const GadgetHandle & h, const std::string & prefix) {
            for (std::size_t i = 0; i < h.bits.size(); ++i) {
                out.names.push_back(prefix + ".bit" + std::to_string(i));
                out.box.push_back(Range{0, 1});
            }
            for (std::size_t i = 0; i < h.partials.size(); ++i) {
                out.names.push_back(prefix + ".partial" + std::to_string(i));
                out.box.push_back(Range{0, h.b_max * pow2(h.p_max)});
            }
        };

        Integer full = pow2(t) - 1;
        Integer half = pow2(t - 1);
        VarIndex p = named("p", Range{0, Integer(t - 1)});
        VarIndex one = named("one", Range{0, 1});
        std::vector<VarIndex> x;
        for (std::size_t i = 0; i < n; ++i)
            x.push_back(named("x" + std::to_string(i), Range{0, 1}));

        inst.add({Term{one, 1}}, Relation::ge, 1);
        inst.add({Term{one, 1}}, Relation::le, 1);
        for (auto v : x) {
            inst.add({Term{v, 1}}, Relation::ge, 0);
            inst.add({Term{v, 1}}, Relation::le, 1);
        }

        std::vector<std::vector<char>> adjacent(t, std::vector<char>(n * n, 0));
        for (std::size_t g = 0; g < t; ++g)
            for (const auto & [u, v] : graphs[g].edges)
                adjacent[g][u * n + v] = 1;

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Integer d = 0;
                for (std::size_t g = 0; g < t; ++g)
                    if (adjacent[g][i * n + j])
                        d += pow2(g);
                std::string tag = "_" + std::to_string(i) + "_" + std::to_string(j);
                VarIndex e = named("e" + tag, Range{0, 1});
                VarIndex alpha = named("alpha" + tag, Range{0, half - 1});
                VarIndex beta = named("beta" + tag, Range{0, half});
                VarIndex gamma = named("gamma" + tag, Range{0, full * half});
                VarIndex delta = named("delta" + tag, Range{0, half});
                VarIndex epsilon = named("epsilon" + tag, Range{0, full / 2});
                VarIndex b_prime = named("bprime" + tag, Range{0, full});

                auto g_delta = power_gadget(inst, delta, one, 1, p, p_max);
                add_aux(g_delta, "delta" + tag);
                inst.add({Term{alpha, 1}}, Relation::ge, 0);
                inst.add({Term{alpha, 1}, Term{delta, -1}}, Relation::le, -1);
                auto g_beta = power_gadget(inst, beta, e, 1, p, p_max);
                add_aux(g_beta, "beta" + tag);
                inst.add({Term{epsilon, 1}}, Relation::ge, 0);
                inst.add({Term{b_prime, 1}, Term{epsilon, -2}}, Relation::eq, 0);
                auto g_gamma = power_gadget(inst, gamma, b_prime, full, p, p_max);
                add_aux(g_gamma, "gamma" + tag);
                inst.add({Term{alpha, 1}, Term{beta, 1}, Term{gamma, 1}}, Relation::eq, d);
                inst.add({Term{x[i], 1}, Term{x[j], 1}, Term{e, 1}}, Relation::le, 2);
            }

        std::vector<Term> all;
        for (auto v : x)
            all.push_back(Term{v, 1});
        inst.add(std::move(all), Relation::ge, Integer(graphs[0].k));

        if (out.box.size() != inst.num_vars || out.names.size() != inst.num_vars)
            throw Error(ErrorKind::internal_error, "composition box out of step with the variables");
        validate(inst);
        out.report.stats_after = compute_stats(inst);
        out.report.note("graphs", std::to_string(input.size()));
        out.report.note("padded_to", std::to_string(t));
        out.report.note("gadget_ell", std::to_string(gadget_ell(p_max)));
        out.report.note("num_vars", std::to_string(inst.num_vars));
        out.report.note("num_constraints", std::to_string(inst.constraints.size()));
        return out;
    }

    auto sparsify_3(const IlpInstance & input) -> Sparsified
    {
        validate(input);
        Sparsified out;
        auto & inst = out.instance;
        inst.num_vars = input.num_vars;
        for (VarIndex v = 0; v < input.num_vars; ++v) {
            inst.lower_bounds.push_back(input.lower_bound(v));
            inst.upper_bounds.push_back(input.upper_bound(v));
            out.copy_of.emplace_back(v);
        }
        // each partial sum is the sum of a prefix of some original row
        std::vector<std::vector<Term>> prefix_of(input.num_vars);

        std::size_t split_rows = 0;
        for (const auto & c : input.constraints) {
            if (c.terms.size() <= 3) {
                inst.constraints.push_back(c);
                continue;
            }
            ++split_rows;
            const auto & t = c.terms;
            VarIndex sum = inst.add_var(std::nullopt, std::nullopt);
            out.copy_of.emplace_back(std::nullopt);
            prefix_of.push_back({t[0], t[1]});
            inst.add({Term{sum, 1}, Term{t[0].var, -t[0].coeff}, Term{t[1].var, -t[1].coeff}}, Relation::eq, 0);
            for (std::size_t j = 2; j + 1 < t.size(); ++j) {
                VarIndex next = inst.add_var(std::nullopt, std::nullopt);
                out.copy_of.emplace_back(std::nullopt);
                auto prefix = prefix_of[sum];
                prefix.push_back(t[j]);
                prefix_of.push_back(std::move(prefix));
                inst.add({Term{next, 1}, Term{sum, -1}, Term{t[j].var, -t[j].coeff}}, Relation::eq, 0);
                sum = next;
            }
            inst.add({Term{sum, 1}, t.back()}, c.rel, c.rhs);
        }

        // copy variables used more than three times: copy i serves occurrence i and the chain
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> uses(inst.num_vars);
        for (std::size_t i = 0; i < inst.constraints.size(); ++i)
            for (std::size_t j = 0; j < inst.constraints[i].terms.size(); ++j)
                uses[inst.constraints[i].terms[j].var].emplace_back(i, j);
        std::size_t copies = 0;
        std::vector<Constraint> chain;
        for (VarIndex v = 0; v < uses.size(); ++v) {
            if (uses[v].size() <= 3)
                continue;
            VarIndex prev = v;
            for (std::size_t o = 1; o < uses[v].size(); ++o) {
                VarIndex copy = inst.add_var(inst.lower_bound(v), inst.upper_bound(v));
                out.copy_of.push_back(out.copy_of[v]);
                prefix_of.push_back(prefix_of[v]);
                ++copies;
                auto [row, pos] = uses[v][o];
                inst.constraints[row].terms[pos].var = copy;
                chain.push_back(make_constraint({Term{prev, 1}, Term{copy, -1}}, Relation::eq, 0));
                prev = copy;
            }
        }
        for (auto & c : inst.constraints)
            sort_terms(c);
        inst.constraints.insert(inst.constraints.end(), chain.begin(), chain.end());
        validate(inst);

        auto copy_of = out.copy_of;
        std::size_t n_in = input.num_vars;
        out.lift_box = [copy_of, prefix_of, n_in](const Box & box) {
            if (box.size() != n_in)
                throw Error(ErrorKind::invalid_input, "box size differs from the input variable count");
            Box lifted;
            for (std::size_t v = 0; v < copy_of.size(); ++v) {
                if (copy_of[v]) {
                    lifted.push_back(box[*copy_of[v]]);
                    continue;
                }
                Range r{0, 0};
                for (const auto & t : prefix_of[v]) {
                    const auto & d = box[t.var];
                    if (t.coeff > 0) {
                        r.lo += t.coeff * d.lo;
                        r.hi += t.coeff * d.hi;
                    }
                    else {
                        r.lo += t.coeff * d.hi;
                        r.hi += t.coeff * d.lo;
                    }
                }
                lifted.push_back(std::move(r));
            }
            return lifted;
        };

        out.report.stats_before = compute_stats(input);
        out.report.stats_after = compute_stats(inst);
        out.report.note("rows_split", std::to_string(split_rows));
        out.report.note("partial_sum_variables", std::to_string(std::count(copy_of.begin(), copy_of.end(), std::nullopt)));
        out.report.note("copy_variables", std::to_string(copies));
        return out;
    }

    auto to_cover(const IlpInstance & inst, const std::vector<Integer> & bounds) -> CoverPackReduction
    {
        validate(inst);
        std::size_t n = inst.num_vars;
        if (bounds.size() != n)
            throw Error(ErrorKind::invalid_input, "to_cover needs one bound per variable, got " + std::to_string(bounds.size()) + " for " + std::to_string(n));
        std::vector<Integer> b(n);
        for (VarIndex v = 0; v < n; ++v) {
            if (inst.lower_bound(v) != Integer(0))
                throw Error(ErrorKind::invalid_input, "to_cover needs lower bound 0 on variable " + std::to_string(v));
            b[v] = bounds[v];
            if (auto ub = inst.upper_bound(v); ub && *ub < b[v])
                b[v] = *ub;
            if (b[v] < 0)
                throw Error(ErrorKind::invalid_input, "variable " + std::to_string(v) + " has a negative bound");
        }

        CoverPackReduction result;
        auto & out = result.instance;
        out.sense = Sense::cover;
        out.num_vars = 2 * n;
        out.cost.assign(2 * n, 1);
        out.budget = 0;
        for (VarIndex v = 0; v < n; ++v) {
            out.constraints.push_back(make_constraint({Term{v, 1}, Term{n + v, 1}}, Relation::ge, b[v]));
            out.budget += b[v];
        }

        std::size_t dropped = 0;
        auto add_ge = [&](const std::vector<Term> & terms, const Integer & rhs, const Integer & sign) {
            std::vector<Term> cover_terms;
            Integer cover_rhs = sign * rhs;
            for (const auto & t : terms) {
                Integer alpha = sign * t.coeff;
                if (alpha > 0)
                    cover_terms.push_back(Term{t.var, alpha});
                else {
                    // alpha z = alpha (B - zhat)
                    cover_terms.push_back(Term{n + t.var, -alpha});
                    cover_rhs -= alpha * b[t.var];
                }
            }
            if (cover_rhs <= 0) {
                ++dropped;
                return;
            }
            out.constraints.push_back(make_constraint(std::move(cover_terms), Relation::ge, cover_rhs));
        };
        for (const auto & c : inst.constraints) {
            if (c.rel != Relation::le)
                add_ge(c.terms, c.rhs, 1);
            if (c.rel != Relation::ge)
                add_ge(c.terms, c.rhs, -1);
        }
        validate(out);

        auto & report = result.report;
        report.stats_before = compute_stats(inst);
        report.stats_after = compute_stats(out);
        report.note("complement_bound_rows", std::to_string(n));
        report.note("rows_satisfied_by_nonnegativity", std::to_string(dropped));
        report.note("budget", to_string(out.budget));
        return result;
    }

    auto independent_set_to_packing(const GraphInstance & input) -> CoverPackInstance
    {
        GraphInstance g = input;
        normalize(g);
        CoverPackInstance out;
        out.sense = Sense::packing;
        out.num_vars = g.n;
        out.cost.assign(g.n, 1);
        out.budget = g.k;
        std::vector<char> touched(g.n, 0);
        for (const auto & [u, v] : g.edges) {
            out.constraints.push_back(make_constraint({Term{u, 1}, Term{v, 1}}, Relation::le, 1));
            touched[u] = touched[v] = 1;
        }
        // isolated vertices still take at most one unit
        for (VarIndex v = 0; v < g.n; ++v)
            if (! touched[v])
                out.constraints.push_back(make_constraint({Term{v, 1}}, Relation::le, 1));
        validate(out);
        return out;
    }

    auto normalized_values(const SubsetSumInstance & s) -> std::vector<Integer>
    {
        validate(s);
        if (s.k < 1)
            throw Error(ErrorKind::invalid_input, "subset-sum encodings need k >= 1");
        std::vector<Integer> values;
        for (const auto & a : s.values)
            if (a <= s.target)
                values.push_back(a);
        values.insert(values.end(), s.k, Integer(0));
        return values;
    }

    namespace
    {
        auto subset_sum_rows(const SubsetSumInstance & s, Sense sense) -> CoverPackInstance
        {
            auto values = normalized_values(s);
            std::size_t n = values.size();
            Integer k = s.k;
            Relation rel = sense == Sense::cover ? Relation::ge : Relation::le;
            CoverPackInstance out;
            out.sense = sense;
            out.num_vars = n;
            out.cost.assign(n, 1);
            out.budget = k;
            std::vector<Term> count, weight, slack;
            for (VarIndex v = 0; v < n; ++v) {
                count.push_back(Term{v, 1});
                weight.push_back(Term{v, values[v]});
                slack.push_back(Term{v, s.target - values[v]});
            }
            out.constraints.push_back(make_constraint(count, rel, k));
            if (sense == Sense::packing)
                for (VarIndex v = 0; v < n; ++v)
                    out.constraints.push_back(make_constraint({Term{v, 1}}, Relation::le, 1));
            out.constraints.push_back(make_constraint(weight, rel, s.target));
            out.constraints.push_back(make_constraint(slack, rel, (k - 1) * s.target));
            if (sense == Sense::cover)
                out.upper_bounds.assign(n, Integer(1));
            validate(out);
            return out;
        }
    }

    auto subset_sum_to_packing(const SubsetSumInstance & s) -> CoverPackInstance
    {
        return subset_sum_rows(s, Sense::packing);
    }

    auto subset_sum_to_cover(const SubsetSumInstance & s) -> CoverPackInstance
    {
        return subset_sum_rows(s, Sense::cover);
    }

    auto hitting_set_to_cover(const HittingSetInstance & h) -> CoverPackInstance
    {
        validate(h);
        CoverPackInstance out;
        out.sense = Sense::cover;
        out.num_vars = h.universe_size;
        out.cost.assign(h.universe_size, 1);
        out.budget = h.k;
        for (const auto & set : h.sets) {
            std::vector<Term> terms;
            for (auto e : set)
                terms.push_back(Term{e, 1});
            out.constraints.push_back(make_constraint(std::move(terms), Relation::ge, 1));
        }
        validate(out);
        return out;
    }
}
