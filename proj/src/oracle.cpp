#include <ilpk/error.hpp>
#include <ilpk/oracle.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace ilpk
{
    auto node_cap_from_env() -> std::uint64_t
    {
        if (const char * text = std::getenv("ILPK_NODE_CAP")) {
            Integer value;
            if (parse_integer(text, value) && value > 0 && value <= Integer(std::numeric_limits<std::int64_t>::max()))
                return value.convert_to<std::uint64_t>();
        }
        return default_node_cap;
    }

    namespace
    {
        struct Row
        {
            std::vector<Term> terms;
            Relation rel;
            Integer rhs;
        };

        /// Lower bound on the cost still to be paid, from variable-disjoint covering rows.
        struct CostBound
        {
            std::vector<Integer> cost;
            Integer budget;
            std::vector<std::size_t> disjoint_rows;
            std::vector<std::optional<std::size_t>> row_of_var;
        };

        class SearchEngine
        {
        private:
            std::size_t _num_vars;
            std::vector<Row> _rows;
            std::vector<std::vector<std::size_t>> _rows_of_var;
            std::optional<CostBound> _cost_bound;
            std::uint64_t _node_cap;
            std::uint64_t _nodes = 0;
            bool _descending = false;

            auto tighten_hi(std::vector<Range> & dom, VarIndex v, const Integer & value, std::vector<VarIndex> & changed) -> bool
            {
                if (value < dom[v].hi) {
                    dom[v].hi = value;
                    changed.push_back(v);
                }
                return dom[v].lo <= dom[v].hi;
            }

            auto tighten_lo(std::vector<Range> & dom, VarIndex v, const Integer & value, std::vector<VarIndex> & changed) -> bool
            {
                if (value > dom[v].lo) {
                    dom[v].lo = value;
                    changed.push_back(v);
                }
                return dom[v].lo <= dom[v].hi;
            }

            auto propagate_row(const Row & row, std::vector<Range> & dom, std::vector<VarIndex> & changed) -> bool
            {
                Integer min_act = 0, max_act = 0;
                for (const auto & t : row.terms) {
                    const auto & d = dom[t.var];
                    if (t.coeff > 0) {
                        min_act += t.coeff * d.lo;
                        max_act += t.coeff * d.hi;
                    }
                    else {
                        min_act += t.coeff * d.hi;
                        max_act += t.coeff * d.lo;
                    }
                }
                bool upper = row.rel != Relation::ge;
                bool lower = row.rel != Relation::le;
                if (upper && min_act > row.rhs)
                    return false;
                if (lower && max_act < row.rhs)
                    return false;

                Integer up_slack = row.rhs - min_act;
                Integer down_slack = max_act - row.rhs;
                for (const auto & t : row.terms) {
                    Integer magnitude = abs(t.coeff);
                    if (upper) {
                        Integer step = up_slack / magnitude;
                        if (t.coeff > 0) {
                            if (! tighten_hi(dom, t.var, dom[t.var].lo + step, changed))
                                return false;
                        }
                        else if (! tighten_lo(dom, t.var, dom[t.var].hi - step, changed))
                            return false;
                    }
                    if (lower) {
                        Integer step = down_slack / magnitude;
                        if (t.coeff > 0) {
                            if (! tighten_lo(dom, t.var, dom[t.var].hi - step, changed))
                                return false;
                        }
                        else if (! tighten_hi(dom, t.var, dom[t.var].lo + step, changed))
                            return false;
                    }
                }
                return true;
            }

            auto propagate_cost(std::vector<Range> & dom, std::vector<VarIndex> & changed) -> bool
            {
                const auto & cb = *_cost_bound;
                Integer total = 0;
                for (VarIndex v = 0; v < _num_vars; ++v)
                    total += cb.cost[v] * dom[v].lo;
                std::vector<Integer> row_cost(cb.disjoint_rows.size(), 0);
                for (std::size_t j = 0; j < cb.disjoint_rows.size(); ++j) {
                    const auto & row = _rows[cb.disjoint_rows[j]];
                    Integer need = row.rhs;
                    for (const auto & t : row.terms)
                        need -= t.coeff * dom[t.var].lo;
                    if (need <= 0)
                        continue;
                    std::optional<Integer> best;
                    for (const auto & t : row.terms) {
                        Integer c = ceil_div(need * cb.cost[t.var], t.coeff);
                        if (! best || c < *best)
                            best = c;
                    }
                    if (! best)
                        return false;
                    row_cost[j] = *best;
                    total += *best;
                }
                if (total > cb.budget)
                    return false;
                for (VarIndex v = 0; v < _num_vars; ++v) {
                    if (cb.cost[v] == 0)
                        continue;
                    Integer allowance = cb.budget - total;
                    if (cb.row_of_var[v])
                        allowance += row_cost[*cb.row_of_var[v]];
                    if (! tighten_hi(dom, v, dom[v].lo + allowance / cb.cost[v], changed))
                        return false;
                }
                return true;
            }

            auto propagate(std::vector<Range> & dom, std::deque<std::size_t> queue) -> bool
            {
                std::vector<char> queued(_rows.size(), 0);
                for (auto r : queue)
                    queued[r] = 1;
                std::vector<VarIndex> changed;
                auto enqueue_changed = [&] {
                    for (auto v : changed)
                        for (auto r : _rows_of_var[v])
                            if (! queued[r]) {
                                queued[r] = 1;
                                queue.push_back(r);
                            }
                    changed.clear();
                };
                while (true) {
                    while (! queue.empty()) {
                        auto r = queue.front();
                        queue.pop_front();
                        queued[r] = 0;
                        if (! propagate_row(_rows[r], dom, changed))
                            return false;
                        enqueue_changed();
                    }
                    if (! _cost_bound)
                        return true;
                    if (! propagate_cost(dom, changed))
                        return false;
                    if (changed.empty())
                        return true;
                    enqueue_changed();
                }
            }

            auto count_node() -> void
            {
                if (++_nodes > _node_cap)
                    throw Error(ErrorKind::search_space_exceeded, "search exceeded the node cap of " + std::to_string(_node_cap));
            }

            // Returns false once the visitor asks to stop.
            auto dfs(std::vector<Range> & dom, std::deque<std::size_t> queue, const std::function<bool(std::span<const Integer>)> & visit) -> bool
            {
                if (! propagate(dom, std::move(queue)))
                    return true;
                VarIndex branch = _num_vars;
                for (VarIndex v = 0; v < _num_vars; ++v)
                    if (dom[v].lo != dom[v].hi) {
                        branch = v;
                        break;
                    }
                if (branch == _num_vars) {
                    Assignment point;
                    point.reserve(_num_vars);
                    for (const auto & d : dom)
                        point.push_back(d.lo);
                    return visit(point);
                }
                Integer lo = dom[branch].lo, hi = dom[branch].hi;
                for (Integer step = 0; step <= hi - lo; ++step) {
                    count_node();
                    std::vector<Range> child = dom;
                    Integer value = _descending ? Integer(hi - step) : Integer(lo + step);
                    child[branch] = Range{value, value};
                    std::deque<std::size_t> touched(_rows_of_var[branch].begin(), _rows_of_var[branch].end());
                    if (! dfs(child, std::move(touched), visit))
                        return false;
                }
                return true;
            }

        public:
            SearchEngine(std::size_t num_vars, std::vector<Row> rows, std::uint64_t node_cap) :
                _num_vars(num_vars),
                _rows(std::move(rows)),
                _rows_of_var(num_vars),
                _node_cap(node_cap)
            {
                for (std::size_t r = 0; r < _rows.size(); ++r)
                    for (const auto & t : _rows[r].terms)
                        _rows_of_var[t.var].push_back(r);
            }

            auto set_descending(bool descending) -> void { _descending = descending; }

            /// Enables budget reasoning; `covering_rows` are GE rows with nonnegative data.
            auto set_cost_bound(std::vector<Integer> cost, Integer budget, std::span<const std::size_t> covering_rows) -> void
            {
                CostBound cb{std::move(cost), std::move(budget), {}, std::vector<std::optional<std::size_t>>(_num_vars)};
                std::vector<char> used(_num_vars, 0);
                for (auto r : covering_rows) {
                    const auto & row = _rows[r];
                    if (row.terms.empty())
                        continue;
                    if (std::any_of(row.terms.begin(), row.terms.end(), [&](const Term & t) { return used[t.var]; }))
                        continue;
                    for (const auto & t : row.terms) {
                        used[t.var] = 1;
                        cb.row_of_var[t.var] = cb.disjoint_rows.size();
                    }
                    cb.disjoint_rows.push_back(r);
                }
                _cost_bound = std::move(cb);
            }

            auto run(std::vector<Range> box, const std::function<bool(std::span<const Integer>)> & visit) -> std::uint64_t
            {
                _nodes = 0;
                count_node();
                for (const auto & d : box)
                    if (d.lo > d.hi)
                        return _nodes;
                std::deque<std::size_t> all;
                for (std::size_t r = 0; r < _rows.size(); ++r)
                    all.push_back(r);
                dfs(box, std::move(all), visit);
                return _nodes;
            }
        };

        auto rows_from(std::span<const Constraint> constraints) -> std::vector<Row>
        {
            std::vector<Row> rows;
            rows.reserve(constraints.size());
            for (const auto & c : constraints)
                rows.push_back(Row{c.terms, c.rel, c.rhs});
            return rows;
        }

        auto effective_box(const IlpInstance & inst, const Box & box) -> Box
        {
            if (box.size() != inst.num_vars)
                throw Error(ErrorKind::invalid_input, "box has " + std::to_string(box.size()) + " ranges for " + std::to_string(inst.num_vars) + " variables");
            Box result = box;
            for (VarIndex v = 0; v < inst.num_vars; ++v) {
                if (auto lb = inst.lower_bound(v); lb && *lb > result[v].lo)
                    result[v].lo = *lb;
                if (auto ub = inst.upper_bound(v); ub && *ub < result[v].hi)
                    result[v].hi = *ub;
            }
            return result;
        }

        auto internal(const std::string & what) -> Error
        {
            return Error(ErrorKind::internal_error, what);
        }
    }

    auto enumerate_feasible(const IlpInstance & inst, const Box & box, std::uint64_t node_cap,
        const std::function<bool(std::span<const Integer>)> & visit) -> std::uint64_t
    {
        validate(inst);
        SearchEngine engine(inst.num_vars, rows_from(inst.constraints), node_cap);
        return engine.run(effective_box(inst, box), [&](std::span<const Integer> x) {
            if (! is_feasible(inst, x))
                throw internal("enumerated point fails the independent re-check");
            return visit(x);
        });
    }

    auto solve_feasibility(const IlpInstance & inst, const Box & box, std::uint64_t node_cap) -> OracleVerdict
    {
        validate(inst);
        Box search_box = effective_box(inst, box);
        SearchEngine engine(inst.num_vars, rows_from(inst.constraints), node_cap);
        OracleVerdict verdict;
        verdict.nodes_explored = engine.run(search_box, [&](std::span<const Integer> x) {
            verdict.witness = Assignment(x.begin(), x.end());
            return false;
        });
        if (verdict.witness) {
            for (VarIndex v = 0; v < inst.num_vars; ++v)
                if ((*verdict.witness)[v] < box[v].lo || (*verdict.witness)[v] > box[v].hi)
                    throw internal("feasibility witness leaves the box");
            if (! is_feasible(inst, *verdict.witness))
                throw internal("feasibility witness fails the independent re-check");
            verdict.decision = Decision::yes;
        }
        return verdict;
    }

    auto solve_cover(const CoverPackInstance & inst, std::uint64_t node_cap) -> OracleVerdict
    {
        validate(inst);
        if (inst.sense != Sense::cover)
            throw Error(ErrorKind::invalid_input, "solve_cover needs a covering instance");

        // cost-zero variables without an upper bound can satisfy every constraint they touch
        std::vector<char> free_var(inst.num_vars, 0);
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            free_var[v] = inst.cost[v] == 0 && ! inst.upper_bound(v);

        std::vector<Row> rows;
        std::vector<std::size_t> covering;
        std::vector<std::size_t> dropped;
        for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
            const auto & c = inst.constraints[i];
            if (std::any_of(c.terms.begin(), c.terms.end(), [&](const Term & t) { return free_var[t.var]; })) {
                dropped.push_back(i);
                continue;
            }
            covering.push_back(rows.size());
            rows.push_back(Row{c.terms, Relation::ge, c.rhs});
        }
        Row budget_row{{}, Relation::le, inst.budget};
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (inst.cost[v] != 0)
                budget_row.terms.push_back(Term{v, inst.cost[v]});
        rows.push_back(std::move(budget_row));

        Box box(inst.num_vars);
        for (VarIndex v = 0; v < inst.num_vars; ++v) {
            Integer hi = free_var[v] ? Integer(0) : (inst.cost[v] == 0 ? *inst.upper_bound(v) : Integer(inst.budget / inst.cost[v]));
            if (auto ub = inst.upper_bound(v); ub && *ub < hi)
                hi = *ub;
            box[v] = Range{0, hi};
        }

        SearchEngine engine(inst.num_vars, std::move(rows), node_cap);
        engine.set_cost_bound(inst.cost, inst.budget, covering);
        engine.set_descending(true);
        OracleVerdict verdict;
        verdict.nodes_explored = engine.run(box, [&](std::span<const Integer> x) {
            verdict.witness = Assignment(x.begin(), x.end());
            return false;
        });
        if (verdict.witness) {
            auto & x = *verdict.witness;
            for (auto i : dropped) {
                const auto & c = inst.constraints[i];
                Integer deficit = c.rhs - c.activity(x);
                if (deficit <= 0)
                    continue;
                for (const auto & t : c.terms)
                    if (free_var[t.var]) {
                        x[t.var] += ceil_div(deficit, t.coeff);
                        break;
                    }
            }
            if (! is_solution(inst, x))
                throw internal("cover witness fails the independent re-check");
            verdict.decision = Decision::yes;
        }
        return verdict;
    }

    auto solve_packing(const CoverPackInstance & inst, std::uint64_t node_cap) -> OracleVerdict
    {
        validate(inst);
        if (inst.sense != Sense::packing)
            throw Error(ErrorKind::invalid_input, "solve_packing needs a packing instance");
        std::vector<Row> rows = rows_from(inst.constraints);
        Row objective{{}, Relation::ge, inst.budget};
        for (VarIndex v = 0; v < inst.num_vars; ++v)
            if (inst.cost[v] != 0)
                objective.terms.push_back(Term{v, inst.cost[v]});
        rows.push_back(std::move(objective));

        Box box(inst.num_vars);
        for (VarIndex v = 0; v < inst.num_vars; ++v) {
            Integer hi = inst.budget;
            if (auto ub = inst.upper_bound(v); ub && *ub < hi)
                hi = *ub;
            box[v] = Range{0, hi};
        }
        SearchEngine engine(inst.num_vars, std::move(rows), node_cap);
        OracleVerdict verdict;
        verdict.nodes_explored = engine.run(box, [&](std::span<const Integer> x) {
            verdict.witness = Assignment(x.begin(), x.end());
            return false;
        });
        if (verdict.witness) {
            if (! is_solution(inst, *verdict.witness))
                throw internal("packing witness fails the independent re-check");
            verdict.decision = Decision::yes;
        }
        return verdict;
    }

    auto solve(const CoverPackInstance & inst, std::uint64_t node_cap) -> OracleVerdict
    {
        return inst.sense == Sense::cover ? solve_cover(inst, node_cap) : solve_packing(inst, node_cap);
    }

    auto table_accepts(const TableInstance & inst, std::span<const Integer> x) -> bool
    {
        if (x.size() != inst.num_vars)
            return false;
        std::uint64_t radix = inst.radix();
        Integer value = 0;
        for (VarIndex v = 0; v < inst.num_vars; ++v) {
            if (x[v] < 0 || x[v] > inst.budget)
                return false;
            value += inst.cost[v] * x[v];
        }
        if (inst.sense == Sense::cover ? value > inst.budget : value < inst.budget)
            return false;
        return std::all_of(inst.tables.begin(), inst.tables.end(), [&](const Table & t) { return t.bits[table_index(t.scope, x, radix)]; });
    }

    namespace
    {
        class TableSearch
        {
        private:
            const TableInstance & _inst;
            std::uint64_t _radix;
            std::uint64_t _node_cap;
            std::uint64_t _nodes = 0;
            std::vector<std::vector<std::size_t>> _closing;
            std::vector<Integer> _suffix_max;
            Assignment _x;

            auto count_node() -> void
            {
                if (++_nodes > _node_cap)
                    throw Error(ErrorKind::search_space_exceeded, "table search exceeded the node cap of " + std::to_string(_node_cap));
            }

            auto dfs(VarIndex v, const Integer & value) -> bool
            {
                bool cover = _inst.sense == Sense::cover;
                if (v == _inst.num_vars)
                    return cover ? value <= _inst.budget : value >= _inst.budget;
                if (! cover && value + _suffix_max[v] < _inst.budget)
                    return false;
                std::uint64_t top = _radix - 1;
                if (cover) {
                    Integer room = (_inst.budget - value) / _inst.cost[v];
                    if (room < top)
                        top = room.convert_to<std::uint64_t>();
                }
                for (std::uint64_t val = 0; val <= top; ++val) {
                    count_node();
                    _x[v] = val;
                    bool ok = true;
                    for (auto t : _closing[v]) {
                        const auto & table = _inst.tables[t];
                        if (! table.bits[table_index(table.scope, _x, _radix)]) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && dfs(v + 1, value + _inst.cost[v] * val))
                        return true;
                }
                _x[v] = 0;
                return false;
            }

        public:
            TableSearch(const TableInstance & inst, std::uint64_t node_cap) :
                _inst(inst),
                _radix(inst.radix()),
                _node_cap(node_cap),
                _closing(inst.num_vars),
                _suffix_max(inst.num_vars + 1, 0),
                _x(inst.num_vars, 0)
            {
                for (std::size_t t = 0; t < inst.tables.size(); ++t)
                    if (! inst.tables[t].scope.empty())
                        _closing[inst.tables[t].scope.back()].push_back(t);
                for (VarIndex v = inst.num_vars; v-- > 0;)
                    _suffix_max[v] = _suffix_max[v + 1] + inst.cost[v] * inst.budget;
            }

            auto run() -> OracleVerdict
            {
                OracleVerdict verdict;
                count_node();
                bool constant_ok = std::all_of(_inst.tables.begin(), _inst.tables.end(), [](const Table & t) { return ! t.scope.empty() || t.bits[0]; });
                if (constant_ok && dfs(0, 0)) {
                    verdict.decision = Decision::yes;
                    verdict.witness = _x;
                }
                verdict.nodes_explored = _nodes;
                return verdict;
            }
        };
    }

    auto solve_table(const TableInstance & inst, std::uint64_t node_cap) -> OracleVerdict
    {
        validate(inst);
        auto verdict = TableSearch(inst, node_cap).run();
        if (verdict.witness && ! table_accepts(inst, *verdict.witness))
            throw internal("table witness fails the independent re-check");
        return verdict;
    }
}
