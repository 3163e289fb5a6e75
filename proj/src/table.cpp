#include <ilpk/error.hpp>
#include <ilpk/table.hpp>

#include <string>

namespace ilpk
{
    auto TableInstance::radix() const -> std::uint64_t
    {
        return static_cast<std::uint64_t>(to_int64(budget, "table budget")) + 1;
    }

    auto validate(const TableInstance & inst) -> void
    {
        auto fail = [](const std::string & what) { throw Error(ErrorKind::validation_error, what); };
        if (inst.budget < 0)
            fail("table budget is negative");
        if (inst.cost.size() != inst.num_vars)
            fail("cost vector length differs from num_vars");
        for (std::size_t v = 0; v < inst.num_vars; ++v) {
            if (inst.cost[v] < 0)
                fail("variable " + std::to_string(v) + " has a negative cost");
            if (inst.sense == Sense::cover && (inst.cost[v] < 1 || inst.cost[v] > inst.budget))
                fail("cover table cost of variable " + std::to_string(v) + " is outside 1..k");
        }
        std::uint64_t radix = inst.radix();
        for (std::size_t i = 0; i < inst.tables.size(); ++i) {
            const auto & t = inst.tables[i];
            for (std::size_t j = 0; j < t.scope.size(); ++j) {
                if (t.scope[j] >= inst.num_vars)
                    fail("table " + std::to_string(i) + " references variable " + std::to_string(t.scope[j]));
                if (j > 0 && t.scope[j - 1] >= t.scope[j])
                    fail("table " + std::to_string(i) + " scope is not strictly increasing");
            }
            std::uint64_t expected = saturating_pow(radix, t.scope.size(), std::uint64_t{1} << 40);
            if (t.bits.size() != expected)
                fail("table " + std::to_string(i) + " has " + std::to_string(t.bits.size()) + " bits, expected (k+1)^d = " + std::to_string(expected));
        }
    }

    auto table_index(const Scope & scope, std::span<const Integer> x, std::uint64_t radix) -> std::uint64_t
    {
        std::uint64_t index = 0;
        for (auto v : scope)
            index = index * radix + x[v].convert_to<std::uint64_t>();
        return index;
    }

    auto build_table(const Constraint & c, std::uint64_t k, std::uint64_t cap) -> Table
    {
        std::uint64_t radix = k + 1;
        std::size_t d = c.terms.size();
        std::uint64_t size = saturating_pow(radix, d, cap);
        if (size > cap)
            throw Error(ErrorKind::table_too_large, "table over " + std::to_string(d) + " variables with radix " + std::to_string(radix) + " exceeds " + std::to_string(cap) + " bits");

        Table table;
        table.scope = c.scope();
        table.bits.assign(size, false);
        std::vector<std::uint64_t> digits(d, 0);
        Integer lhs = 0;
        for (std::uint64_t index = 0; index < size; ++index) {
            table.bits[index] = c.holds(lhs);
            // advance the odometer, least significant digit is the last scope variable
            for (std::size_t pos = d; pos-- > 0;) {
                if (digits[pos] + 1 < radix) {
                    ++digits[pos];
                    lhs += c.terms[pos].coeff;
                    break;
                }
                lhs -= c.terms[pos].coeff * digits[pos];
                digits[pos] = 0;
            }
        }
        return table;
    }
}
