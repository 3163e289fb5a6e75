#include <ilpk/error.hpp>
#include <ilpk/integer.hpp>

#include <limits>

namespace ilpk
{
    auto pow2(std::size_t exponent) -> Integer
    {
        Integer result = 1;
        result <<= exponent;
        return result;
    }

    auto floor_div(const Integer & a, const Integer & b) -> Integer
    {
        Integer q = a / b;
        Integer r = a % b;
        if (r != 0 && ((r < 0) != (b < 0)))
            --q;
        return q;
    }

    auto ceil_div(const Integer & a, const Integer & b) -> Integer
    {
        Integer q = a / b;
        Integer r = a % b;
        if (r != 0 && ((r < 0) == (b < 0)))
            ++q;
        return q;
    }

    auto to_string(const Integer & value) -> std::string
    {
        return value.str();
    }

    auto parse_integer(std::string_view text, Integer & out) -> bool
    {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (pos == text.size())
            return false;
        Integer value = 0;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9')
                return false;
            value *= 10;
            value += c - '0';
        }
        out = negative ? Integer(-value) : value;
        return true;
    }

    auto to_int64(const Integer & value, std::string_view what) -> std::int64_t
    {
        if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
            throw Error(ErrorKind::invalid_input, std::string(what) + " does not fit in 64 bits: " + value.str());
        return value.convert_to<std::int64_t>();
    }

    auto to_size(const Integer & value, std::string_view what) -> std::size_t
    {
        if (value < 0 || value > std::numeric_limits<std::int64_t>::max())
            throw Error(ErrorKind::invalid_input, std::string(what) + " is not a valid size: " + value.str());
        return value.convert_to<std::size_t>();
    }

    auto saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) -> std::uint64_t
    {
        std::uint64_t result = 1;
        for (std::uint64_t i = 0; i < exp; ++i) {
            if (base != 0 && result > (cap + 1) / base)
                return cap + 1;
            result *= base;
            if (result > cap)
                return cap + 1;
        }
        return result;
    }

    auto to_string(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
        case ErrorKind::parse_error: return "PARSE_ERROR";
        case ErrorKind::validation_error: return "VALIDATION_ERROR";
        case ErrorKind::invalid_input: return "INVALID_INPUT";
        case ErrorKind::search_space_exceeded: return "SEARCH_SPACE_EXCEEDED";
        case ErrorKind::table_too_large: return "TABLE_TOO_LARGE";
        case ErrorKind::internal_error: return "INTERNAL_ERROR";
        }
        return "UNKNOWN";
    }

    Error::Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind)
    {
    }
}
