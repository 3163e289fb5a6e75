#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ilpk
{
    /// Arbitrary-precision signed integer used for every coefficient, bound and value.
    using Integer = boost::multiprecision::cpp_int;

    [[nodiscard]] auto pow2(std::size_t exponent) -> Integer;

    /// Floor and ceiling division; the divisor must be nonzero.
    [[nodiscard]] auto floor_div(const Integer & a, const Integer & b) -> Integer;
    [[nodiscard]] auto ceil_div(const Integer & a, const Integer & b) -> Integer;

    [[nodiscard]] auto to_string(const Integer & value) -> std::string;

    /// Parses an optionally signed decimal literal; returns false on malformed text.
    [[nodiscard]] auto parse_integer(std::string_view text, Integer & out) -> bool;

    /// Narrows to a machine word; throws ilpk::Error (INVALID_INPUT) when out of range.
    [[nodiscard]] auto to_int64(const Integer & value, std::string_view what) -> std::int64_t;
    [[nodiscard]] auto to_size(const Integer & value, std::string_view what) -> std::size_t;

    /// base^exp saturated at cap + 1, for size checks that must not overflow.
    [[nodiscard]] auto saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) -> std::uint64_t;
}
