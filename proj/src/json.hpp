#pragma once

// Minimal JSON document model with arbitrary-precision integers, read through the nlohmann SAX
// interface so that large literals never pass through a double.

#include <ilpk/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ilpk::json
{
    struct Value;
    using Array = std::vector<Value>;
    using Object = std::vector<std::pair<std::string, Value>>;

    struct Value
    {
        std::variant<std::nullptr_t, bool, Integer, std::string, Array, Object> data = nullptr;

        [[nodiscard]] auto is_null() const -> bool { return std::holds_alternative<std::nullptr_t>(data); }
        [[nodiscard]] auto is_integer() const -> bool { return std::holds_alternative<Integer>(data); }
        [[nodiscard]] auto is_string() const -> bool { return std::holds_alternative<std::string>(data); }
        [[nodiscard]] auto is_array() const -> bool { return std::holds_alternative<Array>(data); }
        [[nodiscard]] auto is_object() const -> bool { return std::holds_alternative<Object>(data); }
    };

    /// Parses a complete document; throws PARSE_ERROR with line and column.
    [[nodiscard]] auto parse(std::string_view text) -> Value;

    // Typed accessors that throw PARSE_ERROR naming the offending field.
    [[noreturn]] auto fail(const std::string & what) -> void;
    auto as_object(const Value & v, std::string_view what) -> const Object &;
    auto as_array(const Value & v, std::string_view what) -> const Array &;
    auto as_integer(const Value & v, std::string_view what) -> const Integer &;
    auto as_string(const Value & v, std::string_view what) -> const std::string &;
    auto as_size(const Value & v, std::string_view what) -> std::size_t;

    [[nodiscard]] auto find(const Value & obj, std::string_view key) -> const Value *;
    auto require(const Value & obj, std::string_view key) -> const Value &;
    /// Rejects keys outside `allowed`.
    auto only_keys(const Value & obj, std::initializer_list<std::string_view> allowed) -> void;

    [[nodiscard]] auto quote(std::string_view s) -> std::string;
}
