#include "json.hpp"

#include <ilpk/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>

namespace ilpk::json
{
    namespace
    {
        auto line_and_column(std::string_view text, std::size_t position) -> std::string
        {
            position = std::min(position, text.size());
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < position; ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                }
                else
                    ++column;
            }
            return "line " + std::to_string(line) + ", column " + std::to_string(column);
        }

        class Builder
        {
        private:
            std::string_view _text;
            std::vector<Value> _stack;
            std::vector<std::string> _keys;
            Value _root;
            bool _done = false;

            auto put(Value v) -> bool
            {
                if (_stack.empty()) {
                    _root = std::move(v);
                    _done = true;
                    return true;
                }
                auto & top = _stack.back().data;
                if (auto * arr = std::get_if<Array>(&top))
                    arr->push_back(std::move(v));
                else {
                    auto & obj = std::get<Object>(top);
                    obj.emplace_back(std::move(_keys.back()), std::move(v));
                    _keys.pop_back();
                }
                return true;
            }

        public:
            explicit Builder(std::string_view text) : _text(text) {}

            auto null() -> bool { return put(Value{nullptr}); }
            auto boolean(bool b) -> bool { return put(Value{b}); }
            auto number_integer(std::int64_t v) -> bool { return put(Value{Integer(v)}); }
            auto number_unsigned(std::uint64_t v) -> bool { return put(Value{Integer(v)}); }

            // Integer literals beyond 64 bits arrive here with their raw text.
            auto number_float(double, const std::string & raw) -> bool
            {
                Integer value;
                if (! parse_integer(raw, value))
                    throw Error(ErrorKind::parse_error, "non-integer number '" + raw + "'; only decimal integers are accepted");
                return put(Value{std::move(value)});
            }

            auto string(std::string & s) -> bool { return put(Value{std::move(s)}); }
            auto binary(nlohmann::json::binary_t &) -> bool { throw Error(ErrorKind::parse_error, "binary values are not supported"); }

            auto start_object(std::size_t) -> bool
            {
                _stack.push_back(Value{Object{}});
                return true;
            }

            auto key(std::string & k) -> bool
            {
                for (const auto & [existing, _] : std::get<Object>(_stack.back().data))
                    if (existing == k)
                        throw Error(ErrorKind::parse_error, "duplicate key \"" + k + "\"");
                _keys.push_back(std::move(k));
                return true;
            }

            auto end_object() -> bool
            {
                Value v = std::move(_stack.back());
                _stack.pop_back();
                return put(std::move(v));
            }

            auto start_array(std::size_t) -> bool
            {
                _stack.push_back(Value{Array{}});
                return true;
            }

            auto end_array() -> bool { return end_object(); }

            auto parse_error(std::size_t position, const std::string &, const nlohmann::detail::exception & ex) -> bool
            {
                std::string message = ex.what();
                if (auto cut = message.find("syntax error"); cut != std::string::npos)
                    message = message.substr(cut);
                throw Error(ErrorKind::parse_error, line_and_column(_text, position) + ": " + message);
            }

            auto result() -> Value
            {
                if (! _done)
                    throw Error(ErrorKind::parse_error, "empty document");
                return std::move(_root);
            }
        };
    }

    auto parse(std::string_view text) -> Value
    {
        Builder builder(text);
        nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
        return builder.result();
    }

    auto fail(const std::string & what) -> void
    {
        throw Error(ErrorKind::parse_error, what);
    }

    auto as_object(const Value & v, std::string_view what) -> const Object &
    {
        if (! v.is_object())
            fail(std::string(what) + ": expected an object");
        return std::get<Object>(v.data);
    }

    auto as_array(const Value & v, std::string_view what) -> const Array &
    {
        if (! v.is_array())
            fail(std::string(what) + ": expected an array");
        return std::get<Array>(v.data);
    }

    auto as_integer(const Value & v, std::string_view what) -> const Integer &
    {
        if (! v.is_integer())
            fail(std::string(what) + ": expected an integer");
        return std::get<Integer>(v.data);
    }

    auto as_string(const Value & v, std::string_view what) -> const std::string &
    {
        if (! v.is_string())
            fail(std::string(what) + ": expected a string");
        return std::get<std::string>(v.data);
    }

    auto as_size(const Value & v, std::string_view what) -> std::size_t
    {
        const auto & i = as_integer(v, what);
        if (i < 0 || i > Integer(std::numeric_limits<std::uint32_t>::max()))
            fail(std::string(what) + ": expected a nonnegative count, got " + to_string(i));
        return i.convert_to<std::size_t>();
    }

    auto find(const Value & obj, std::string_view key) -> const Value *
    {
        for (const auto & [k, v] : as_object(obj, "document"))
            if (k == key)
                return &v;
        return nullptr;
    }

    auto require(const Value & obj, std::string_view key) -> const Value &
    {
        if (const auto * v = find(obj, key))
            return *v;
        fail("missing field \"" + std::string(key) + "\"");
    }

    auto only_keys(const Value & obj, std::initializer_list<std::string_view> allowed) -> void
    {
        for (const auto & [k, _] : as_object(obj, "document"))
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                fail("unknown field \"" + k + "\"");
    }

    auto quote(std::string_view s) -> std::string
    {
        std::string out = "\"";
        for (char c : s) {
            switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                }
                else
                    out += c;
            }
        }
        return out + "\"";
    }
}
