#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ilpk
{
    enum class ErrorKind
    {
        parse_error,
        validation_error,
        invalid_input,
        search_space_exceeded,
        table_too_large,
        internal_error
    };

    [[nodiscard]] auto to_string(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
    private:
        ErrorKind _kind;

    public:
        Error(ErrorKind kind, const std::string & message);

        [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }
    };
}
