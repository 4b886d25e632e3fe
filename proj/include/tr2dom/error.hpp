#pragma once

#include <stdexcept>
#include <string>

namespace tr2dom {

enum class ErrorKind {
    invalid_argument,
    size_limit,
    infeasible,
    not_a_tree,
    parse,
    precondition,
};

auto to_string(ErrorKind kind) -> const char *;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(message), _kind(kind)
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

}
