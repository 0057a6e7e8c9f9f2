#pragma once

#include <stdexcept>
#include <string>

namespace fibgf {

enum class ErrorKind {
    Parse,                // malformed text input
    Precondition,         // caller violated an operation's contract
    Pole,                 // generating-function denominator vanishes
    InternalConsistency,  // a guaranteed invariant failed; indicates a bug
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void throw_parse(const std::string& what, std::size_t pos);
[[noreturn]] void throw_precondition(const std::string& what);
[[noreturn]] void throw_pole(const std::string& what);
[[noreturn]] void throw_internal(const std::string& what);

}  // namespace fibgf
