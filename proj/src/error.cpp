#include "fibgf/error.hpp"

namespace fibgf {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::InternalConsistency: return "internal_consistency";
    }
    return "unknown";
}

void throw_parse(const std::string& what, std::size_t pos) {
    throw Error(ErrorKind::Parse, what + " at position " + std::to_string(pos));
}

void throw_precondition(const std::string& what) {
    throw Error(ErrorKind::Precondition, what);
}

void throw_pole(const std::string& what) {
    throw Error(ErrorKind::Pole, what);
}

void throw_internal(const std::string& what) {
    throw Error(ErrorKind::InternalConsistency, what);
}

}  // namespace fibgf
