#pragma once

#include <stdexcept>
#include <string>

namespace tcsd {

enum class ErrorKind {
    InvalidArgument,  // caller passed incompatible objects (shape/system mismatch)
    Structure,        // malformed data (ragged arrays, bad tables)
    Validation,       // an axiom check failed (cocycle identities, module axioms, ...)
    Precondition,     // contract violation (e.g. cp_norm on a non-CP map)
    Parse,            // unreadable document
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace tcsd
