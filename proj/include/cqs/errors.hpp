#pragma once

#include <stdexcept>
#include <string>

namespace cqs {

// Bad user input (maps to CLI exit code 2).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An identity that must hold did not; always a bug (exit code 3).
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Well-formed input outside what a construction covers (exit code 4).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError(what);
}

} // namespace cqs
