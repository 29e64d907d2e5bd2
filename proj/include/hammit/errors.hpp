#pragma once

#include <stdexcept>
#include <string>

namespace hammit {

/// Base class for all hammit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: bad bit-string literals, unreadable or
/// schema-violating files. Maps to CLI exit code 2.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

/// Structurally valid input that is semantically inconsistent: width
/// mismatches, unknown gate names, out-of-domain parameters. Maps to
/// CLI exit code 3.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

} // namespace hammit
