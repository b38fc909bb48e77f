#pragma once

#include <stdexcept>
#include <string>

namespace tropvieta {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed arguments (bad syntax, non-prime modulus, empty list).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size bound was exceeded.
class ResourceError : public std::length_error {
public:
    explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

// The operation is defined only for a different parameter regime.
class UnsupportedError : public std::domain_error {
public:
    explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace tropvieta
