#pragma once

#include <stdexcept>
#include <string>

namespace mmk {

// Input data violates a documented precondition or invariant (CLI exit 2).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (CLI exit 2).
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// A desk-scale guard tripped; raise MMK_GUARD_LIMITS to override (CLI exit 3).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A condition the underlying theory guarantees failed to hold.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Multiplier for desk-scale guards, read once from MMK_GUARD_LIMITS (>= 1).
long guard_multiplier();

} // namespace mmk
