#pragma once

#include <stdexcept>
#include <string>

namespace qlbm {

// Invalid configuration input (bad file, unknown mode, non-power-of-two grid).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Valid request that violates a physical or algorithmic constraint
// (velocity constraint, zero density, branch-tree guard).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical degeneracy or broken internal invariant.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlbm
