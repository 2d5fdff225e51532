#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdag {

/// Malformed or out-of-contract input: unknown vertices, overlapping sets,
/// cyclic graphs where acyclic ones are required, and the like.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Work refused because it would exceed an explicit resource bound.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t bound)
        : std::runtime_error(what), bound_(bound) {}

    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t bound_;
};

}  // namespace cdag
