#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clonelab {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data: dimension mismatches, mixed rigs,
/// mixed d-adic bases, out-of-range table entries, bad JSON shapes.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A scalar argument outside its documented range (e.g. d < 2, m < 1,
/// projection index out of range).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation applied to a carrier it is not defined for (e.g. negative
/// integers embedded into a rig without additive inverses, operation
/// tables requested for an infinite carrier).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its node budget.  Carries how far it got so callers
/// can report the frontier instead of silently truncating.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::uint64_t visited, std::uint64_t frontier_depth)
        : Error(what), visited_(visited), frontier_depth_(frontier_depth) {}

    std::uint64_t visited() const { return visited_; }
    std::uint64_t frontier_depth() const { return frontier_depth_; }

private:
    std::uint64_t visited_;
    std::uint64_t frontier_depth_;
};

} // namespace clonelab
