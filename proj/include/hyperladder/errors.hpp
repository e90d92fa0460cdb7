#pragma once

#include <stdexcept>
#include <string>

namespace hyperladder {

/// Input outside the mathematical domain of an operation (bad parameters, index ranges).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure did not reach its target accuracy.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that must hold by construction was violated.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hyperladder
