#pragma once

#include <stdexcept>
#include <string>

namespace relbell {

// Input outside the mathematical domain: superluminal speed, rapidity beyond
// the supported cap, a zero vector where a direction is required, and so on.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Scenario/state pairing for which no closed form exists.
class UnsupportedCombination : public std::invalid_argument {
public:
    explicit UnsupportedCombination(const std::string& what)
        : std::invalid_argument(what) {}
};

// Operator handed to the oracle fails a structural requirement (hermiticity,
// unit spectrum).
class InvalidOperator : public std::invalid_argument {
public:
    explicit InvalidOperator(const std::string& what)
        : std::invalid_argument(what) {}
};

// A computation finished but failed its own consistency check.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace relbell
