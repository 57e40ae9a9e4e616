#pragma once

#include <stdexcept>
#include <string>

namespace eulercong {

// A rule or check was invoked outside its stated hypotheses. Not a
// counterexample; sweeps count these separately from failures.
class GuardViolation : public std::domain_error {
public:
    explicit GuardViolation(const std::string& msg) : std::domain_error(msg) {}
};

// An operation defined only for even indices got an odd one.
class OddIndexError : public std::domain_error {
public:
    explicit OddIndexError(const std::string& msg) : std::domain_error(msg) {}
};

// A parameter is outside its admissible range.
class RangeViolation : public std::domain_error {
public:
    explicit RangeViolation(const std::string& msg) : std::domain_error(msg) {}
};

// Modulus exponent < 1, or an oracle modulus too small for the rule.
class BadModulus : public std::invalid_argument {
public:
    explicit BadModulus(const std::string& msg) : std::invalid_argument(msg) {}
};

// Residue cache file malformed or inconsistent with its header.
class CacheFormatError : public std::runtime_error {
public:
    explicit CacheFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// The two below indicate implementation bugs; valid inputs can never
// trigger them.
class NonInvertible : public std::logic_error {
public:
    explicit NonInvertible(const std::string& msg) : std::logic_error(msg) {}
};

class InexactDivision : public std::logic_error {
public:
    explicit InexactDivision(const std::string& msg) : std::logic_error(msg) {}
};

// 2^{3k} failed to divide the alternating binomial sum of f-values.
// That would be a genuine mathematical counterexample, so it gets its
// own type and should be reported loudly, never swallowed.
class IntegralityViolation : public std::runtime_error {
public:
    explicit IntegralityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eulercong
