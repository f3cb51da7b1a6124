#pragma once

#include <stdexcept>
#include <string>

namespace ringkepler {

/// Argument outside the mathematical domain of a function (negative strength,
/// |x| > 1, r <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quantum numbers that violate a range rule (n < m_plus + 1, |m| > j, ...).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Half-integer labels whose parity does not match the monopole charge.
class ParityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ringkepler
