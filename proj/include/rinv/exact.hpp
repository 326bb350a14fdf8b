#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rinv {

using ExactCount = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using ExactRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Thrown when an operation receives input outside its domain
/// (a non-involution, a pattern-containing permutation, an invalid path...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binomial coefficient over the integers with C(a, 0) = 1 for every a,
/// and C(a, b) = 0 whenever b < 0 or b > a otherwise.
ExactCount binomial(std::int64_t a, std::int64_t b);

/// Catalan number C_n = binom(2n, n) / (n + 1); zero for n < 0.
ExactCount catalan(std::int64_t n);

/// 2^e as an exact rational; e may be negative.
ExactRational pow2(std::int64_t e);

/// Converts a rational that must be an integer. Throws std::logic_error
/// naming `what` if it is not.
ExactCount require_integral(const ExactRational& q, const std::string& what);

inline std::string to_string(const ExactCount& c) { return c.str(); }

}  // namespace rinv
