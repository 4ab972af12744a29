#pragma once

// Exact integer/rational arithmetic and the error types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace singlat {

using Int = mpz_class;
using Rational = mpq_class;

// Error hierarchy. The CLI maps these to exit codes:
//   UsageError -> 1, DomainError and subclasses -> 2, ConsistencyError -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Cycle/graph size disagreement.
struct DimensionError : DomainError {
  using DomainError::DomainError;
};

// A construction produced a non-integral or otherwise invalid object.
struct ConstructionError : DomainError {
  using DomainError::DomainError;
};

// An invariant that holds by theory was violated; signals a bug in a formula.
struct InternalError : DomainError {
  using DomainError::DomainError;
};

// Two independent routes to the same quantity disagree.
struct ConsistencyError : Error {
  using Error::Error;
};

// num/den in canonical form. Throws DomainError if den == 0.
Rational ratio(const Int& num, const Int& den);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

// Floor and ceiling of an exact rational.
Int floor(const Rational& x);
Int ceil(const Rational& x);

// Binomial coefficient C(n, k), zero when n < k or k < 0. n may be negative,
// in which case the result is 0 (the "no subsets" convention used for
// C(d - n, 3) with n > d).
Int binomial(const Int& n, long k);

// Returns the integer value if x is integral, std::nullopt otherwise.
std::optional<Int> as_integer(const Rational& x);

// Narrowing with a range check; throws DomainError if the value does not fit.
std::int64_t to_int64(const Int& x, const char* what);

inline std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rational& x);

}  // namespace singlat
