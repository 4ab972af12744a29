#pragma once

#include "singlat/arith.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace singlat {

// Exponents (a_1, ..., a_m) of a Brieskorn complete intersection
//   x_i^{a_i} + p_i x_{m-1}^{a_{m-1}} + q_i x_m^{a_m} = 0,  i = 1..m-2,
// with generic coefficients. Requires m >= 3 and 2 <= a_1 <= ... <= a_m.
class ExponentTuple {
 public:
  // Throws DomainError if the tuple is invalid.
  explicit ExponentTuple(std::vector<std::int64_t> exponents);

  // Sorts first, then validates.
  static ExponentTuple sorted(std::vector<std::int64_t> exponents);

  std::size_t m() const { return a_.size(); }
  // 1-based, matching a_1..a_m.
  std::int64_t a(std::size_t i) const { return a_.at(i - 1); }
  const std::vector<std::int64_t>& values() const { return a_; }

  // "(3,4,6)"
  std::string str() const;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  friend auto operator<=>(const ExponentTuple& x, const ExponentTuple& y) { return x.a_ <=> y.a_; }

 private:
  std::vector<std::int64_t> a_;
};

}  // namespace singlat
