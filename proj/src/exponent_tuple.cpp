#include "singlat/exponent_tuple.hpp"

#include <algorithm>

namespace singlat {

ExponentTuple::ExponentTuple(std::vector<std::int64_t> exponents) : a_(std::move(exponents)) {
  if (a_.size() < 3) throw DomainError("exponent tuple needs at least 3 entries, got " + std::to_string(a_.size()));
  if (a_.front() < 2) throw DomainError("exponents must be >= 2");
  if (!std::is_sorted(a_.begin(), a_.end())) throw DomainError("exponents must be non-decreasing: " + str());
}

ExponentTuple ExponentTuple::sorted(std::vector<std::int64_t> exponents) {
  std::sort(exponents.begin(), exponents.end());
  return ExponentTuple(std::move(exponents));
}

std::string ExponentTuple::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a_[i]);
  }
  return s + ")";
}

}  // namespace singlat
