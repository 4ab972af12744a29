#pragma once

// Exact sparse LDL^T factorization of a symmetric rational matrix.
//
// Vertices are eliminated in minimum-degree order (ties to the lowest index),
// which on trees peels leaves first and produces no fill-in. The pivot signs
// decide definiteness; the stored steps solve linear systems.

#include "singlat/arith.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace singlat {

struct SparseSymmetric {
  std::vector<Rational> diagonal;
  // off_diagonal[i] lists (j, a_ij) for j != i; each entry must appear in both rows.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> off_diagonal;

  std::size_t size() const { return diagonal.size(); }
};

class SymmetricElimination {
 public:
  explicit SymmetricElimination(const SparseSymmetric& matrix);

  // True when a zero pivot stopped the factorization.
  bool singular() const { return singular_; }
  bool negative_definite() const;

  // Pivots in elimination order (shorter than the matrix if singular).
  std::vector<Rational> pivots() const;
  std::vector<std::size_t> order() const;

  // Solves A x = rhs. Throws DomainError if the factorization is singular.
  std::vector<Rational> solve(std::span<const Rational> rhs) const;

 private:
  struct Step {
    std::size_t vertex;
    Rational pivot;
    std::vector<std::pair<std::size_t, Rational>> row;  // uneliminated neighbours at elimination time
  };
  std::size_t n_ = 0;
  std::vector<Step> steps_;
  bool singular_ = false;
};

}  // namespace singlat
