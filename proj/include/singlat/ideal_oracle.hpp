#pragma once

// Brute-force lattice oracles for the integral closures of powers of the
// maximal ideal of a Brieskorn complete intersection, with Q = (x_{m-1}, x_m)
// as minimal reduction. A monomial prod x_i^{u_i} lies in closure(m^n) iff
//   sum_{i <= m-2} u_i / a_i >= (n - u_{m-1} - u_m) / a_{m-1}.
// All comparisons are done after clearing denominators, so they are exact.

#include "singlat/arith.hpp"
#include "singlat/exponent_tuple.hpp"

#include <cstdint>
#include <vector>

namespace singlat::oracle {

using Monomial = std::vector<std::int64_t>;

enum class Execution { serial, parallel };

bool monomial_in_closure(const ExponentTuple& a, const Monomial& u, std::int64_t n);

// #{u in prod_{i<=m-2} [0, a_i - 1] : sum u_i/a_i >= (n+1)/a_{m-1}}
Int quotient_dimension(const ExponentTuple& a, std::int64_t n, Execution exec = Execution::serial);

struct QuotientTable {
  std::vector<Int> p;   // p[n] for n = 0..n_stop (p[n_stop] == 0)
  std::int64_t n_stop;  // first n with p[n] = 0
};

// One pass over the box computes every p[n] at once.
QuotientTable quotient_table(const ExponentTuple& a, Execution exec = Execution::serial);

// min{n >= 0 : quotient_dimension(a, n) = 0}
std::int64_t nr_by_oracle(const ExponentTuple& a, Execution exec = Execution::serial);

// Divisibility-minimal monomials of closure(m^k) inside the box
// u_i <= a_i - 1 (i <= m-2), u_{m-1} + u_m <= k; lexicographically sorted.
std::vector<Monomial> closure_monomials(const ExponentTuple& a, std::int64_t k);

// 2 q(n) + p[n] = q(n+1) + q(n-1) on every interior n, and q non-increasing.
// Throws DimensionError if q is shorter than 3 or p does not cover the
// interior indices.
bool qp_consistency(const std::vector<Int>& q, const std::vector<Int>& p);

// r(r-1)/2 + q(r) <= p_g with r = nr(m).
bool nr_pg_bound_check(const ExponentTuple& a);

}  // namespace singlat::oracle
