#include "singlat/ideal_oracle.hpp"

#include "singlat/brieskorn.hpp"
#include "singlat/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

namespace singlat::oracle {

namespace {

constexpr std::int64_t kMaxBox = 10'000'000'000;
constexpr std::int64_t kMaxWeightScale = std::int64_t{1} << 40;

// Integer form of the closure criterion. With L = lcm(a_1..a_{m-1}) the
// monomial u lies in closure(m^n) iff
//   sum_{i<=m-2} u_i (L/a_i) >= (n - u_{m-1} - u_m) (L/a_{m-1}).
struct Scales {
  std::vector<std::int64_t> box_weight;  // L / a_i, i <= m-2
  std::int64_t reduction_weight = 0;     // L / a_{m-1}
  std::vector<std::int64_t> radix;       // a_i, i <= m-2
  std::int64_t box_size = 1;
};

Scales scales_for(const ExponentTuple& a) {
  const std::size_t m = a.m();
  Int l = 1;
  for (std::size_t i = 1; i <= m - 1; ++i) l = lcm(l, Int(static_cast<long>(a.a(i))));
  if (l > kMaxWeightScale) throw DomainError("exponents too large for lattice enumeration: " + a.str());
  const std::int64_t big_l = l.get_si();

  Scales s;
  for (std::size_t i = 1; i + 2 <= m; ++i) {
    s.box_weight.push_back(big_l / a.a(i));
    s.radix.push_back(a.a(i));
    if (s.box_size > kMaxBox / a.a(i)) throw DomainError("enumeration box too large for " + a.str());
    s.box_size *= a.a(i);
  }
  s.reduction_weight = big_l / a.a(m - 1);
  return s;
}

// Visits box points [begin, end) in flat index order with their weights,
// odometer style after one decode of the start index.
template <class F>
void for_each_box_weight(const Scales& s, std::int64_t begin, std::int64_t end, F&& visit) {
  std::vector<std::int64_t> digit(s.radix.size(), 0);
  std::int64_t w = 0;
  std::int64_t rest = begin;
  for (std::size_t i = 0; i < digit.size(); ++i) {
    digit[i] = rest % s.radix[i];
    rest /= s.radix[i];
    w += digit[i] * s.box_weight[i];
  }
  for (std::int64_t idx = begin; idx < end; ++idx) {
    visit(w);
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < s.radix[i]) {
        w += s.box_weight[i];
        break;
      }
      w -= (s.radix[i] - 1) * s.box_weight[i];
      digit[i] = 0;
    }
  }
}

template <class F>
void for_each_box_weight(const Scales& s, F&& visit) {
  for_each_box_weight(s, 0, s.box_size, std::forward<F>(visit));
}

// Splits the box into one contiguous block per thread.
template <class Local, class Visit, class Merge>
void parallel_box(const Scales& s, Local make_local, Visit visit, Merge merge) {
#pragma omp parallel num_threads(sweep::thread_count())
  {
    auto local = make_local();
    const std::int64_t nt = omp_get_num_threads(), t = omp_get_thread_num();
    const std::int64_t begin = s.box_size * t / nt, end = s.box_size * (t + 1) / nt;
    for_each_box_weight(s, begin, end, [&](std::int64_t w) { visit(local, w); });
#pragma omp critical
    merge(local);
  }
}

void require_length(const ExponentTuple& a, const Monomial& u) {
  if (u.size() != a.m())
    throw DimensionError("monomial has " + std::to_string(u.size()) + " exponents, expected " + std::to_string(a.m()));
  for (auto x : u)
    if (x < 0) throw DomainError("negative exponent in monomial");
}

bool meets(const Scales& s, const Monomial& u, std::int64_t n) {
  const std::size_t m = u.size();
  std::int64_t lhs = 0;
  for (std::size_t i = 0; i + 2 < m; ++i) lhs += u[i] * s.box_weight[i];
  return lhs >= (n - u[m - 2] - u[m - 1]) * s.reduction_weight;
}

}  // namespace

bool monomial_in_closure(const ExponentTuple& a, const Monomial& u, std::int64_t n) {
  require_length(a, u);
  if (n < 0) throw DomainError("closure power must be >= 0");
  if (n == 0) return true;
  // Compare in exact rationals; u may exceed the enumeration box here.
  const std::size_t m = a.m();
  Rational lhs = 0;
  for (std::size_t i = 0; i + 2 < m; ++i) lhs += ratio(Int(static_cast<long>(u[i])), Int(static_cast<long>(a.values()[i])));
  const Rational rhs = ratio(Int(static_cast<long>(n - u[m - 2] - u[m - 1])), Int(static_cast<long>(a.a(m - 1))));
  return lhs >= rhs;
}

Int quotient_dimension(const ExponentTuple& a, std::int64_t n, Execution exec) {
  if (n < 0) throw DomainError("quotient_dimension: n must be >= 0");
  const Scales s = scales_for(a);
  const std::int64_t threshold = (n + 1) * s.reduction_weight;

  std::int64_t count = 0;
  if (exec == Execution::serial) {
    for_each_box_weight(s, [&](std::int64_t w) { count += w >= threshold; });
  } else {
    parallel_box(
        s, [] { return std::int64_t{0}; }, [&](std::int64_t& c, std::int64_t w) { c += w >= threshold; },
        [&](std::int64_t c) { count += c; });
  }
  return Int(static_cast<long>(count));
}

QuotientTable quotient_table(const ExponentTuple& a, Execution exec) {
  const Scales s = scales_for(a);
  // A box point with weight w counts towards p[n] for n + 1 <= w / reduction_weight.
  std::int64_t top = 0;
  for (std::size_t i = 0; i < s.radix.size(); ++i) top += (s.radix[i] - 1) * s.box_weight[i];
  const std::size_t levels = static_cast<std::size_t>(top / s.reduction_weight) + 1;

  std::vector<std::int64_t> hist(levels, 0);
  if (exec == Execution::serial) {
    for_each_box_weight(s, [&](std::int64_t w) { ++hist[static_cast<std::size_t>(w / s.reduction_weight)]; });
  } else {
    parallel_box(
        s, [&] { return std::vector<std::int64_t>(levels, 0); },
        [&](std::vector<std::int64_t>& h, std::int64_t w) { ++h[static_cast<std::size_t>(w / s.reduction_weight)]; },
        [&](const std::vector<std::int64_t>& h) {
          for (std::size_t i = 0; i < levels; ++i) hist[i] += h[i];
        });
  }

  QuotientTable t;
  t.p.assign(levels, 0);
  std::int64_t suffix = 0;
  for (std::size_t h = levels; h-- > 1;) {
    suffix += hist[h];
    t.p[h - 1] = suffix;
  }
  t.n_stop = static_cast<std::int64_t>(levels) - 1;
  for (std::size_t n = 0; n < t.p.size(); ++n) {
    if (t.p[n] == 0) {
      t.n_stop = static_cast<std::int64_t>(n);
      t.p.resize(n + 1);
      break;
    }
  }
  return t;
}

std::int64_t nr_by_oracle(const ExponentTuple& a, Execution exec) { return quotient_table(a, exec).n_stop; }

std::vector<Monomial> closure_monomials(const ExponentTuple& a, std::int64_t k) {
  if (k < 1) throw DomainError("closure_monomials: k must be >= 1");
  const std::size_t m = a.m();
  const Scales s = scales_for(a);

  // Membership is upward closed inside the box, so a member is
  // divisibility-minimal iff no single-step decrement is a member.
  std::vector<Monomial> out;
  Monomial u(m, 0);
  std::vector<std::int64_t> digit(m - 2, 0);
  for (;;) {
    for (std::int64_t tail = 0; tail <= k; ++tail) {
      for (std::int64_t x = 0; x <= tail; ++x) {
        std::copy(digit.begin(), digit.end(), u.begin());
        u[m - 2] = x;
        u[m - 1] = tail - x;
        if (!meets(s, u, k)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < m && minimal; ++i) {
          if (u[i] == 0) continue;
          --u[i];
          if (meets(s, u, k)) minimal = false;
          ++u[i];
        }
        if (minimal) out.push_back(u);
      }
    }
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      if (++digit[i] < s.radix[i]) break;
      digit[i] = 0;
    }
    if (i == digit.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool qp_consistency(const std::vector<Int>& q, const std::vector<Int>& p) {
  if (q.size() < 3) throw DimensionError("qp_consistency: need at least q(0), q(1), q(2)");
  if (p.size() + 1 < q.size()) throw DimensionError("qp_consistency: p does not cover the interior of q");
  for (std::size_t n = 1; n < q.size(); ++n)
    if (q[n] > q[n - 1]) return false;
  for (std::size_t n = 1; n + 1 < q.size(); ++n)
    if (2 * q[n] + p[n] != q[n + 1] + q[n - 1]) return false;
  return true;
}

bool nr_pg_bound_check(const ExponentTuple& a) {
  const Int r = brieskorn::normal_reduction_number(a);
  const std::size_t rs = r.get_ui();
  const auto seq = brieskorn::q_sequence(a, rs);
  const Int pg = brieskorn::geometric_genus(a);
  return r * (r - 1) / 2 + seq.q[rs] <= pg;
}

}  // namespace singlat::oracle
