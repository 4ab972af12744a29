#pragma once

// Sweeps over boxes of exponent tuples. Each kernel has a serial reference
// path and an OpenMP path; both return results in lexicographic tuple order,
// so their outputs are identical for any thread count.

#include "singlat/exponent_tuple.hpp"
#include "singlat/ideal_oracle.hpp"

#include <omp.h>

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace singlat::sweep {

using oracle::Execution;

// Worker count for parallel kernels: SINGLAT_SWEEP_THREADS if set (must be an
// integer >= 1, otherwise UsageError), else the OpenMP default.
int thread_count();

// All valid tuples with 3 <= m <= m_max and a_m <= a_max, in lexicographic
// order of (m, a_1, ..., a_m).
std::vector<ExponentTuple> enumerate_tuples(std::size_t m_max, std::int64_t a_max);

// Elliptic tuples (p_f = 1) of the box, sorted lexicographically. Throws
// ConsistencyError if the result differs from the closed list of elliptic
// families restricted to the box.
std::vector<ExponentTuple> classify_elliptic(std::size_t m_max, std::int64_t a_max,
                                             Execution exec = Execution::parallel);

// Applies f to every tuple; slot i of the result belongs to tuples[i].
// An exception thrown for one tuple is rethrown after the loop (first index wins).
template <class R, class F>
std::vector<R> map_tuples(const std::vector<ExponentTuple>& tuples, F&& f, Execution exec) {
  std::vector<std::optional<R>> slots(tuples.size());
  std::vector<std::exception_ptr> errors(tuples.size());
  const auto n = static_cast<std::ptrdiff_t>(tuples.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        slots[i].emplace(f(tuples[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        slots[i].emplace(f(tuples[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace singlat::sweep
