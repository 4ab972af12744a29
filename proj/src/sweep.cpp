#include "singlat/sweep.hpp"

#include "singlat/brieskorn.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace singlat::sweep {

int thread_count() {
  const char* env = std::getenv("SINGLAT_SWEEP_THREADS");
  if (env == nullptr || *env == '\0') return omp_get_max_threads();
  const std::string_view text(env);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw UsageError("SINGLAT_SWEEP_THREADS must be an integer >= 1, got '" + std::string(text) + "'");
  return value;
}

std::vector<ExponentTuple> enumerate_tuples(std::size_t m_max, std::int64_t a_max) {
  std::vector<ExponentTuple> out;
  for (std::size_t m = 3; m <= m_max; ++m) {
    std::vector<std::int64_t> a(m, 2);
    if (a_max < 2) break;
    for (;;) {
      out.emplace_back(a);
      // Next non-decreasing tuple: bump the last entry that can grow, reset the tail to it.
      std::size_t i = m;
      while (i > 0 && a[i - 1] == a_max) --i;
      if (i == 0) break;
      ++a[i - 1];
      for (std::size_t j = i; j < m; ++j) a[j] = a[i - 1];
    }
  }
  return out;
}

std::vector<ExponentTuple> classify_elliptic(std::size_t m_max, std::int64_t a_max, Execution exec) {
  if (m_max < 3) throw DomainError("classify_elliptic: m_max must be >= 3");
  if (a_max < 2) throw DomainError("classify_elliptic: a_max must be >= 2");
  const auto tuples = enumerate_tuples(m_max, a_max);
  const auto flags = map_tuples<char>(tuples, [](const ExponentTuple& a) -> char { return brieskorn::is_elliptic(a); }, exec);

  std::vector<ExponentTuple> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const bool listed = brieskorn::in_elliptic_families(tuples[i]);
    if (static_cast<bool>(flags[i]) != listed)
      throw ConsistencyError("elliptic classification disagrees with the closed list at " + tuples[i].str() +
                             (listed ? " (listed, p_f != 1)" : " (p_f = 1, not listed)"));
    if (flags[i]) out.push_back(tuples[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace singlat::sweep
