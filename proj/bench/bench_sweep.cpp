// Serial reference vs OpenMP timings for the sweep kernels.
//
//   bench_sweep [repeats]
//
// Thread count follows SINGLAT_SWEEP_THREADS / OMP_NUM_THREADS.

#include "singlat/brieskorn.hpp"
#include "singlat/ideal_oracle.hpp"
#include "singlat/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace singlat;
using oracle::Execution;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads=%d repeats=%d\n", sweep::thread_count(), repeats);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial[s]", "omp[s]", "speedup");
  bool all_same = true;

  {
    std::vector<ExponentTuple> s, p;
    const double ts = best_of(repeats, [&] { s = sweep::classify_elliptic(5, 30, Execution::serial); });
    const double tp = best_of(repeats, [&] { p = sweep::classify_elliptic(5, 30, Execution::parallel); });
    row("classify_elliptic m<=5 a<=30", ts, tp, s == p);
    all_same &= s == p;
  }

  for (const auto& v : {std::vector<std::int64_t>{41, 43, 47, 53, 59, 61}, std::vector<std::int64_t>{20, 21, 22, 23, 24, 25, 26}}) {
    const ExponentTuple a(v);
    oracle::QuotientTable s, p;
    const double ts = best_of(repeats, [&] { s = oracle::quotient_table(a, Execution::serial); });
    const double tp = best_of(repeats, [&] { p = oracle::quotient_table(a, Execution::parallel); });
    const std::string name = "quotient_table " + a.str();
    row(name.c_str(), ts, tp, s.p == p.p);
    all_same &= s.p == p.p;
  }

  {
    const auto tuples = sweep::enumerate_tuples(5, 12);
    auto nr_agree = [](const ExponentTuple& a) -> char {
      return brieskorn::normal_reduction_number(a) == oracle::nr_by_oracle(a);
    };
    std::vector<char> s, p;
    const double ts = best_of(repeats, [&] { s = sweep::map_tuples<char>(tuples, nr_agree, Execution::serial); });
    const double tp = best_of(repeats, [&] { p = sweep::map_tuples<char>(tuples, nr_agree, Execution::parallel); });
    row("nr closed vs oracle m<=5 a<=12", ts, tp, s == p);
    all_same &= s == p;
  }

  {
    const auto tuples = sweep::enumerate_tuples(4, 12);
    auto pf = [](const ExponentTuple& a) { return brieskorn::fundamental_genus_checked(brieskorn::StarGraph(a)).value; };
    std::vector<Int> s, p;
    const double ts = best_of(1, [&] { s = sweep::map_tuples<Int>(tuples, pf, Execution::serial); });
    const double tp = best_of(1, [&] { p = sweep::map_tuples<Int>(tuples, pf, Execution::parallel); });
    row("p_f Laufer check m<=4 a<=12", ts, tp, s == p);
    all_same &= s == p;
  }

  return all_same ? 0 : 1;
}
