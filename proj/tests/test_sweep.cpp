#include "singlat/sweep.hpp"

#include "singlat/brieskorn.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>

using namespace singlat;
using oracle::Execution;

TEST_CASE("tuple enumeration", "[sweep]") {
  CHECK(sweep::enumerate_tuples(5, 12).size() == 4290);
  CHECK(sweep::enumerate_tuples(3, 3).size() == 4);
  const auto t = sweep::enumerate_tuples(4, 3);
  CHECK(t.front() == ExponentTuple({2, 2, 2}));
  CHECK(t[4] == ExponentTuple({2, 2, 2, 2}));
  CHECK(t.back() == ExponentTuple({3, 3, 3, 3}));
}

TEST_CASE("elliptic classification of a small box", "[sweep]") {
  const auto e = sweep::classify_elliptic(3, 9);
  auto has = [&](std::vector<std::int64_t> v) { return std::find(e.begin(), e.end(), ExponentTuple(v)) != e.end(); };
  CHECK(has({2, 3, 6}));
  CHECK(has({3, 3, 9}));
  CHECK(has({2, 5, 9}));
  CHECK_FALSE(has({2, 3, 5}));
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK_THROWS_AS(sweep::classify_elliptic(2, 9), DomainError);
}

TEST_CASE("serial and parallel sweeps agree", "[sweep][parallel]") {
  CHECK(sweep::classify_elliptic(5, 20, Execution::serial) == sweep::classify_elliptic(5, 20, Execution::parallel));
  const auto tuples = sweep::enumerate_tuples(4, 10);
  auto pg = [](const ExponentTuple& a) { return brieskorn::geometric_genus(a); };
  CHECK(sweep::map_tuples<Int>(tuples, pg, Execution::serial) == sweep::map_tuples<Int>(tuples, pg, Execution::parallel));
}

TEST_CASE("map_tuples rethrows the first failure", "[sweep]") {
  const auto tuples = sweep::enumerate_tuples(3, 4);
  auto f = [](const ExponentTuple& a) -> int {
    if (a.a(3) == 4) throw DomainError(a.str());
    return 0;
  };
  try {
    sweep::map_tuples<int>(tuples, f, Execution::parallel);
    FAIL("no exception");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "(2,2,4)");
  }
}

TEST_CASE("thread count from the environment", "[sweep]") {
  ::setenv("SINGLAT_SWEEP_THREADS", "2", 1);
  CHECK(sweep::thread_count() == 2);
  ::setenv("SINGLAT_SWEEP_THREADS", "0", 1);
  CHECK_THROWS_AS(sweep::thread_count(), UsageError);
  ::setenv("SINGLAT_SWEEP_THREADS", "two", 1);
  CHECK_THROWS_AS(sweep::thread_count(), UsageError);
  ::setenv("SINGLAT_SWEEP_THREADS", "3", 1);
  CHECK(sweep::classify_elliptic(4, 8, Execution::parallel) == sweep::classify_elliptic(4, 8, Execution::serial));
  ::unsetenv("SINGLAT_SWEEP_THREADS");
  CHECK(sweep::thread_count() >= 1);
}
