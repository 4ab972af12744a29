#pragma once

// Independent helpers for the tests: dense exact linear algebra, small graph
// builders and a seeded random tree generator.

#include "singlat/graph_lattice.hpp"

#include <random>
#include <vector>

namespace support {

using singlat::Int;
using singlat::Rational;
using singlat::lattice::DualGraph;
using singlat::lattice::Edge;
using singlat::lattice::Vertex;

inline std::vector<std::vector<Rational>> dense_matrix(const DualGraph& g) {
  std::vector<std::vector<Rational>> m(g.size(), std::vector<Rational>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g.pairing(i, j);
  return m;
}

// Leading principal minors by plain Gaussian elimination without pivoting.
inline std::vector<Rational> leading_minors(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<Rational> minors;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    det *= a[k][k];
    minors.push_back(det);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return minors;
}

// Sylvester: -M positive definite iff every leading minor of -M is positive.
inline bool dense_negative_definite(const DualGraph& g) {
  auto m = dense_matrix(g);
  for (auto& row : m)
    for (auto& x : row) x = -x;
  const auto minors = leading_minors(m);
  if (minors.size() != g.size()) return false;
  for (const auto& d : minors)
    if (d <= 0) return false;
  return true;
}

// Gauss-Jordan solve of a dense nonsingular system.
inline std::vector<Rational> dense_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (a[p][k] == 0) ++p;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Center 0 with the given genus and self-intersection; each chain lists the
// -self-intersections walking outward.
inline DualGraph star(long genus, long center_self, const std::vector<std::vector<long>>& chains) {
  std::vector<Vertex> vs{{Int(genus), Int(center_self)}};
  std::vector<Edge> es;
  for (const auto& c : chains) {
    std::size_t prev = 0;
    for (long x : c) {
      vs.push_back({Int(0), Int(-x)});
      es.push_back({prev, vs.size() - 1});
      prev = vs.size() - 1;
    }
  }
  return DualGraph(vs, es);
}

inline DualGraph e8() { return star(0, -2, {{2}, {2, 2}, {2, 2, 2, 2}}); }

inline DualGraph a_chain(std::size_t n, long c = 2) {
  std::vector<Vertex> vs(n, Vertex{Int(0), Int(-c)});
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.push_back({i - 1, i});
  return DualGraph(vs, es);
}

// Random tree on n vertices: self-intersections mostly in [-5, -2] with an
// occasional -1, genus 1 on about a quarter of the vertices.
inline DualGraph random_tree(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> self(-5, -2);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) {
    const long e = rng() % 8 == 0 ? -1 : self(rng);
    vs.push_back({Int(rng() % 4 == 0 ? 1 : 0), Int(e)});
  }
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.push_back({std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i});
  return DualGraph(vs, es);
}

// Random negative definite tree: resamples until the dense test accepts.
inline DualGraph random_definite_tree(std::mt19937& rng, std::size_t n) {
  for (;;) {
    auto g = random_tree(rng, n);
    if (dense_negative_definite(g)) return g;
  }
}

}  // namespace support
