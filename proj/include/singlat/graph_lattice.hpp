#pragma once

// Intersection theory on weighted dual graphs of surface resolutions.
//
// A DualGraph fixes an ordered list of exceptional curves E_i (genus and
// self-intersection) and their intersection pattern. Cycles are integral
// combinations sum z_i E_i stored densely in vertex order; QCycles carry
// rational coefficients. Everything here is exact.

#include "singlat/arith.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace singlat::lattice {

struct Vertex {
  Int genus;
  Int self_intersection;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t a;
  std::size_t b;
};

class DualGraph {
 public:
  // Validates edge endpoints, rejects self-loops and disconnected graphs.
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbours of i with edge multiplicity, i.e. E_i . E_j for j != i.
  const std::vector<std::pair<std::size_t, long>>& neighbours(std::size_t i) const { return adjacency_[i]; }

  // E_i . E_j
  Int pairing(std::size_t i, std::size_t j) const;

  // Relabels vertices: vertex i of *this becomes vertex perm[i] of the result.
  DualGraph permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, long>>> adjacency_;
};

struct Cycle {
  std::vector<Int> coefficients;

  Cycle() = default;
  explicit Cycle(std::vector<Int> c) : coefficients(std::move(c)) {}
  static Cycle zero(std::size_t n) { return Cycle(std::vector<Int>(n, 0)); }
  static Cycle reduced(std::size_t n) { return Cycle(std::vector<Int>(n, 1)); }
  static Cycle basis(std::size_t n, std::size_t i);

  std::size_t size() const { return coefficients.size(); }
  const Int& operator[](std::size_t i) const { return coefficients[i]; }
  Int& operator[](std::size_t i) { return coefficients[i]; }

  bool is_zero() const;
  bool is_effective() const;
  // Coefficient-wise order.
  bool dominates(const Cycle& other) const;

  Cycle& operator+=(const Cycle& o);
  Cycle& operator-=(const Cycle& o);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Int& k, Cycle a);
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct QCycle {
  std::vector<Rational> coefficients;

  QCycle() = default;
  explicit QCycle(std::vector<Rational> c) : coefficients(std::move(c)) {}
  QCycle(const Cycle& c);  // NOLINT(google-explicit-constructor): integral cycles embed

  std::size_t size() const { return coefficients.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients[i]; }
  Rational& operator[](std::size_t i) { return coefficients[i]; }

  bool is_integral() const;
  // Throws ConstructionError if some coefficient is not an integer.
  Cycle to_cycle() const;

  QCycle& operator+=(const QCycle& o);
  QCycle& operator-=(const QCycle& o);
  friend QCycle operator+(QCycle a, const QCycle& b) { return a += b; }
  friend QCycle operator-(QCycle a, const QCycle& b) { return a -= b; }
  friend QCycle operator*(const Rational& k, QCycle a);
  friend bool operator==(const QCycle&, const QCycle&) = default;
};

// z1 . z2 under the intersection form of g.
Rational intersection_number(const DualGraph& g, const QCycle& z1, const QCycle& z2);
Int intersection_number(const DualGraph& g, const Cycle& z1, const Cycle& z2);

// (z . E_i) for every vertex i.
std::vector<Int> intersections_with_vertices(const DualGraph& g, const Cycle& z);
std::vector<Rational> intersections_with_vertices(const DualGraph& g, const QCycle& z);

// z . K for the canonical class K, by adjunction K.E_i = -E_i^2 + 2 g_i - 2.
Int canonical_pairing(const DualGraph& g, const Cycle& z);

bool is_anti_nef(const DualGraph& g, const Cycle& z);
bool is_anti_nef(const DualGraph& g, const QCycle& z);

bool is_negative_definite(const DualGraph& g);

// Minimal non-zero anti-nef cycle, by a Laufer computation sequence started at
// the reduced cycle and always raising the lowest-index violating vertex.
// Throws DomainError unless g is negative definite.
Cycle fundamental_cycle(const DualGraph& g);

// Z_K with Z_K . E_i = E_i^2 + 2 - 2 g_i for all i.
QCycle canonical_qcycle(const DualGraph& g);

// p_a(z) = z.(z + K)/2 + 1. Throws DomainError for z = 0.
Int arithmetic_genus(const DualGraph& g, const Cycle& z);

struct Contraction {
  DualGraph graph;
  std::vector<std::size_t> kept;  // kept[i] is the index in the input graph of vertex i
};

// Blows down rational (-1)-curves that meet at most two other curves, each
// transversally once, until none is left; this keeps normal crossings. Never
// contracts the last vertex.
Contraction contract_to_minimal_good(const DualGraph& g);

}  // namespace singlat::lattice
