#include "singlat/graph_lattice.hpp"

#include "singlat/symmetric_elimination.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace singlat::lattice {

namespace {

void require_size(const DualGraph& g, std::size_t n, const char* what) {
  if (n != g.size())
    throw DimensionError(std::string(what) + ": cycle has " + std::to_string(n) + " coefficients, graph has " +
                         std::to_string(g.size()) + " vertices");
}

SparseSymmetric intersection_matrix(const DualGraph& g) {
  SparseSymmetric m;
  m.diagonal.reserve(g.size());
  m.off_diagonal.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    m.diagonal.emplace_back(g.vertex(i).self_intersection);
    for (const auto& [j, mult] : g.neighbours(i)) m.off_diagonal[i].emplace_back(j, Rational(mult));
  }
  return m;
}

template <class Coeff, class C>
std::vector<Coeff> pair_with_vertices(const DualGraph& g, const C& z) {
  std::vector<Coeff> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Coeff acc = z[i] * g.vertex(i).self_intersection;
    for (const auto& [j, mult] : g.neighbours(i)) acc += z[j] * mult;
    out[i] = acc;
  }
  return out;
}

}  // namespace

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), adjacency_(vertices_.size()) {
  if (vertices_.empty()) throw DomainError("dual graph: no vertices");
  for (const auto& v : vertices_)
    if (v.genus < 0) throw DomainError("dual graph: negative genus");

  std::vector<std::map<std::size_t, long>> mult(vertices_.size());
  for (const auto& e : edges_) {
    if (e.a >= vertices_.size() || e.b >= vertices_.size())
      throw DomainError("dual graph: edge endpoint out of range");
    if (e.a == e.b) throw DomainError("dual graph: self-loop at vertex " + std::to_string(e.a));
    ++mult[e.a][e.b];
    ++mult[e.b][e.a];
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) adjacency_[i].assign(mult[i].begin(), mult[i].end());

  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& [u, m] : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != vertices_.size()) throw DomainError("dual graph: not connected");
}

Int DualGraph::pairing(std::size_t i, std::size_t j) const {
  if (i == j) return vertices_[i].self_intersection;
  for (const auto& [u, m] : adjacency_[i])
    if (u == j) return m;
  return 0;
}

DualGraph DualGraph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size()) throw DimensionError("permutation size mismatch");
  std::vector<Vertex> vs(size());
  for (std::size_t i = 0; i < size(); ++i) vs.at(perm[i]) = vertices_[i];
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_) es.push_back({perm[e.a], perm[e.b]});
  return DualGraph(std::move(vs), std::move(es));
}

Cycle Cycle::basis(std::size_t n, std::size_t i) {
  Cycle c = zero(n);
  c.coefficients.at(i) = 1;
  return c;
}

bool Cycle::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Int& x) { return x == 0; });
}

bool Cycle::is_effective() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Int& x) { return x >= 0; });
}

bool Cycle::dominates(const Cycle& other) const {
  if (other.size() != size()) throw DimensionError("cycle comparison: size mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (coefficients[i] < other.coefficients[i]) return false;
  return true;
}

Cycle& Cycle::operator+=(const Cycle& o) {
  if (o.size() != size()) throw DimensionError("cycle sum: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] += o.coefficients[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& o) {
  if (o.size() != size()) throw DimensionError("cycle difference: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] -= o.coefficients[i];
  return *this;
}

Cycle operator*(const Int& k, Cycle a) {
  for (auto& x : a.coefficients) x *= k;
  return a;
}

QCycle::QCycle(const Cycle& c) {
  coefficients.reserve(c.size());
  for (const auto& x : c.coefficients) coefficients.emplace_back(x);
}

bool QCycle::is_integral() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Cycle QCycle::to_cycle() const {
  Cycle c;
  c.coefficients.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto v = as_integer(coefficients[i]);
    if (!v) throw ConstructionError("non-integral coefficient " + to_string(coefficients[i]) + " at vertex " +
                                    std::to_string(i));
    c.coefficients.push_back(*v);
  }
  return c;
}

QCycle& QCycle::operator+=(const QCycle& o) {
  if (o.size() != size()) throw DimensionError("Q-cycle sum: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] += o.coefficients[i];
  return *this;
}

QCycle& QCycle::operator-=(const QCycle& o) {
  if (o.size() != size()) throw DimensionError("Q-cycle difference: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] -= o.coefficients[i];
  return *this;
}

QCycle operator*(const Rational& k, QCycle a) {
  for (auto& x : a.coefficients) x *= k;
  return a;
}

std::vector<Int> intersections_with_vertices(const DualGraph& g, const Cycle& z) {
  require_size(g, z.size(), "intersection");
  return pair_with_vertices<Int>(g, z);
}

std::vector<Rational> intersections_with_vertices(const DualGraph& g, const QCycle& z) {
  require_size(g, z.size(), "intersection");
  return pair_with_vertices<Rational>(g, z);
}

Rational intersection_number(const DualGraph& g, const QCycle& z1, const QCycle& z2) {
  require_size(g, z2.size(), "intersection");
  const auto d = intersections_with_vertices(g, z1);
  Rational acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += d[i] * z2[i];
  return acc;
}

Int intersection_number(const DualGraph& g, const Cycle& z1, const Cycle& z2) {
  require_size(g, z2.size(), "intersection");
  const auto d = intersections_with_vertices(g, z1);
  Int acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += d[i] * z2[i];
  return acc;
}

Int canonical_pairing(const DualGraph& g, const Cycle& z) {
  require_size(g, z.size(), "canonical pairing");
  Int acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    acc += z[i] * (-v.self_intersection + 2 * v.genus - 2);
  }
  return acc;
}

bool is_anti_nef(const DualGraph& g, const Cycle& z) {
  const auto d = intersections_with_vertices(g, z);
  return std::all_of(d.begin(), d.end(), [](const Int& x) { return x <= 0; });
}

bool is_anti_nef(const DualGraph& g, const QCycle& z) {
  const auto d = intersections_with_vertices(g, z);
  return std::all_of(d.begin(), d.end(), [](const Rational& x) { return x <= 0; });
}

bool is_negative_definite(const DualGraph& g) {
  return SymmetricElimination(intersection_matrix(g)).negative_definite();
}

Cycle fundamental_cycle(const DualGraph& g) {
  if (!is_negative_definite(g)) throw DomainError("fundamental cycle: intersection form is not negative definite");

  Cycle z = Cycle::reduced(g.size());
  std::vector<Int> dots = intersections_with_vertices(g, z);
  std::set<std::size_t> violating;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (dots[i] > 0) violating.insert(i);

  // Each step adds E_v and updates z.E_u only for u in {v} + neighbours(v).
  while (!violating.empty()) {
    const std::size_t v = *violating.begin();
    z[v] += 1;
    dots[v] += g.vertex(v).self_intersection;
    if (dots[v] <= 0) violating.erase(v);
    for (const auto& [u, mult] : g.neighbours(v)) {
      dots[u] += mult;
      if (dots[u] > 0) violating.insert(u);
    }
  }
  return z;
}

QCycle canonical_qcycle(const DualGraph& g) {
  const SymmetricElimination elim(intersection_matrix(g));
  if (elim.singular()) throw DomainError("canonical cycle: singular intersection matrix");
  std::vector<Rational> rhs;
  rhs.reserve(g.size());
  for (const auto& v : g.vertices()) rhs.emplace_back(v.self_intersection + 2 - 2 * v.genus);
  return QCycle(elim.solve(rhs));
}

Int arithmetic_genus(const DualGraph& g, const Cycle& z) {
  require_size(g, z.size(), "arithmetic genus");
  if (z.is_zero()) throw DomainError("arithmetic genus: zero cycle");
  const Int twice = intersection_number(g, z, z) + canonical_pairing(g, z);
  if (twice % 2 != 0) throw InternalError("arithmetic genus: z.(z+K) is odd (" + twice.get_str() + ")");
  return twice / 2 + 1;
}

Contraction contract_to_minimal_good(const DualGraph& g) {
  const std::size_t n = g.size();
  std::vector<Vertex> vs = g.vertices();
  std::vector<std::map<std::size_t, long>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [u, m] : g.neighbours(i)) adj[i][u] = m;
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;

  auto contractible = [&](std::size_t v) {
    if (!alive[v] || vs[v].genus != 0 || vs[v].self_intersection != -1 || remaining == 1) return false;
    if (adj[v].size() > 2) return false;
    for (const auto& [u, m] : adj[v])
      if (m != 1) return false;
    return true;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!contractible(v)) continue;
      std::vector<std::size_t> nb;
      for (const auto& [u, m] : adj[v]) nb.push_back(u);
      for (auto u : nb) {
        vs[u].self_intersection += 1;
        adj[u].erase(v);
      }
      if (nb.size() == 2) {
        ++adj[nb[0]][nb[1]];
        ++adj[nb[1]][nb[0]];
      }
      adj[v].clear();
      alive[v] = false;
      --remaining;
      changed = true;
    }
  }

  std::vector<std::size_t> kept, index(n, n);
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) {
      index[v] = kept.size();
      kept.push_back(v);
    }
  std::vector<Vertex> out_vertices;
  std::vector<Edge> out_edges;
  for (auto v : kept) {
    out_vertices.push_back(vs[v]);
    for (const auto& [u, m] : adj[v])
      if (v < u)
        for (long k = 0; k < m; ++k) out_edges.push_back({index[v], index[u]});
  }
  return {DualGraph(std::move(out_vertices), std::move(out_edges)), std::move(kept)};
}

}  // namespace singlat::lattice
