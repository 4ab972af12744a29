#include "singlat/symmetric_elimination.hpp"

#include <map>
#include <set>

namespace singlat {

SymmetricElimination::SymmetricElimination(const SparseSymmetric& matrix) : n_(matrix.size()) {
  if (matrix.off_diagonal.size() != n_) throw DimensionError("sparse matrix: row count mismatch");

  std::vector<Rational> diag = matrix.diagonal;
  std::vector<std::map<std::size_t, Rational>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& [j, a] : matrix.off_diagonal[i]) {
      if (j >= n_ || j == i) throw DimensionError("sparse matrix: bad column index");
      rows[i][j] += a;
    }
  }
  for (auto& row : rows) std::erase_if(row, [](const auto& e) { return e.second == 0; });

  std::set<std::pair<std::size_t, std::size_t>> queue;  // (degree, vertex)
  for (std::size_t i = 0; i < n_; ++i) queue.emplace(rows[i].size(), i);

  auto requeue = [&](std::size_t u, std::size_t old_degree) {
    queue.erase({old_degree, u});
    queue.emplace(rows[u].size(), u);
  };

  steps_.reserve(n_);
  while (!queue.empty()) {
    const std::size_t v = queue.begin()->second;
    queue.erase(queue.begin());

    if (diag[v] == 0) {
      singular_ = true;
      return;
    }
    Step step{v, diag[v], {rows[v].begin(), rows[v].end()}};

    std::vector<std::size_t> old_degree;
    old_degree.reserve(step.row.size());
    for (const auto& [u, a] : step.row) {
      old_degree.push_back(rows[u].size());
      rows[u].erase(v);
    }
    // Schur complement update restricted to the neighbourhood of v.
    for (std::size_t x = 0; x < step.row.size(); ++x) {
      const auto& [u, au] = step.row[x];
      diag[u] -= au * au / step.pivot;
      for (std::size_t y = x + 1; y < step.row.size(); ++y) {
        const auto& [w, aw] = step.row[y];
        Rational updated = rows[u][w] - au * aw / step.pivot;
        if (updated == 0) {
          rows[u].erase(w);
          rows[w].erase(u);
        } else {
          rows[u][w] = updated;
          rows[w][u] = updated;
        }
      }
    }
    for (std::size_t x = 0; x < step.row.size(); ++x) requeue(step.row[x].first, old_degree[x]);
    rows[v].clear();
    steps_.push_back(std::move(step));
  }
}

bool SymmetricElimination::negative_definite() const {
  if (singular_) return false;
  for (const auto& s : steps_)
    if (s.pivot >= 0) return false;
  return true;
}

std::vector<Rational> SymmetricElimination::pivots() const {
  std::vector<Rational> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.pivot);
  return out;
}

std::vector<std::size_t> SymmetricElimination::order() const {
  std::vector<std::size_t> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.vertex);
  return out;
}

std::vector<Rational> SymmetricElimination::solve(std::span<const Rational> rhs) const {
  if (singular_) throw DomainError("linear solve: singular matrix");
  if (rhs.size() != n_) throw DimensionError("linear solve: right-hand side size mismatch");

  std::vector<Rational> y(rhs.begin(), rhs.end());
  for (const auto& s : steps_) {
    if (y[s.vertex] == 0) continue;
    const Rational t = y[s.vertex] / s.pivot;
    for (const auto& [u, a] : s.row) y[u] -= a * t;
  }
  std::vector<Rational> x(n_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    Rational acc = y[it->vertex];
    for (const auto& [u, a] : it->row) acc -= a * x[u];
    x[it->vertex] = acc / it->pivot;
  }
  return x;
}

}  // namespace singlat
