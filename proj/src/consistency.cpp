#include "singlat/consistency.hpp"

#include "singlat/brieskorn.hpp"
#include "singlat/cone_homogeneous.hpp"
#include "singlat/ideal_oracle.hpp"

#include <algorithm>
#include <functional>

namespace singlat::consistency {

namespace {

using lattice::Cycle;

struct Outcome {
  bool passed;
  std::string detail;
};

void record(std::vector<CheckResult>& out, std::string name, const std::function<Outcome()>& body) {
  try {
    auto r = body();
    out.push_back({std::move(name), r.passed, std::move(r.detail)});
  } catch (const std::exception& e) {
    out.push_back({std::move(name), false, std::string("error: ") + e.what()});
  }
}

std::string list_text(const std::vector<Int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s + ")";
}

// No proper subcycle Z - E_j is anti-nef: with v = Z.E, Z - E_j is anti-nef
// iff v_j - E_j^2 <= 0, since its pairing with other vertices only drops.
bool locally_minimal(const lattice::DualGraph& g, const Cycle& z) {
  const auto v = lattice::intersections_with_vertices(g, z);
  Int total = 0;
  for (const auto& c : z.coefficients) total += c;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (z[j] <= 0) continue;
    if (total == 1) continue;
    if (v[j] - g.vertex(j).self_intersection <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_checks(const ExponentTuple& a) {
  const brieskorn::StarGraph g(a);
  const auto& graph = g.graph();
  const auto& inv = g.invariants();
  std::vector<CheckResult> out;

  record(out, "graph.negative_definite", [&]() -> Outcome {
    return {lattice::is_negative_definite(graph), "vertices=" + std::to_string(graph.size())};
  });

  const Cycle zf = lattice::fundamental_cycle(graph);

  record(out, "cycles.fundamental_minimal", [&]() -> Outcome {
    const bool ok = lattice::is_anti_nef(graph, zf) && !zf.is_zero() && locally_minimal(graph, zf);
    return {ok, "Z_f anti-nef, no Z_f - E_j anti-nef"};
  });

  record(out, "cycles.divisor", [&]() -> Outcome {
    for (std::size_t i = 1; i <= a.m(); ++i) {
      const Cycle z = brieskorn::divisor_cycle(g, i);
      if (!z.dominates(zf)) return {false, "Z^(" + std::to_string(i) + ") does not dominate Z_f"};
    }
    return {true, "Z^(1..m) integral, effective, exact pairing pattern, >= Z_f"};
  });

  record(out, "cycles.central_multiple", [&]() -> Outcome {
    const Cycle z0 = brieskorn::central_multiple_cycle(g);
    const bool ok = lattice::is_anti_nef(graph, z0) && z0.dominates(zf);
    return {ok, "Z_0 center=" + z0[0].get_str()};
  });

  record(out, "cycles.canonical", [&]() -> Outcome {
    const auto zk = brieskorn::canonical_cycle_formula(g);
    const auto adj = lattice::canonical_qcycle(graph);
    bool ok = zk == adj && zk.is_integral();
    if (zk.to_cycle().is_effective()) return {ok, "formula = adjunction, integral, effective"};
    const auto c = lattice::contract_to_minimal_good(graph);
    const auto zk_min = lattice::canonical_qcycle(c.graph);
    ok = ok && g.non_minimal_model() && zk_min.is_integral() && zk_min.to_cycle().is_effective();
    for (std::size_t i = 0; i < c.kept.size(); ++i) ok = ok && zk_min[i] == zk[c.kept[i]];
    return {ok, "formula = adjunction, integral, effective on the minimal good model (" +
                    std::to_string(c.graph.size()) + " of " + std::to_string(graph.size()) + " curves)"};
  });

  record(out, "genus.fundamental", [&]() -> Outcome {
    const auto closed = brieskorn::fundamental_genus(a, inv).value;
    const auto laufer = lattice::arithmetic_genus(graph, zf);
    brieskorn::fundamental_genus_checked(g);
    return {closed == laufer, "closed=" + closed.get_str() + " laufer=" + laufer.get_str()};
  });

  const Int nr = brieskorn::normal_reduction_number(a);
  const Int pg = brieskorn::geometric_genus(a, inv);

  record(out, "nr.oracle", [&]() -> Outcome {
    const auto by_oracle = oracle::nr_by_oracle(a);
    return {nr == by_oracle, "closed=" + nr.get_str() + " oracle=" + std::to_string(by_oracle)};
  });

  record(out, "nr.positive", [&]() -> Outcome { return {nr >= 1, "nr=" + nr.get_str()}; });

  record(out, "nr.rational", [&]() -> Outcome {
    const bool ok = pg != 0 || nr == 1;
    return {ok, "pg=" + pg.get_str() + " nr=" + nr.get_str()};
  });

  record(out, "oracle.quotient_table", [&]() -> Outcome {
    const auto t = oracle::quotient_table(a);
    if (t.p.empty() || t.p[0] != inv.multiplicity - 1)
      return {false, "p(0) != multiplicity - 1"};
    for (std::size_t n = 1; n < t.p.size(); ++n)
      if (t.p[n] > t.p[n - 1]) return {false, "p increases at n=" + std::to_string(n)};
    for (std::size_t n = 0; n < t.p.size(); ++n) {
      const auto direct = oracle::quotient_dimension(a, static_cast<std::int64_t>(n));
      if (direct != t.p[n])
        return {false, "table p(" + std::to_string(n) + ")=" + t.p[n].get_str() + " direct=" + direct.get_str()};
    }
    return {true, "p=" + list_text(t.p)};
  });

  record(out, "oracle.closure_monomials", [&]() -> Outcome {
    const std::int64_t k_max = std::min<std::int64_t>(to_int64(nr, "nr") + 1, 3);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      for (const auto& u : oracle::closure_monomials(a, k)) {
        if (!oracle::monomial_in_closure(a, u, k) || !oracle::monomial_in_closure(a, u, k - 1))
          return {false, "generator outside closure(m^" + std::to_string(k) + ")"};
      }
    }
    return {true, "k<=" + std::to_string(k_max)};
  });

  record(out, "qseq.difference_identities", [&]() -> Outcome {
    const auto n_max = static_cast<std::size_t>(to_int64(nr, "nr")) + 2;
    const auto s = brieskorn::q_sequence(g, n_max);
    if (s.q.front() != pg) return {false, "q(0)=" + s.q.front().get_str() + " pg=" + pg.get_str()};
    const bool ok = oracle::qp_consistency(s.q, s.p);
    return {ok, "q=" + list_text(s.q)};
  });

  record(out, "qseq.nr_pg_bound", [&]() -> Outcome {
    return {oracle::nr_pg_bound_check(a), "r(r-1)/2 + q(r) <= pg"};
  });

  record(out, "elliptic.families", [&]() -> Outcome {
    const bool computed = brieskorn::is_elliptic(a);
    const bool listed = brieskorn::in_elliptic_families(a);
    return {computed == listed,
            std::string("p_f=1: ") + (computed ? "yes" : "no") + ", listed: " + (listed ? "yes" : "no")};
  });

  const auto& v = a.values();
  if (v.size() == 3 && v[0] == v[1] && v[1] == v[2] && v[0] >= 3) {
    const auto d = v[0];
    record(out, "cone.homogeneous", [&]() -> Outcome {
      const auto s = brieskorn::q_sequence(g, static_cast<std::size_t>(d));
      const bool ok = s.q == cone::homogeneous_q_sequence(d, d) && nr == cone::homogeneous_nr(d) &&
                      nr == cone::a_invariant_relation(d) &&
                      nr == cone::brr_upper_bound(cone::plane_curve_cone(d));
      return {ok, "q=" + list_text(s.q) + " nr=" + nr.get_str()};
    });
  }

  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace singlat::consistency
