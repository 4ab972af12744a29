#include "singlat/report.hpp"

#include "singlat/cone_homogeneous.hpp"

#include <algorithm>
#include <sstream>

namespace singlat::report {

Json int_json(const Int& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json int_list_json(const std::vector<Int>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(int_json(x));
  return out;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw UsageError("not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw UsageError("expected an integer, got " + j.dump());
}

Json dual_graph_json(const lattice::DualGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices())
    vertices.push_back({{"genus", int_json(v.genus)}, {"self_int", int_json(v.self_intersection)}});
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"edges", edges}, {"vertices", vertices}};
}

lattice::DualGraph dual_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw UsageError("dual graph JSON needs \"vertices\" and \"edges\"");
  std::vector<lattice::Vertex> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back({int_from_json(v.at("genus")), int_from_json(v.at("self_int"))});
  std::vector<lattice::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw UsageError("edge must be a pair [i,j]");
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  return lattice::DualGraph(std::move(vertices), std::move(edges));
}

std::string dual_graph_dot(const lattice::DualGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    os << "  v" << i << " [label=\"g=" << g.vertex(i).genus << ", e=" << g.vertex(i).self_intersection << "\"];\n";
  for (const auto& e : g.edges()) os << "  v" << e.a << " -- v" << e.b << ";\n";
  os << "}\n";
  return os.str();
}

std::string star_graph_dot(const brieskorn::StarGraph& g) {
  const auto& dg = g.graph();
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < dg.size(); ++i) {
    os << "  v" << i << " [label=\"" << g.vertex_name(i);
    if (i == brieskorn::StarGraph::center) os << " [g=" << g.center_genus() << "]";
    os << " (" << dg.vertex(i).self_intersection << ")\"];\n";
  }
  for (const auto& e : dg.edges()) os << "  v" << e.a << " -- v" << e.b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

std::string int_list_text(const std::vector<Int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i].get_str();
  }
  return s + "]";
}

}  // namespace

std::string star_graph_text(const brieskorn::StarGraph& g) {
  std::ostringstream os;
  os << "a=" << g.exponents().str() << " vertices=" << g.size() << "\n";
  os << "E0 genus=" << g.center_genus() << " self_int=" << -g.c0() << "\n";
  for (const auto& f : g.families()) {
    if (f.chain.empty()) {
      os << "family " << f.w << ": no chain (alpha=1)\n";
      continue;
    }
    os << "family " << f.w << ": " << f.count << " x chain " << int_list_text(f.chain) << " (alpha=" << f.alpha
       << ", beta=" << f.beta << ")\n";
  }
  if (g.non_minimal_model()) os << "note: center is a rational (-1)-curve on at most two chains\n";
  return os.str();
}

std::string star_cycle_text(const brieskorn::StarGraph& g, const lattice::QCycle& z) {
  std::ostringstream os;
  os << "E0=" << to_string(z[brieskorn::StarGraph::center]);
  for (const auto& f : g.families()) {
    os << " | w=" << f.w << " x" << f.count << ": ";
    if (f.count == 0 || f.chain.empty()) {
      os << "-";
      continue;
    }
    os << "[";
    for (std::size_t nu = 1; nu <= f.chain.size(); ++nu) {
      if (nu > 1) os << ",";
      os << to_string(z[g.vertex(f.w, nu, 1)]);
    }
    os << "]";
  }
  return os.str();
}

InvariantReport make_invariant_report(const ExponentTuple& a) {
  const brieskorn::StarGraph g(a);
  InvariantReport r{a, g.invariants(), g.center_genus(), g.c0(), 0, 0, 0, false, {}};
  const auto pf = brieskorn::fundamental_genus_checked(g);
  r.pf = pf.value;
  r.pg = brieskorn::geometric_genus(a, r.invariants);
  r.nr = brieskorn::normal_reduction_number(a);
  r.elliptic = r.pf == 1;
  switch (pf.kind) {
    case brieskorn::FundamentalCycleKind::central_multiple:
      r.flags.emplace_back("zf=z0");
      break;
    case brieskorn::FundamentalCycleKind::maximal_ideal:
      r.flags.emplace_back("zf=mx");
      break;
    case brieskorn::FundamentalCycleKind::both:
      r.flags.emplace_back("zf=z0=mx");
      break;
  }
  if (brieskorn::is_br2_exception(a)) r.flags.emplace_back("br2_exception");
  if (g.non_minimal_model()) r.flags.emplace_back("non_minimal_model");
  if (r.pg == 0) r.flags.emplace_back("rational");
  std::sort(r.flags.begin(), r.flags.end());
  return r;
}

Json tuple_json(const ExponentTuple& a) {
  Json out = Json::array();
  for (auto x : a.values()) out.push_back(x);
  return out;
}

Json to_json(const InvariantReport& r) {
  const auto& inv = r.invariants;
  Json eta = int_list_json(inv.eta);
  return {
      {"a", tuple_json(r.a)},
      {"alpha", int_list_json(inv.alpha_i)},
      {"c0", int_json(r.c0)},
      {"delta", int_json(inv.delta)},
      {"elliptic", r.elliptic},
      {"ell", int_json(inv.ell)},
      {"eta", eta},
      {"flags", r.flags},
      {"g", int_json(r.center_genus)},
      {"ghat", int_list_json(inv.ghat_i)},
      {"lambda", int_list_json(inv.lambda)},
      {"nr", int_json(r.nr)},
      {"pf", int_json(r.pf)},
      {"pg", int_json(r.pg)},
  };
}

std::string to_text(const InvariantReport& r) {
  const auto& inv = r.invariants;
  std::ostringstream os;
  os << "a        " << r.a.str() << "\n";
  os << "ell      " << inv.ell << "\n";
  os << "alpha    " << int_list_text(inv.alpha_i) << "\n";
  os << "ghat     " << int_list_text(inv.ghat_i) << "\n";
  os << "lambda   " << int_list_text(inv.lambda) << "\n";
  os << "eta      " << int_list_text(inv.eta) << "\n";
  os << "delta    " << inv.delta << "\n";
  os << "g        " << r.center_genus << "\n";
  os << "c0       " << r.c0 << "\n";
  os << "pf       " << r.pf << "\n";
  os << "pg       " << r.pg << "\n";
  os << "nr       " << r.nr << "\n";
  os << "elliptic " << (r.elliptic ? "yes" : "no") << "\n";
  os << "flags    ";
  for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? "," : "") << r.flags[i];
  os << "\n";
  return os.str();
}

Json quotient_table_json(const ExponentTuple& a, const oracle::QuotientTable& t) {
  return {{"a", tuple_json(a)}, {"nr", t.n_stop}, {"p", int_list_json(t.p)}};
}

Json cone_report_json(std::int64_t d) {
  const auto c = cone::plane_curve_cone(d);
  return {
      {"bound", int_json(cone::brr_upper_bound(c))},
      {"d", d},
      {"g", int_json(c.genus)},
      {"gon", int_json(c.gonality)},
      {"nr", int_json(cone::homogeneous_nr(d))},
      {"q", int_list_json(cone::homogeneous_q_sequence(d, d))},
  };
}

Json monomials_json(const std::vector<oracle::Monomial>& ms) {
  auto sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& u : sorted) out.push_back(u);
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace singlat::report
