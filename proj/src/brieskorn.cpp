#include "singlat/brieskorn.hpp"

#include "singlat/ideal_oracle.hpp"

#include <algorithm>
#include <limits>

namespace singlat::brieskorn {

namespace {

using lattice::Cycle;
using lattice::QCycle;

// Flattened graphs beyond this are refused rather than exhausting memory.
constexpr std::size_t kMaxVertices = 4'000'000;
// Largest Hilbert series truncation degree geometric_genus will expand.
constexpr std::size_t kMaxSeriesDegree = 50'000'000;

Int exact_div(const Int& num, const Int& den, const char* what) {
  if (num % den != 0) throw InternalError(std::string(what) + ": " + num.get_str() + " not divisible by " + den.get_str());
  return num / den;
}

// beta in [1, alpha) with lambda * beta = -1 (mod alpha); 0 when alpha = 1.
Int seifert_beta(const Int& lambda, const Int& alpha) {
  if (alpha == 1) return 0;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), lambda.get_mpz_t(), alpha.get_mpz_t()) == 0)
    throw InternalError("gcd(lambda_w, alpha_w) != 1");
  return alpha - inv;
}

std::vector<Int> family_chain(const Int& alpha, const Int& beta) {
  if (alpha == 1) return {};
  return negative_continued_fraction(alpha, beta);
}

std::size_t checked_size(const Int& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw DomainError(std::string(what) + " is too large: " + x.get_str());
  return x.get_ui();
}

}  // namespace

std::vector<Int> negative_continued_fraction(const Int& p, const Int& q) {
  if (q < 0 || p <= q || gcd(p, q) != 1) {
    if (!(q == 0 && p == 1)) throw DomainError("continued fraction: need 0 <= q < p coprime");
  }
  std::vector<Int> out;
  Int num = p;
  Int den = q;
  while (den != 0) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(c);
    Int next = c * den - num;
    num = den;
    den = next;
  }
  return out;
}

std::vector<Rational> solve_chain(const std::vector<Int>& chain, const Rational& left, const Rational& right) {
  const std::size_t s = chain.size();
  if (s == 0) return {};
  // x_k = base[k] + slope[k] * x_1, shooting from the center side.
  std::vector<Rational> base(s + 2), slope(s + 2);
  base[0] = left;
  slope[0] = 0;
  base[1] = 0;
  slope[1] = 1;
  for (std::size_t nu = 1; nu <= s; ++nu) {
    base[nu + 1] = base[nu] * chain[nu - 1] - base[nu - 1];
    slope[nu + 1] = slope[nu] * chain[nu - 1] - slope[nu - 1];
  }
  if (slope[s + 1] == 0) throw ConstructionError("chain system is singular");
  const Rational x1 = (right - base[s + 1]) / slope[s + 1];
  std::vector<Rational> x(s);
  for (std::size_t k = 1; k <= s; ++k) x[k - 1] = base[k] + slope[k] * x1;
  return x;
}

BCIInvariants numeric_invariants(const ExponentTuple& a) {
  const std::size_t m = a.m();
  std::vector<Int> ai;
  for (auto v : a.values()) ai.emplace_back(static_cast<long>(v));

  BCIInvariants inv;
  inv.ell = 1;
  for (const auto& x : ai) inv.ell = lcm(inv.ell, x);

  Int prod_a = 1;
  for (const auto& x : ai) prod_a *= x;
  inv.ghat = exact_div(prod_a, inv.ell, "ghat");

  inv.alpha = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) l = lcm(l, ai[j]);
    inv.ell_i.push_back(l);
    inv.alpha_i.push_back(exact_div(inv.ell, l, "alpha_i"));
    inv.alpha *= inv.alpha_i.back();
    inv.ghat_i.push_back(exact_div(inv.ghat * inv.alpha_i.back(), ai[i], "ghat_i"));
    inv.lambda.push_back(exact_div(inv.ell, ai[i], "lambda_i"));
  }
  if (inv.ell % inv.alpha != 0) throw InternalError("alpha does not divide ell");
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 1 < m && inv.lambda[i] < inv.lambda[i + 1]) throw InternalError("lambda not non-increasing");
    if (gcd(inv.lambda[i], inv.alpha_i[i]) != 1) throw InternalError("gcd(lambda_w, alpha_w) != 1");
  }

  const Int& alpha_m = inv.alpha_i[m - 1];
  for (std::size_t i = 0; i + 1 < m; ++i) inv.eta.push_back(exact_div(inv.lambda[i], alpha_m, "eta_i"));

  // eta_m is the tip coefficient of Z^{(m)} on family m, or lambda_m if that family is empty.
  const auto chain_m = family_chain(alpha_m, seifert_beta(inv.lambda[m - 1], alpha_m));
  if (chain_m.empty()) {
    inv.eta.push_back(inv.lambda[m - 1]);
  } else {
    const auto x = solve_chain(chain_m, inv.lambda[m - 1], 1);
    auto tip = as_integer(x.back());
    if (!tip) throw InternalError("eta_m is not integral");
    inv.eta.push_back(*tip);
  }
  inv.delta = inv.eta[m - 2] - inv.eta[m - 1];
  if (inv.delta < 0) throw InternalError("delta < 0");

  inv.a_invariant = Int(static_cast<long>(m - 2)) * inv.ell;
  for (const auto& l : inv.lambda) inv.a_invariant -= l;
  inv.multiplicity = 1;
  for (std::size_t i = 0; i + 2 < m; ++i) inv.multiplicity *= ai[i];
  return inv;
}

struct StarGraph::Parts {
  ExponentTuple exponents;
  BCIInvariants invariants;
  Int center_genus;
  Int c0;
  std::vector<BranchFamily> families;
  std::vector<std::size_t> family_base;
  lattice::DualGraph graph;
  bool non_minimal;
};

StarGraph::Parts StarGraph::build(const ExponentTuple& a) {
  const std::size_t m = a.m();
  BCIInvariants inv = numeric_invariants(a);

  Int genus_num = Int(static_cast<long>(m - 2)) * inv.ghat;
  for (const auto& g : inv.ghat_i) genus_num -= g;
  if (genus_num % 2 != 0) throw ConstructionError("center genus is not integral for " + a.str());
  Int genus = 1 + genus_num / 2;
  if (genus < 0) throw ConstructionError("negative center genus for " + a.str());

  std::vector<BranchFamily> families;
  Rational c0 = ratio(inv.ghat, inv.ell);
  for (std::size_t w = 1; w <= m; ++w) {
    BranchFamily f;
    f.w = w;
    f.count = inv.ghat_of(w);
    f.alpha = inv.alpha_of(w);
    f.beta = seifert_beta(inv.lambda_of(w), f.alpha);
    f.chain = family_chain(f.alpha, f.beta);
    if (!f.chain.empty()) c0 += ratio(f.count * f.beta, f.alpha);
    families.push_back(std::move(f));
  }
  auto c0_int = as_integer(c0);
  if (!c0_int) throw ConstructionError("c_0 = " + to_string(c0) + " is not integral for " + a.str());
  if (*c0_int < 1) throw ConstructionError("c_0 < 1 for " + a.str());

  Int total = 1;
  for (const auto& f : families) total += f.count * static_cast<unsigned long>(f.chain.size());
  const std::size_t n = checked_size(total, "vertex count");
  if (n > kMaxVertices) throw DomainError("star graph for " + a.str() + " has " + total.get_str() + " vertices");

  std::vector<lattice::Vertex> vertices;
  std::vector<lattice::Edge> edges;
  vertices.reserve(n);
  edges.reserve(n - 1);
  vertices.push_back({genus, -*c0_int});
  std::vector<std::size_t> base;
  std::size_t chains_at_center = 0;
  for (const auto& f : families) {
    base.push_back(vertices.size());
    if (f.chain.empty()) continue;
    const std::size_t copies = checked_size(f.count, "chain count");
    chains_at_center += copies;
    for (std::size_t xi = 0; xi < copies; ++xi) {
      std::size_t prev = StarGraph::center;
      for (const auto& c : f.chain) {
        vertices.push_back({0, -c});
        edges.push_back({prev, vertices.size() - 1});
        prev = vertices.size() - 1;
      }
    }
  }
  const bool non_minimal = genus == 0 && *c0_int == 1 && chains_at_center <= 2;
  lattice::DualGraph graph(std::move(vertices), std::move(edges));
  return {a, std::move(inv), std::move(genus), *c0_int, std::move(families), std::move(base), std::move(graph),
          non_minimal};
}

StarGraph::StarGraph(Parts&& p)
    : exponents_(std::move(p.exponents)),
      invariants_(std::move(p.invariants)),
      center_genus_(std::move(p.center_genus)),
      c0_(std::move(p.c0)),
      families_(std::move(p.families)),
      family_base_(std::move(p.family_base)),
      graph_(std::move(p.graph)),
      non_minimal_(p.non_minimal) {}

StarGraph::StarGraph(const ExponentTuple& a) : StarGraph(build(a)) {
  if (!lattice::is_negative_definite(graph_))
    throw ConstructionError("star graph for " + a.str() + " is not negative definite");
  // Every Z^{(i)} must come out integral on this model.
  for (std::size_t i = 1; i <= exponents_.m(); ++i) {
    for (const auto& f : families_) {
      for (const auto& x : solve_chain(f.chain, invariants_.lambda_of(i), f.w == i ? 1 : 0))
        if (x.get_den() != 1) throw ConstructionError("Z^(" + std::to_string(i) + ") is not integral on " + a.str());
    }
  }
}

std::size_t StarGraph::vertex(std::size_t w, std::size_t nu, std::size_t xi) const {
  const auto& f = family(w);
  const std::size_t s = f.chain.size();
  if (nu < 1 || nu > s || xi < 1 || Int(static_cast<unsigned long>(xi)) > f.count)
    throw DomainError("no vertex E_{" + std::to_string(w) + "," + std::to_string(nu) + "," + std::to_string(xi) + "}");
  return family_base_[w - 1] + (xi - 1) * s + (nu - 1);
}

std::vector<std::size_t> StarGraph::tips(std::size_t w) const {
  const auto& f = family(w);
  std::vector<std::size_t> out;
  if (f.chain.empty()) return out;
  const std::size_t copies = f.count.get_ui();
  for (std::size_t xi = 1; xi <= copies; ++xi) out.push_back(vertex(w, f.chain.size(), xi));
  return out;
}

std::string StarGraph::vertex_name(std::size_t v) const {
  if (v == center) return "E0";
  for (std::size_t w = families_.size(); w >= 1; --w) {
    const auto& f = families_[w - 1];
    if (f.chain.empty() || v < family_base_[w - 1]) continue;
    const std::size_t off = v - family_base_[w - 1];
    const std::size_t s = f.chain.size();
    return "E_{" + std::to_string(w) + "," + std::to_string(off % s + 1) + "," + std::to_string(off / s + 1) + "}";
  }
  throw DomainError("vertex index out of range");
}

QCycle StarGraph::assemble(const Rational& center_coefficient, const std::vector<std::vector<Rational>>& chains) const {
  if (chains.size() != families_.size()) throw DimensionError("assemble: one chain per family required");
  QCycle z{std::vector<Rational>(size())};
  z[center] = center_coefficient;
  for (const auto& f : families_) {
    const auto& values = chains[f.w - 1];
    if (values.size() != f.chain.size()) throw DimensionError("assemble: chain length mismatch");
    if (values.empty()) continue;
    const std::size_t copies = f.count.get_ui();
    std::size_t v = family_base_[f.w - 1];
    for (std::size_t xi = 0; xi < copies; ++xi)
      for (const auto& x : values) z[v++] = x;
  }
  return z;
}

StarGraph dual_graph(const ExponentTuple& a) { return StarGraph(a); }

namespace {

QCycle star_cycle(const StarGraph& g, const Int& center, std::size_t boundary_family) {
  std::vector<std::vector<Rational>> chains;
  for (const auto& f : g.families()) chains.push_back(solve_chain(f.chain, center, f.w == boundary_family ? 1 : 0));
  return g.assemble(center, chains);
}

}  // namespace

Cycle divisor_cycle(const StarGraph& g, std::size_t i) {
  const std::size_t m = g.exponents().m();
  if (i < 1 || i > m) throw DomainError("divisor_cycle: index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  const auto& inv = g.invariants();
  const Cycle z = star_cycle(g, inv.lambda_of(i), i).to_cycle();

  if (!z.is_effective()) throw ConstructionError("Z^(" + std::to_string(i) + ") is not effective");
  std::vector<Int> expected(g.size(), 0);
  const auto tips = g.tips(i);
  if (tips.empty())
    expected[StarGraph::center] = -inv.ghat_of(i);
  else
    for (auto t : tips) expected[t] = -1;
  if (lattice::intersections_with_vertices(g.graph(), z) != expected)
    throw ConstructionError("Z^(" + std::to_string(i) + ") has the wrong intersection pattern on " + g.exponents().str());
  return z;
}

Cycle divisor_cycle(const ExponentTuple& a, std::size_t i) { return divisor_cycle(dual_graph(a), i); }

Cycle maximal_ideal_cycle(const StarGraph& g) { return divisor_cycle(g, g.exponents().m()); }
Cycle maximal_ideal_cycle(const ExponentTuple& a) { return maximal_ideal_cycle(dual_graph(a)); }

Cycle central_multiple_cycle(const StarGraph& g) {
  const Cycle z = star_cycle(g, g.invariants().alpha, 0).to_cycle();
  const auto d = lattice::intersections_with_vertices(g.graph(), z);
  if (d[StarGraph::center] > 0) throw ConstructionError("Z_0 is not anti-nef");
  for (std::size_t j = 1; j < d.size(); ++j)
    if (d[j] != 0) throw ConstructionError("Z_0 . E_j != 0 off the center");
  return z;
}

Cycle central_multiple_cycle(const ExponentTuple& a) { return central_multiple_cycle(dual_graph(a)); }

namespace {

// On a non-minimal star, Z_K of the star agrees with Z_K of the minimal good
// model on every surviving curve; effectiveness is checked there.
bool effective_after_contraction(const StarGraph& g, const Cycle& z) {
  if (!g.non_minimal_model()) return false;
  const auto c = lattice::contract_to_minimal_good(g.graph());
  const QCycle zk = lattice::canonical_qcycle(c.graph);
  for (std::size_t i = 0; i < c.kept.size(); ++i)
    if (zk[i] != z[c.kept[i]] || zk[i] < 0) return false;
  return true;
}

}  // namespace

QCycle canonical_cycle_formula(const StarGraph& g) {
  const auto& inv = g.invariants();
  const std::size_t m = g.exponents().m();
  const Int scale = exact_div(Int(static_cast<long>(m - 2)) * inv.ell, inv.alpha, "(m-2) ell / alpha");

  Cycle z = Cycle::reduced(g.size()) + scale * central_multiple_cycle(g);
  for (std::size_t w = 1; w <= m; ++w) z -= divisor_cycle(g, w);

  const QCycle adjunction = lattice::canonical_qcycle(g.graph());
  if (QCycle(z) != adjunction)
    throw InternalError("canonical cycle formula disagrees with the adjunction solve on " + g.exponents().str());
  if (!z.is_effective() && !effective_after_contraction(g, z))
    throw InternalError("canonical cycle is not effective on the minimal good model of " + g.exponents().str());
  return QCycle(z);
}

QCycle canonical_cycle_formula(const ExponentTuple& a) { return canonical_cycle_formula(dual_graph(a)); }

FundamentalGenus fundamental_genus(const ExponentTuple& a, const BCIInvariants& inv) {
  const std::size_t m = a.m();
  const Int m2(static_cast<long>(m - 2));
  const Int& lambda_m = inv.lambda_of(m);
  const Int& alpha = inv.alpha;

  FundamentalGenus out;
  out.kind = lambda_m > alpha   ? FundamentalCycleKind::central_multiple
             : lambda_m < alpha ? FundamentalCycleKind::maximal_ideal
                                : FundamentalCycleKind::both;
  Rational value;
  if (lambda_m >= alpha) {
    Rational bracket = m2 * inv.ghat - ratio((alpha - 1) * inv.ghat, inv.ell);
    for (std::size_t w = 1; w <= m; ++w) bracket -= ratio(inv.ghat_of(w), inv.alpha_of(w));
    value = Rational(alpha) * bracket / 2 + 1;
  } else {
    const Int ceil_ratio = ceil(ratio(lambda_m, inv.alpha_of(m)));
    Rational bracket = m2 * inv.ghat - ratio((2 * ceil_ratio - 1) * inv.ghat_of(m), lambda_m);
    for (std::size_t w = 1; w < m; ++w) bracket -= ratio(inv.ghat_of(w), inv.alpha_of(w));
    value = Rational(lambda_m) * bracket / 2 + 1;
  }
  auto v = as_integer(value);
  if (!v) throw InternalError("closed-form p_f = " + to_string(value) + " is not integral for " + a.str());
  out.value = *v;
  return out;
}

FundamentalGenus fundamental_genus(const ExponentTuple& a) { return fundamental_genus(a, numeric_invariants(a)); }

FundamentalGenus fundamental_genus_checked(const StarGraph& g) {
  const auto closed = fundamental_genus(g.exponents(), g.invariants());
  const Cycle zf = lattice::fundamental_cycle(g.graph());
  const Int laufer = lattice::arithmetic_genus(g.graph(), zf);
  if (laufer != closed.value)
    throw ConsistencyError("p_f on " + g.exponents().str() + ": closed form " + closed.value.get_str() +
                           ", Laufer cycle " + laufer.get_str());
  if (closed.kind != FundamentalCycleKind::maximal_ideal && zf != central_multiple_cycle(g))
    throw ConsistencyError("Z_f != Z_0 on " + g.exponents().str());
  if (closed.kind != FundamentalCycleKind::central_multiple && zf != maximal_ideal_cycle(g))
    throw ConsistencyError("Z_f != M_X on " + g.exponents().str());
  return closed;
}

Int normal_reduction_number(const ExponentTuple& a) {
  const std::size_t m = a.m();
  Rational sum = 0;
  for (std::size_t i = 1; i + 2 <= m; ++i) sum += ratio(Int(static_cast<long>(a.a(i) - 1)), Int(static_cast<long>(a.a(i))));
  return floor(Rational(a.a(m - 1)) * sum);
}

std::vector<Int> hilbert_series(const BCIInvariants& inv, std::size_t m, std::size_t degree) {
  if (degree > kMaxSeriesDegree) throw DomainError("Hilbert series degree " + std::to_string(degree) + " too large");
  std::vector<Int> s(degree + 1, 0);
  s[0] = 1;
  for (const auto& l : inv.lambda) {
    if (l > static_cast<unsigned long>(degree)) continue;
    const std::size_t step = l.get_ui();
    for (std::size_t k = step; k <= degree; ++k) s[k] += s[k - step];
  }
  if (inv.ell <= static_cast<unsigned long>(degree)) {
    const std::size_t step = inv.ell.get_ui();
    for (std::size_t j = 0; j + 2 < m; ++j) {
      for (std::size_t k = degree; k >= step; --k) s[k] -= s[k - step];
      for (const auto& c : s)
        if (c < 0) throw InternalError("Hilbert series has a negative coefficient");
    }
  }
  return s;
}

Int geometric_genus(const ExponentTuple& a, const BCIInvariants& inv) {
  if (inv.a_invariant < 0) return 0;
  const auto series = hilbert_series(inv, a.m(), checked_size(inv.a_invariant, "a-invariant"));
  Int total = 0;
  for (const auto& c : series) total += c;
  return total;
}

Int geometric_genus(const ExponentTuple& a) { return geometric_genus(a, numeric_invariants(a)); }

MaximalCycleNumbers maximal_cycle_numbers(const StarGraph& g) {
  const auto& inv = g.invariants();
  const Int pa = lattice::arithmetic_genus(g.graph(), maximal_ideal_cycle(g));
  MaximalCycleNumbers out;
  out.my_sq = -inv.multiplicity;
  out.my_k = 2 * pa - 2 - 2 * inv.delta * inv.ghat_of(g.exponents().m()) - out.my_sq;
  return out;
}

MaximalCycleNumbers maximal_cycle_numbers(const ExponentTuple& a) { return maximal_cycle_numbers(dual_graph(a)); }

QSequence q_sequence(const StarGraph& g, std::size_t n_max) {
  const auto& a = g.exponents();
  const Int pg = geometric_genus(a, g.invariants());
  const auto mcn = maximal_cycle_numbers(g);
  const Int diff = mcn.my_sq - mcn.my_k;
  if (diff % 2 != 0) throw InternalError("M_Y^2 - M_Y K_Y is odd");
  const Int half = diff / 2;

  const auto table = oracle::quotient_table(a);
  QSequence out;
  out.p.resize(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max && n < table.p.size(); ++n) out.p[n] = table.p[n];

  // q(n) - q(n-1) = half + sum_{i=1}^n p(i), p(i) = out.p[i-1]
  out.q.push_back(pg);
  Int slope = half;
  for (std::size_t n = 1; n <= n_max; ++n) {
    slope += out.p[n - 1];
    out.q.push_back(out.q.back() + slope);
  }

  const Int nr = normal_reduction_number(a);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (out.q[n] < 0) throw ConsistencyError("q(" + std::to_string(n) + ") < 0 on " + a.str());
    if (n > 0 && out.q[n] > out.q[n - 1]) throw ConsistencyError("q increases at n = " + std::to_string(n) + " on " + a.str());
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (out.q[n - 1] == out.q[n]) {
      if (nr != static_cast<unsigned long>(n))
        throw ConsistencyError("q stabilizes at n = " + std::to_string(n) + " but nr = " + nr.get_str() + " on " + a.str());
      break;
    }
    if (nr == static_cast<unsigned long>(n))
      throw ConsistencyError("q does not stabilize at nr = " + nr.get_str() + " on " + a.str());
  }
  return out;
}

QSequence q_sequence(const ExponentTuple& a, std::size_t n_max) { return q_sequence(dual_graph(a), n_max); }

bool is_elliptic(const ExponentTuple& a) { return fundamental_genus(a).value == 1; }

bool in_elliptic_families(const ExponentTuple& a) {
  const auto& v = a.values();
  if (v.size() == 3) {
    const auto x = v[0], y = v[1], z = v[2];
    if (x == 2 && y == 3) return z >= 6;
    if (x == 2 && y == 4) return z >= 4;
    if (x == 2 && y == 5) return z >= 5 && z <= 9;
    if (x == 3 && y == 3) return z >= 3;
    if (x == 3 && y == 4) return z >= 4 && z <= 5;
    return false;
  }
  if (v.size() == 4) return v[0] == 2 && v[1] == 2 && v[2] == 2 && v[3] >= 2;
  return false;
}

std::vector<ExponentTuple> br2_exceptions() { return {ExponentTuple({3, 4, 6}), ExponentTuple({3, 4, 7})}; }

bool is_br2_exception(const ExponentTuple& a) {
  const auto ex = br2_exceptions();
  return std::find(ex.begin(), ex.end(), a) != ex.end();
}

std::string br2_explanation() {
  return "br(V,p) = 2 holds exactly when p_f = 1, except for (3,4,6) and (3,4,7), "
         "where br(V,p) = 2 although p_f = 2 (both have p_g = 3 and nr(m) = br(m) = 2).";
}

}  // namespace singlat::brieskorn
