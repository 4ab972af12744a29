#pragma once

// Brieskorn complete intersection singularities: numeric invariants, the
// star-shaped dual graph of the minimal good resolution, the distinguished
// cycles on it, and the closed formulas for p_f, p_g, the normal reduction
// number of the maximal ideal and the q(n) sequence.
//
// Branch families are indexed by w = 1..m (1-based, like the exponents).

#include "singlat/arith.hpp"
#include "singlat/exponent_tuple.hpp"
#include "singlat/graph_lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace singlat::brieskorn {

struct BCIInvariants {
  Int ell;                    // lcm(a_1..a_m)
  std::vector<Int> ell_i;     // lcm with a_i omitted
  std::vector<Int> alpha_i;   // ell / ell_i
  Int alpha;                  // prod alpha_i
  Int ghat;                   // prod a_i / ell
  std::vector<Int> ghat_i;    // ghat * alpha_i / a_i
  std::vector<Int> lambda;    // ell / a_i, non-increasing
  std::vector<Int> eta;       // eta_1..eta_m; eta_i = lambda_i / alpha_m for i < m
  Int delta;                  // eta_{m-1} - eta_m
  Int a_invariant;            // (m-2) ell - sum lambda_i
  Int multiplicity;           // prod_{i <= m-2} a_i

  // Accessors with 1-based family index.
  const Int& alpha_of(std::size_t w) const { return alpha_i.at(w - 1); }
  const Int& ghat_of(std::size_t w) const { return ghat_i.at(w - 1); }
  const Int& lambda_of(std::size_t w) const { return lambda.at(w - 1); }
};

BCIInvariants numeric_invariants(const ExponentTuple& a);

struct BranchFamily {
  std::size_t w = 0;
  Int count;                // number of identical chains, ghat_w
  Int alpha;                // alpha_w
  Int beta;                 // lambda_w * beta = -1 mod alpha_w, 0 when alpha_w = 1
  std::vector<Int> chain;   // c_{w,1..s_w}, c_{w,1} adjacent to the center
};

// Negative continued fraction p/q = c_1 - 1/(c_2 - ...), all c_i >= 2.
// Requires 0 < q < p (or q == 0, giving the empty expansion) and gcd(p, q) = 1.
std::vector<Int> negative_continued_fraction(const Int& p, const Int& q);

// Solves x_{nu-1} = c_nu x_nu - x_{nu+1} along a chain with x_0 = left and
// x_{s+1} = right. Returns x_1..x_s.
std::vector<Rational> solve_chain(const std::vector<Int>& chain, const Rational& left, const Rational& right);

class StarGraph {
 public:
  static constexpr std::size_t center = 0;

  explicit StarGraph(const ExponentTuple& a);

  const ExponentTuple& exponents() const { return exponents_; }
  const BCIInvariants& invariants() const { return invariants_; }
  const Int& center_genus() const { return center_genus_; }
  // c_0 = -E_0^2
  const Int& c0() const { return c0_; }
  const std::vector<BranchFamily>& families() const { return families_; }
  const BranchFamily& family(std::size_t w) const { return families_.at(w - 1); }
  const lattice::DualGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }

  // Vertex index of E_{w,nu,xi} (all 1-based).
  std::size_t vertex(std::size_t w, std::size_t nu, std::size_t xi) const;
  // Tip vertices E_{w,s_w,xi}; empty when the family has no chain.
  std::vector<std::size_t> tips(std::size_t w) const;
  // Display name "E0" or "E_{w,nu,xi}" for vertex v.
  std::string vertex_name(std::size_t v) const;

  // Center is a rational (-1)-curve meeting at most two chains, so the star
  // is not the minimal good resolution.
  bool non_minimal_model() const { return non_minimal_; }

  // Cycle with the given center coefficient and, on every copy of family w,
  // the chain coefficients chains[w-1].
  lattice::QCycle assemble(const Rational& center_coefficient,
                           const std::vector<std::vector<Rational>>& chains) const;

 private:
  struct Parts;
  static Parts build(const ExponentTuple& a);
  explicit StarGraph(Parts&& parts);

  ExponentTuple exponents_;
  BCIInvariants invariants_;
  Int center_genus_;
  Int c0_;
  std::vector<BranchFamily> families_;
  std::vector<std::size_t> family_base_;
  lattice::DualGraph graph_;
  bool non_minimal_ = false;
};

// Throws ConstructionError if the star data is not integral or the graph is
// not negative definite.
StarGraph dual_graph(const ExponentTuple& a);

// Z^{(i)} = (x_i)_E, 1 <= i <= m.
lattice::Cycle divisor_cycle(const StarGraph& g, std::size_t i);
lattice::Cycle divisor_cycle(const ExponentTuple& a, std::size_t i);

// M_X = Z^{(m)}.
lattice::Cycle maximal_ideal_cycle(const StarGraph& g);
lattice::Cycle maximal_ideal_cycle(const ExponentTuple& a);

// Z_0: center coefficient alpha, Z_0 . E_j = 0 off the center.
lattice::Cycle central_multiple_cycle(const StarGraph& g);
lattice::Cycle central_multiple_cycle(const ExponentTuple& a);

// Z_K = E + ((m-2) ell / alpha) Z_0 - sum_w Z^{(w)}, cross-checked against the
// adjunction solve. Throws InternalError on mismatch or if Z_K is not effective
// on the minimal good model (the star itself unless non_minimal_model()).
lattice::QCycle canonical_cycle_formula(const StarGraph& g);
lattice::QCycle canonical_cycle_formula(const ExponentTuple& a);

enum class FundamentalCycleKind {
  central_multiple,   // lambda_m > alpha: Z_f = Z_0
  maximal_ideal,      // lambda_m < alpha: Z_f = M_X
  both,               // lambda_m = alpha: Z_0 = M_X = Z_f
};

struct FundamentalGenus {
  Int value;
  FundamentalCycleKind kind;
};

// p_f from the closed formulas (no graph is built).
FundamentalGenus fundamental_genus(const ExponentTuple& a);
FundamentalGenus fundamental_genus(const ExponentTuple& a, const BCIInvariants& inv);

// Closed form cross-checked against p_a of the Laufer fundamental cycle and
// against the selected cycle(s). Throws ConsistencyError on disagreement.
FundamentalGenus fundamental_genus_checked(const StarGraph& g);

// floor(a_{m-1} * sum_{i <= m-2} (a_i - 1)/a_i)
Int normal_reduction_number(const ExponentTuple& a);

// sum_{n <= a-invariant} dim R_n for the weighted homogeneous coordinate ring.
Int geometric_genus(const ExponentTuple& a);
Int geometric_genus(const ExponentTuple& a, const BCIInvariants& inv);

// Coefficients of (1 - t^ell)^{m-2} / prod_i (1 - t^{lambda_i}) up to t^degree.
std::vector<Int> hilbert_series(const BCIInvariants& inv, std::size_t m, std::size_t degree);

struct MaximalCycleNumbers {
  Int my_sq;  // M_Y^2 on the blow-up where m O_Y is invertible
  Int my_k;   // M_Y . K_Y
};

MaximalCycleNumbers maximal_cycle_numbers(const StarGraph& g);
MaximalCycleNumbers maximal_cycle_numbers(const ExponentTuple& a);

struct QSequence {
  std::vector<Int> q;  // q(0..N)
  std::vector<Int> p;  // p[n] = dim closure(m^{n+1}) / Q closure(m^n), n = 0..N
};

// q(n) = p_g + (n/2)(M_Y^2 - M_Y K_Y) + sum_{i=1}^n (n+1-i) p(i) with
// p(i) = p[i-1]. Throws ConsistencyError if the result is negative,
// increasing, or stabilizes anywhere but at the normal reduction number.
QSequence q_sequence(const ExponentTuple& a, std::size_t n_max);
QSequence q_sequence(const StarGraph& g, std::size_t n_max);

bool is_elliptic(const ExponentTuple& a);

// Membership in the closed list of elliptic Brieskorn complete intersections:
//   (2,3,a) a>=6; (2,4,a) a>=4; (2,5,a) 5<=a<=9; (3,3,a) a>=3;
//   (3,4,a) 4<=a<=5; (2,2,2,a) a>=2.
bool in_elliptic_families(const ExponentTuple& a);

// Tuples whose br(V,p) = 2 does not coincide with p_f = 1.
std::vector<ExponentTuple> br2_exceptions();
bool is_br2_exception(const ExponentTuple& a);
std::string br2_explanation();

}  // namespace singlat::brieskorn
