#pragma once

// Cone-like singularities (minimal resolution with a single smooth exceptional
// curve F) and homogeneous hypersurface singularities of degree d in C^3.

#include "singlat/arith.hpp"

#include <cstdint>
#include <vector>

namespace singlat::cone {

struct ConeData {
  Int genus;     // g(F)
  Int degree;    // d = -F^2
  Int gonality;  // gon(F)
};

// Validates gon >= 1, d >= 1, g >= 0 and gon <= floor((g+3)/2).
ConeData make_cone(Int genus, Int degree, Int gonality);

// Cone over a smooth plane curve of degree d: g = (d-1)(d-2)/2, gon = d-1.
ConeData plane_curve_cone(std::int64_t d);

// min{n in Z : n > x}
Int round_up_strict(const Rational& x);

// [[(2g-2)/min(d, gon)]] + 1. Throws DomainError if g = 0.
Int brr_upper_bound(const ConeData& c);

// C(d - n, 3), zero when d - n < 3.
Int homogeneous_q(std::int64_t d, std::int64_t n);
std::vector<Int> homogeneous_q_sequence(std::int64_t d, std::int64_t n_max);

// d - 1
Int homogeneous_nr(std::int64_t d);
// a(R) + 2 with a(R) = d - 3.
Int a_invariant_relation(std::int64_t d);

Int gonality_plane(std::int64_t d);
Int gonality_upper(const Int& genus);

}  // namespace singlat::cone
