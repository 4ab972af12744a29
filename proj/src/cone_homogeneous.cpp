#include "singlat/cone_homogeneous.hpp"

#include <algorithm>

namespace singlat::cone {

namespace {

void require_degree(std::int64_t d) {
  if (d < 3) throw DomainError("homogeneous hypersurface degree must be >= 3, got " + std::to_string(d));
}

}  // namespace

Int gonality_upper(const Int& genus) {
  if (genus < 0) throw DomainError("genus must be >= 0");
  return floor(ratio(genus + 3, 2));
}

ConeData make_cone(Int genus, Int degree, Int gonality) {
  if (genus < 0) throw DomainError("cone: genus must be >= 0");
  if (degree < 1) throw DomainError("cone: degree must be >= 1");
  if (gonality < 1) throw DomainError("cone: gonality must be >= 1");
  if (gonality > gonality_upper(genus))
    throw DomainError("cone: gonality " + gonality.get_str() + " exceeds floor((g+3)/2) for g = " + genus.get_str());
  return {std::move(genus), std::move(degree), std::move(gonality)};
}

ConeData plane_curve_cone(std::int64_t d) {
  require_degree(d);
  const Int dd(static_cast<long>(d));
  return make_cone((dd - 1) * (dd - 2) / 2, dd, gonality_plane(d));
}

Int round_up_strict(const Rational& x) { return floor(x) + 1; }

Int brr_upper_bound(const ConeData& c) {
  if (c.genus < 1) throw DomainError("gonality bound needs g >= 1");
  const Int denom = std::min(c.degree, c.gonality);
  return round_up_strict(ratio(2 * c.genus - 2, denom)) + 1;
}

Int homogeneous_q(std::int64_t d, std::int64_t n) {
  require_degree(d);
  if (n < 0) throw DomainError("homogeneous_q: n must be >= 0");
  return binomial(Int(static_cast<long>(d - n)), 3);
}

std::vector<Int> homogeneous_q_sequence(std::int64_t d, std::int64_t n_max) {
  std::vector<Int> q;
  for (std::int64_t n = 0; n <= n_max; ++n) q.push_back(homogeneous_q(d, n));
  return q;
}

Int homogeneous_nr(std::int64_t d) {
  require_degree(d);
  return Int(static_cast<long>(d - 1));
}

Int a_invariant_relation(std::int64_t d) {
  require_degree(d);
  const Int a_of_r(static_cast<long>(d - 3));
  return a_of_r + 2;
}

Int gonality_plane(std::int64_t d) {
  require_degree(d);
  return Int(static_cast<long>(d - 1));
}

}  // namespace singlat::cone
