#include "singlat/arith.hpp"

namespace singlat {

Rational ratio(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int floor(const Rational& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Int ceil(const Rational& x) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Int binomial(const Int& n, long k) {
  if (k < 0 || n < k) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

std::optional<Int> as_integer(const Rational& x) {
  if (x.get_den() != 1) return std::nullopt;
  return Int(x.get_num());
}

std::int64_t to_int64(const Int& x, const char* what) {
  if (!x.fits_slong_p()) throw DomainError(std::string(what) + " does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace singlat
