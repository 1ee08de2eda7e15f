#include "trialg/rational.hpp"

#include <stdexcept>

namespace trialg {

Rational parse_rational(const std::string &text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &r) { return r.get_str(10); }

bool is_zero(const Vector &v) {
  for (const auto &x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool reduce_mod(const Rational &r, std::uint64_t p, std::uint64_t &out) {
  mpz_class modulus(static_cast<unsigned long>(p));
  mpz_class num = r.get_num() % modulus;
  if (num < 0) num += modulus;
  mpz_class den = r.get_den() % modulus;
  if (den == 0) return false;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  mpz_class res = (num * inv) % modulus;
  out = res.get_ui();
  return true;
}

} // namespace trialg
