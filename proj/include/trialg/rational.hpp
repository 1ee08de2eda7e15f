#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace trialg {

// Exact scalar for every computation in the library. mpq_class keeps values
// canonical (positive denominator, reduced) after each arithmetic operation.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parse "p" or "p/q"; throws std::invalid_argument on malformed text or a
// zero denominator.
Rational parse_rational(const std::string &text);

std::string to_string(const Rational &r);

bool is_zero(const Vector &v);

Vector zero_vector(std::size_t n);

// Residue of r modulo prime p; returns false when p divides the denominator.
bool reduce_mod(const Rational &r, std::uint64_t p, std::uint64_t &out);

} // namespace trialg
