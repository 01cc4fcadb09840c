#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hecke {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational frac(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Vec& v);
Rational parse_rational(const std::string& s);
Vec parse_vec(const std::string& s, char sep = ',');

bool is_integer(const Rational& r);
bool is_half_integral(const Rational& r);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
long to_long(const Rational& r);

Rational dot(const Vec& a, const Vec& b);
Rational sum(const Vec& v);

}  // namespace hecke
