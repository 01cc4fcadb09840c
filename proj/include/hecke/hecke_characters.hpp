#pragma once

#include "hecke/root_datum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Integer Laurent polynomial in q^{1/2}; keys are exponents of q^{1/2}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}
  LaurentPoly(const Integer& c);
  static LaurentPoly q_power(const Rational& exponent, const Integer& coef = 1);

  const std::map<long, Integer>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  Integer constant_term() const;
  Integer coefficient(const Rational& q_exponent) const;
  // Value at q = x^2.
  Integer eval_sqrt(const Integer& x) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return t_ != o.t_; }

  // e.g. "q-1", "2*q^(3/2)+q^(-1/2)", "0".
  std::string str() const;

 private:
  void trim();
  std::map<long, Integer> t_;
};

enum class Basis { T, V, Monomial };
const char* basis_name(Basis b);

struct HeckeElement {
  DatumPtr datum;
  Basis basis = Basis::Monomial;
  std::map<Coweight, LaurentPoly> terms;
  std::string str() const;
};

// Representations of the dual group: highest weights are G-dominant coweights,
// roots are the coroots of G.

// Coordinates of delta in the simple roots of the dual group, if delta lies in
// their integer span.
std::optional<Vec> simple_root_coordinates(const RootDatum& d, const Vec& delta);
// mu <= lambda: lambda - mu a nonnegative integer combination of positive roots.
bool in_root_lattice_cone(const Coweight& mu, const Coweight& lambda);

// Dominant weights of V_lambda with their multiplicities (Freudenthal).
std::map<Coweight, Integer> dominant_character(const Coweight& lambda);
// All weights.
std::map<Coweight, Integer> full_character(const Coweight& lambda);
std::vector<Coweight> weyl_orbit(const Coweight& mu);
Integer weight_multiplicity(const Coweight& lambda, const Coweight& mu);
Integer weyl_dimension(const Coweight& lambda);

// The datum with one copy per block, and the restriction of a Frobenius-invariant
// lambda to it.
DatumPtr block_datum(const DatumPtr& d);
Coweight block_restriction(const Coweight& lambda);

// Trace of V_lambda on the coset T^ x sigma, in the orbit-sum basis [mu].
HeckeElement twisted_character(const Coweight& lambda);

// mu <= lambda in the cone of positive coroots.
bool dominance_leq(const Coweight& mu, const Coweight& lambda);

struct OracleOptions {
  long budget = 20000000;  // matrices enumerated, summed over primes
  int threads = 1;
};

// Valuations of the elementary divisors of an integer matrix over Z_p, sorted
// decreasingly.  Entries are taken modulo p^precision.
std::vector<long> elementary_divisors(std::vector<std::vector<long>> a, long p, int precision);

// a_lambda(mu) at q = p for all partitions mu of |lambda| with at most n parts.
std::map<std::vector<long>, Integer> satake_coset_oracle(int n, const std::vector<long>& lambda, long p,
                                                         const OracleOptions& opt = {});

struct SatakeTable {
  Coweight lambda;
  std::vector<Coweight> support;  // dominant mu <= lambda, lambda first
  std::map<Coweight, LaurentPoly> a;  // S(T_lambda) = sum q^{<mu,rho>} a(mu) [mu]
  std::map<Coweight, LaurentPoly> b;  // S(T_lambda) = sum b(mu) q^{<mu,rho>} [V_mu]
  std::map<Coweight, LaurentPoly> d;  // q^{<lambda,rho>} [V_lambda] = sum d(mu) S(T_mu)
};

// Polynomials a_lambda(mu)(q) by interpolation of the coset oracle over primes.
std::map<std::vector<long>, LaurentPoly> satake_coefficients(int n, const std::vector<long>& lambda,
                                                             const OracleOptions& opt = {});

// Split GL_n only; lambda dominant with nonnegative entries.
SatakeTable satake_basis_change(const Coweight& lambda, const OracleOptions& opt = {});

// Satake transform of T_lambda in the monomial basis, and the expansions of
// q^{<lambda,rho>}[V_lambda] in the T basis.
HeckeElement satake_transform(const SatakeTable& t);
HeckeElement v_in_t_basis(const SatakeTable& t);

}  // namespace hecke
