#pragma once

#include "hecke/root_datum.hpp"

#include <string>
#include <vector>

namespace hecke {

struct InfinitesimalCharacter {
  Weight raw;       // -kappa - rho
  Weight dominant;  // its dominant representative, copy by copy
};

// kappa must be dominant for the Levi.
InfinitesimalCharacter infinitesimal_character(const Weight& kappa);

// <lambda, infinity(kappa, iota)>: the exponent making [V_lambda] integral.
Rational integral_exponent(const Coweight& lambda, const Weight& kappa);
// Same minus <lambda, rho>: the exponent in front of T_lambda for minuscule lambda.
Rational t_basis_exponent(const Coweight& lambda, const Weight& kappa);

// Sum over sigma of sup_{0<=j<=g} ((sum_{l<=j} k_l - sum_{l>j} k_l + k)/2 - j(j+1)/2).
// argmax (optional) receives the smallest maximizing j per sigma.
Integer symplectic_exponent(const std::vector<Vec>& kappa_by_sigma, const Rational& k,
                            std::vector<int>* argmax = nullptr);
Integer symplectic_s_exponent(const Rational& k, int count);

struct UnitaryWeight {
  Vec a;  // a_1 >= ... >= a_p
  Vec b;  // b_1 >= ... >= b_q
};

// Sum over tau not in I of -sum b, plus over tau in I of
// sup_{r+s=n-j} (-sum_{l>r} a_l - sum_{l>q-s} b_l - r(q-s)).
Integer unitary_exponent(const std::vector<UnitaryWeight>& in_I, const std::vector<UnitaryWeight>& not_in_I, int j);

// kappa_tau = (-a_p..-a_1, b_1..b_q), central -sum(a) - sum(b), one UnitaryWeight per copy.
Weight unitary_weight(const DatumPtr& d, const std::vector<UnitaryWeight>& per_copy);
// kappa_sigma = (k_{1,sigma}..k_{g,sigma}; k_sigma).
Weight symplectic_weight(const DatumPtr& d, const std::vector<Vec>& per_copy, const Vec& similitudes);

// Minuscule coweights of the standard generators at place (block) i.
Coweight symplectic_t_coweight(const DatumPtr& d, int place);
Coweight symplectic_s_coweight(const DatumPtr& d, int place);
Coweight unitary_t_coweight(const DatumPtr& d, int place, int j);

struct GeneratorRow {
  std::string name;
  int place = 0;
  Coweight lambda;
  Rational v_exponent;  // <lambda, infinity>
  Rational rho_shift;   // <lambda, rho>
  Rational exponent;    // v_exponent - rho_shift: T = p^exponent T^naive
  Rational closed_form;
  std::string closed_form_label;
  std::string naive;
  bool invertible = false;
};

struct NormalizationTable {
  std::string preset;
  Weight kappa;
  std::vector<GeneratorRow> rows;
  bool consistent() const;
};

// GSP: T and S at every place; UNITARY_PRODUCT: T_{i,j} for 0 <= j <= n.
NormalizationTable generator_table(const Weight& kappa);

NormalizationTable preset_modular_curve(long k);
NormalizationTable preset_hilbert(const std::vector<long>& k_sigma, long k, const std::vector<int>& place_degrees);
NormalizationTable preset_siegel(const std::vector<long>& k);
NormalizationTable preset_gu21(long k1, long k2, long k3 = 1);

}  // namespace hecke
