#pragma once

#include "hecke/root_datum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Valuations of a semisimple class c x sigma, given on every Frobenius copy
// (any lift; only the products along each cycle matter).  Entries live in the
// weight space of G and may be arbitrary rationals.
struct SatakeClass {
  DatumPtr datum;
  Vec valuations;

  // The class recorded on the first copy of each block, identity elsewhere.
  static SatakeClass on_first_copy(const DatumPtr& d, const std::vector<Vec>& per_block, const Vec& similitudes = {},
                                   const Rational& central = 0);
};

struct NewtonPoint {
  DatumPtr datum;
  Vec coords;
  bool operator==(const NewtonPoint& o) const { return *datum == *o.datum && coords == o.coords; }
  std::string str() const;
};

NewtonPoint newton_map(const SatakeClass& c);
// nu2 - nu1 in the cone of positive roots.
bool newton_leq(const NewtonPoint& nu1, const NewtonPoint& nu2);
Rational min_eigenvalue_valuation(const SatakeClass& c, const Coweight& lambda);

// Valuations of all eigenvalues of c x sigma on V_lambda (raised to the
// cycle length, i.e. of the norm class), with multiplicities.
std::vector<std::pair<Rational, Integer>> eigenvalue_valuations(const SatakeClass& c, const Coweight& lambda);

enum class Verdict { PASS, FAIL, INDETERMINATE };
const char* verdict_name(Verdict v);

struct LafforgueResult {
  bool direct = false;  // newton_leq(newton_map(c), nu)
  Verdict trace = Verdict::PASS;
  std::optional<Coweight> witness;  // first violating lambda
  Rational witness_trace_valuation, witness_bound;
  long tested = 0, indeterminate = 0;
};

// Frobenius-invariant dominant coweights with sum of |coordinates| <= bound,
// in the sweep order: increasing size, then decreasing coordinates.
std::vector<Coweight> invariant_dominant_coweights(const DatumPtr& d, long bound);

LafforgueResult lafforgue_check(const SatakeClass& c, const NewtonPoint& nu, long height_bound);

struct KatzMazurResult {
  bool pass = false;
  std::vector<Rational> slack;  // slack[k-1] for k = 1..n
  int first_failure = 0;        // 1-based k, 0 if none
  bool equality_at_n = false;
};

KatzMazurResult katz_mazur_check(std::vector<Rational> valuations, std::vector<Vec> infchar);

}  // namespace hecke
