#pragma once

#include "hecke/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

enum class ModelFamily { Symplectic, Linear };
const char* model_family_name(ModelFamily f);

struct StratumRecord {
  ModelFamily family = ModelFamily::Symplectic;
  int g = 0;                     // symplectic
  int n = 0, p = 0, q = 0, j = 0;  // linear
  int param = 0;                 // s resp. r
  std::vector<int> index_set;    // 1-based standard basis vectors spanning F_0 = F_j
  std::vector<int> loop_exponents;  // the diagonal element, as exponents of t
  int dimension = 0;
  int kernel_rank = 0;
};

// M_{0,g}: g+1 strata, s = 0..g.
std::vector<StratumRecord> strata_symplectic(int g);
// M_{0,j} for GL_n with signature (p,q): r from max(0,j-q) to min(p,j).
std::vector<StratumRecord> strata_linear(int n, int p, int q, int j);

int dp1_kernel_rank_symplectic(int g, int s);
int dp1_kernel_rank_linear(int p, int j, int r);

// Kernel dimension of p_{0,I}/(p_{0,I} cap Ad(x) p_{0,I}) -> p_0/(p_0 cap Ad(x) p_0) computed from
// explicit matrices over F_ell[t]/(t^3), x the stratum's diagonal element.
int lie_quotient_oracle_symplectic(int g, int s, int ell = 3);
int lie_quotient_oracle_linear(int n, int p, int q, int j, int r, int ell = 3);

// Valuation of alpha* on the generic point of a stratum.
// Symplectic: k_g + ... + k_{g-s+1}.  Linear: a_p + ... + a_{p-r+1} + b_q + ... + b_{j-r+1}.
Integer alpha_valuation_bound_symplectic(const Vec& k, int s);
Integer alpha_valuation_bound_linear(const Vec& a, const Vec& b, int j, int r);

// -inf over strata of (alpha bound + kernel rank).
Integer normalized_correspondence_exponent_symplectic(const Vec& k);
Integer normalized_correspondence_exponent_linear(const Vec& a, const Vec& b, int j);

// Points of the special fiber of a local model over F_{q0}, grouped by rank signature.
struct CensusBucket {
  std::vector<int> signature;
  long long points = 0;
  bool maximal = false;  // no other signature dominates it entrywise
};

struct Census {
  ModelFamily family = ModelFamily::Linear;
  int n = 0, p = 0, q = 0, g = 0;
  std::vector<int> I;
  int q0 = 2;
  long long total_points = 0;
  std::vector<CensusBucket> buckets;  // sorted by signature
  std::vector<std::string> signature_labels;
  int top_dimensional() const;
};

struct CensusOptions {
  long long budget = 5000000;  // bound on enumerated chain points
  int threads = 1;
};

// Linear: lattice chain indices I within 0..n-1, F_i of rank q.
Census finite_field_census_linear(int n, int p, int q, const std::vector<int>& I, int q0,
                                  const CensusOptions& opt = {});
// Symplectic: I within {0, g}, F_0 and F_g Lagrangian.
Census finite_field_census_symplectic(int g, const std::vector<int>& I, int q0, const CensusOptions& opt = {});

}  // namespace hecke
