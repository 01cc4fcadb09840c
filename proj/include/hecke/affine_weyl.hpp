#pragma once

#include "hecke/root_datum.hpp"

#include <string>
#include <vector>

namespace hecke {

enum class AffineType { GL, GSP };

// Extended affine Weyl group element as an affine permutation f of Z with
// f(i + m) = f(i) + m, m = n (GL_n) or 2g (GSp_2g).  t_v * sigma corresponds to
// f(i) = sigma(i) - m * v_{sigma(i)}.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(AffineType type, int rank, std::vector<long> window);

  static AffineWeylElement identity(AffineType type, int rank);
  static AffineWeylElement simple(AffineType type, int rank, int k);
  static AffineWeylElement translation(AffineType type, int rank, const std::vector<long>& v);
  // sigma given 0-based on {0..m-1}.
  static AffineWeylElement from_parts(AffineType type, int rank, const std::vector<long>& v, const std::vector<int>& sigma);

  AffineType type() const { return type_; }
  int rank() const { return rank_; }
  int m() const { return static_cast<int>(window_.size()); }
  const std::vector<long>& window() const { return window_; }
  long at(long i) const;

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  bool operator==(const AffineWeylElement& o) const { return type_ == o.type_ && window_ == o.window_; }
  bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
  bool operator<(const AffineWeylElement& o) const { return window_ < o.window_; }

  std::vector<long> translation_part() const;
  std::vector<int> finite_part() const;
  // Length-zero component: sum_i (f(i) - i) / m.
  long omega() const;
  std::string str() const;

 private:
  AffineType type_ = AffineType::GL;
  int rank_ = 0;
  std::vector<long> window_;
};

int num_generators(AffineType type, int rank);
int length(const AffineWeylElement& w);
// w = rest * s_{word[0]} ... s_{word[l-1]} with rest of length zero.
std::vector<int> reduced_word(const AffineWeylElement& w, AffineWeylElement* rest = nullptr);
AffineWeylElement from_word(AffineType type, int rank, const std::vector<int>& word);
bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& v);

std::vector<long> ambient_coweight(const Coweight& v);
AffineWeylElement translation(const Coweight& v);

struct AdmissibleElement {
  AffineWeylElement w;  // minimal double coset representative
  std::vector<int> word;
  int length = 0;
  int dimension = 0;
  bool translation = false;
};

struct AdmissibleSet {
  AffineType type = AffineType::GL;
  int rank = 0;
  std::vector<int> I;
  std::vector<long> mu;
  std::vector<AdmissibleElement> elements;
};

AdmissibleSet admissible_set(AffineType type, int rank, std::vector<int> I, const std::vector<long>& mu);
AdmissibleSet admissible_set(const DatumPtr& d, const std::vector<int>& I, const Coweight& mu);

AffineWeylElement min_double_coset_rep(const AffineWeylElement& w, const std::vector<int>& I);
AffineWeylElement max_double_coset_rep(const AffineWeylElement& w, const std::vector<int>& I);

struct KostantRep {
  AffineWeylElement w;
  std::vector<int> s;  // increasing, 1-based
  int formula_length = 0;
  int length = 0;
};

std::vector<KostantRep> kostant_representatives(int g);
int stratum_dimension(const AffineWeylElement& w);

}  // namespace hecke
