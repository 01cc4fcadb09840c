#pragma once

#include "hecke/errors.hpp"
#include "hecke/rational.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

enum class Family { GL, GSP, UNITARY_PRODUCT, RES_PRODUCT };
enum class Chamber { for_G, for_Levi };

const char* family_name(Family f);

// A block of d identical factors cyclically permuted by Frobenius.
// For GSP the size is g; for unitary blocks `levi` is the size p of the first Levi factor.
struct Block {
  int size = 1;
  int degree = 1;
  int levi = 0;
  bool operator==(const Block&) const = default;
};

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

// Coordinate layout: for each copy (blocks in order, each repeated `degree` times)
// its `size` Weyl-active coordinates, followed for GSP by the similitude coordinate
// of that copy.  Unitary data carry one central coordinate at the very end.
class RootDatum {
 public:
  RootDatum(Family family, std::vector<Block> blocks);

  static DatumPtr gl(int n);
  static DatumPtr gsp(int g, std::vector<int> degrees = {1});
  static DatumPtr unitary(int n, std::vector<Block> blocks);
  static DatumPtr res(std::vector<Block> blocks);

  Family family() const { return family_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  int num_copies() const { return static_cast<int>(copy_block_.size()); }
  int copy_block(int c) const { return copy_block_[c]; }
  int copy_offset(int c) const { return copy_offset_[c]; }
  int copy_size(int c) const { return blocks_[copy_block_[c]].size; }
  int first_copy(int b) const { return block_first_[b]; }
  // Frobenius sends copy c to the next copy of the same cycle.
  int frobenius(int c) const;

  bool per_copy_similitude() const { return family_ == Family::GSP; }
  bool has_central() const { return family_ == Family::UNITARY_PRODUCT; }
  int similitude_index(int c) const;
  int central_index() const;
  int dim() const { return dim_; }
  bool is_gsp_type() const { return family_ == Family::GSP; }

  // Positive roots of G and positive coroots (= roots of the dual group), in
  // the coordinates of weights resp. coweights.
  std::vector<Vec> positive_roots() const;
  std::vector<Vec> positive_coroots() const;
  std::vector<Vec> levi_positive_roots() const;

  bool operator==(const RootDatum& o) const { return family_ == o.family_ && blocks_ == o.blocks_; }
  std::string describe() const;

 private:
  Family family_;
  std::vector<Block> blocks_;
  std::vector<int> copy_block_, copy_offset_, block_first_;
  int dim_ = 0;
};

void require_same(const RootDatum& a, const RootDatum& b);

template <class Tag>
class CoordVector {
 public:
  CoordVector() = default;
  CoordVector(DatumPtr d, Vec x) : d_(std::move(d)), x_(std::move(x)) {
    if (!d_) throw Error(ErrorCode::InputError, "null datum");
    if (static_cast<int>(x_.size()) != d_->dim())
      throw Error(ErrorCode::ShapeError, "coordinate vector of length " + std::to_string(x_.size()) +
                                             ", datum needs " + std::to_string(d_->dim()));
    for (auto& c : x_) {
      c.canonicalize();
      if (!is_half_integral(c)) throw Error(ErrorCode::NotIntegral, "denominator must divide 2: " + to_string(c));
    }
  }
  static CoordVector zero(DatumPtr d) {
    int n = d->dim();
    return CoordVector(std::move(d), Vec(n, 0));
  }
  // Builds from per-copy active coordinates, per-copy similitudes (GSP) and central (unitary).
  static CoordVector from_copies(DatumPtr d, const std::vector<Vec>& active, const Vec& similitudes = {},
                                 const Rational& central = 0) {
    if (static_cast<int>(active.size()) != d->num_copies())
      throw Error(ErrorCode::ShapeError, "expected one vector per copy");
    Vec x(d->dim(), 0);
    for (int c = 0; c < d->num_copies(); ++c) {
      if (static_cast<int>(active[c].size()) != d->copy_size(c))
        throw Error(ErrorCode::ShapeError, "copy vector has the wrong size");
      for (int i = 0; i < d->copy_size(c); ++i) x[d->copy_offset(c) + i] = active[c][i];
      if (d->per_copy_similitude() && !similitudes.empty()) {
        if (static_cast<int>(similitudes.size()) != d->num_copies())
          throw Error(ErrorCode::ShapeError, "expected one similitude per copy");
        x[d->similitude_index(c)] = similitudes[c];
      }
    }
    if (d->has_central()) x[d->central_index()] = central;
    return CoordVector(std::move(d), std::move(x));
  }

  const RootDatum& datum() const { return *d_; }
  const DatumPtr& datum_ptr() const { return d_; }
  const Vec& coords() const { return x_; }
  const Rational& operator[](size_t i) const { return x_[i]; }

  Vec copy(int c) const {
    auto first = x_.begin() + d_->copy_offset(c);
    return Vec(first, first + d_->copy_size(c));
  }
  Rational similitude(int c) const { return d_->per_copy_similitude() ? x_[d_->similitude_index(c)] : Rational(0); }
  Rational central() const { return d_->has_central() ? x_[d_->central_index()] : Rational(0); }

  CoordVector operator+(const CoordVector& o) const { return combine(o, 1); }
  CoordVector operator-(const CoordVector& o) const { return combine(o, -1); }
  CoordVector operator-() const {
    Vec y = x_;
    for (auto& c : y) c = -c;
    return CoordVector(d_, y);
  }
  bool operator==(const CoordVector& o) const { return *d_ == *o.d_ && x_ == o.x_; }
  bool operator!=(const CoordVector& o) const { return !(*this == o); }
  bool operator<(const CoordVector& o) const { return x_ < o.x_; }

  // Frobenius image: copy c moves to position frobenius(c).
  CoordVector frobenius() const {
    Vec y = x_;
    for (int c = 0; c < d_->num_copies(); ++c) {
      int t = d_->frobenius(c);
      for (int i = 0; i < d_->copy_size(c); ++i) y[d_->copy_offset(t) + i] = x_[d_->copy_offset(c) + i];
      if (d_->per_copy_similitude()) y[d_->similitude_index(t)] = x_[d_->similitude_index(c)];
    }
    return CoordVector(d_, y);
  }
  bool is_gamma_invariant() const { return frobenius() == *this; }
  bool is_integral() const {
    for (auto& c : x_)
      if (!is_integer(c)) return false;
    return true;
  }

  std::string str() const;

 private:
  CoordVector combine(const CoordVector& o, int s) const {
    require_same(*d_, *o.d_);
    Vec y = x_;
    for (size_t i = 0; i < y.size(); ++i) y[i] += s * o.x_[i];
    return CoordVector(d_, y);
  }

  DatumPtr d_;
  Vec x_;
};

struct WeightTag {};
struct CoweightTag {};
using Weight = CoordVector<WeightTag>;
using Coweight = CoordVector<CoweightTag>;

// Per copy a permutation (0-based images).  GL-type copies act on n letters;
// GSP copies are realized in S_2g and must commute with i -> 2g-1-i.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(DatumPtr d, std::vector<std::vector<int>> perms);
  static WeylElement identity(DatumPtr d);

  const std::vector<std::vector<int>>& perms() const { return perms_; }
  const DatumPtr& datum_ptr() const { return d_; }
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return perms_ == o.perms_; }
  bool is_identity() const;
  bool is_gamma_invariant() const;

  Weight apply(const Weight& w) const { return Weight(w.datum_ptr(), act(w.coords())); }
  Coweight apply(const Coweight& c) const { return Coweight(c.datum_ptr(), act(c.coords())); }
  Vec act(const Vec& x) const;
  int length() const;
  std::string str() const;

 private:
  DatumPtr d_;
  std::vector<std::vector<int>> perms_;
};

// Enumerates the full Weyl group (product over copies).  Only for small data.
std::vector<WeylElement> weyl_group(const DatumPtr& d, size_t limit = 200000);

// Simple reflection k of copy c (GL-type: swap k,k+1; GSP: k < g-1 swaps k,k+1,
// k = g-1 flips the sign of the first coordinate).
WeylElement simple_reflection(const DatumPtr& d, int copy, int k);
int num_simple(const RootDatum& d, int copy);

Rational pairing(const Weight& w, const Coweight& c);
Weight rho(const DatumPtr& d);
Coweight rho_check(const DatumPtr& d);

std::pair<Weight, WeylElement> dominant_representative(const Weight& w, Chamber ch = Chamber::for_G);
std::pair<Coweight, WeylElement> dominant_representative(const Coweight& c, Chamber ch = Chamber::for_G);
// Same, on raw coordinate vectors with arbitrary rational entries.
Vec dominant_coords(const DatumPtr& d, const Vec& x, Chamber ch = Chamber::for_G);
bool is_dominant(const Weight& w, Chamber ch = Chamber::for_G);
bool is_dominant(const Coweight& c, Chamber ch = Chamber::for_G);
Weight w0_apply(const Weight& w);
Coweight w0_apply(const Coweight& c);

// delta in the nonnegative rational cone of the positive coroots (resp. roots).
// Algebraic-weight parity: GSP needs k_c = sum_i k_{i,c} mod 2 per copy, unitary
// needs sum of all coordinates = k mod 2.  Throws ParityViolation.
void check_parity(const Weight& w);

bool coroot_cone_membership(const Coweight& delta);
bool root_cone_membership(const Weight& delta);

}  // namespace hecke
