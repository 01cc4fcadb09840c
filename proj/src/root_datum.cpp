#include "hecke/root_datum.hpp"

#include "hecke/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hecke {

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::GSP: return "GSP";
    case Family::UNITARY_PRODUCT: return "UNITARY_PRODUCT";
    case Family::RES_PRODUCT: return "RES_PRODUCT";
  }
  return "?";
}

RootDatum::RootDatum(Family family, std::vector<Block> blocks) : family_(family), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::BadRank, "root datum needs at least one block");
  int off = 0;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Block& bl = blocks_[b];
    if (bl.size < 1 || bl.degree < 1) throw Error(ErrorCode::BadRank, "block size and degree must be >= 1");
    if (family_ == Family::GL && bl.degree != 1) throw Error(ErrorCode::Unsupported, "split GL blocks have degree 1");
    if (family_ == Family::UNITARY_PRODUCT && (bl.levi < 0 || bl.levi > bl.size))
      throw Error(ErrorCode::BadRank, "unitary signature out of range");
    block_first_.push_back(static_cast<int>(copy_block_.size()));
    for (int k = 0; k < bl.degree; ++k) {
      copy_block_.push_back(static_cast<int>(b));
      copy_offset_.push_back(off);
      off += bl.size + (family_ == Family::GSP ? 1 : 0);
    }
  }
  if (family_ == Family::UNITARY_PRODUCT) ++off;
  dim_ = off;
}

DatumPtr RootDatum::gl(int n) { return std::make_shared<const RootDatum>(Family::GL, std::vector<Block>{{n, 1, 0}}); }

DatumPtr RootDatum::gsp(int g, std::vector<int> degrees) {
  std::vector<Block> bl;
  for (int d : degrees) bl.push_back({g, d, 0});
  return std::make_shared<const RootDatum>(Family::GSP, bl);
}

DatumPtr RootDatum::unitary(int n, std::vector<Block> blocks) {
  for (auto& b : blocks) b.size = n;
  return std::make_shared<const RootDatum>(Family::UNITARY_PRODUCT, blocks);
}

DatumPtr RootDatum::res(std::vector<Block> blocks) {
  return std::make_shared<const RootDatum>(Family::RES_PRODUCT, blocks);
}

int RootDatum::frobenius(int c) const {
  int b = copy_block_[c];
  int k = c - block_first_[b];
  return block_first_[b] + (k + 1) % blocks_[b].degree;
}

int RootDatum::similitude_index(int c) const {
  if (family_ != Family::GSP) throw Error(ErrorCode::Unsupported, "no per-copy similitude");
  return copy_offset_[c] + copy_size(c);
}

int RootDatum::central_index() const {
  if (family_ != Family::UNITARY_PRODUCT) throw Error(ErrorCode::Unsupported, "no central coordinate");
  return dim_ - 1;
}

std::string RootDatum::describe() const {
  std::string s = family_name(family_);
  s += "[";
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += ",";
    s += "(" + std::to_string(blocks_[b].size) + "," + std::to_string(blocks_[b].degree);
    if (family_ == Family::UNITARY_PRODUCT) s += ";" + std::to_string(blocks_[b].levi);
    s += ")";
  }
  return s + "]";
}

void require_same(const RootDatum& a, const RootDatum& b) {
  if (!(a == b)) throw Error(ErrorCode::DatumMismatch, a.describe() + " vs " + b.describe());
}

namespace {

enum class Kind { Roots, Coroots, LeviRoots };

std::vector<Vec> roots_of(const RootDatum& d, Kind kind) {
  std::vector<Vec> out;
  for (int c = 0; c < d.num_copies(); ++c) {
    int n = d.copy_size(c), off = d.copy_offset(c);
    const Block& bl = d.blocks()[d.copy_block(c)];
    auto unit = [&](std::initializer_list<std::pair<int, int>> terms) {
      Vec v(d.dim(), 0);
      for (auto [i, s] : terms) v[off + i] += s;
      out.push_back(v);
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (kind == Kind::LeviRoots && d.family() == Family::UNITARY_PRODUCT && i < bl.levi && j >= bl.levi)
          continue;
        unit({{i, 1}, {j, -1}});
      }
    if (d.is_gsp_type() && kind != Kind::LeviRoots) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) unit({{i, -1}, {j, -1}});
      for (int i = 0; i < n; ++i) unit({{i, kind == Kind::Roots ? -2 : -1}});
    }
  }
  return out;
}

bool gsp_valid(const std::vector<int>& p) {
  int m = static_cast<int>(p.size());
  for (int i = 0; i < m; ++i)
    if (p[i] + p[m - 1 - i] != m - 1) return false;
  return true;
}

// Walls of the chamber: returns true if the simple reflection k of copy c
// separates x from the dominant chamber.
bool wall_violated(const RootDatum& d, const Vec& x, int c, int k) {
  int off = d.copy_offset(c);
  int n = d.copy_size(c);
  if (d.is_gsp_type() && k == n - 1) return x[off] > 0;
  return x[off + k] < x[off + k + 1];
}

bool wall_in_chamber(const RootDatum& d, int c, int k, Chamber ch) {
  if (ch == Chamber::for_G) return true;
  int n = d.copy_size(c);
  if (d.is_gsp_type()) return k < n - 1;
  if (d.family() == Family::UNITARY_PRODUCT) return k != d.blocks()[d.copy_block(c)].levi - 1;
  return true;
}

template <class V>
std::pair<V, WeylElement> dominant_impl(const V& v, Chamber ch) {
  const DatumPtr& d = v.datum_ptr();
  Vec x = v.coords();
  WeylElement w = WeylElement::identity(d);
  for (int c = 0; c < d->num_copies(); ++c) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int k = 0; k < num_simple(*d, c); ++k) {
        if (!wall_in_chamber(*d, c, k, ch) || !wall_violated(*d, x, c, k)) continue;
        WeylElement s = simple_reflection(d, c, k);
        x = s.act(x);
        w = s * w;
        moved = true;
      }
    }
  }
  return {V(d, x), w};
}

template <class V>
bool dominant_check(const V& v, Chamber ch) {
  const RootDatum& d = v.datum();
  for (int c = 0; c < d.num_copies(); ++c)
    for (int k = 0; k < num_simple(d, c); ++k)
      if (wall_in_chamber(d, c, k, ch) && wall_violated(d, v.coords(), c, k)) return false;
  return true;
}

Vec w0_impl(const RootDatum& d, Vec x) {
  for (int c = 0; c < d.num_copies(); ++c) {
    int off = d.copy_offset(c), n = d.copy_size(c);
    if (d.is_gsp_type()) {
      for (int i = 0; i < n; ++i) x[off + i] = -x[off + i];
    } else {
      std::reverse(x.begin() + off, x.begin() + off + n);
    }
  }
  return x;
}

}  // namespace

std::vector<Vec> RootDatum::positive_roots() const { return roots_of(*this, Kind::Roots); }
std::vector<Vec> RootDatum::positive_coroots() const { return roots_of(*this, Kind::Coroots); }
std::vector<Vec> RootDatum::levi_positive_roots() const { return roots_of(*this, Kind::LeviRoots); }

template <class Tag>
std::string CoordVector<Tag>::str() const {
  std::string s;
  const RootDatum& d = *d_;
  for (int c = 0; c < d.num_copies(); ++c) {
    if (c) s += " ";
    Vec v = copy(c);
    s += "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    if (d.per_copy_similitude()) s += ";" + to_string(similitude(c));
    s += ")";
  }
  if (d.has_central()) s += ";" + to_string(central());
  return s;
}

template class CoordVector<WeightTag>;
template class CoordVector<CoweightTag>;

WeylElement::WeylElement(DatumPtr d, std::vector<std::vector<int>> perms) : d_(std::move(d)), perms_(std::move(perms)) {
  if (static_cast<int>(perms_.size()) != d_->num_copies()) throw Error(ErrorCode::ShapeError, "one permutation per copy");
  for (int c = 0; c < d_->num_copies(); ++c) {
    const auto& p = perms_[c];
    int m = d_->copy_size(c) * (d_->is_gsp_type() ? 2 : 1);
    if (static_cast<int>(p.size()) != m) throw Error(ErrorCode::ShapeError, "permutation of wrong size");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i)
      if (sorted[i] != i) throw Error(ErrorCode::InputError, "not a permutation");
    if (d_->is_gsp_type() && !gsp_valid(p))
      throw Error(ErrorCode::InputError, "GSp Weyl element must satisfy w(i)+w(2g+1-i)=2g+1");
  }
}

WeylElement WeylElement::identity(DatumPtr d) {
  std::vector<std::vector<int>> perms;
  for (int c = 0; c < d->num_copies(); ++c) {
    std::vector<int> p(d->copy_size(c) * (d->is_gsp_type() ? 2 : 1));
    std::iota(p.begin(), p.end(), 0);
    perms.push_back(p);
  }
  return WeylElement(std::move(d), std::move(perms));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  require_same(*d_, *o.d_);
  auto p = perms_;
  for (size_t c = 0; c < p.size(); ++c)
    for (size_t i = 0; i < p[c].size(); ++i) p[c][i] = perms_[c][o.perms_[c][i]];
  return WeylElement(d_, p);
}

WeylElement WeylElement::inverse() const {
  auto p = perms_;
  for (size_t c = 0; c < p.size(); ++c)
    for (size_t i = 0; i < p[c].size(); ++i) p[c][perms_[c][i]] = static_cast<int>(i);
  return WeylElement(d_, p);
}

bool WeylElement::is_identity() const { return *this == identity(d_); }

bool WeylElement::is_gamma_invariant() const {
  for (int c = 0; c < d_->num_copies(); ++c)
    if (perms_[c] != perms_[d_->frobenius(c)]) return false;
  return true;
}

Vec WeylElement::act(const Vec& x) const {
  Vec y = x;
  for (int c = 0; c < d_->num_copies(); ++c) {
    int off = d_->copy_offset(c), n = d_->copy_size(c);
    const auto& p = perms_[c];
    if (d_->is_gsp_type()) {
      for (int i = 0; i < n; ++i) {
        int j = p[i];
        if (j < n)
          y[off + j] = x[off + i];
        else
          y[off + 2 * n - 1 - j] = -x[off + i];
      }
    } else {
      for (int i = 0; i < n; ++i) y[off + p[i]] = x[off + i];
    }
  }
  return y;
}

int WeylElement::length() const {
  std::vector<Vec> pos = d_->positive_roots();
  std::set<Vec> neg;
  for (const auto& a : pos) {
    Vec m = a;
    for (auto& v : m) v = -v;
    neg.insert(m);
  }
  int len = 0;
  for (const auto& a : pos)
    if (neg.count(act(a))) ++len;
  return len;
}

std::string WeylElement::str() const {
  std::string s;
  for (size_t c = 0; c < perms_.size(); ++c) {
    if (c) s += " ";
    s += "[";
    for (size_t i = 0; i < perms_[c].size(); ++i) s += (i ? "," : "") + std::to_string(perms_[c][i] + 1);
    s += "]";
  }
  return s;
}

int num_simple(const RootDatum& d, int copy) {
  int n = d.copy_size(copy);
  return d.is_gsp_type() ? n : n - 1;
}

WeylElement simple_reflection(const DatumPtr& d, int copy, int k) {
  WeylElement id = WeylElement::identity(d);
  auto perms = id.perms();
  auto& p = perms[copy];
  int n = d->copy_size(copy);
  if (k < 0 || k >= num_simple(*d, copy)) throw Error(ErrorCode::InputError, "simple reflection index out of range");
  if (d->is_gsp_type()) {
    int m = 2 * n;
    if (k == n - 1) {
      std::swap(p[0], p[m - 1]);
    } else {
      std::swap(p[k], p[k + 1]);
      std::swap(p[m - 1 - k], p[m - 2 - k]);
    }
  } else {
    std::swap(p[k], p[k + 1]);
  }
  return WeylElement(d, perms);
}

std::vector<WeylElement> weyl_group(const DatumPtr& d, size_t limit) {
  std::vector<std::vector<std::vector<int>>> per_copy;
  size_t total = 1;
  for (int c = 0; c < d->num_copies(); ++c) {
    int n = d->copy_size(c);
    std::vector<std::vector<int>> elems;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (d->is_gsp_type()) {
        for (int mask = 0; mask < (1 << n); ++mask) {
          std::vector<int> q(2 * n);
          for (int i = 0; i < n; ++i) {
            int j = (mask >> i) & 1 ? 2 * n - 1 - p[i] : p[i];
            q[i] = j;
            q[2 * n - 1 - i] = 2 * n - 1 - j;
          }
          elems.push_back(q);
        }
      } else {
        elems.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    total *= elems.size();
    if (total > limit) throw Error(ErrorCode::Oversize, "Weyl group too large to enumerate");
    per_copy.push_back(std::move(elems));
  }
  std::vector<WeylElement> out;
  std::vector<size_t> idx(per_copy.size(), 0);
  for (;;) {
    std::vector<std::vector<int>> perms;
    for (size_t c = 0; c < idx.size(); ++c) perms.push_back(per_copy[c][idx[c]]);
    out.emplace_back(d, perms);
    size_t c = 0;
    while (c < idx.size() && ++idx[c] == per_copy[c].size()) idx[c++] = 0;
    if (c == idx.size()) break;
  }
  return out;
}

Rational pairing(const Weight& w, const Coweight& c) {
  require_same(w.datum(), c.datum());
  return dot(w.coords(), c.coords());
}

Weight rho(const DatumPtr& d) {
  Vec x(d->dim(), 0);
  for (const auto& a : d->positive_roots())
    for (size_t i = 0; i < x.size(); ++i) x[i] += a[i] / 2;
  return Weight(d, x);
}

Coweight rho_check(const DatumPtr& d) {
  Vec x(d->dim(), 0);
  for (const auto& a : d->positive_coroots())
    for (size_t i = 0; i < x.size(); ++i) x[i] += a[i] / 2;
  return Coweight(d, x);
}

std::pair<Weight, WeylElement> dominant_representative(const Weight& w, Chamber ch) { return dominant_impl(w, ch); }
std::pair<Coweight, WeylElement> dominant_representative(const Coweight& c, Chamber ch) { return dominant_impl(c, ch); }
Vec dominant_coords(const DatumPtr& d, const Vec& x, Chamber ch) {
  if (static_cast<int>(x.size()) != d->dim()) throw Error(ErrorCode::ShapeError, "vector does not match the datum");
  Vec y = x;
  for (int c = 0; c < d->num_copies(); ++c) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int k = 0; k < num_simple(*d, c); ++k) {
        if (!wall_in_chamber(*d, c, k, ch) || !wall_violated(*d, y, c, k)) continue;
        y = simple_reflection(d, c, k).act(y);
        moved = true;
      }
    }
  }
  return y;
}

bool is_dominant(const Weight& w, Chamber ch) { return dominant_check(w, ch); }
bool is_dominant(const Coweight& c, Chamber ch) { return dominant_check(c, ch); }
Weight w0_apply(const Weight& w) { return Weight(w.datum_ptr(), w0_impl(w.datum(), w.coords())); }
Coweight w0_apply(const Coweight& c) { return Coweight(c.datum_ptr(), w0_impl(c.datum(), c.coords())); }

void check_parity(const Weight& w) {
  const RootDatum& d = w.datum();
  if (!w.is_integral()) throw Error(ErrorCode::ParityViolation, "algebraic weights are integral");
  auto odd = [](const Rational& r) { return mpz_odd_p(r.get_num_mpz_t()) != 0; };
  if (d.family() == Family::GSP) {
    for (int c = 0; c < d.num_copies(); ++c)
      if (odd(sum(w.copy(c)) - w.similitude(c)))
        throw Error(ErrorCode::ParityViolation, "similitude parity differs from the sum of the copy coordinates");
  } else if (d.family() == Family::UNITARY_PRODUCT) {
    Rational t = 0;
    for (int c = 0; c < d.num_copies(); ++c) t += sum(w.copy(c));
    if (odd(t - w.central())) throw Error(ErrorCode::ParityViolation, "central parity differs from the coordinate sum");
  }
}

bool coroot_cone_membership(const Coweight& delta) { return in_cone(delta.datum().positive_coroots(), delta.coords()); }
bool root_cone_membership(const Weight& delta) { return in_cone(delta.datum().positive_roots(), delta.coords()); }

}  // namespace hecke
