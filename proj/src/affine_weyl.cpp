#include "hecke/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hecke {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

int ambient_size(AffineType type, int rank) { return type == AffineType::GL ? rank : 2 * rank; }

// Pairs (i, j) with i in [1,m], j = c + k m > i and f(i) > f(j).
long inversions(const AffineWeylElement& w, int i, int c) {
  long m = w.m();
  long diff = w.at(i) - w.at(c);
  long k0 = c > i ? 0 : 1;
  return std::max(0L, ceil_div(diff, m) - k0);
}

}  // namespace

AffineWeylElement::AffineWeylElement(AffineType type, int rank, std::vector<long> window)
    : type_(type), rank_(rank), window_(std::move(window)) {
  int m = ambient_size(type, rank);
  if (rank < 1 || static_cast<int>(window_.size()) != m) throw Error(ErrorCode::ShapeError, "affine window has wrong size");
  std::vector<long> residues;
  for (long x : window_) residues.push_back(mod_pos(x, m));
  std::sort(residues.begin(), residues.end());
  for (int i = 0; i < m; ++i)
    if (residues[i] != i) throw Error(ErrorCode::InputError, "window is not an affine permutation");
  if (type == AffineType::GSP) {
    long c = at(1) + at(m);
    for (int i = 1; i <= m; ++i)
      if (at(i) + at(m + 1 - i) != c) throw Error(ErrorCode::InputError, "GSp element must centralize the reversal");
  }
}

long AffineWeylElement::at(long i) const {
  long m = this->m();
  long r = mod_pos(i - 1, m);
  return window_[r] + (i - 1 - r);
}

AffineWeylElement AffineWeylElement::identity(AffineType type, int rank) {
  std::vector<long> w(ambient_size(type, rank));
  std::iota(w.begin(), w.end(), 1L);
  return AffineWeylElement(type, rank, w);
}

AffineWeylElement AffineWeylElement::simple(AffineType type, int rank, int k) {
  int m = ambient_size(type, rank);
  if (k < 0 || k >= num_generators(type, rank)) throw Error(ErrorCode::InputError, "generator index out of range");
  std::vector<long> w(m);
  std::iota(w.begin(), w.end(), 1L);
  auto swap_adjacent = [&](int a) {  // A-type s_a, a in [0, m-1]
    if (a == 0) {
      if (m == 1) throw Error(ErrorCode::Unsupported, "no affine reflection for m = 1");
      w[0] = 0;
      w[m - 1] = m + 1;
    } else {
      std::swap(w[a - 1], w[a]);
    }
  };
  if (type == AffineType::GL) {
    swap_adjacent(k);
  } else if (k == 0 || k == rank) {
    swap_adjacent(k);
  } else {
    swap_adjacent(k);
    swap_adjacent(m - k);
  }
  return AffineWeylElement(type, rank, w);
}

AffineWeylElement AffineWeylElement::from_parts(AffineType type, int rank, const std::vector<long>& v,
                                                const std::vector<int>& sigma) {
  int m = ambient_size(type, rank);
  if (static_cast<int>(v.size()) != m || static_cast<int>(sigma.size()) != m)
    throw Error(ErrorCode::ShapeError, "translation / permutation of wrong size");
  std::vector<long> w(m);
  for (int i = 0; i < m; ++i) w[i] = (sigma[i] + 1) - static_cast<long>(m) * v[sigma[i]];
  return AffineWeylElement(type, rank, w);
}

AffineWeylElement AffineWeylElement::translation(AffineType type, int rank, const std::vector<long>& v) {
  std::vector<int> id(ambient_size(type, rank));
  std::iota(id.begin(), id.end(), 0);
  return from_parts(type, rank, v, id);
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  if (type_ != o.type_ || rank_ != o.rank_) throw Error(ErrorCode::DatumMismatch, "affine Weyl groups differ");
  std::vector<long> w(m());
  for (int i = 0; i < m(); ++i) w[i] = at(o.window_[i]);
  return AffineWeylElement(type_, rank_, w);
}

AffineWeylElement AffineWeylElement::inverse() const {
  int m = this->m();
  std::vector<long> w(m);
  for (int i = 1; i <= m; ++i) {
    long f = window_[i - 1];
    long r = mod_pos(f - 1, m);  // f = r + 1 + k m
    long k = (f - 1 - r) / m;
    w[r] = i - k * m;
  }
  return AffineWeylElement(type_, rank_, w);
}

std::vector<long> AffineWeylElement::translation_part() const {
  int m = this->m();
  std::vector<long> v(m);
  for (int i = 0; i < m; ++i) {
    long f = window_[i];
    long s = mod_pos(f - 1, m) + 1;
    v[s - 1] = (s - f) / m;
  }
  return v;
}

std::vector<int> AffineWeylElement::finite_part() const {
  std::vector<int> s(m());
  for (int i = 0; i < m(); ++i) s[i] = static_cast<int>(mod_pos(window_[i] - 1, m()));
  return s;
}

long AffineWeylElement::omega() const {
  long t = 0;
  for (int i = 0; i < m(); ++i) t += window_[i] - (i + 1);
  return t / m();
}

std::string AffineWeylElement::str() const {
  std::string s = "[";
  for (int i = 0; i < m(); ++i) s += (i ? "," : "") + std::to_string(window_[i]);
  return s + "]";
}

int num_generators(AffineType type, int rank) { return type == AffineType::GL ? rank : rank + 1; }

int length(const AffineWeylElement& w) {
  int m = w.m();
  long all = 0, fixed = 0;
  for (int i = 1; i <= m; ++i)
    for (int c = 1; c <= m; ++c) {
      long k = inversions(w, i, c);
      all += k;
      if (c == m + 1 - i) fixed += k;
    }
  if (w.type() == AffineType::GL) return static_cast<int>(all);
  return static_cast<int>((all + fixed) / 2);
}

std::vector<int> reduced_word(const AffineWeylElement& w, AffineWeylElement* rest) {
  std::vector<int> rec;
  AffineWeylElement v = w;
  int len = length(v);
  int gens = num_generators(w.type(), w.rank());
  while (len > 0) {
    bool found = false;
    for (int k = 0; k < gens; ++k) {
      AffineWeylElement vs = v * AffineWeylElement::simple(w.type(), w.rank(), k);
      int l = length(vs);
      if (l < len) {
        rec.push_back(k);
        v = vs;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::InputError, "no descent found for element of positive length");
  }
  if (rest) *rest = v;
  std::reverse(rec.begin(), rec.end());
  return rec;
}

AffineWeylElement from_word(AffineType type, int rank, const std::vector<int>& word) {
  AffineWeylElement w = AffineWeylElement::identity(type, rank);
  for (int k : word) w = w * AffineWeylElement::simple(type, rank, k);
  return w;
}

bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& v) {
  if (u.type() != v.type() || u.rank() != v.rank() || u.omega() != v.omega()) return false;
  AffineWeylElement rest;
  std::vector<int> word = reduced_word(v, &rest);
  AffineWeylElement x = rest.inverse() * u;
  int lx = length(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    AffineWeylElement xs = x * AffineWeylElement::simple(u.type(), u.rank(), *it);
    int l = length(xs);
    if (l < lx) {
      x = xs;
      lx = l;
    }
  }
  return lx == 0 && x == AffineWeylElement::identity(u.type(), u.rank());
}

std::vector<long> ambient_coweight(const Coweight& v) {
  const RootDatum& d = v.datum();
  if (d.num_copies() != 1) throw Error(ErrorCode::Unsupported, "affine Weyl groups are implemented for split GL_n and GSp_2g");
  std::vector<long> out;
  if (d.family() == Family::GL) {
    for (const auto& x : v.coords()) {
      if (!is_integer(x)) throw Error(ErrorCode::NotIntegral, "translation needs an integral coweight");
      out.push_back(to_long(x));
    }
    return out;
  }
  if (d.family() == Family::GSP) {
    int g = d.copy_size(0);
    Rational r = v.similitude(0);
    Vec act = v.copy(0);
    out.assign(2 * g, 0);
    for (int a = 0; a < g; ++a) {
      Rational hi = r + act[a], lo = r - act[a];
      if (!is_integer(hi) || !is_integer(lo)) throw Error(ErrorCode::NotIntegral, "r +/- r_i must be integers");
      out[a] = to_long(hi);
      out[2 * g - 1 - a] = to_long(lo);
    }
    return out;
  }
  throw Error(ErrorCode::Unsupported, "affine Weyl groups are implemented for split GL_n and GSp_2g");
}

AffineWeylElement translation(const Coweight& v) {
  const RootDatum& d = v.datum();
  std::vector<long> amb = ambient_coweight(v);
  if (d.family() == Family::GL) return AffineWeylElement::translation(AffineType::GL, d.copy_size(0), amb);
  return AffineWeylElement::translation(AffineType::GSP, d.copy_size(0), amb);
}

namespace {

std::vector<int> complement_gens(AffineType type, int rank, const std::vector<int>& I) {
  std::vector<int> out;
  for (int k = 0; k < num_generators(type, rank); ++k)
    if (std::find(I.begin(), I.end(), k) == I.end()) out.push_back(k);
  return out;
}

AffineWeylElement walk(const AffineWeylElement& w0, const std::vector<int>& I, bool down) {
  AffineWeylElement w = w0;
  int len = length(w);
  std::vector<int> gens = complement_gens(w.type(), w.rank(), I);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k : gens) {
      AffineWeylElement s = AffineWeylElement::simple(w.type(), w.rank(), k);
      for (AffineWeylElement cand : {s * w, w * s}) {
        int l = length(cand);
        if (down ? l < len : l > len) {
          w = cand;
          len = l;
          changed = true;
        }
      }
    }
  }
  return w;
}

std::vector<std::vector<long>> orbit_of(AffineType type, int rank, const std::vector<long>& mu) {
  std::set<std::vector<long>> out;
  if (type == AffineType::GL) {
    std::vector<long> p = mu;
    std::sort(p.begin(), p.end());
    do out.insert(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    int g = rank;
    for (int mask = 0; mask < (1 << g); ++mask) {
      std::vector<long> v = mu;
      for (int a = 0; a < g; ++a)
        if ((mask >> a) & 1) std::swap(v[a], v[2 * g - 1 - a]);
      out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

AffineWeylElement min_double_coset_rep(const AffineWeylElement& w, const std::vector<int>& I) { return walk(w, I, true); }
AffineWeylElement max_double_coset_rep(const AffineWeylElement& w, const std::vector<int>& I) { return walk(w, I, false); }

AdmissibleSet admissible_set(AffineType type, int rank, std::vector<int> I, const std::vector<long>& mu) {
  if (I.empty()) throw Error(ErrorCode::EmptyParahoric, "parahoric index set is empty");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int k : I)
    if (k < 0 || k >= num_generators(type, rank)) throw Error(ErrorCode::InputError, "parahoric index out of range");
  int m = ambient_size(type, rank);
  if (static_cast<int>(mu.size()) != m) throw Error(ErrorCode::ShapeError, "mu has wrong size");
  long lo = *std::min_element(mu.begin(), mu.end()), hi = *std::max_element(mu.begin(), mu.end());
  if (hi - lo > 1) throw Error(ErrorCode::Unsupported, "mu is not minuscule");
  if (type == AffineType::GSP) {
    for (int a = 0; a < m; ++a)
      if (mu[a] + mu[m - 1 - a] != mu[0] + mu[m - 1]) throw Error(ErrorCode::InputError, "not a GSp coweight");
    if (hi == lo) throw Error(ErrorCode::Unsupported, "central mu has no strata");
  }

  std::vector<AffineWeylElement> translations;
  for (const auto& v : orbit_of(type, rank, mu)) translations.push_back(AffineWeylElement::translation(type, rank, v));

  std::set<AffineWeylElement> below;
  for (const auto& t : translations) {
    AffineWeylElement rest;
    std::vector<int> word = reduced_word(t, &rest);
    size_t l = word.size();
    if (l > 20) throw Error(ErrorCode::Oversize, "translation too long for subword enumeration");
    for (unsigned long mask = 0; mask < (1UL << l); ++mask) {
      AffineWeylElement x = rest;
      for (size_t i = 0; i < l; ++i)
        if ((mask >> i) & 1) x = x * AffineWeylElement::simple(type, rank, word[i]);
      below.insert(x);
    }
  }

  std::set<AffineWeylElement> trans_reps;
  for (const auto& t : translations) trans_reps.insert(min_double_coset_rep(t, I));
  int w0_len = length(max_double_coset_rep(AffineWeylElement::identity(type, rank), I));

  std::map<AffineWeylElement, AdmissibleElement> reps;
  for (const auto& x : below) {
    AffineWeylElement r = min_double_coset_rep(x, I);
    if (reps.count(r)) continue;
    AdmissibleElement e;
    e.w = r;
    e.word = reduced_word(r);
    e.length = length(r);
    e.dimension = length(max_double_coset_rep(r, I)) - w0_len;
    e.translation = trans_reps.count(r) > 0;
    reps.emplace(r, e);
  }

  AdmissibleSet out;
  out.type = type;
  out.rank = rank;
  out.I = I;
  out.mu = mu;
  for (auto& [k, e] : reps) out.elements.push_back(e);
  std::sort(out.elements.begin(), out.elements.end(), [](const AdmissibleElement& a, const AdmissibleElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  return out;
}

AdmissibleSet admissible_set(const DatumPtr& d, const std::vector<int>& I, const Coweight& mu) {
  require_same(*d, mu.datum());
  std::vector<long> amb = ambient_coweight(mu);
  AffineType type = d->family() == Family::GL ? AffineType::GL : AffineType::GSP;
  return admissible_set(type, d->copy_size(0), I, amb);
}

std::vector<KostantRep> kostant_representatives(int g) {
  if (g < 1) throw Error(ErrorCode::BadRank, "g must be >= 1");
  if (g > 12) throw Error(ErrorCode::Oversize, "too many Kostant representatives");
  std::vector<KostantRep> out;
  int m = 2 * g;
  for (int mask = 0; mask < (1 << g); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= g; ++i) s.push_back((mask >> (i - 1)) & 1 ? m + 1 - i : i);
    std::sort(s.begin(), s.end());
    // w(s(i)) = i and w(s(i)') = i'
    std::vector<int> sigma(m, -1);
    for (int i = 1; i <= g; ++i) {
      sigma[s[i - 1] - 1] = i - 1;
      sigma[m - s[i - 1]] = m - i;
    }
    std::vector<long> zero(m, 0);
    KostantRep r;
    r.w = AffineWeylElement::from_parts(AffineType::GSP, g, zero, sigma);
    r.s = s;
    int f = g * (g + 1) / 2;
    for (int x : s)
      if (x <= g) f -= g - x + 1;
    r.formula_length = f;
    r.length = length(r.w);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const KostantRep& a, const KostantRep& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.s < b.s;
  });
  return out;
}

int stratum_dimension(const AffineWeylElement& w) { return length(w); }

}  // namespace hecke
