#include "hecke/newton_hodge.hpp"

#include "hecke/cone.hpp"
#include "hecke/hecke_characters.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hecke {

SatakeClass SatakeClass::on_first_copy(const DatumPtr& d, const std::vector<Vec>& per_block, const Vec& similitudes,
                                       const Rational& central) {
  if (per_block.size() != d->blocks().size()) throw Error(ErrorCode::ShapeError, "expected one vector per block");
  SatakeClass c{d, Vec(d->dim(), 0)};
  for (size_t b = 0; b < per_block.size(); ++b) {
    int copy = d->first_copy(static_cast<int>(b));
    if (static_cast<int>(per_block[b].size()) != d->copy_size(copy))
      throw Error(ErrorCode::ShapeError, "block valuation vector has the wrong size");
    for (int i = 0; i < d->copy_size(copy); ++i) c.valuations[d->copy_offset(copy) + i] = per_block[b][i];
    if (d->per_copy_similitude() && !similitudes.empty()) {
      if (similitudes.size() != per_block.size()) throw Error(ErrorCode::ShapeError, "expected one similitude per block");
      c.valuations[d->similitude_index(copy)] = similitudes[b];
    }
  }
  if (d->has_central()) c.valuations[d->central_index()] = central;
  return c;
}

std::string NewtonPoint::str() const { return to_string(coords); }

namespace {

void check_class(const SatakeClass& c) {
  if (!c.datum) throw Error(ErrorCode::InputError, "class without datum");
  if (static_cast<int>(c.valuations.size()) != c.datum->dim())
    throw Error(ErrorCode::ShapeError, "valuation vector does not match the datum");
}

// Valuations of the norm class, one copy per block.
Vec norm_valuations(const SatakeClass& c) {
  const RootDatum& d = *c.datum;
  DatumPtr r = block_datum(c.datum);
  Vec out(r->dim(), 0);
  for (int copy = 0; copy < d.num_copies(); ++copy) {
    int b = d.copy_block(copy);
    for (int i = 0; i < d.copy_size(copy); ++i) out[r->copy_offset(b) + i] += c.valuations[d.copy_offset(copy) + i];
    if (d.per_copy_similitude()) out[r->similitude_index(b)] += c.valuations[d.similitude_index(copy)];
  }
  if (d.has_central()) out[r->central_index()] = c.valuations[d.central_index()];
  return out;
}

}  // namespace

NewtonPoint newton_map(const SatakeClass& c) {
  check_class(c);
  const RootDatum& d = *c.datum;
  DatumPtr r = block_datum(c.datum);
  Vec dom = dominant_coords(r, norm_valuations(c));
  NewtonPoint nu{c.datum, Vec(d.dim(), 0)};
  for (int copy = 0; copy < d.num_copies(); ++copy) {
    int b = d.copy_block(copy);
    Rational deg = d.blocks()[b].degree;
    for (int i = 0; i < d.copy_size(copy); ++i) nu.coords[d.copy_offset(copy) + i] = dom[r->copy_offset(b) + i] / deg;
    if (d.per_copy_similitude()) nu.coords[d.similitude_index(copy)] = dom[r->similitude_index(b)] / deg;
  }
  if (d.has_central()) nu.coords[d.central_index()] = dom[r->central_index()];
  return nu;
}

bool newton_leq(const NewtonPoint& nu1, const NewtonPoint& nu2) {
  require_same(*nu1.datum, *nu2.datum);
  Vec diff = nu2.coords;
  for (size_t i = 0; i < diff.size(); ++i) diff[i] -= nu1.coords[i];
  return in_cone(nu1.datum->positive_roots(), diff);
}

Rational min_eigenvalue_valuation(const SatakeClass& c, const Coweight& lambda) {
  check_class(c);
  require_same(*c.datum, lambda.datum());
  if (!lambda.is_gamma_invariant()) throw Error(ErrorCode::NotInvariant, lambda.str() + " is not Frobenius-invariant");
  return dot(w0_apply(lambda).coords(), newton_map(c).coords);
}

std::vector<std::pair<Rational, Integer>> eigenvalue_valuations(const SatakeClass& c, const Coweight& lambda) {
  check_class(c);
  require_same(*c.datum, lambda.datum());
  Coweight lam0 = block_restriction(lambda);
  Vec v = norm_valuations(c);
  std::map<Rational, Integer> acc;
  for (auto& [mu, m] : full_character(lam0)) acc[dot(mu.coords(), v)] += m;
  return {acc.begin(), acc.end()};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

std::vector<Coweight> invariant_dominant_coweights(const DatumPtr& d, long bound) {
  DatumPtr r = block_datum(d);
  int n = r->dim();
  std::vector<Coweight> out;
  Vec x(n, 0);
  auto valid = [&]() {
    for (int c = 0; c < r->num_copies(); ++c) {
      Rational shift = d->family() == Family::GSP ? x[r->similitude_index(c)]
                       : d->family() == Family::UNITARY_PRODUCT ? x[r->central_index()]
                                                                : Rational(0);
      for (int i = 0; i < r->copy_size(c); ++i) {
        if (!is_integer(x[r->copy_offset(c) + i] + shift)) return false;
        if (d->family() == Family::GSP && !is_integer(shift - x[r->copy_offset(c) + i])) return false;
      }
    }
    if (d->family() == Family::GSP)
      for (int c = 0; c < r->num_copies(); ++c)
        if (!is_integer(x[r->similitude_index(c)] * 2)) return false;
    if (d->family() == Family::UNITARY_PRODUCT && !is_integer(x[r->central_index()] * 2)) return false;
    return true;
  };
  std::function<void(int, Rational)> rec = [&](int i, Rational left) {
    if (i == n) {
      if (!valid()) return;
      Coweight c0(r, x);
      if (!is_dominant(c0)) return;
      std::vector<Vec> act;
      Vec sims;
      for (int copy = 0; copy < d->num_copies(); ++copy) {
        act.push_back(c0.copy(d->copy_block(copy)));
        sims.push_back(c0.similitude(d->copy_block(copy)));
      }
      out.push_back(Coweight::from_copies(d, act, sims, c0.central()));
      return;
    }
    for (long t = -2 * bound; t <= 2 * bound; ++t) {
      Rational v = frac(t, 2);
      Rational a = v < 0 ? Rational(-v) : v;
      if (a > left) continue;
      x[i] = v;
      rec(i + 1, left - a);
    }
    x[i] = 0;
  };
  rec(0, bound);
  auto size = [&](const Coweight& c) {
    Rational s = 0;
    Coweight r0 = block_restriction(c);
    for (auto& v : r0.coords()) s += v < 0 ? Rational(-v) : v;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    Rational sa = size(a), sb = size(b);
    return sa != sb ? sa < sb : b < a;
  });
  return out;
}

LafforgueResult lafforgue_check(const SatakeClass& c, const NewtonPoint& nu, long height_bound) {
  check_class(c);
  require_same(*c.datum, *nu.datum);
  LafforgueResult res;
  res.direct = newton_leq(newton_map(c), nu);
  bool undecided = false;
  for (const auto& lam : invariant_dominant_coweights(c.datum, height_bound)) {
    ++res.tested;
    Rational bound = dot(w0_apply(lam).coords(), nu.coords);
    auto vals = eigenvalue_valuations(c, lam);
    const auto& [low, mult] = vals.front();
    if (low >= bound) continue;
    if (mult == 1) {
      res.trace = Verdict::FAIL;
      res.witness = lam;
      res.witness_trace_valuation = low;
      res.witness_bound = bound;
      return res;
    }
    ++res.indeterminate;
    undecided = true;
  }
  res.trace = undecided ? Verdict::INDETERMINATE : Verdict::PASS;
  return res;
}

KatzMazurResult katz_mazur_check(std::vector<Rational> valuations, std::vector<Vec> infchar) {
  size_t n = valuations.size();
  if (n == 0) throw Error(ErrorCode::ShapeError, "no valuations");
  for (auto& l : infchar)
    if (l.size() != n) throw Error(ErrorCode::ShapeError, "infinitesimal character of length " + std::to_string(l.size()) +
                                                              ", expected " + std::to_string(n));
  std::sort(valuations.begin(), valuations.end());
  for (auto& l : infchar) std::sort(l.begin(), l.end(), std::greater<>());
  KatzMazurResult r;
  Rational lhs = 0, rhs = 0;
  r.pass = true;
  for (size_t k = 0; k < n; ++k) {
    lhs += valuations[k];
    for (auto& l : infchar) rhs -= l[k];
    r.slack.push_back(lhs - rhs);
    if (lhs < rhs && r.first_failure == 0) r.first_failure = static_cast<int>(k) + 1;
  }
  r.equality_at_n = r.slack.back() == 0;
  if (r.first_failure == 0 && !r.equality_at_n) r.first_failure = static_cast<int>(n);
  r.pass = r.first_failure == 0;
  return r;
}

}  // namespace hecke
