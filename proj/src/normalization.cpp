#include "hecke/normalization.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hecke {

bool NormalizationTable::consistent() const {
  for (const auto& r : rows)
    if (!r.closed_form_label.empty() && r.closed_form != r.exponent) return false;
  return true;
}

InfinitesimalCharacter infinitesimal_character(const Weight& kappa) {
  if (!is_dominant(kappa, Chamber::for_Levi))
    throw Error(ErrorCode::NotDominant, "weight is not dominant for the Levi: " + kappa.str());
  Weight raw = -kappa - rho(kappa.datum_ptr());
  Weight dom = dominant_representative(raw).first;
  return {raw, dom};
}

Rational integral_exponent(const Coweight& lambda, const Weight& kappa) {
  require_same(lambda.datum(), kappa.datum());
  Vec inf = dominant_coords(kappa.datum_ptr(), (-kappa - rho(kappa.datum_ptr())).coords());
  return dot(inf, lambda.coords());
}

Rational t_basis_exponent(const Coweight& lambda, const Weight& kappa) {
  return integral_exponent(lambda, kappa) - pairing(rho(kappa.datum_ptr()), lambda);
}

Integer symplectic_exponent(const std::vector<Vec>& kappa_by_sigma, const Rational& k, std::vector<int>* argmax) {
  if (argmax) argmax->clear();
  Integer total = 0;
  for (const auto& ks : kappa_by_sigma) {
    int g = static_cast<int>(ks.size());
    Rational s = sum(ks);
    if (!is_integer((s - k) / 2)) throw Error(ErrorCode::ParityViolation, "k must have the parity of sum k_l");
    std::optional<Rational> best;
    int arg = 0;
    Rational head = 0;
    for (int j = 0; j <= g; ++j) {
      if (j > 0) head += ks[j - 1];
      Rational v = (head - (s - head) + k) / 2 - frac(j * (j + 1), 2);
      if (!best || v > *best) {
        best = v;
        arg = j;
      }
    }
    total += floor_of(*best);
    if (argmax) argmax->push_back(arg);
  }
  return total;
}

Integer symplectic_s_exponent(const Rational& k, int count) {
  Rational v = k * count;
  if (!is_integer(v)) throw Error(ErrorCode::ParityViolation, "similitude exponent is not integral");
  return floor_of(v);
}

namespace {

Rational tail(const Vec& v, int from) {  // sum of v_l for l > from (1-based)
  Rational t = 0;
  for (int l = from; l < static_cast<int>(v.size()); ++l) t += v[l];
  return t;
}

Integer integral_or_throw(const Rational& v, const char* what) {
  if (!is_integer(v)) throw Error(ErrorCode::ParityViolation, std::string(what) + " is not integral");
  return floor_of(v);
}

}  // namespace

Integer unitary_exponent(const std::vector<UnitaryWeight>& in_I, const std::vector<UnitaryWeight>& not_in_I, int j) {
  Rational total = 0;
  for (const auto& w : not_in_I) total -= sum(w.b);
  for (const auto& w : in_I) {
    int p = static_cast<int>(w.a.size()), q = static_cast<int>(w.b.size()), n = p + q;
    if (j < 0 || j > n) throw Error(ErrorCode::Infeasible, "j out of range");
    std::optional<Rational> best;
    for (int r = 0; r <= p; ++r) {
      int s = n - j - r;
      if (s < 0 || s > q) continue;
      Rational v = -tail(w.a, r) - tail(w.b, q - s) - r * (q - s);
      if (!best || v > *best) best = v;
    }
    if (!best) throw Error(ErrorCode::Infeasible, "no (r,s) with r+s = n-j");
    total += *best;
  }
  return integral_or_throw(total, "unitary exponent");
}

Weight unitary_weight(const DatumPtr& d, const std::vector<UnitaryWeight>& per_copy) {
  if (d->family() != Family::UNITARY_PRODUCT) throw Error(ErrorCode::DatumMismatch, "unitary datum expected");
  if (static_cast<int>(per_copy.size()) != d->num_copies()) throw Error(ErrorCode::ShapeError, "one weight per copy");
  std::vector<Vec> active;
  Rational central = 0;
  for (int c = 0; c < d->num_copies(); ++c) {
    const auto& w = per_copy[c];
    const Block& b = d->blocks()[d->copy_block(c)];
    if (static_cast<int>(w.a.size()) != b.levi || static_cast<int>(w.b.size()) != b.size - b.levi)
      throw Error(ErrorCode::ShapeError, "signature does not match the Levi");
    Vec x(w.a.rbegin(), w.a.rend());
    for (auto& v : x) v = -v;
    x.insert(x.end(), w.b.begin(), w.b.end());
    central -= sum(w.a) + sum(w.b);
    active.push_back(x);
  }
  return Weight::from_copies(d, active, {}, central);
}

Weight symplectic_weight(const DatumPtr& d, const std::vector<Vec>& per_copy, const Vec& similitudes) {
  if (!d->is_gsp_type()) throw Error(ErrorCode::DatumMismatch, "symplectic datum expected");
  return Weight::from_copies(d, per_copy, similitudes);
}

namespace {

void check_place(const RootDatum& d, int place) {
  if (place < 0 || place >= static_cast<int>(d.blocks().size())) throw Error(ErrorCode::InputError, "no such place");
}

Coweight gsp_place_coweight(const DatumPtr& d, int place, const Rational& active, const Rational& sim) {
  if (!d->is_gsp_type()) throw Error(ErrorCode::DatumMismatch, "symplectic datum expected");
  check_place(*d, place);
  Vec x(d->dim(), 0);
  for (int c = 0; c < d->num_copies(); ++c) {
    if (d->copy_block(c) != place) continue;
    for (int i = 0; i < d->copy_size(c); ++i) x[d->copy_offset(c) + i] = active;
    x[d->similitude_index(c)] = sim;
  }
  return Coweight(d, x);
}

}  // namespace

Coweight symplectic_t_coweight(const DatumPtr& d, int place) {
  return gsp_place_coweight(d, place, Rational(-1, 2), Rational(-1, 2));
}

Coweight symplectic_s_coweight(const DatumPtr& d, int place) { return gsp_place_coweight(d, place, 0, -1); }

Coweight unitary_t_coweight(const DatumPtr& d, int place, int j) {
  if (d->family() != Family::UNITARY_PRODUCT) throw Error(ErrorCode::DatumMismatch, "unitary datum expected");
  check_place(*d, place);
  Vec x(d->dim(), 0);
  for (int c = 0; c < d->num_copies(); ++c) {
    int n = d->copy_size(c);
    bool in = d->copy_block(c) == place;
    if (in && (j < 0 || j > n)) throw Error(ErrorCode::InputError, "j out of range");
    for (int i = 0; i < n; ++i) x[d->copy_offset(c) + i] = (in && i >= n - j) ? Rational(-1, 2) : Rational(1, 2);
  }
  x[d->central_index()] = Rational(-1, 2);
  return Coweight(d, x);
}

namespace {

GeneratorRow make_row(std::string name, int place, const Coweight& lambda, const Weight& kappa) {
  GeneratorRow r;
  r.name = std::move(name);
  r.place = place;
  r.lambda = lambda;
  r.v_exponent = integral_exponent(lambda, kappa);
  r.rho_shift = pairing(rho(kappa.datum_ptr()), lambda);
  r.exponent = r.v_exponent - r.rho_shift;
  return r;
}

std::string place_suffix(const RootDatum& d, int place) {
  return d.blocks().size() == 1 ? std::string("p") : "p" + std::to_string(place + 1);
}

UnitaryWeight unitary_split(const Weight& kappa, int c) {
  const RootDatum& d = kappa.datum();
  int p = d.blocks()[d.copy_block(c)].levi;
  Vec x = kappa.copy(c);
  UnitaryWeight w;
  for (int l = 0; l < p; ++l) w.a.push_back(-x[p - 1 - l]);
  w.b.assign(x.begin() + p, x.end());
  return w;
}

}  // namespace

NormalizationTable generator_table(const Weight& kappa) {
  const DatumPtr& d = kappa.datum_ptr();
  check_parity(kappa);
  infinitesimal_character(kappa);  // Levi dominance
  NormalizationTable t;
  t.kappa = kappa;
  int places = static_cast<int>(d->blocks().size());
  if (d->is_gsp_type()) {
    for (int i = 0; i < places; ++i) {
      const std::string sfx = place_suffix(*d, i);
      int g = d->blocks()[i].size;
      std::string gs = std::to_string(g);
      auto T = make_row("T_" + sfx, i, symplectic_t_coweight(d, i), kappa);
      auto S = make_row("S_" + sfx, i, symplectic_s_coweight(d, i), kappa);
      T.naive = "K diag(" + sfx + "^-1 1_" + gs + ", 1_" + gs + ") K";
      S.naive = "K diag(" + sfx + "^-1 1_" + gs + ", " + sfx + "^-1 1_" + gs + ") K";
      S.invertible = true;
      Integer tc = 0, sc = 0;
      for (int c = 0; c < d->num_copies(); ++c) {
        if (d->copy_block(c) != i) continue;
        tc += symplectic_exponent({kappa.copy(c)}, kappa.similitude(c));
        sc += symplectic_s_exponent(kappa.similitude(c), 1);
      }
      T.closed_form = tc;
      T.closed_form_label = "sup_j ((k_1+..+k_j - k_{j+1}-..-k_g + k)/2 - j(j+1)/2)";
      S.closed_form = sc;
      S.closed_form_label = "sum k";
      t.rows.push_back(T);
      t.rows.push_back(S);
    }
    return t;
  }
  if (d->family() == Family::UNITARY_PRODUCT) {
    // The closed form assumes the central coordinate is -sum(a) - sum(b).
    std::vector<UnitaryWeight> ws;
    Rational central = 0;
    for (int c = 0; c < d->num_copies(); ++c) {
      ws.push_back(unitary_split(kappa, c));
      central -= sum(ws.back().a) + sum(ws.back().b);
    }
    bool closed = central == kappa.central();
    for (int i = 0; i < places; ++i) {
      int n = d->blocks()[i].size;
      std::vector<UnitaryWeight> in, out;
      for (int c = 0; c < d->num_copies(); ++c) (d->copy_block(c) == i ? in : out).push_back(ws[c]);
      const std::string sfx = place_suffix(*d, i);
      for (int j = 0; j <= n; ++j) {
        auto r = make_row("T_" + sfx + "," + std::to_string(j), i, unitary_t_coweight(d, i, j), kappa);
        std::ostringstream nv;
        nv << "K (diag(";
        if (n - j > 0) nv << "1_" << (n - j);
        if (n - j > 0 && j > 0) nv << ", ";
        if (j > 0) nv << sfx << "^-1 1_" << j;
        nv << ") x " << sfx << "^-1) K";
        r.naive = nv.str();
        r.invertible = j == 0 || j == n;
        if (closed) {
          r.closed_form = unitary_exponent(in, out, j);
          r.closed_form_label = "sup_{r+s=n-j} (-a_{r+1}-..-a_p - b_{q-s+1}-..-b_q - r(q-s))";
        }
        t.rows.push_back(r);
      }
    }
    return t;
  }
  throw Error(ErrorCode::Unsupported, std::string("no generator table for ") + family_name(d->family()));
}

namespace {

NormalizationTable require_integral(NormalizationTable t, std::string name) {
  t.preset = std::move(name);
  for (const auto& r : t.rows)
    if (!is_integer(r.exponent)) throw Error(ErrorCode::NotIntegral, "preset exponent " + to_string(r.exponent));
  return t;
}

}  // namespace

NormalizationTable preset_modular_curve(long k) {
  auto d = RootDatum::gsp(1);
  return require_integral(generator_table(symplectic_weight(d, {{Rational(k)}}, {Rational(-k)})), "modular-curve");
}

NormalizationTable preset_hilbert(const std::vector<long>& k_sigma, long k, const std::vector<int>& place_degrees) {
  int total = 0;
  for (int e : place_degrees) total += e;
  if (total != static_cast<int>(k_sigma.size()))
    throw Error(ErrorCode::ShapeError, "number of weights must equal the number of embeddings");
  auto d = RootDatum::gsp(1, place_degrees);
  std::vector<Vec> active;
  Vec sims;
  for (long ks : k_sigma) {
    active.push_back({Rational(ks)});
    sims.push_back(Rational(k));
  }
  return require_integral(generator_table(symplectic_weight(d, active, sims)), "hilbert");
}

NormalizationTable preset_siegel(const std::vector<long>& k) {
  if (k.empty()) throw Error(ErrorCode::BadRank, "g must be at least 1");
  auto d = RootDatum::gsp(static_cast<int>(k.size()));
  Vec ks;
  Rational s = 0;
  for (long v : k) {
    ks.push_back(Rational(v));
    s += v;
  }
  return require_integral(generator_table(symplectic_weight(d, {ks}, {-s})), k.size() == 2 ? "gsp4" : "gsp2g");
}

NormalizationTable preset_gu21(long k1, long k2, long k3) {
  auto d = RootDatum::unitary(3, {{3, 1, 2}});
  Weight kappa = Weight::from_copies(d, {{Rational(-k2), Rational(-k1), Rational(k3)}}, {}, Rational(-k1 - k2 - k3));
  return require_integral(generator_table(kappa), "gu21");
}

}  // namespace hecke
