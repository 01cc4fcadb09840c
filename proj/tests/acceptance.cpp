// One line per acceptance criterion; exit status 1 if any fails.
#include "hecke/affine_weyl.hpp"
#include "hecke/hecke_characters.hpp"
#include "hecke/local_model.hpp"
#include "hecke/newton_hodge.hpp"
#include "hecke/normalization.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace hecke;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) out.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s));
  if (!out.ok) ++failures;
  std::printf("%s %2d  %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, s, out.ok ? "" : ": ",
              out.detail.c_str());
}

Vec sorted_desc(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  Vec v(n);
  for (auto& x : v) x = u(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Dominant coweights of GL_n with nonnegative entries summing to total.
std::vector<std::vector<long>> partitions(int n, long total) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long, long)> gen = [&](long rem, long cap) {
    if (static_cast<int>(cur.size()) == n) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (long x = std::min(rem, cap); x >= 0; --x) {
      cur.push_back(x);
      gen(rem - x, x);
      cur.pop_back();
    }
  };
  gen(total, total);
  return out;
}

Rational eval_at(const LaurentPoly& f, long p) {
  Rational v = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2) throw Error(ErrorCode::NotIntegral, "odd power of q^(1/2)");
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e / 2)));
    v += e >= 0 ? Rational(c * pw) : Rational(c) / Rational(pw);
  }
  return v;
}

Rational det(std::vector<Vec> m) {
  int n = static_cast<int>(m.size());
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

}  // namespace

int main() {
  criterion(1, "modular-curve exponent -inf{1,k} for k in [-10,10]", 1.0, [](Outcome& o) {
    for (long k = -10; k <= 10; ++k) {
      long expect = -std::min(1L, k);
      if (symplectic_exponent({{Rational(k)}}, Rational(-k)) != expect) o.fail("closed form at k=" + std::to_string(k));
      auto t = preset_modular_curve(k);
      if (t.rows[0].exponent != expect) o.fail("pairing at k=" + std::to_string(k));
      if (t.rows[1].exponent != -k) o.fail("S exponent at k=" + std::to_string(k));
    }
  });

  criterion(2, "Hilbert per-embedding exponent on 100 random weights", 0, [](Outcome& o) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> u(-12, 12);
    int done = 0;
    while (done < 100) {
      long ks = u(rng), k = u(rng);
      if ((ks - k) % 2) continue;
      Rational expect = std::max<Rational>(frac(ks + k, 2) - 1, frac(k - ks, 2));
      if (Rational(symplectic_exponent({{Rational(ks)}}, Rational(k))) != expect) o.fail("closed form");
      auto t = preset_hilbert({ks}, k, {1});
      if (t.rows[0].exponent != expect) o.fail("pairing");
      ++done;
    }
  });

  criterion(3, "GU(2,1) table for 0 <= k2 <= k1 <= 8", 0, [](Outcome& o) {
    for (long k1 = 0; k1 <= 8; ++k1)
      for (long k2 = 0; k2 <= k1; ++k2) {
        auto t = preset_gu21(k1, k2);
        Rational expect[4] = {-1, -1 - std::min(1L, k2), -1 - std::min(k2, k1 + k2), -k1 - k2};
        for (int j = 0; j < 4; ++j)
          if (t.rows[j].exponent != expect[j] || t.rows[j].closed_form != expect[j])
            o.fail("k=(" + std::to_string(k1) + "," + std::to_string(k2) + ") j=" + std::to_string(j));
      }
  });

  criterion(4, "local-model exponent equals group exponent on >= 500 random weights", 10.0, [](Outcome& o) {
    std::mt19937 rng(4);
    int weights = 0;
    for (int g = 1; g <= 3; ++g)
      for (int it = 0; it < 150; ++it, ++weights) {
        Vec k = sorted_desc(rng, g, -8, 8);
        if (normalized_correspondence_exponent_symplectic(k) != symplectic_exponent({k}, -sum(k))) o.fail("symplectic");
      }
    for (int n = 1; n <= 4; ++n)
      for (int p = 0; p <= n; ++p)
        for (int it = 0; it < 15; ++it, ++weights) {
          Vec a = sorted_desc(rng, p, -8, 8), b = sorted_desc(rng, n - p, -8, 8);
          for (int j = 0; j <= n; ++j)
            if (normalized_correspondence_exponent_linear(a, b, j) != unitary_exponent({{a, b}}, {}, j)) o.fail("linear");
        }
    if (weights < 500) o.fail("only " + std::to_string(weights) + " weights");
  });

  criterion(5, "component counts and kernel ranks against the Lie-quotient oracle", 0, [](Outcome& o) {
    for (int g = 1; g <= 4; ++g)
      if (static_cast<int>(strata_symplectic(g).size()) != g + 1) o.fail("symplectic count");
    for (int n = 2; n <= 6; ++n)
      for (int p = 0; p <= n; ++p)
        for (int j = 1; j < n; ++j) {
          int q = n - p;
          auto st = strata_linear(n, p, q, j);
          if (static_cast<int>(st.size()) != std::min(p, j) - std::max(0, j - q) + 1) o.fail("linear count");
          for (const auto& r : st)
            if (lie_quotient_oracle_linear(n, p, q, j, r.param) != r.kernel_rank) o.fail("linear kernel rank");
        }
    for (int g = 1; g <= 3; ++g)
      for (const auto& r : strata_symplectic(g))
        if (lie_quotient_oracle_symplectic(g, r.param) != r.kernel_rank) o.fail("symplectic kernel rank");
  });

  criterion(6, "finite-field census signatures", 30.0, [](Outcome& o) {
    auto adm = admissible_set(AffineType::GL, 2, {0, 1}, {1, 0}).elements.size();
    if (adm != 3) o.fail("|Adm(mu)| = " + std::to_string(adm));
    for (int q0 : {2, 3}) {
      auto c = finite_field_census_linear(2, 1, 1, {0, 1}, q0);
      if (c.buckets.size() != 3 || c.buckets.size() != adm) o.fail("modular curve over F_" + std::to_string(q0));
    }
    auto l = finite_field_census_linear(3, 2, 1, {0, 1}, 2);
    if (l.top_dimensional() != 2) o.fail("(3,2,1) top-dimensional signatures: " + std::to_string(l.top_dimensional()));
  });

  criterion(7, "Satake triangularity from the coset oracle", 0, [](Outcome& o) {
    for (int n = 2; n <= 3; ++n) {
      auto d = RootDatum::gl(n);
      for (long total = 1; total <= 3; ++total)
        for (const auto& lam : partitions(n, total)) {
          Coweight L(d, Vec(lam.begin(), lam.end()));
          auto poly = satake_coefficients(n, lam);
          for (long p : {2L, 3L, 5L}) {
            auto a = satake_coset_oracle(n, lam, p);
            if (a.at(lam) != 1) o.fail("a(lambda) != 1");
            for (const auto& [mu, v] : a) {
              if (!dominance_leq(Coweight(d, Vec(mu.begin(), mu.end())), L) && v != 0) o.fail("nonzero below order");
              auto it = poly.find(mu);
              Rational interp = it == poly.end() ? Rational(0) : eval_at(it->second, p);
              if (interp != Rational(v)) o.fail("interpolated coefficient differs at p=" + std::to_string(p));
            }
          }
        }
    }
  });

  criterion(8, "trace basis is unitriangular and [V] has determinant 1", 0, [](Outcome& o) {
    std::vector<Coweight> lams;
    auto gl2 = RootDatum::gl(2), gl3 = RootDatum::gl(3), gsp2 = RootDatum::gsp(2);
    for (auto& v : std::vector<Vec>{{2, 0}, {3, 0}, {3, 1}}) lams.push_back(Coweight(gl2, v));
    for (auto& v : std::vector<Vec>{{2, 1, 0}, {3, 0, 0}, {2, 2, -1}, {4, 0, 0}}) lams.push_back(Coweight(gl3, v));
    auto r2 = RootDatum::res({{2, 2, 0}});
    lams.push_back(Coweight(r2, {2, 0, 2, 0}));
    lams.push_back(Coweight(r2, {2, 1, 2, 1}));
    for (const auto& lam : lams) {
      auto t = twisted_character(lam);
      if (t.terms.at(lam) != 1) o.fail("leading coefficient " + lam.str());
      for (const auto& [mu, c] : t.terms)
        if (!c.is_constant() || !dominance_leq(mu, lam)) o.fail("not unitriangular/integral at " + lam.str());
    }
    // saturated posets: all dominant weights below a top weight
    std::vector<Coweight> tops{Coweight(gl3, {3, 0, 0}), Coweight(gl3, {4, 1, 0}), Coweight(gl2, {4, 0}),
                               Coweight(gsp2, {-1, -2, -2})};
    for (const auto& top : tops) {
      std::vector<Coweight> poset;
      for (const auto& [mu, m] : dominant_character(top)) poset.push_back(mu);
      if (poset.size() < 2) o.fail("trivial poset below " + top.str());
      std::vector<Vec> mat;
      for (const auto& lam : poset) {
        auto ch = dominant_character(lam);
        Vec row;
        for (const auto& mu : poset) row.push_back(ch.count(mu) ? Rational(ch.at(mu)) : Rational(0));
        mat.push_back(row);
      }
      if (det(mat) != 1) o.fail("determinant on the poset below " + top.str());
    }
  });

  criterion(9, "Lafforgue sweep agrees with direct Newton comparison (1000 classes)", 0, [](Outcome& o) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3), which(2, 3);
    int disagreements = 0;
    for (int t = 0; t < 1000; ++t) {
      int n = which(rng);
      auto d = RootDatum::gl(n);
      Vec v;
      while (static_cast<int>(v.size()) < n) {
        Rational x = frac(num(rng), den(rng));
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
      }
      Vec target(n);
      for (auto& x : target) x = frac(num(rng), den(rng));
      if (t % 2 == 0) target.back() += sum(v) - sum(target);
      auto res = lafforgue_check({d, v}, newton_map({d, target}), 4);
      if (res.trace == Verdict::INDETERMINATE || res.direct != (res.trace == Verdict::PASS)) ++disagreements;
    }
    if (disagreements) o.fail(std::to_string(disagreements) + " disagreements");
  });

  criterion(10, "Katz-Mazur verifier", 0, [](Outcome& o) {
    std::mt19937 rng(10);
    std::uniform_int_distribution<int> gap(2, 4), start(-6, 6), size(2, 5);
    for (int t = 0; t < 300; ++t) {
      int n = size(rng);
      Vec lam{Rational(start(rng))};
      while (static_cast<int>(lam.size()) < n) lam.push_back(lam.back() - gap(rng));
      Vec v;
      for (auto& x : lam) v.push_back(-x);  // Hodge polygon, ascending
      // transfers toward the middle keep the polygon above with the same endpoint
      for (int m = 0; m < 3; ++m) {
        int i = std::uniform_int_distribution<int>(0, n - 2)(rng);
        int j = std::uniform_int_distribution<int>(i + 1, n - 1)(rng);
        Rational room = (v[j] - v[i]) / 2;
        Rational shift = room * std::uniform_int_distribution<int>(0, 2)(rng) / 2;
        v[i] += shift;
        v[j] -= shift;
      }
      auto ok = katz_mazur_check(v, {lam});
      if (!ok.pass || !ok.equality_at_n) o.fail("constructed valid input rejected");
      int k0 = std::uniform_int_distribution<int>(1, n)(rng);
      Vec w;
      for (auto& x : lam) w.push_back(-x);
      w[k0 - 1] -= 1;
      if (k0 < n) w[n - 1] += 1;
      auto bad = katz_mazur_check(w, {lam});
      if (bad.pass || bad.first_failure != k0) o.fail("violation not located at k=" + std::to_string(k0));
    }
    for (int k = 1; k <= 10; ++k) {
      Vec lam{frac(k - 1, 2), frac(1 - k, 2)};
      for (int num = -12; num <= 12; ++num) {
        Rational v1 = frac(num, 2);
        bool expect = std::min(v1, Rational(-v1)) >= frac(1 - k, 2);
        if (katz_mazur_check({v1, -v1}, {lam}).pass != expect) o.fail("weight-k bound at k=" + std::to_string(k));
      }
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
