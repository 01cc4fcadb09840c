#include "doctest.h"
#include "hecke/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

using namespace hecke;

namespace {

using W = AffineWeylElement;

// Breadth-first search in the Coxeter part: word length and one reduced word
// (the BFS path), independent of the inversion-count formula.
std::map<W, std::vector<int>> ball(AffineType t, int rank, int radius) {
  std::map<W, std::vector<int>> seen;
  std::deque<W> q;
  W e = W::identity(t, rank);
  seen[e] = {};
  q.push_back(e);
  while (!q.empty()) {
    W x = q.front();
    q.pop_front();
    auto word = seen[x];
    if (static_cast<int>(word.size()) == radius) continue;
    for (int k = 0; k < num_generators(t, rank); ++k) {
      W y = x * W::simple(t, rank, k);
      if (seen.count(y)) continue;
      auto w2 = word;
      w2.push_back(k);
      seen[y] = w2;
      q.push_back(y);
    }
  }
  return seen;
}

std::set<W> subword_products(const W& prefix, const std::vector<int>& word, AffineType t, int rank) {
  std::set<W> out;
  for (unsigned long mask = 0; mask < (1UL << word.size()); ++mask) {
    W x = prefix;
    for (size_t i = 0; i < word.size(); ++i)
      if ((mask >> i) & 1) x = x * W::simple(t, rank, word[i]);
    out.insert(x);
  }
  return out;
}

W length_zero(AffineType t, int rank) {
  // rotation i -> i+1 for GL; for GSp the length-zero part of t_mu
  if (t == AffineType::GL) {
    std::vector<long> w;
    for (int i = 2; i <= rank + 1; ++i) w.push_back(i);
    return W(t, rank, w);
  }
  std::vector<long> mu(2 * rank, 0);
  for (int i = 0; i < rank; ++i) mu[i] = 1;
  W rest;
  reduced_word(W::translation(t, rank, mu), &rest);
  return rest;
}

}  // namespace

TEST_CASE("translations and lengths") {
  CHECK(length(W::identity(AffineType::GL, 2)) == 0);
  CHECK(length(W::translation(AffineType::GL, 2, {1, 0})) == 1);
  CHECK(length(W::simple(AffineType::GL, 2, 0)) == 1);
  // s0 = t_{(-1,1)} (1,2)
  CHECK(W::simple(AffineType::GL, 2, 0) == W::from_parts(AffineType::GL, 2, {-1, 1}, {1, 0}));
  CHECK(W::simple(AffineType::GSP, 2, 0) == W::from_parts(AffineType::GSP, 2, {-1, 0, 0, 1}, {3, 1, 2, 0}));
  for (int g = 1; g <= 4; ++g) {
    std::vector<long> mu(2 * g, 0);
    for (int i = 0; i < g; ++i) mu[i] = 1;
    W t = W::translation(AffineType::GSP, g, mu);
    CHECK(length(t) == g * (g + 1) / 2);
    CHECK(stratum_dimension(t) == g * (g + 1) / 2);
    // w_mu = (s_g ... s_1)(s_g ... s_2) ... (s_g)
    std::vector<int> word;
    for (int a = 1; a <= g; ++a)
      for (int k = g; k >= a; --k) word.push_back(k);
    CHECK(length(from_word(AffineType::GSP, g, word)) == g * (g + 1) / 2);
  }
  Coweight v(RootDatum::gl(2), {1, 0});
  CHECK(translation(v) == W::translation(AffineType::GL, 2, {1, 0}));
  CHECK_THROWS_AS(translation(Coweight(RootDatum::gl(2), {Rational(1, 2), 0})), Error);
  // GSp coweight (1/2,1/2;1/2) is mu = (1,1,0,0)
  Coweight m(RootDatum::gsp(2), {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(translation(m) == W::translation(AffineType::GSP, 2, {1, 1, 0, 0}));
}

TEST_CASE("group laws") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      std::vector<long> u(n), v(n);
      for (int i = 0; i < n; ++i) u[i] = dist(rng), v[i] = dist(rng);
      std::vector<long> s(n);
      for (int i = 0; i < n; ++i) s[i] = u[i] + v[i];
      W tu = W::translation(AffineType::GL, n, u), tv = W::translation(AffineType::GL, n, v);
      CHECK(tu * tv == W::translation(AffineType::GL, n, s));
      CHECK((tu * tu.inverse()) == W::identity(AffineType::GL, n));
      std::vector<int> sigma(n);
      for (int i = 0; i < n; ++i) sigma[i] = i;
      std::shuffle(sigma.begin(), sigma.end(), rng);
      W x = W::from_parts(AffineType::GL, n, u, sigma);
      CHECK(x.translation_part() == u);
      CHECK(x.finite_part() == sigma);
    }
  }
}

TEST_CASE("length formula matches word length") {
  struct Case {
    AffineType t;
    int rank, radius;
  };
  for (auto c : {Case{AffineType::GL, 2, 8}, Case{AffineType::GL, 3, 6}, Case{AffineType::GSP, 1, 8},
                 Case{AffineType::GSP, 2, 7}, Case{AffineType::GSP, 3, 5}}) {
    auto b = ball(c.t, c.rank, c.radius);
    W om = length_zero(c.t, c.rank);
    CHECK(length(om) == 0);
    for (auto& [x, word] : b) {
      CHECK(length(x) == static_cast<int>(word.size()));
      CHECK(length(x * om) == static_cast<int>(word.size()));
      CHECK(length(om * x) == static_cast<int>(word.size()));
      CHECK(from_word(c.t, c.rank, reduced_word(x)) == x);
    }
  }
}

TEST_CASE("subadditivity and dominant translation length") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<long> u(3), v(3);
    for (int i = 0; i < 3; ++i) u[i] = dist(rng), v[i] = dist(rng);
    W a = W::translation(AffineType::GL, 3, u) * W::simple(AffineType::GL, 3, t % 3);
    W b = W::translation(AffineType::GL, 3, v);
    CHECK(length(a * b) <= length(a) + length(b));
    std::sort(u.begin(), u.end(), std::greater<>());
    long two_rho = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) two_rho += u[i] - u[j];
    CHECK(length(W::translation(AffineType::GL, 3, u)) == two_rho);
  }
}

TEST_CASE("Bruhat order against exhaustive subwords") {
  struct Case {
    AffineType t;
    int rank, radius;
  };
  for (auto c : {Case{AffineType::GL, 2, 4}, Case{AffineType::GL, 3, 4}, Case{AffineType::GSP, 2, 4}}) {
    auto b = ball(c.t, c.rank, c.radius);
    W om = length_zero(c.t, c.rank);
    std::vector<W> elems;
    for (auto& [x, w] : b) elems.push_back(x);
    for (auto& v : elems) {
      auto below = subword_products(W::identity(c.t, c.rank), b[v], c.t, c.rank);
      for (auto& u : elems) {
        bool expect = below.count(u) > 0;
        CHECK(bruhat_leq(u, v) == expect);
        CHECK(bruhat_leq(om * u, om * v) == expect);
        if (expect && u != v) CHECK_FALSE(bruhat_leq(v, u));
      }
      CHECK(bruhat_leq(v, v));
      CHECK(bruhat_leq(W::identity(c.t, c.rank), v));
      CHECK_FALSE(bruhat_leq(om, v));
    }
  }
}

TEST_CASE("admissible sets") {
  auto a = admissible_set(AffineType::GL, 2, {0, 1}, {1, 0});
  REQUIRE(a.elements.size() == 3);
  std::multiset<int> dims, lens;
  int maximal = 0;
  for (auto& e : a.elements) {
    dims.insert(e.dimension);
    lens.insert(e.length);
    maximal += e.translation;
  }
  CHECK(dims == std::multiset<int>{0, 1, 1});
  CHECK(lens == std::multiset<int>{0, 1, 1});
  CHECK(maximal == 2);
  CHECK(a.elements[0].length == 0);

  CHECK_THROWS_AS(admissible_set(AffineType::GL, 2, {}, {1, 0}), Error);
  CHECK_THROWS_AS(admissible_set(AffineType::GL, 2, {0}, {2, 0}), Error);

  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p < n; ++p) {
      std::vector<long> mu(n, 0);
      std::vector<int> full(n);
      for (int i = 0; i < n; ++i) full[i] = i;
      for (int i = 0; i < p; ++i) mu[i] = 1;
      auto s = admissible_set(AffineType::GL, n, full, mu);
      long tr = std::count_if(s.elements.begin(), s.elements.end(), [](auto& e) { return e.translation; });
      CHECK(tr == binom(n, p));
    }
  for (int g = 1; g <= 3; ++g) {
    std::vector<long> mu(2 * g, 0);
    std::vector<int> full;
    for (int i = 0; i <= g; ++i) full.push_back(i);
    for (int i = 0; i < g; ++i) mu[i] = 1;
    auto s = admissible_set(AffineType::GSP, g, full, mu);
    long tr = std::count_if(s.elements.begin(), s.elements.end(), [](auto& e) { return e.translation; });
    CHECK(tr == (1L << g));
    for (auto& e : s.elements) {
      CHECK(e.dimension == e.length);
      if (e.translation) CHECK(e.dimension == g * (g + 1) / 2);
    }
  }
}

TEST_CASE("admissible set structure for the Iwahori level") {
  struct Case {
    AffineType t;
    int rank;
    std::vector<long> mu;
  };
  for (auto c : {Case{AffineType::GL, 3, {1, 0, 0}}, Case{AffineType::GL, 4, {1, 1, 0, 0}},
                 Case{AffineType::GSP, 2, {1, 1, 0, 0}}}) {
    std::vector<int> full;
    for (int i = 0; i < num_generators(c.t, c.rank); ++i) full.push_back(i);
    auto s = admissible_set(c.t, c.rank, full, c.mu);
    std::set<W> adm;
    for (auto& e : s.elements) adm.insert(e.w);
    // downward closed
    for (auto& e : s.elements) {
      W rest;
      auto word = reduced_word(e.w, &rest);
      for (auto& x : subword_products(rest, word, c.t, c.rank)) CHECK(adm.count(x) == 1);
    }
    // maximal elements are exactly the translations
    for (auto& e : s.elements) {
      bool is_max = true;
      for (auto& f : s.elements)
        if (f.w != e.w && bruhat_leq(e.w, f.w)) is_max = false;
      CHECK(is_max == e.translation);

    }
    // ordering
    for (size_t i = 1; i < s.elements.size(); ++i) CHECK(s.elements[i - 1].length <= s.elements[i].length);
  }
}

TEST_CASE("parahoric admissible sets") {
  // maximal parahoric for GL_2: both translations collapse into one double coset
  auto a = admissible_set(AffineType::GL, 2, {0}, {1, 0});
  CHECK(a.elements.size() == 1);
  CHECK(a.elements[0].dimension == 1);
  for (int g = 1; g <= 3; ++g) {
    std::vector<long> mu(2 * g, 0);
    for (int i = 0; i < g; ++i) mu[i] = 1;
    auto s0 = admissible_set(AffineType::GSP, g, {0}, mu);
    int top = 0;
    for (auto& e : s0.elements) top = std::max(top, e.dimension);
    CHECK(top == g * (g + 1) / 2);
  }
}

TEST_CASE("Kostant representatives") {
  auto k1 = kostant_representatives(1);
  REQUIRE(k1.size() == 2);
  CHECK(k1[0].length == 0);
  CHECK(k1[0].s == std::vector<int>{1});
  CHECK(k1[1].length == 1);
  CHECK(k1[1].s == std::vector<int>{2});
  for (int g = 1; g <= 5; ++g) {
    auto ks = kostant_representatives(g);
    CHECK(ks.size() == (1UL << g));
    for (auto& r : ks) {
      CHECK(r.length == r.formula_length);
      for (int i = 1; i <= g; ++i) {
        bool one = std::count(r.s.begin(), r.s.end(), i) + std::count(r.s.begin(), r.s.end(), 2 * g + 1 - i) == 1;
        CHECK(one);
      }
    }
    std::vector<int> incl;
    for (int i = 1; i <= g; ++i) incl.push_back(i);
    CHECK(ks[0].s == incl);
    CHECK(ks[0].length == 0);
  }
}
