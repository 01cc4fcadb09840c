#include "hecke/hecke_characters.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <thread>

namespace hecke {

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) t_[0] = c;
}

LaurentPoly LaurentPoly::q_power(const Rational& exponent, const Integer& coef) {
  Rational h = exponent * 2;
  if (!is_integer(h)) throw Error(ErrorCode::NotIntegral, "q exponent must be a half-integer");
  LaurentPoly p;
  if (coef != 0) p.t_[to_long(h)] = coef;
  return p;
}

void LaurentPoly::trim() {
  for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
}

Integer LaurentPoly::constant_term() const {
  auto it = t_.find(0);
  return it == t_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::coefficient(const Rational& q_exponent) const {
  Rational h = q_exponent * 2;
  if (!is_integer(h)) return 0;
  auto it = t_.find(to_long(h));
  return it == t_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::eval_sqrt(const Integer& x) const {
  Rational v = 0;
  for (auto& [e, c] : t_) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    v += e >= 0 ? Rational(c * pw) : frac(c, pw);
  }
  if (!is_integer(v)) throw Error(ErrorCode::NotIntegral, "Laurent polynomial value is not integral");
  return v.get_num();
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.t_) r.t_[e] += c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : t_)
    for (auto& [e2, c2] : o.t_) r.t_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

std::string LaurentPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Integer c = it->second;
    long e = it->first;
    bool neg = c < 0;
    Integer a = neg ? Integer(-c) : c;
    if (!s.empty() || neg) s += neg ? "-" : "+";
    std::string mono;
    if (e == 2) mono = "q";
    else if (e % 2 == 0) mono = "q^" + std::to_string(e / 2);
    else mono = "q^(" + std::to_string(e) + "/2)";
    if (e == 0) s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
  }
  return s;
}

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::T: return "T";
    case Basis::V: return "V";
    case Basis::Monomial: return "monomial";
  }
  return "?";
}

std::string HeckeElement::str() const {
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.str() + ")" + (basis == Basis::T ? "T" : basis == Basis::V ? "V" : "") + "[" +
         it->first.str() + "]";
  }
  return s.empty() ? "0" : s;
}

std::optional<Vec> simple_root_coordinates(const RootDatum& d, const Vec& delta) {
  Vec out;
  for (int c = 0; c < d.num_copies(); ++c) {
    int n = d.copy_size(c), off = d.copy_offset(c);
    if (d.is_gsp_type()) {
      // simple roots e_k - e_{k+1} and -e_1
      Rational tail = 0;
      Vec cs(n - 1);
      for (int k = n - 1; k >= 1; --k) {
        tail += delta[off + k];
        cs[k - 1] = -tail;
      }
      Rational b = -(tail + delta[off]);
      out.push_back(b);
      out.insert(out.end(), cs.begin(), cs.end());
      if (delta[d.similitude_index(c)] != 0) return std::nullopt;
    } else {
      Rational partial = 0;
      for (int k = 0; k < n; ++k) {
        partial += delta[off + k];
        if (k < n - 1) out.push_back(partial);
      }
      if (partial != 0) return std::nullopt;
    }
  }
  if (d.has_central() && delta[d.central_index()] != 0) return std::nullopt;
  for (auto& x : out)
    if (!is_integer(x)) return std::nullopt;
  return out;
}

bool in_root_lattice_cone(const Coweight& mu, const Coweight& lambda) {
  require_same(mu.datum(), lambda.datum());
  auto cs = simple_root_coordinates(mu.datum(), (lambda - mu).coords());
  if (!cs) return false;
  for (auto& x : *cs)
    if (x < 0) return false;
  return true;
}

namespace {

Rational norm2(const Vec& x) { return dot(x, x); }

void require_dominant(const Coweight& lambda) {
  if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, "highest weight " + lambda.str() + " is not dominant");
}

std::vector<Coweight> dominant_weights(const Coweight& lambda) {
  const DatumPtr& d = lambda.datum_ptr();
  auto roots = d->positive_coroots();
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> q{lambda};
  while (!q.empty()) {
    Coweight nu = q.front();
    q.pop_front();
    for (const auto& a : roots) {
      Coweight x = dominant_representative(nu - Coweight(d, a)).first;
      if (seen.count(x) || !in_root_lattice_cone(x, lambda)) continue;
      seen.insert(x);
      q.push_back(x);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::map<Coweight, Integer> dominant_character(const Coweight& lambda) {
  require_dominant(lambda);
  const DatumPtr& d = lambda.datum_ptr();
  auto doms = dominant_weights(lambda);
  Vec rho = rho_check(d).coords();
  auto roots = d->positive_coroots();
  auto height = [&](const Coweight& mu) {
    auto cs = simple_root_coordinates(*d, (lambda - mu).coords());
    return cs ? sum(*cs) : Rational(0);
  };
  std::sort(doms.begin(), doms.end(), [&](const Coweight& a, const Coweight& b) {
    Rational ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  auto shifted = [&](const Vec& x) {
    Vec y = x;
    for (size_t i = 0; i < y.size(); ++i) y[i] += rho[i];
    return y;
  };
  Rational top = norm2(shifted(lambda.coords()));
  std::map<Coweight, Integer> mult;
  mult[lambda] = 1;
  for (const auto& mu : doms) {
    if (mu == lambda) continue;
    Rational acc = 0;
    for (const auto& a : roots) {
      for (long k = 1;; ++k) {
        Vec x = mu.coords();
        for (size_t i = 0; i < x.size(); ++i) x[i] += k * a[i];
        Coweight y(d, x);
        Coweight yd = dominant_representative(y).first;
        auto it = mult.find(yd);
        if (it == mult.end()) {
          if (!in_root_lattice_cone(yd, lambda)) break;
          continue;
        }
        acc += 2 * dot(x, a) * Rational(it->second);
      }
    }
    Rational denom = top - norm2(shifted(mu.coords()));
    Rational m = acc / denom;
    if (!is_integer(m) || m < 0) throw Error(ErrorCode::InputError, "Freudenthal recursion produced a non-integer");
    if (m != 0) mult[mu] = m.get_num();
  }
  return mult;
}

std::vector<Coweight> weyl_orbit(const Coweight& mu) {
  const DatumPtr& d = mu.datum_ptr();
  std::set<Coweight> seen{mu};
  std::deque<Coweight> q{mu};
  while (!q.empty()) {
    Coweight x = q.front();
    q.pop_front();
    for (int c = 0; c < d->num_copies(); ++c)
      for (int k = 0; k < num_simple(*d, c); ++k) {
        Coweight y = simple_reflection(d, c, k).apply(x);
        if (seen.insert(y).second) q.push_back(y);
      }
  }
  return {seen.begin(), seen.end()};
}

std::map<Coweight, Integer> full_character(const Coweight& lambda) {
  std::map<Coweight, Integer> out;
  for (auto& [mu, m] : dominant_character(lambda))
    for (auto& x : weyl_orbit(mu)) out[x] = m;
  return out;
}

Integer weight_multiplicity(const Coweight& lambda, const Coweight& mu) {
  require_same(lambda.datum(), mu.datum());
  auto ch = dominant_character(lambda);
  auto it = ch.find(dominant_representative(mu).first);
  return it == ch.end() ? Integer(0) : it->second;
}

Integer weyl_dimension(const Coweight& lambda) {
  require_dominant(lambda);
  const DatumPtr& d = lambda.datum_ptr();
  Vec rho = rho_check(d).coords();
  Vec lr = lambda.coords();
  for (size_t i = 0; i < lr.size(); ++i) lr[i] += rho[i];
  Rational v = 1;
  for (auto& a : d->positive_coroots()) v *= dot(lr, a) / dot(rho, a);
  return v.get_num();
}

DatumPtr block_datum(const DatumPtr& d) {
  std::vector<Block> reduced = d->blocks();
  for (auto& b : reduced) b.degree = 1;
  return std::make_shared<const RootDatum>(d->family(), reduced);
}

Coweight block_restriction(const Coweight& lambda) {
  const DatumPtr& d = lambda.datum_ptr();
  if (!lambda.is_gamma_invariant()) throw Error(ErrorCode::NotInvariant, lambda.str() + " is not Frobenius-invariant");
  std::vector<Vec> act;
  Vec sims;
  for (size_t b = 0; b < d->blocks().size(); ++b) {
    int c = d->first_copy(static_cast<int>(b));
    act.push_back(lambda.copy(c));
    sims.push_back(lambda.similitude(c));
  }
  return Coweight::from_copies(block_datum(d), act, sims, lambda.central());
}

HeckeElement twisted_character(const Coweight& lambda) {
  const DatumPtr& d = lambda.datum_ptr();
  if (!lambda.is_gamma_invariant()) throw Error(ErrorCode::NotInvariant, lambda.str() + " is not Frobenius-invariant");
  require_dominant(lambda);
  // one copy per block; the trace of (c_1,...,c_k) x sigma on the k-fold tensor
  // power is the trace of c_1 ... c_k on one factor
  Coweight lam0 = block_restriction(lambda);
  HeckeElement out;
  out.datum = d;
  out.basis = Basis::Monomial;
  for (auto& [mu, m] : dominant_character(lam0)) {
    std::vector<Vec> full;
    Vec fs;
    for (int c = 0; c < d->num_copies(); ++c) {
      full.push_back(mu.copy(d->copy_block(c)));
      fs.push_back(mu.similitude(d->copy_block(c)));
    }
    out.terms[Coweight::from_copies(d, full, fs, mu.central())] = LaurentPoly(m);
  }
  return out;
}

bool dominance_leq(const Coweight& mu, const Coweight& lambda) {
  require_same(mu.datum(), lambda.datum());
  return coroot_cone_membership(lambda - mu);
}

std::vector<long> elementary_divisors(std::vector<std::vector<long>> a, long p, int precision) {
  using i128 = __int128;
  long mod = 1;
  for (int i = 0; i < precision; ++i) mod *= p;
  size_t n = a.size();
  auto norm = [&](long x) { return ((x % mod) + mod) % mod; };
  auto val = [&](long x) {
    if (x == 0) return precision;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto inv = [&](long x) {  // x a unit mod p^precision
    long t = 0, nt = 1, r = mod, nr = norm(x);
    while (nr) {
      long qq = r / nr;
      long tmp = t - qq * nt;
      t = nt;
      nt = tmp;
      tmp = r - qq * nr;
      r = nr;
      nr = tmp;
    }
    return norm(t);
  };
  for (auto& row : a)
    for (auto& x : row) x = norm(x);
  std::vector<long> out;
  for (size_t k = 0; k < n; ++k) {
    size_t bi = k, bj = k;
    int bv = precision + 1;
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < n; ++j) {
        int v = val(a[i][j]);
        if (v < bv) bv = v, bi = i, bj = j;
      }
    if (bv >= precision) {
      for (size_t r = k; r < n; ++r) out.push_back(precision);
      break;
    }
    std::swap(a[k], a[bi]);
    for (auto& row : a) std::swap(row[k], row[bj]);
    long pv = 1;
    for (int i = 0; i < bv; ++i) pv *= p;
    long u = inv(a[k][k] / pv);
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      long f = static_cast<long>(static_cast<i128>(a[i][k] / pv) * u % mod);
      for (size_t j = k; j < n; ++j) a[i][j] = norm(static_cast<long>((a[i][j] - static_cast<i128>(f) * a[k][j]) % mod));
    }
    for (size_t j = k + 1; j < n; ++j) {
      if (a[k][j] == 0) continue;
      long f = static_cast<long>(static_cast<i128>(a[k][j] / pv) * u % mod);
      for (size_t i = k; i < n; ++i) a[i][j] = norm(static_cast<long>((a[i][j] - static_cast<i128>(f) * a[i][k]) % mod));
    }
    out.push_back(bv);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

std::vector<std::vector<long>> partitions(long total, int parts, long max_part) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rem, long cap) {
    if (static_cast<int>(cur.size()) == parts) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (long x = std::min(rem, cap); x >= 0; --x) {
      cur.push_back(x);
      rec(rem - x, x);
      cur.pop_back();
    }
  };
  rec(total, max_part);
  return out;
}

void require_partition(const std::vector<long>& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw Error(ErrorCode::Unsupported, "coset oracle needs nonnegative entries");
    if (i && lambda[i] > lambda[i - 1]) throw Error(ErrorCode::NotDominant, "lambda must be decreasing");
  }
}

long ipow(long p, long e) {
  long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// Left cosets in K diag(p^e) N(O): upper triangular Hermite forms with
// diagonal p^{e_i}, entry (i,j) reduced modulo p^{e_i}.  Counts those whose
// elementary divisors are lambda.
Integer count_with_diagonal(const std::vector<long>& e, const std::vector<long>& lambda, long p, int threads) {
  int n = static_cast<int>(e.size());
  long total_deg = 0;
  for (long x : lambda) total_deg += x;
  int precision = static_cast<int>(total_deg) + 1;
  std::vector<std::pair<int, int>> slots;
  std::vector<long> radix;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e[i] > 0) {
        slots.push_back({i, j});
        radix.push_back(ipow(p, e[i]));
      }
  long count = 1;
  for (long r : radix) count *= r;
  std::vector<long> target = lambda;
  std::sort(target.begin(), target.end(), std::greater<>());
  auto work = [&](long from, long to) {
    long hits = 0;
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (long idx = from; idx < to; ++idx) {
      for (int i = 0; i < n; ++i) {
        std::fill(m[i].begin(), m[i].end(), 0);
        m[i][i] = ipow(p, e[i]);
      }
      long rest = idx;
      for (size_t s = 0; s < slots.size(); ++s) {
        m[slots[s].first][slots[s].second] = rest % radix[s];
        rest /= radix[s];
      }
      if (elementary_divisors(m, p, precision) == target) ++hits;
    }
    return hits;
  };
  int t = std::max(1, std::min<int>(threads, static_cast<int>(std::min<long>(count, 64))));
  if (t == 1) return Integer(work(0, count));
  std::vector<long> res(t, 0);
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k)
    pool.emplace_back([&, k] { res[k] = work(count * k / t, count * (k + 1) / t); });
  for (auto& th : pool) th.join();
  long sum = 0;
  for (long r : res) sum += r;
  return Integer(sum);
}

long degree_bound(const std::vector<long>& mu) {
  long d = 0;
  for (size_t k = 0; k < mu.size(); ++k) d += mu[k] * static_cast<long>(k);
  return d;
}

long enumeration_size(const std::vector<long>& mu, long p) {
  // reverse(mu) as diagonal: row i has n-1-i free entries mod p^{e_i}
  long n = static_cast<long>(mu.size());
  long s = 1;
  for (long i = 0; i < n; ++i) {
    long e = mu[n - 1 - i];
    for (long j = i + 1; j < n; ++j) {
      s *= ipow(p, e);
      if (s > (1L << 50)) return 1L << 50;
    }
  }
  return s;
}

std::vector<long> first_primes(int k) {
  std::vector<long> ps;
  for (long x = 2; static_cast<int>(ps.size()) < k; ++x) {
    bool prime = true;
    for (long q : ps)
      if (x % q == 0) prime = false;
    if (prime) ps.push_back(x);
  }
  return ps;
}

}  // namespace

std::map<std::vector<long>, Integer> satake_coset_oracle(int n, const std::vector<long>& lambda, long p,
                                                         const OracleOptions& opt) {
  if (n < 1 || static_cast<int>(lambda.size()) != n) throw Error(ErrorCode::ShapeError, "lambda must have n entries");
  require_partition(lambda);
  long total = 0;
  for (long x : lambda) total += x;
  auto mus = partitions(total, n, total);
  long cost = 0;
  for (auto& mu : mus) cost += enumeration_size(mu, p);
  if (cost > opt.budget) throw Error(ErrorCode::Oversize, "coset enumeration exceeds the budget");
  std::map<std::vector<long>, Integer> out;
  for (auto& mu : mus) {
    std::vector<long> e(mu.rbegin(), mu.rend());
    out[mu] = count_with_diagonal(e, lambda, p, opt.threads);
  }
  return out;
}

std::map<std::vector<long>, LaurentPoly> satake_coefficients(int n, const std::vector<long>& lambda,
                                                             const OracleOptions& opt) {
  if (static_cast<int>(lambda.size()) != n) throw Error(ErrorCode::ShapeError, "lambda must have n entries");
  require_partition(lambda);
  long total = 0;
  for (long x : lambda) total += x;
  auto mus = partitions(total, n, total);
  long cost = 0;
  for (auto& mu : mus) {
    long deg = degree_bound(mu);
    for (long p : first_primes(static_cast<int>(deg) + 2)) cost += enumeration_size(mu, p);
  }
  if (cost > opt.budget) throw Error(ErrorCode::Oversize, "coset enumeration exceeds the budget");
  std::vector<long> target(lambda);
  std::map<std::vector<long>, LaurentPoly> out;
  for (auto& mu : mus) {
    long deg = degree_bound(mu);
    std::vector<long> e(mu.rbegin(), mu.rend());
    auto primes = first_primes(static_cast<int>(deg) + 2);
    std::vector<Rational> xs, ys;
    for (long p : primes) {
      xs.push_back(p);
      ys.push_back(Rational(count_with_diagonal(e, target, p, opt.threads)));
    }
    // Newton divided differences on the first deg+1 points
    size_t m = static_cast<size_t>(deg) + 1;
    std::vector<Rational> coef(ys.begin(), ys.begin() + m);
    for (size_t j = 1; j < m; ++j)
      for (size_t i = m - 1; i >= j; --i) {
        coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
        if (i == j) break;
      }
    // expand to monomials
    std::vector<Rational> poly(m, 0);
    for (size_t k = m; k-- > 0;) {
      // poly = poly * (x - xs[k]) + coef[k]
      std::vector<Rational> next(m, 0);
      for (size_t i = 0; i < m; ++i) {
        if (poly[i] == 0) continue;
        if (i + 1 < m) next[i + 1] += poly[i];
        next[i] -= poly[i] * xs[k];
      }
      next[0] += coef[k];
      poly = next;
    }
    auto eval = [&](const Rational& x) {
      Rational v = 0;
      for (size_t i = m; i-- > 0;) v = v * x + poly[i];
      return v;
    };
    if (eval(xs.back()) != ys.back()) throw Error(ErrorCode::InputError, "coset counts are not polynomial in p");
    LaurentPoly lp;
    for (size_t i = 0; i < m; ++i) {
      if (!is_integer(poly[i])) throw Error(ErrorCode::NotIntegral, "non-integral coefficient in a Satake polynomial");
      lp += LaurentPoly::q_power(static_cast<long>(i), poly[i].get_num());
    }
    out[mu] = lp;
  }
  return out;
}

namespace {

std::vector<long> as_longs(const Coweight& c) {
  std::vector<long> v;
  for (auto& x : c.coords()) {
    if (!is_integer(x)) throw Error(ErrorCode::NotIntegral, "GL coweight must be integral");
    v.push_back(to_long(x));
  }
  return v;
}

Coweight from_longs(const DatumPtr& d, const std::vector<long>& v) {
  Vec x;
  for (long a : v) x.push_back(a);
  return Coweight(d, x);
}

// Only b is computed here; d needs the b rows of every mu below lambda.
SatakeTable basis_change_row(const Coweight& lambda, const OracleOptions& opt) {
  const DatumPtr& d = lambda.datum_ptr();
  int n = d->copy_size(0);
  SatakeTable t;
  t.lambda = lambda;
  Weight rh = rho(d);
  auto a = satake_coefficients(n, as_longs(lambda), opt);
  for (auto& [mu, poly] : a) {
    Coweight m = from_longs(d, mu);
    if (!poly.is_zero()) t.a[m] = poly;
    if (in_root_lattice_cone(m, lambda)) t.support.push_back(m);
  }
  auto height = [&](const Coweight& mu) {
    auto cs = simple_root_coordinates(*d, (lambda - mu).coords());
    return cs ? sum(*cs) : Rational(0);
  };
  std::stable_sort(t.support.begin(), t.support.end(), [&](const Coweight& x, const Coweight& y) {
    Rational hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : y < x;
  });
  std::map<Coweight, std::map<Coweight, Integer>> chars;
  for (auto& nu : t.support) chars[nu] = dominant_character(nu);
  for (auto& kappa : t.support) {
    LaurentPoly v = t.a.count(kappa) ? t.a[kappa] : LaurentPoly();
    for (auto& [nu, bn] : t.b) {
      auto it = chars[nu].find(kappa);
      if (it == chars[nu].end()) continue;
      v -= bn * LaurentPoly::q_power(pairing(rh, nu - kappa), it->second);
    }
    t.b[kappa] = v;
  }
  for (auto it = t.b.begin(); it != t.b.end();) it = it->second.is_zero() ? t.b.erase(it) : std::next(it);
  return t;
}

}  // namespace

SatakeTable satake_basis_change(const Coweight& lambda, const OracleOptions& opt) {
  const RootDatum& dd = lambda.datum();
  if (dd.family() != Family::GL) throw Error(ErrorCode::Unsupported, "the coset oracle covers split GL_n only");
  require_dominant(lambda);
  SatakeTable t = basis_change_row(lambda, opt);
  std::map<Coweight, SatakeTable> rows;
  for (auto& mu : t.support) rows[mu] = mu == lambda ? t : basis_change_row(mu, opt);
  // q^{<lambda,rho>}[V_lambda] = sum_mu D(lambda,mu) S(T_mu), D = B^{-1}
  for (auto& kappa : t.support) {
    if (kappa == lambda) {
      t.d[kappa] = 1;
      continue;
    }
    LaurentPoly v;
    for (auto& [nu, dn] : t.d) {
      auto& bnu = rows[nu].b;
      auto it = bnu.find(kappa);
      if (it != bnu.end()) v -= dn * it->second;
    }
    t.d[kappa] = v;
  }
  for (auto it = t.d.begin(); it != t.d.end();) it = it->second.is_zero() ? t.d.erase(it) : std::next(it);
  return t;
}

HeckeElement satake_transform(const SatakeTable& t) {
  HeckeElement h;
  h.datum = t.lambda.datum_ptr();
  h.basis = Basis::Monomial;
  Weight rh = rho(h.datum);
  for (auto& [mu, a] : t.a) h.terms[mu] = a * LaurentPoly::q_power(pairing(rh, mu));
  return h;
}

HeckeElement v_in_t_basis(const SatakeTable& t) {
  HeckeElement h;
  h.datum = t.lambda.datum_ptr();
  h.basis = Basis::T;
  h.terms = t.d;
  return h;
}

}  // namespace hecke
