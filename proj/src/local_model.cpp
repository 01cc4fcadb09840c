#include "hecke/local_model.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace hecke {

const char* model_family_name(ModelFamily f) { return f == ModelFamily::Symplectic ? "symplectic" : "linear"; }

std::vector<StratumRecord> strata_symplectic(int g) {
  if (g < 1) throw Error(ErrorCode::BadRank, "g must be at least 1");
  std::vector<StratumRecord> out;
  for (int s = 0; s <= g; ++s) {
    StratumRecord r;
    r.family = ModelFamily::Symplectic;
    r.g = g;
    r.param = s;
    for (int i = s + 1; i <= g; ++i) r.index_set.push_back(i);
    for (int i = 2 * g - s + 1; i <= 2 * g; ++i) r.index_set.push_back(i);
    r.loop_exponents.assign(s, 1);
    r.loop_exponents.insert(r.loop_exponents.end(), g - s, 0);
    r.loop_exponents.insert(r.loop_exponents.end(), g - s, 1);
    r.loop_exponents.insert(r.loop_exponents.end(), s, 0);
    r.dimension = g * (g + 1) / 2;
    r.kernel_rank = dp1_kernel_rank_symplectic(g, s);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

void check_linear(int n, int p, int q, int j) {
  if (p < 0 || q < 0 || p + q != n || n < 2) throw Error(ErrorCode::BadRank, "need n = p + q >= 2");
  if (j < 1 || j > n - 1) throw Error(ErrorCode::BadRank, "need 1 <= j <= n-1");
}

}  // namespace

std::vector<StratumRecord> strata_linear(int n, int p, int q, int j) {
  check_linear(n, p, q, j);
  std::vector<StratumRecord> out;
  for (int r = std::max(0, j - q); r <= std::min(p, j); ++r) {
    StratumRecord s;
    s.family = ModelFamily::Linear;
    s.n = n;
    s.p = p;
    s.q = q;
    s.j = j;
    s.param = r;
    // Basis vectors on which the diagonal element is 1.
    for (int i = r + 1; i <= j; ++i) s.index_set.push_back(i);
    for (int i = j + p - r + 1; i <= n; ++i) s.index_set.push_back(i);
    s.loop_exponents.assign(r, 1);
    s.loop_exponents.insert(s.loop_exponents.end(), j - r, 0);
    s.loop_exponents.insert(s.loop_exponents.end(), p - r, 1);
    s.loop_exponents.insert(s.loop_exponents.end(), q - j + r, 0);
    s.dimension = p * q;
    s.kernel_rank = dp1_kernel_rank_linear(p, j, r);
    out.push_back(std::move(s));
  }
  return out;
}

int dp1_kernel_rank_symplectic(int g, int s) {
  if (s < 0 || s > g) throw Error(ErrorCode::BadRank, "s out of range");
  return (g - s) * (g - s + 1) / 2;
}

int dp1_kernel_rank_linear(int p, int j, int r) {
  if (r < 0 || r > p || r > j) throw Error(ErrorCode::BadRank, "r out of range");
  return (j - r) * (p - r);
}

namespace {

// Rank of a matrix over F_ell (ell prime), destroys its input.
int rank_mod(std::vector<std::vector<long>> m, long ell) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  auto inv = [&](long a) {
    long r = 1, e = ell - 2;
    a %= ell;
    while (e) {
      if (e & 1) r = r * a % ell;
      a = a * a % ell;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] % ell) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    long iv = inv((m[rank][c] % ell + ell) % ell);
    for (auto& v : m[rank]) v = (v % ell + ell) % ell * iv % ell;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] % ell == 0) continue;
      long f = (m[i][c] % ell + ell) % ell;
      for (int k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[rank][k]) % ell + ell) % ell;
    }
    ++rank;
  }
  return rank;
}

constexpr int kTrunc = 3;

// Dimension over F_ell of {X in L / t^3 : v(X_ab) >= bound_ab}, L = gl_n or gsp_n.
int lattice_dim(int n, bool symplectic, const std::vector<std::vector<int>>& bound, long ell) {
  int nx = n * n * kTrunc;
  int nvars = nx + (symplectic ? kTrunc : 0);
  auto var = [&](int a, int b, int k) { return (a * n + b) * kTrunc + k; };
  std::vector<std::vector<long>> eqs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < std::min(bound[a][b], kTrunc); ++k) {
        std::vector<long> e(nvars, 0);
        e[var(a, b, k)] = 1;
        eqs.push_back(e);
      }
  if (symplectic) {
    // X^T J + J X = c J with J_{i, n-1-i} = +1 (i < n/2), -1 otherwise.
    auto J = [&](int a, int b) -> long { return b == n - 1 - a ? (a < n / 2 ? 1 : -1) : 0; };
    for (int k = 0; k < kTrunc; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          std::vector<long> e(nvars, 0);
          // (X^T J)_{ab} = sum_c X_{ca} J_{cb};  (J X)_{ab} = sum_c J_{ac} X_{cb}
          for (int c = 0; c < n; ++c) {
            e[var(c, a, k)] += J(c, b);
            e[var(c, b, k)] += J(a, c);
          }
          e[nx + k] -= J(a, b);
          eqs.push_back(e);
        }
  }
  return nvars - rank_mod(eqs, ell);
}

int lie_kernel(int n, bool symplectic, int split, const std::vector<int>& e, long ell) {
  // Parahoric for {0, split}: entries below row `split` and left of column `split` lie in t.
  std::vector<std::vector<int>> par(n, std::vector<int>(n, 0));
  for (int a = split; a < n; ++a)
    for (int b = 0; b < split; ++b) par[a][b] = 1;
  auto meet = [&](bool conj_parahoric) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[a][b] = std::max(par[a][b], (conj_parahoric ? par[a][b] : 0) + e[a] - e[b]);
    return m;
  };
  return lattice_dim(n, symplectic, meet(false), ell) - lattice_dim(n, symplectic, meet(true), ell);
}

void check_prime(int ell) {
  if (ell < 2) throw Error(ErrorCode::InputError, "characteristic must be prime");
  for (int d = 2; d * d <= ell; ++d)
    if (ell % d == 0) throw Error(ErrorCode::InputError, "characteristic must be prime");
}

}  // namespace

int lie_quotient_oracle_symplectic(int g, int s, int ell) {
  if (g < 1 || s < 0 || s > g) throw Error(ErrorCode::BadRank, "parameter out of range");
  if (g > 3) throw Error(ErrorCode::Oversize, "Lie quotient oracle limited to g <= 3");
  check_prime(ell);
  return lie_kernel(2 * g, true, g, strata_symplectic(g)[s].loop_exponents, ell);
}

int lie_quotient_oracle_linear(int n, int p, int q, int j, int r, int ell) {
  check_linear(n, p, q, j);
  if (n > 6) throw Error(ErrorCode::Oversize, "Lie quotient oracle limited to n <= 6");
  check_prime(ell);
  for (const auto& s : strata_linear(n, p, q, j))
    if (s.param == r) return lie_kernel(n, false, j, s.loop_exponents, ell);
  throw Error(ErrorCode::BadRank, "r out of range");
}

namespace {

void require_decreasing(const Vec& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) throw Error(ErrorCode::NotDominant, "weight must be sorted decreasingly");
}

Integer as_integer(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorCode::NotIntegral, "weight must be integral");
  return floor_of(r);
}

Integer tail_from(const Vec& v, int first) {  // v_first + ... + v_last, 1-based
  Rational s = 0;
  for (int l = std::max(first, 1); l <= static_cast<int>(v.size()); ++l) s += v[l - 1];
  return as_integer(s);
}

}  // namespace

Integer alpha_valuation_bound_symplectic(const Vec& k, int s) {
  require_decreasing(k);
  int g = static_cast<int>(k.size());
  if (s < 0 || s > g) throw Error(ErrorCode::BadRank, "s out of range");
  return tail_from(k, g - s + 1);
}

Integer alpha_valuation_bound_linear(const Vec& a, const Vec& b, int j, int r) {
  require_decreasing(a);
  require_decreasing(b);
  int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  if (r < std::max(0, j - q) || r > std::min(p, j)) throw Error(ErrorCode::BadRank, "r out of range");
  return tail_from(a, p - r + 1) + tail_from(b, j - r + 1);
}

Integer normalized_correspondence_exponent_symplectic(const Vec& k) {
  int g = static_cast<int>(k.size());
  if (g < 1) throw Error(ErrorCode::BadRank, "g must be at least 1");
  std::optional<Integer> best;
  for (int s = 0; s <= g; ++s) {
    Integer v = alpha_valuation_bound_symplectic(k, s) + dp1_kernel_rank_symplectic(g, s);
    if (!best || v < *best) best = v;
  }
  return -*best;
}

Integer normalized_correspondence_exponent_linear(const Vec& a, const Vec& b, int j) {
  int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  if (j < 0 || j > p + q) throw Error(ErrorCode::BadRank, "j out of range");
  std::optional<Integer> best;
  for (int r = std::max(0, j - q); r <= std::min(p, j); ++r) {
    Integer v = alpha_valuation_bound_linear(a, b, j, r) + dp1_kernel_rank_linear(p, j, r);
    if (!best || v < *best) best = v;
  }
  return -*best;
}

// ---------------------------------------------------------------------------
// Finite-field census

namespace {

class Field {
 public:
  explicit Field(int q) : q_(q), add_(q * q), mul_(q * q) {
    if (q == 4) {
      // F_4 = F_2[x]/(x^2+x+1), elements as bit pairs.
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          add_[a * 4 + b] = a ^ b;
          int p = 0;
          for (int i = 0; i < 2; ++i)
            if (b >> i & 1) p ^= a << i;
          if (p & 4) p ^= 0b111;
          mul_[a * 4 + b] = p;
        }
    } else {
      check_prime(q);
      if (q > 7) throw Error(ErrorCode::Oversize, "census supports fields of size at most 7");
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          add_[a * q + b] = (a + b) % q;
          mul_[a * q + b] = a * b % q;
        }
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (add_[a * q + b] == 0) neg_.push_back(b);
      }
    inv_.assign(q, 0);
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul_[a * q + b] == 1) inv_[a] = b;
  }
  int size() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const { return inv_[a]; }

 private:
  int q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

using Mat = std::vector<std::vector<int>>;

int rank_of(Mat m, const Field& F) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    int iv = F.inv(m[rank][c]);
    for (auto& v : m[rank]) v = F.mul(v, iv);
    for (int i = rank + 1; i < rows; ++i) {
      int f = m[i][c];
      if (!f) continue;
      for (int k = 0; k < cols; ++k) m[i][k] = F.sub(m[i][k], F.mul(f, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// All k-dimensional subspaces of F^n as row-reduced bases.
std::vector<Mat> grassmannian(int n, int k, const Field& F) {
  std::vector<Mat> out;
  std::vector<int> piv(k);
  std::function<void(int, int)> choose = [&](int i, int start) {
    if (i == k) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
      std::vector<int> val(free.size(), 0);
      for (;;) {
        Mat m(k, std::vector<int>(n, 0));
        for (int r = 0; r < k; ++r) m[r][piv[r]] = 1;
        for (size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = val[f];
        out.push_back(std::move(m));
        size_t f = 0;
        while (f < val.size() && ++val[f] == F.size()) val[f++] = 0;
        if (f == val.size()) break;
      }
      return;
    }
    for (int c = start; c <= n - (k - i); ++c) {
      piv[i] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

// A chain edge V_a -> V_b kills the coordinates in `zero` (0-based).
struct Edge {
  int from, to;
  std::vector<bool> zero;
};

Mat apply_edge(const Mat& f, const Edge& e) {
  Mat out = f;
  for (auto& row : out)
    for (size_t c = 0; c < row.size(); ++c)
      if (e.zero[c]) row[c] = 0;
  return out;
}

Mat stack(const Mat& a, const Mat& b) {
  Mat m = a;
  m.insert(m.end(), b.begin(), b.end());
  return m;
}

struct CensusCore {
  int n, k;
  std::vector<Edge> edges;  // edge i goes from chain slot i to slot i+1 (cyclically)
  std::vector<Mat> candidates;
  std::vector<Mat> images;  // image of V under each edge, as a basis
};

std::vector<Edge> chain_edges(int n, const std::vector<int>& I) {
  std::vector<Edge> edges;
  int m = static_cast<int>(I.size());
  for (int i = 0; i < m; ++i) {
    int a = I[i], b = i + 1 < m ? I[i + 1] : I[0] + n;
    Edge e{i, (i + 1) % m, std::vector<bool>(n, false)};
    for (int pos = a; pos < b; ++pos) e.zero[pos % n] = true;  // lattice positions a+1..b, 0-based
    edges.push_back(e);
  }
  return edges;
}

Census run_census(CensusCore core, const Field& F, const CensusOptions& opt, Census base) {
  int m = static_cast<int>(core.edges.size());
  for (const auto& e : core.edges) {
    Mat img;
    for (int c = 0; c < core.n; ++c)
      if (!e.zero[c]) {
        std::vector<int> row(core.n, 0);
        row[c] = 1;
        img.push_back(row);
      }
    core.images.push_back(img);
  }
  const int nc = static_cast<int>(core.candidates.size());
  std::atomic<long long> work{0};
  std::atomic<bool> over{false};
  int threads = std::max(1, opt.threads);
  std::vector<std::map<std::vector<int>, long long>> shards(threads);

  auto worker = [&](int t) {
    auto& acc = shards[t];
    std::vector<int> chosen(m);
    std::function<void(int)> extend = [&](int slot) {
      if (over) return;
      if (slot == m) {
        // Close the cycle and record the signature.
        std::vector<int> sig;
        for (int i = 0; i < m; ++i) {
          const Edge& e = core.edges[i];
          const Mat& fa = core.candidates[chosen[e.from]];
          const Mat& fb = core.candidates[chosen[e.to]];
          Mat img = apply_edge(fa, e);
          if (rank_of(stack(fb, img), F) != core.k) return;
          sig.push_back(rank_of(img, F));
          sig.push_back(rank_of(stack(fb, core.images[i]), F) - core.k);
        }
        ++acc[sig];
        return;
      }
      for (int c = 0; c < nc; ++c) {
        if (work.fetch_add(1) >= opt.budget) {
          over = true;
          return;
        }
        const Edge& prev = core.edges[slot - 1];
        Mat img = apply_edge(core.candidates[chosen[slot - 1]], prev);
        if (rank_of(stack(core.candidates[c], img), F) != core.k) continue;
        chosen[slot] = c;
        extend(slot + 1);
      }
    };
    for (int c0 = t; c0 < nc; c0 += threads) {
      chosen[0] = c0;
      extend(1);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (over) throw Error(ErrorCode::Oversize, "census exceeds the enumeration budget");

  std::map<std::vector<int>, long long> all;
  for (const auto& s : shards)
    for (const auto& [sig, cnt] : s) all[sig] += cnt;
  Census out = std::move(base);
  for (int i = 0; i < m; ++i) {
    std::string a = std::to_string(out.I[core.edges[i].from]);
    std::string b = std::to_string(i + 1 < m ? out.I[i + 1] : out.I[0] + core.n);
    out.signature_labels.push_back("rank F" + a + "->F" + b);
    out.signature_labels.push_back("rank V" + a + "/F" + a + "->V" + b + "/F" + b);
  }
  for (const auto& [sig, cnt] : all) {
    out.total_points += cnt;
    out.buckets.push_back({sig, cnt, false});
  }
  for (auto& b : out.buckets) {
    b.maximal = true;
    for (const auto& o : out.buckets) {
      if (o.signature == b.signature) continue;
      bool dominates = true;
      for (size_t i = 0; i < o.signature.size(); ++i)
        if (o.signature[i] < b.signature[i]) dominates = false;
      if (dominates) b.maximal = false;
    }
  }
  return out;
}

std::vector<int> normalize_chain(std::vector<int> I, int period) {
  if (I.empty()) throw Error(ErrorCode::EmptyParahoric, "empty index set");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.front() < 0 || I.back() >= period) throw Error(ErrorCode::InputError, "chain index out of range");
  return I;
}

}  // namespace

int Census::top_dimensional() const {
  int c = 0;
  for (const auto& b : buckets) c += b.maximal;
  return c;
}

Census finite_field_census_linear(int n, int p, int q, const std::vector<int>& I, int q0, const CensusOptions& opt) {
  if (p < 0 || q < 0 || p + q != n || n < 1) throw Error(ErrorCode::BadRank, "need n = p + q");
  if (n > 4) throw Error(ErrorCode::Oversize, "census limited to n <= 4");
  Field F(q0);
  Census base;
  base.family = ModelFamily::Linear;
  base.n = n;
  base.p = p;
  base.q = q;
  base.q0 = q0;
  base.I = normalize_chain(I, n);
  CensusCore core{n, q, chain_edges(n, base.I), grassmannian(n, q, F), {}};
  return run_census(std::move(core), F, opt, std::move(base));
}

Census finite_field_census_symplectic(int g, const std::vector<int>& I, int q0, const CensusOptions& opt) {
  if (g < 1) throw Error(ErrorCode::BadRank, "g must be at least 1");
  if (g > 2) throw Error(ErrorCode::Oversize, "census limited to g <= 2");
  Field F(q0);
  Census base;
  base.family = ModelFamily::Symplectic;
  base.g = g;
  base.n = 2 * g;
  base.q0 = q0;
  base.I = normalize_chain(I, 2 * g);
  for (int i : base.I)
    if (i != 0 && i != g) throw Error(ErrorCode::Unsupported, "symplectic census supports I within {0, g}");
  int n = 2 * g;
  std::vector<Mat> lagrangians;
  for (auto& f : grassmannian(n, g, F)) {
    bool iso = true;
    for (int a = 0; a < g && iso; ++a)
      for (int b = 0; b < g && iso; ++b) {
        int v = 0;
        for (int i = 0; i < n; ++i) {
          int j = n - 1 - i;
          int term = F.mul(f[a][i], f[b][j]);
          v = i < g ? F.add(v, term) : F.sub(v, term);
        }
        iso = v == 0;
      }
    if (iso) lagrangians.push_back(f);
  }
  CensusCore core{n, g, chain_edges(n, base.I), std::move(lagrangians), {}};
  return run_census(std::move(core), F, opt, std::move(base));
}

}  // namespace hecke
