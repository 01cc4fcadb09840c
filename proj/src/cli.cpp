#include "hecke/cli.hpp"

#include "hecke/affine_weyl.hpp"
#include "hecke/hecke_characters.hpp"
#include "hecke/local_model.hpp"
#include "hecke/newton_hodge.hpp"
#include "hecke/normalization.hpp"

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace hecke {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands = {"normalize",    "strata",     "admissible", "satake",
                                         "newton-check", "katz-mazur", "consistency"};
const std::set<std::string> kFields = {"command", "family", "g",      "n",          "p",         "q",
                                       "j",       "q0",     "height", "kappa",      "preset",    "splitting",
                                       "I",       "mu",     "lambda", "valuations", "newton",    "infchar",
                                       "format",  "budget", "seed",   "samples"};

Error input(const std::string& msg) { return Error(ErrorCode::InputError, msg); }

std::string canonical_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_string()) {
    try {
      return to_string(parse_rational(v.get<std::string>()));
    } catch (const std::exception&) {
    }
  }
  throw input("field '" + field + "': expected a rational number, got " + v.dump());
}

template <class T>
T get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw input("field '" + field + "': expected an integer, got " + v.dump());
  return v.get<T>();
}

template <class T>
std::vector<T> get_int_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw input("field '" + field + "': expected an array");
  std::vector<T> out;
  for (const auto& x : v) out.push_back(get_int<T>(x, field));
  return out;
}

std::vector<std::string> get_rational_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw input("field '" + field + "': expected an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(canonical_rational(x, field));
  return out;
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) throw input("field '" + field + "': expected a string");
  return v.get<std::string>();
}

JobSpec from_json(const json& doc) {
  if (!doc.is_object()) throw input("job document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (!kFields.count(key)) throw input("unknown field '" + key + "'");
  JobSpec s;
  if (!doc.contains("command")) throw input("missing field 'command'");
  s.command = get_string(doc["command"], "command");
  if (!kCommands.count(s.command)) throw input("unknown command '" + s.command + "'");
  auto opt_int = [&](const char* k, std::optional<int>& dst) {
    if (doc.contains(k)) dst = get_int<int>(doc[k], k);
  };
  auto opt_ll = [&](const char* k, std::optional<long long>& dst) {
    if (doc.contains(k)) dst = get_int<long long>(doc[k], k);
  };
  opt_int("g", s.g);
  opt_int("n", s.n);
  opt_int("p", s.p);
  opt_int("q", s.q);
  opt_int("j", s.j);
  opt_int("q0", s.q0);
  opt_int("height", s.height);
  opt_ll("budget", s.budget);
  opt_ll("seed", s.seed);
  opt_ll("samples", s.samples);
  if (doc.contains("family")) s.family = get_string(doc["family"], "family");
  if (doc.contains("kappa")) s.kappa = get_string(doc["kappa"], "kappa");
  if (doc.contains("preset")) s.preset = get_string(doc["preset"], "preset");
  if (doc.contains("format")) s.format = get_string(doc["format"], "format");
  if (doc.contains("splitting")) s.splitting = get_int_list<int>(doc["splitting"], "splitting");
  if (doc.contains("I")) s.I = get_int_list<int>(doc["I"], "I");
  if (doc.contains("mu")) s.mu = get_int_list<long>(doc["mu"], "mu");
  if (doc.contains("lambda")) s.lambda = get_int_list<long>(doc["lambda"], "lambda");
  if (doc.contains("valuations")) s.valuations = get_rational_list(doc["valuations"], "valuations");
  if (doc.contains("newton")) s.newton = get_rational_list(doc["newton"], "newton");
  if (doc.contains("infchar")) {
    if (!doc["infchar"].is_array()) throw input("field 'infchar': expected an array of arrays");
    for (const auto& row : doc["infchar"]) s.infchar.push_back(get_rational_list(row, "infchar"));
  }
  if (s.format != "json" && s.format != "tsv") throw input("format must be json or tsv");
  return s;
}

}  // namespace

JobSpec load_spec(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw input("malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return from_json(doc);
}

JobSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_spec(ss.str());
}

json dump_spec(const JobSpec& s) {
  json d;
  d["command"] = s.command;
  if (!s.family.empty()) d["family"] = s.family;
  auto put = [&](const char* k, const auto& v) {
    if (v) d[k] = *v;
  };
  put("g", s.g);
  put("n", s.n);
  put("p", s.p);
  put("q", s.q);
  put("j", s.j);
  put("q0", s.q0);
  put("height", s.height);
  put("budget", s.budget);
  put("seed", s.seed);
  put("samples", s.samples);
  if (!s.kappa.empty()) d["kappa"] = s.kappa;
  if (!s.preset.empty()) d["preset"] = s.preset;
  if (!s.splitting.empty()) d["splitting"] = s.splitting;
  if (!s.I.empty()) d["I"] = s.I;
  if (!s.mu.empty()) d["mu"] = s.mu;
  if (!s.lambda.empty()) d["lambda"] = s.lambda;
  if (!s.valuations.empty()) d["valuations"] = s.valuations;
  if (!s.newton.empty()) d["newton"] = s.newton;
  if (!s.infchar.empty()) d["infchar"] = s.infchar;
  d["format"] = s.format;
  return d;
}

// ---------------------------------------------------------------------------

namespace {

// "k=3,1;c=-4" -> {k: [3,1], c: [-4]}
std::map<std::string, Vec> parse_kappa(const std::string& text) {
  std::map<std::string, Vec> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(' ') == std::string::npos) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw input("kappa entry without '=': " + part);
    std::string key = part.substr(0, eq);
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    if (out.count(key)) throw input("kappa key repeated: " + key);
    out[key] = parse_vec(part.substr(eq + 1));
  }
  return out;
}

const Vec& need(const std::map<std::string, Vec>& m, const std::string& key, size_t size = 0) {
  auto it = m.find(key);
  if (it == m.end()) throw input("kappa needs '" + key + "'");
  if (size && it->second.size() != size) throw input("kappa '" + key + "' must have " + std::to_string(size) + " entries");
  return it->second;
}

long need_long(const std::map<std::string, Vec>& m, const std::string& key) { return to_long(need(m, key, 1)[0]); }

void allow_keys(const std::map<std::string, Vec>& m, std::set<std::string> keys) {
  for (const auto& [k, _] : m)
    if (!keys.count(k)) throw input("kappa key '" + k + "' not used here");
}

int need_int(const std::optional<int>& v, const char* name) {
  if (!v) throw input(std::string("missing parameter '") + name + "'");
  return *v;
}

std::vector<std::string> strs(const Vec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec rationals(const std::vector<std::string>& v) {
  Vec out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

std::string power_label(const Rational& e) {
  if (e == 0) return "";
  return "p^(" + to_string(e) + ") ";
}

json table_json(const NormalizationTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["name"] = r.name;
    row["place"] = r.place + 1;
    row["lambda"] = r.lambda.str();
    row["exponent"] = to_string(r.exponent);
    row["v_exponent"] = to_string(r.v_exponent);
    row["rho_shift"] = to_string(r.rho_shift);
    row["naive"] = r.naive;
    row["invertible"] = r.invertible;
    row["normalized"] = r.name + " = " + power_label(r.exponent) + r.name + "^naive";
    if (!r.closed_form_label.empty()) {
      row["closed_form"] = to_string(r.closed_form);
      row["closed_form_matches"] = r.closed_form == r.exponent;
    }
    rows.push_back(row);
  }
  json out;
  out["datum"] = t.kappa.datum().describe();
  out["kappa"] = t.kappa.str();
  auto ic = infinitesimal_character(t.kappa);
  out["infinitesimal_character"] = ic.raw.str();
  out["infinitesimal_character_dominant"] = ic.dominant.str();
  out["rows"] = rows;
  out["consistent"] = t.consistent();
  if (!t.preset.empty()) out["preset"] = t.preset;
  return out;
}

RunResult cmd_normalize(const JobSpec& s) {
  auto kv = parse_kappa(s.kappa);
  std::string fam = s.family.empty() ? (s.preset == "gu21" ? "unitary" : "gsp") : s.family;
  NormalizationTable t;
  if (s.preset == "modular-curve") {
    if (fam != "gsp" || s.g.value_or(1) != 1) throw input("modular-curve preset is GSp with g = 1");
    allow_keys(kv, {"k"});
    t = preset_modular_curve(need_long(kv, "k"));
  } else if (s.preset == "hilbert") {
    allow_keys(kv, {"k", "ks"});
    std::vector<long> ks;
    for (const auto& x : need(kv, "ks")) ks.push_back(to_long(x));
    std::vector<int> split = s.splitting.empty() ? std::vector<int>{static_cast<int>(ks.size())} : s.splitting;
    t = preset_hilbert(ks, need_long(kv, "k"), split);
  } else if (s.preset == "gsp4" || s.preset == "gsp2g") {
    allow_keys(kv, {"k"});
    std::vector<long> ks;
    for (const auto& x : need(kv, "k")) ks.push_back(to_long(x));
    if (s.preset == "gsp4" && ks.size() != 2) throw input("gsp4 preset needs k=k1,k2");
    if (s.g && *s.g != static_cast<int>(ks.size())) throw input("g does not match the length of k");
    t = preset_siegel(ks);
  } else if (s.preset == "gu21") {
    allow_keys(kv, {"k1", "k2", "k3"});
    long k3 = kv.count("k3") ? need_long(kv, "k3") : 1;
    t = preset_gu21(need_long(kv, "k1"), need_long(kv, "k2"), k3);
  } else if (!s.preset.empty()) {
    throw input("unknown preset '" + s.preset + "'");
  } else if (fam == "gsp") {
    allow_keys(kv, {"k", "c"});
    int g = need_int(s.g, "g");
    const Vec& k = need(kv, "k", g);
    Rational c = kv.count("c") ? need(kv, "c", 1)[0] : -sum(k);
    std::vector<int> split = s.splitting.empty() ? std::vector<int>{1} : s.splitting;
    auto d = RootDatum::gsp(g, split);
    std::vector<Vec> act(d->num_copies(), k);
    t = generator_table(symplectic_weight(d, act, Vec(d->num_copies(), c)));
  } else if (fam == "unitary") {
    allow_keys(kv, {"a", "b"});
    int n = need_int(s.n, "n"), p = need_int(s.p, "p");
    UnitaryWeight w{need(kv, "a", p), need(kv, "b", n - p)};
    std::vector<Block> blocks;
    for (int deg : s.splitting.empty() ? std::vector<int>{1} : s.splitting) blocks.push_back({n, deg, p});
    auto d = RootDatum::unitary(n, blocks);
    t = generator_table(unitary_weight(d, std::vector<UnitaryWeight>(d->num_copies(), w)));
  } else {
    throw Error(ErrorCode::Unsupported, "normalize supports the gsp and unitary families");
  }
  RunResult r;
  r.report = table_json(t);
  r.exit_code = t.consistent() ? 0 : 1;
  return r;
}

json stratum_json(const StratumRecord& st, bool with_oracle) {
  json o;
  o["param"] = st.param;
  o["index_set"] = st.index_set;
  o["loop_exponents"] = st.loop_exponents;
  o["dimension"] = st.dimension;
  o["kernel_rank"] = st.kernel_rank;
  if (with_oracle) {
    int lie = st.family == ModelFamily::Symplectic ? lie_quotient_oracle_symplectic(st.g, st.param)
                                                   : lie_quotient_oracle_linear(st.n, st.p, st.q, st.j, st.param);
    o["lie_kernel"] = lie;
  }
  return o;
}

json census_json(const Census& c) {
  json o;
  o["q0"] = c.q0;
  o["I"] = c.I;
  o["total_points"] = c.total_points;
  o["signature_labels"] = c.signature_labels;
  o["signatures"] = static_cast<int>(c.buckets.size());
  o["top_dimensional"] = c.top_dimensional();
  json b = json::array();
  for (const auto& x : c.buckets) b.push_back({{"signature", x.signature}, {"points", x.points}, {"maximal", x.maximal}});
  o["buckets"] = b;
  return o;
}

RunResult cmd_strata(const JobSpec& s, int threads) {
  std::vector<StratumRecord> st;
  json out;
  std::optional<Census> census;
  CensusOptions copt;
  copt.threads = threads;
  if (s.budget) copt.budget = *s.budget;
  bool ok = true;
  if (s.family == "symplectic" || s.family == "gsp") {
    int g = need_int(s.g, "g");
    st = strata_symplectic(g);
    out["g"] = g;
    if (s.q0) census = finite_field_census_symplectic(g, {0, g}, *s.q0, copt);
  } else if (s.family == "linear" || s.family == "gl") {
    int n = need_int(s.n, "n"), p = need_int(s.p, "p"), j = need_int(s.j, "j");
    int q = s.q.value_or(n - p);
    st = strata_linear(n, p, q, j);
    out["n"] = n;
    out["p"] = p;
    out["q"] = q;
    out["j"] = j;
    if (s.q0) census = finite_field_census_linear(n, p, q, {0, j}, *s.q0, copt);
  } else {
    throw input("strata needs --family symplectic or linear");
  }
  out["family"] = model_family_name(st.front().family);
  out["components"] = static_cast<int>(st.size());
  bool oracle = st.front().family == ModelFamily::Symplectic ? st.front().g <= 3 : st.front().n <= 6;
  json rows = json::array();
  for (const auto& r : st) {
    rows.push_back(stratum_json(r, oracle));
    if (oracle && rows.back()["lie_kernel"] != r.kernel_rank) ok = false;
  }
  out["rows"] = rows;
  if (census) {
    out["census"] = census_json(*census);
    if (census->top_dimensional() != static_cast<int>(st.size())) ok = false;
  }
  out["consistent"] = ok;
  RunResult r;
  r.report = out;
  r.exit_code = ok ? 0 : 1;
  return r;
}

RunResult cmd_admissible(const JobSpec& s) {
  AffineType type;
  int rank;
  if (s.family == "gl" || s.family == "linear") {
    type = AffineType::GL;
    rank = need_int(s.n, "n");
  } else if (s.family == "gsp" || s.family == "symplectic") {
    type = AffineType::GSP;
    rank = need_int(s.g, "g");
  } else {
    throw input("admissible needs --family gl or gsp");
  }
  if (s.mu.empty()) throw input("missing parameter 'mu'");
  auto adm = admissible_set(type, rank, s.I, s.mu);
  json rows = json::array();
  for (const auto& e : adm.elements) {
    json o;
    o["window"] = e.w.window();
    o["word"] = e.word;
    o["length"] = e.length;
    o["dimension"] = e.dimension;
    o["translation"] = e.translation;
    rows.push_back(o);
  }
  RunResult r;
  r.report = {{"family", type == AffineType::GL ? "gl" : "gsp"},
              {"rank", rank},
              {"I", adm.I},
              {"mu", adm.mu},
              {"size", static_cast<int>(adm.elements.size())},
              {"rows", rows}};
  return r;
}

RunResult cmd_satake(const JobSpec& s, int threads) {
  if (!s.family.empty() && s.family != "gl") throw Error(ErrorCode::Unsupported, "satake supports GL_n only");
  int n = s.n.value_or(static_cast<int>(s.lambda.size()));
  if (static_cast<int>(s.lambda.size()) != n) throw input("lambda must have n entries");
  auto d = RootDatum::gl(n);
  Vec lam;
  for (long v : s.lambda) lam.push_back(v);
  OracleOptions opt;
  opt.threads = threads;
  if (s.budget) opt.budget = *s.budget;
  auto t = satake_basis_change(Coweight(d, lam), opt);
  json rows = json::array();
  for (const auto& mu : t.support) {
    auto get = [&](const std::map<Coweight, LaurentPoly>& m) {
      auto it = m.find(mu);
      return it == m.end() ? std::string("0") : it->second.str();
    };
    rows.push_back({{"mu", mu.str()}, {"a", get(t.a)}, {"b", get(t.b)}, {"d", get(t.d)}});
  }
  RunResult r;
  r.report = {{"n", n}, {"lambda", t.lambda.str()}, {"rows", rows}};
  return r;
}

RunResult cmd_newton(const JobSpec& s) {
  int n = s.n.value_or(static_cast<int>(s.valuations.size()));
  if (static_cast<int>(s.valuations.size()) != n || static_cast<int>(s.newton.size()) != n)
    throw input("valuations and newton must both have n entries");
  if (!s.family.empty() && s.family != "gl") throw Error(ErrorCode::Unsupported, "newton-check supports GL_n only");
  auto d = RootDatum::gl(n);
  SatakeClass c{d, rationals(s.valuations)};
  NewtonPoint nu{d, rationals(s.newton)};
  long h = s.height.value_or(4);
  auto res = lafforgue_check(c, nu, h);
  json out;
  out["newton_point"] = newton_map(c).str();
  out["bound"] = nu.str();
  out["direct"] = res.direct;
  out["trace_verdict"] = verdict_name(res.trace);
  out["height_bound"] = h;
  out["tested"] = res.tested;
  out["indeterminate"] = res.indeterminate;
  if (res.witness) {
    out["witness"] = res.witness->str();
    out["witness_trace_valuation"] = to_string(res.witness_trace_valuation);
    out["witness_bound"] = to_string(res.witness_bound);
  }
  RunResult r;
  r.report = out;
  r.exit_code = res.direct ? 0 : 1;
  return r;
}

RunResult cmd_katz_mazur(const JobSpec& s) {
  std::vector<Vec> inf;
  for (const auto& row : s.infchar) inf.push_back(rationals(row));
  auto res = katz_mazur_check(rationals(s.valuations), inf);
  RunResult r;
  r.report = {{"pass", res.pass},
              {"slack", strs(res.slack)},
              {"first_failure", res.first_failure},
              {"equality_at_n", res.equality_at_n}};
  r.exit_code = res.pass ? 0 : 1;
  return r;
}

Vec random_sorted(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  Vec v(n);
  for (auto& x : v) x = u(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

RunResult cmd_consistency(const JobSpec& s) {
  std::mt19937_64 rng(static_cast<unsigned long long>(s.seed.value_or(1)));
  long long samples = s.samples.value_or(200);
  std::map<std::string, std::pair<long long, long long>> checks;  // name -> (tested, failures)
  auto record = [&](const std::string& name, bool ok) {
    auto& c = checks[name];
    ++c.first;
    if (!ok) ++c.second;
  };
  std::uniform_int_distribution<int> gdist(1, 3), ndist(1, 4), sim(-8, 8);
  for (long long i = 0; i < samples; ++i) {
    int g = gdist(rng);
    Vec k = random_sorted(rng, g, -8, 8);
    record("symplectic local vs group", normalized_correspondence_exponent_symplectic(k) == symplectic_exponent({k}, -sum(k)));

    Rational c = sim(rng);
    if (!is_integer((sum(k) - c) / 2)) c += 1;
    auto d = RootDatum::gsp(g);
    Weight kappa = symplectic_weight(d, {k}, {c});
    record("symplectic closed form vs pairing",
           Rational(symplectic_exponent({k}, c)) == t_basis_exponent(symplectic_t_coweight(d, 0), kappa));

    int n = ndist(rng);
    int p = std::uniform_int_distribution<int>(0, n)(rng);
    Vec a = random_sorted(rng, p, -8, 8), b = random_sorted(rng, n - p, -8, 8);
    auto u = RootDatum::unitary(n, {{n, 1, p}});
    Weight uk = unitary_weight(u, {{a, b}});
    for (int j = 0; j <= n; ++j) {
      Integer e = unitary_exponent({{a, b}}, {}, j);
      record("linear local vs unitary", normalized_correspondence_exponent_linear(a, b, j) == e);
      record("unitary closed form vs pairing", Rational(e) == t_basis_exponent(unitary_t_coweight(u, 0, j), uk));
    }
  }
  for (int g = 1; g <= 3; ++g)
    for (int sidx = 0; sidx <= g; ++sidx)
      record("kernel rank vs Lie quotient", lie_quotient_oracle_symplectic(g, sidx) == dp1_kernel_rank_symplectic(g, sidx));
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p <= n; ++p)
      for (int j = 1; j < n; ++j)
        for (const auto& st : strata_linear(n, p, n - p, j))
          record("kernel rank vs Lie quotient", lie_quotient_oracle_linear(n, p, n - p, j, st.param) == st.kernel_rank);

  json rows = json::array();
  bool ok = true;
  for (const auto& [name, c] : checks) {
    rows.push_back({{"check", name}, {"tested", c.first}, {"failures", c.second}});
    ok = ok && c.second == 0;
  }
  RunResult r;
  r.report = {{"seed", s.seed.value_or(1)}, {"samples", samples}, {"rows", rows}, {"consistent", ok}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string emit(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format != "tsv") throw input("format must be json or tsv");
  std::ostringstream os;
  for (const auto& [key, v] : report.items()) {
    if (key == "rows" || (v.is_array() && !v.empty() && v[0].is_object())) continue;
    if (v.is_object()) {
      for (const auto& [sub, w] : v.items())
        if (!(w.is_array() && !w.empty() && w[0].is_object())) os << "# " << key << "." << sub << "\t" << cell(w) << "\n";
      continue;
    }
    os << "# " << key << "\t" << cell(v) << "\n";
  }
  if (report.contains("rows") && !report["rows"].empty()) {
    std::vector<std::string> cols;
    for (const auto& [k, _] : report["rows"][0].items()) cols.push_back(k);
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << cols[i];
    os << "\n";
    for (const auto& row : report["rows"]) {
      for (size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << (row.contains(cols[i]) ? cell(row[cols[i]]) : "");
      os << "\n";
    }
  }
  return os.str();
}

RunResult run(const JobSpec& spec, int threads) {
  RunResult r;
  try {
    if (spec.command == "normalize") r = cmd_normalize(spec);
    else if (spec.command == "strata") r = cmd_strata(spec, threads);
    else if (spec.command == "admissible") r = cmd_admissible(spec);
    else if (spec.command == "satake") r = cmd_satake(spec, threads);
    else if (spec.command == "newton-check") r = cmd_newton(spec);
    else if (spec.command == "katz-mazur") r = cmd_katz_mazur(spec);
    else if (spec.command == "consistency") r = cmd_consistency(spec);
    else throw input("unknown command '" + spec.command + "'");
    r.report["command"] = spec.command;
    r.output = emit(r.report, spec.format);
  } catch (const Error& e) {
    r.exit_code = 2;
    r.report = {{"command", spec.command}, {"error", {{"code", code_name(e.code())}, {"message", e.what()}}}};
    r.output = r.report.dump(2) + "\n";
  } catch (const std::exception& e) {
    r.exit_code = 2;
    r.report = {{"command", spec.command}, {"error", {{"code", "InputError"}, {"message", e.what()}}}};
    r.output = r.report.dump(2) + "\n";
  }
  return r;
}

}  // namespace hecke
