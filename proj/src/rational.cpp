#include "hecke/rational.hpp"

#include "hecke/errors.hpp"

#include <sstream>

namespace hecke {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::EmptyParahoric: return "EmptyParahoric";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Oversize: return "Oversize";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::InputError: return "InputError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw Error(ErrorCode::InputError, "empty rational");
  size_t slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    size_t i = (t.size() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw Error(ErrorCode::InputError, "bad rational '" + raw + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw Error(ErrorCode::InputError, "bad rational '" + raw + "'");
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  check_int(num);
  Integer n(num);
  Integer d(1);
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    check_int(den);
    d = Integer(den);
    if (d == 0) throw Error(ErrorCode::InputError, "zero denominator in '" + raw + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Vec parse_vec(const std::string& s, char sep) {
  Vec out;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(parse_rational(tok));
  return out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_half_integral(const Rational& r) { return r.get_den() == 1 || r.get_den() == 2; }

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw Error(ErrorCode::NotIntegral, "expected a machine integer, got " + to_string(r));
  return r.get_num().get_si();
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeError, "dot of vectors of different length");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational sum(const Vec& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace hecke
