#include "hecke/affine_weyl.hpp"
#include "hecke/cli.hpp"
#include "hecke/local_model.hpp"
#include "hecke/newton_hodge.hpp"
#include "hecke/normalization.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hecke;

namespace {

// Rationals cross the boundary as strings; the Python layer turns them into Fractions.
Vec to_vec(const std::vector<std::string>& v) {
  Vec out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

std::string str(const Integer& z) { return z.get_str(); }

py::dict stratum(const StratumRecord& s) {
  py::dict d;
  d["param"] = s.param;
  d["index_set"] = s.index_set;
  d["loop_exponents"] = s.loop_exponents;
  d["dimension"] = s.dimension;
  d["kernel_rank"] = s.kernel_rank;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spherical Hecke algebra computations";

  py::register_exception<Error>(m, "HeckeError");

  m.def("run_job", [](const std::string& doc, int threads) -> py::tuple {
    JobSpec spec;
    try {
      spec = load_spec(doc);
    } catch (const Error& e) {
      nlohmann::json err = {{"error", {{"code", code_name(e.code())}, {"message", e.what()}}}};
      return py::make_tuple(2, err.dump());
    }
    RunResult r = run(spec, threads);
    return py::make_tuple(r.exit_code, r.report.dump());
  }, py::arg("document"), py::arg("threads") = 1);

  m.def("symplectic_exponent", [](const std::vector<std::vector<std::string>>& kappa, const std::string& k) {
    std::vector<Vec> ks;
    for (const auto& v : kappa) ks.push_back(to_vec(v));
    std::vector<int> arg;
    Integer e = symplectic_exponent(ks, parse_rational(k), &arg);
    return py::make_tuple(str(e), arg);
  });
  m.def("symplectic_s_exponent", [](const std::string& k, int count) { return str(symplectic_s_exponent(parse_rational(k), count)); });
  m.def("unitary_exponent", [](const std::vector<std::string>& a, const std::vector<std::string>& b, int j) {
    return str(unitary_exponent({{to_vec(a), to_vec(b)}}, {}, j));
  });
  m.def("normalized_correspondence_exponent_symplectic",
        [](const std::vector<std::string>& k) { return str(normalized_correspondence_exponent_symplectic(to_vec(k))); });
  m.def("normalized_correspondence_exponent_linear",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b, int j) {
          return str(normalized_correspondence_exponent_linear(to_vec(a), to_vec(b), j));
        });

  m.def("strata_symplectic", [](int g) {
    py::list out;
    for (const auto& s : strata_symplectic(g)) out.append(stratum(s));
    return out;
  });
  m.def("strata_linear", [](int n, int p, int q, int j) {
    py::list out;
    for (const auto& s : strata_linear(n, p, q, j)) out.append(stratum(s));
    return out;
  });
  m.def("lie_quotient_oracle_symplectic", &lie_quotient_oracle_symplectic, py::arg("g"), py::arg("s"), py::arg("ell") = 3);
  m.def("lie_quotient_oracle_linear", &lie_quotient_oracle_linear, py::arg("n"), py::arg("p"), py::arg("q"),
        py::arg("j"), py::arg("r"), py::arg("ell") = 3);

  m.def("census_linear", [](int n, int p, int q, const std::vector<int>& I, int q0) {
    auto c = finite_field_census_linear(n, p, q, I, q0);
    py::dict d;
    d["total_points"] = c.total_points;
    d["signatures"] = c.buckets.size();
    d["top_dimensional"] = c.top_dimensional();
    return d;
  });
  m.def("admissible_size", [](const std::string& family, int rank, const std::vector<int>& I, const std::vector<long>& mu) {
    AffineType t = family == "gsp" ? AffineType::GSP : AffineType::GL;
    return admissible_set(t, rank, I, mu).elements.size();
  });

  m.def("katz_mazur", [](const std::vector<std::string>& vals, const std::vector<std::vector<std::string>>& inf) {
    std::vector<Vec> ic;
    for (const auto& v : inf) ic.push_back(to_vec(v));
    auto r = katz_mazur_check(to_vec(vals), ic);
    return py::make_tuple(r.pass, r.first_failure);
  });
}
