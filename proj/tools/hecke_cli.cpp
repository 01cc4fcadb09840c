#include "hecke/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using hecke::JobSpec;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

template <class T>
std::vector<T> ints(const std::string& s) {
  std::vector<T> out;
  for (const auto& x : split(s, ',')) out.push_back(static_cast<T>(std::stoll(x)));
  return out;
}

int threads_from_env() {
  const char* v = std::getenv("HECKE_THREADS");
  if (!v) return 1;
  int t = std::atoi(v);
  return t > 0 ? t : 1;
}

struct Raw {
  std::string I, mu, lambda, valuations, newton, infchar, splitting;
};

void common(CLI::App* sub, JobSpec& s) {
  sub->add_option("--format", s.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--budget", s.budget, "enumeration budget");
  sub->add_option("--seed", s.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spherical Hecke algebra computations"};
  app.require_subcommand(1);
  JobSpec s;
  Raw raw;
  std::string spec_path;

  auto* norm = app.add_subcommand("normalize", "normalized generator table");
  norm->add_option("--family", s.family);
  norm->add_option("--g", s.g);
  norm->add_option("--n", s.n);
  norm->add_option("--p", s.p);
  norm->add_option("--kappa", s.kappa, "e.g. k=2, k=3,1;c=-4, a=2,1;b=1, k1=3;k2=1");
  norm->add_option("--preset", s.preset, "modular-curve | hilbert | gsp4 | gsp2g | gu21");
  norm->add_option("--splitting", raw.splitting, "embeddings per place, e.g. 2,1");
  common(norm, s);

  auto* strata = app.add_subcommand("strata", "Kottwitz-Rapoport strata of a local model");
  strata->add_option("--family", s.family, "symplectic | linear")->required();
  strata->add_option("--g", s.g);
  strata->add_option("--n", s.n);
  strata->add_option("--p", s.p);
  strata->add_option("--q", s.q);
  strata->add_option("--j", s.j);
  strata->add_option("--q0", s.q0, "also run the finite-field census over F_q0");
  common(strata, s);

  auto* adm = app.add_subcommand("admissible", "mu-admissible set");
  adm->add_option("--family", s.family, "gl | gsp")->required();
  adm->add_option("--n", s.n);
  adm->add_option("--g", s.g);
  adm->add_option("--I", raw.I, "parahoric type, e.g. 0,1")->required();
  adm->add_option("--mu", raw.mu, "minuscule coweight, e.g. 1,0")->required();
  common(adm, s);

  auto* sat = app.add_subcommand("satake", "Satake basis change for GL_n");
  sat->add_option("--n", s.n);
  sat->add_option("--lambda", raw.lambda, "dominant coweight, e.g. 2,1,0")->required();
  common(sat, s);

  auto* newt = app.add_subcommand("newton-check", "Newton point against a bound");
  newt->add_option("--n", s.n);
  newt->add_option("--valuations", raw.valuations, "valuations of the Satake parameter")->required();
  newt->add_option("--newton", raw.newton, "bound nu")->required();
  newt->add_option("--height", s.height, "height bound of the lambda sweep");
  common(newt, s);

  auto* km = app.add_subcommand("katz-mazur", "Katz-Mazur inequality");
  km->add_option("--valuations", raw.valuations)->required();
  km->add_option("--infchar", raw.infchar, "one list per embedding, separated by ';'")->required();
  common(km, s);

  auto* cons = app.add_subcommand("consistency", "randomized cross-checks");
  cons->add_option("--samples", s.samples);
  common(cons, s);

  auto* runp = app.add_subcommand("run", "run a JSON job document");
  runp->add_option("spec", spec_path)->required();
  runp->add_option("--format", s.format)->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  hecke::RunResult result;
  try {
    if (runp->parsed()) {
      std::string fmt = s.format;
      s = hecke::load_spec_file(spec_path);
      if (runp->count("--format")) s.format = fmt;
    } else {
      s.command = app.get_subcommands().front()->get_name();
      if (!raw.I.empty()) s.I = ints<int>(raw.I);
      if (!raw.mu.empty()) s.mu = ints<long>(raw.mu);
      if (!raw.lambda.empty()) s.lambda = ints<long>(raw.lambda);
      if (!raw.splitting.empty()) s.splitting = ints<int>(raw.splitting);
      if (!raw.valuations.empty()) s.valuations = split(raw.valuations, ',');
      if (!raw.newton.empty()) s.newton = split(raw.newton, ',');
      for (const auto& row : split(raw.infchar, ';')) s.infchar.push_back(split(row, ','));
      // Route through the document form so both entry points validate identically.
      s = hecke::load_spec(hecke::dump_spec(s).dump());
    }
    result = hecke::run(s, threads_from_env());
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", {{"code", "InputError"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  std::cout << result.output;
  return result.exit_code;
}
