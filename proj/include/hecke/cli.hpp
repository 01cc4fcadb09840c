#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// One batch job.  Rationals are kept as canonical "p/q" strings so that a
// loaded document re-emits identically.
struct JobSpec {
  std::string command;  // normalize | strata | admissible | satake | newton-check | katz-mazur | consistency
  std::string family;
  std::optional<int> g, n, p, q, j, q0, height;
  std::string kappa;   // "k=2", "k=3,1;c=-4", "a=2,1;b=1", "k1=3;k2=1"
  std::string preset;  // modular-curve | hilbert | gsp4 | gsp2g | gu21
  std::vector<int> splitting;
  std::vector<int> I;
  std::vector<long> mu, lambda;
  std::vector<std::string> valuations, newton;
  std::vector<std::vector<std::string>> infchar;
  std::string format = "json";
  std::optional<long long> budget, seed, samples;

  bool operator==(const JobSpec&) const = default;
};

JobSpec load_spec(const std::string& document);
JobSpec load_spec_file(const std::string& path);
nlohmann::json dump_spec(const JobSpec& spec);

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 verdict failure, 2 input error
  nlohmann::json report;
  std::string output;  // report rendered in the requested format
};

// Thread count is taken from the caller (the CLI reads HECKE_THREADS).
RunResult run(const JobSpec& spec, int threads = 1);

std::string emit(const nlohmann::json& report, const std::string& format);

}  // namespace hecke
