#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysieve/structured/structured_f.hpp"

namespace polysieve::cli {

using Report = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, InvariantViolated = 1, UsageFailure = 2, InputFailure = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string instance = "F_A";
  std::optional<double> B;
  std::optional<double> Q;
  std::optional<double> kappa;
  int m = 0;
  long long trunc = -1;
  unsigned k_max = 2;
  double alpha = 0.0;
  int M = 0;
  std::uint64_t seed = 20261016;
  std::string output;
  unsigned threads = 0;
  std::string mode = "desk";
  std::uint64_t p = 0;
  std::vector<long long> u;
  std::size_t samples = 20;
  std::uint64_t bound = 50;
  std::vector<long long> radii;
  std::vector<std::uint64_t> probes{5, 13, 17};
  std::vector<std::string> only;
  std::string fixtures;
  std::string dump;
};

// A bundled name (F_A, ...) or a path to an instance file.
structured::StructuredF resolve_instance(const std::string& name);

// {"value", "tolerance", "source"}: every numeric claim names where its
// tolerance comes from.
Report claim(const Report& value, double tolerance, const char* source);
Report exact(const Report& value);
Report check(const std::string& name, const std::string& anchor, bool pass);

Report cmd_count(const RunConfig& c);
Report cmd_sieve(const RunConfig& c);
Report cmd_expsum(const RunConfig& c);
Report cmd_classify(const RunConfig& c);
Report cmd_census(const RunConfig& c);
Report cmd_reduce(const RunConfig& c);
Report cmd_verify(const RunConfig& c);

// Parses argv (config file first, flags override), dispatches and writes the
// report. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polysieve::cli
