#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "polysieve/parallel.hpp"
#include "polysieve/structured/instances.hpp"

namespace polysieve::cli {

structured::StructuredF resolve_instance(const std::string& name) {
  if (auto F = structured::bundled_instance(name)) return *F;
  if (!std::filesystem::exists(name)) throw InputError("instance '" + name + "' is neither bundled nor a readable file");
  try {
    return structured::load_structured(name);
  } catch (const std::exception& e) {
    throw InputError("instance file '" + name + "': " + e.what());
  }
}

Report claim(const Report& value, double tolerance, const char* source) {
  Report r;
  r["value"] = value;
  r["tolerance"] = tolerance;
  r["source"] = source;
  return r;
}

Report exact(const Report& value) { return claim(value, 0.0, "exact"); }

Report check(const std::string& name, const std::string& anchor, bool pass) {
  Report r;
  r["check"] = name;
  r["anchor"] = anchor;
  r["pass"] = pass;
  return r;
}

namespace {

void add_shared_options(CLI::App& app, RunConfig& c) {
  app.add_option("--instance", c.instance, "bundled instance name or instance file");
  app.add_option("--B", c.B, "box half-width");
  auto* q = app.add_option("--Q", c.Q, "sieving range start");
  auto* k = app.add_option("--kappa", c.kappa, "Q = B^kappa, kappa in [3/4, 1]");
  q->excludes(k);
  app.add_option("--m", c.m, "congruence filter p = 1 mod m (0: the instance's m)");
  app.add_option("--trunc", c.trunc, "Poisson truncation (-1: automatic)");
  app.add_option("--k_max", c.k_max, "largest extension degree searched")->check(CLI::Range(1u, 4u));
  app.add_option("--alpha", c.alpha, "sieve exponent alpha (0: default)");
  app.add_option("--M", c.M, "decay order M (0: default)");
  app.add_option("--seed", c.seed, "seed for sampled vectors");
  app.add_option("--output", c.output, "report path (default stdout)");
  app.add_option("--threads", c.threads, "worker threads (0: hardware)");
  app.add_option("--mode", c.mode, "sieve mode")->check(CLI::IsMember({"desk", "paper"}));
  app.add_option("--p", c.p, "prime");
  app.add_option("--u", c.u, "frequency vector, comma separated")->delimiter(',');
  app.add_option("--samples", c.samples, "number of sampled vectors");
  app.add_option("--bound", c.bound, "prime bound");
  app.add_option("--R", c.radii, "census radii, comma separated")->delimiter(',');
  app.add_option("--probes", c.probes, "census probe primes, comma separated")->delimiter(',');
  app.add_option("--only", c.only, "verify suites to run, comma separated")->delimiter(',');
  app.add_option("--fixtures", c.fixtures, "oracle fixture file checked by verify");
  app.add_option("--dump", c.dump, "write the exponential-sum table in binary");
}

Report dispatch(const RunConfig& c) {
  if (c.command == "count") return cmd_count(c);
  if (c.command == "sieve") return cmd_sieve(c);
  if (c.command == "expsum") return cmd_expsum(c);
  if (c.command == "classify") return cmd_classify(c);
  if (c.command == "census") return cmd_census(c);
  if (c.command == "reduce") return cmd_reduce(c);
  if (c.command == "verify") return cmd_verify(c);
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"polysieve: desk-scale polynomial sieve computations"};
  app.set_config("--config", "", "key = value configuration file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  add_shared_options(app, c);
  for (const char* name : {"count", "sieve", "expsum", "classify", "census", "reduce", "verify"}) {
    app.add_subcommand(name)->callback([&c, name] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return InputFailure;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return UsageFailure;
  }
  set_worker_threads(c.threads);
  Report report;
  try {
    report = dispatch(c);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return UsageFailure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return InputFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return UsageFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return InvariantViolated;
  }
  const std::string text = report.dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f || !(f << text)) {
      err << "input error: cannot write '" << c.output << "'\n";
      return InputFailure;
    }
  }
  const bool pass = report.value("verdict", std::string("pass")) == "pass";
  if (!pass) err << c.command << ": verdict fail\n";
  return pass ? Ok : InvariantViolated;
}

}  // namespace polysieve::cli
