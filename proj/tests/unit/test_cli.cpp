#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "test_support.hpp"

using polysieve::cli::Report;
using polysieve::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
  Report json() const { return Report::parse(out); }
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "polysieve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polysieve_test_" + name);
}

}  // namespace

TEST(Cli, CountReportsN) {
  const auto r = invoke({"count", "--instance", "F_A", "--B", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["N"]["value"], 37);
  EXPECT_EQ(j["N"]["source"], "exact");
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Cli, UsageAndFileErrors) {
  EXPECT_EQ(invoke({"count", "--B", "-1"}).code, polysieve::cli::UsageFailure);
  EXPECT_EQ(invoke({"count", "--instance", "missing.txt", "--B", "2"}).code, polysieve::cli::InputFailure);
  EXPECT_EQ(invoke({}).code, polysieve::cli::UsageFailure);
  EXPECT_EQ(invoke({"count", "--bogus", "1"}).code, polysieve::cli::UsageFailure);
  EXPECT_EQ(invoke({"sieve", "--B", "12", "--Q", "11", "--kappa", "0.8"}).code, polysieve::cli::UsageFailure);
  EXPECT_EQ(invoke({"classify", "--p", "4", "--u", "1,2,0"}).code, polysieve::cli::UsageFailure);
}

TEST(Cli, InstanceFromFile) {
  const auto r = invoke({"count", "--instance", std::string(POLYSIEVE_DATA_DIR) + "/instances/F_C.txt", "--B", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["N"]["value"], 13);
}

TEST(Cli, ClassifyWitness) {
  const auto r = invoke({"classify", "--instance", "F_A", "--p", "5", "--u", "1,2,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["type"], "bad");
  EXPECT_TRUE(j["checks"][0]["pass"].get<bool>());
  EXPECT_EQ(invoke({"classify", "--instance", "F_sing", "--p", "5", "--u", "1,2,0"}).code,
            polysieve::cli::UsageFailure);
}

TEST(Cli, CensusAndReduce) {
  const auto c = invoke({"census", "--instance", "F_A", "--u", "3,4,0", "--bound", "50"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.json()["bad_primes"]["value"], Report::array({5}));
  const auto l = invoke({"census", "--instance", "F_D", "--R", "2,4", "--probes", "5,13,17"});
  ASSERT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(l.json()["census"][0]["count"]["value"], 17);
  const auto r = invoke({"reduce", "--instance", "F_A", "--B", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["branch"], "coefficients bounded");
}

TEST(Cli, ExpsumDeterministicWithDump) {
  const auto dump = temp_file("table.bin");
  const auto a = invoke({"expsum", "--instance", "F_A", "--p", "7", "--seed", "3", "--dump", dump.string()});
  const auto b = invoke({"expsum", "--instance", "F_A", "--p", "7", "--seed", "3", "--threads", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::filesystem::file_size(dump), 24u + 16u * 343u);
  std::filesystem::remove(dump);
}

TEST(Cli, SieveDeskAndPaper) {
  const auto out = temp_file("sieve.json");
  const auto a = invoke({"sieve", "--instance", "F_A", "--B", "12", "--Q", "11", "--output", out.string()});
  ASSERT_EQ(a.code, 0) << a.err;
  std::ifstream in(out);
  const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto j = Report::parse(first);
  EXPECT_EQ(j["checks"][0]["check"], "N <= S");
  EXPECT_TRUE(j["checks"][0]["pass"].get<bool>());
  EXPECT_EQ(j["verdict"], "pass");
  const auto b = invoke({"sieve", "--instance", "F_A", "--B", "12", "--Q", "11", "--output", out.string()});
  std::ifstream in2(out);
  const std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  EXPECT_EQ(first, second);
  std::filesystem::remove(out);

  const auto p = invoke({"sieve", "--instance", "F_A", "--B", "10000", "--mode", "paper"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_NEAR(p.json()["Q"].get<double>(), 1742.0833099396518, 1e-6);
}

TEST(Cli, ConfigFile) {
  const auto cfg = temp_file("run.cfg");
  {
    std::ofstream f(cfg);
    f << "instance = F_A\nB = 2\n";
  }
  const auto r = invoke({"count", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["N"]["value"], 37);
  const auto o = invoke({"count", "--config", cfg.string(), "--B", "3"});
  EXPECT_EQ(o.json()["N"]["value"], 43);
  std::filesystem::remove(cfg);
}

TEST(Cli, VerifySubsetAndCorruptedFixture) {
  const auto r = invoke({"verify", "--only", "structured,coeffreduce"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_TRUE(j["suites"].contains("structured"));
  EXPECT_FALSE(j["suites"].contains("expsum"));

  auto fx = testing_support::fixtures();
  fx["count_N"][2]["value"] = 38;
  const auto path = temp_file("fixtures.json");
  {
    std::ofstream f(path);
    f << fx.dump();
  }
  const auto bad = invoke({"verify", "--only", "fixtures", "--fixtures", path.string()});
  EXPECT_EQ(bad.code, polysieve::cli::InvariantViolated);
  const auto bj = bad.json();
  EXPECT_EQ(bj["failures"], Report::array({"fixture count_N[2]"}));
  const auto good = invoke({"verify", "--only", "fixtures", "--fixtures", POLYSIEVE_FIXTURES});
  EXPECT_EQ(good.code, 0) << good.out;
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"verify", "--only", "nonsense"}).code, polysieve::cli::UsageFailure);
}
