#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "braident/commands.hpp"

using namespace braident;
using nlohmann::json;

namespace {

struct Result
{
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  args.insert(args.begin(), "braident");
  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int const code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(std::string const &text)
{
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    out.push_back(json::parse(line));
  return out;
}

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class ScopedEnv
{
public:
  ScopedEnv(char const *name, char const *value) : name_(name)
  {
    if (char const *old = std::getenv(name))
      old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv()
  {
    if (old_)
      ::setenv(name_, old_->c_str(), 1);
    else
      ::unsetenv(name_);
  }

private:
  char const *name_;
  std::optional<std::string> old_;
};

struct GoldenCase
{
  std::string file;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases()
{
  return {
      {"certify_n12.jsonl", {"certify", "--n", "12", "--samples", "20", "--seed", "5", "--jobs", "1"}},
      {"exact_tuples_N3.jsonl", {"exact-tuples", "--N", "3", "--w", "s21"}},
      {"fibers_N2.jsonl", {"fibers", "--N", "2"}},
      {"count_avoid_n6_k2.jsonl", {"count-avoid", "--n", "6", "--k", "2"}},
      {"quantitative_eps01.jsonl", {"quantitative", "--eps", "0.1"}},
  };
}

} // namespace

TEST(Cli, GoldenOutputs)
{
  std::filesystem::path const dir = BRAIDENT_GOLDEN_DIR;
  for (auto const &c : golden_cases()) {
    Result const r = run(c.args);
    EXPECT_EQ(r.code, cli::kExitOk) << c.file << ": " << r.err;
    std::filesystem::path const path = dir / c.file;
    if (std::getenv("BRAIDENT_UPDATE_GOLDEN") != nullptr) {
      std::ofstream(path) << r.out;
      continue;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(r.out, read_file(path)) << c.file;
  }
}

TEST(Cli, CertifyIsDeterministicAcrossJobs)
{
  Result const a = run({"certify", "--n", "45", "--samples", "300", "--seed", "9", "--jobs", "1"});
  Result const b = run({"certify", "--n", "45", "--samples", "300", "--seed", "9", "--jobs", "6"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  Result const c = run({"certify", "--n", "45", "--samples", "300", "--seed", "10"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, CertifyRecordsMatchLibrary)
{
  Result const r = run({"certify", "--n", "30", "--samples", "50", "--seed", "4"});
  auto const records = lines(r.out);
  ASSERT_EQ(records.size(), 51u);
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    json const &rec = records[i];
    EXPECT_EQ(rec["type"], "sample");
    EXPECT_EQ(rec["index"], i);
    Certificate const cert =
        certify_permutation(sample_uniform(30, derive_seed(4, i)), CertifyMode::All3);
    EXPECT_EQ(rec["certified"], cert.certified());
    if (cert.certified()) {
      ++hits;
      EXPECT_EQ(rec["trace"], cert.trace->get_si());
      EXPECT_EQ(rec["N"], cert.N);
      EXPECT_EQ(rec["orbit"].size(), 3 * cert.N);
    } else {
      EXPECT_TRUE(rec["trace"].is_null());
    }
  }
  json const &summary = records.back();
  EXPECT_EQ(summary["type"], "summary");
  EXPECT_EQ(summary["certified"], hits);
  EXPECT_EQ(summary["seed"], 4);
  EXPECT_EQ(summary["seed_source"], "flag");
}

TEST(Cli, SeedFromEnvironment)
{
  ScopedEnv env(cli::kSeedEnvVar, "4");
  Result const from_env = run({"certify", "--n", "30", "--samples", "50"});
  Result const from_flag = run({"certify", "--n", "30", "--samples", "50", "--seed", "4"});
  auto const env_records = lines(from_env.out);
  auto const flag_records = lines(from_flag.out);
  ASSERT_EQ(env_records.size(), flag_records.size());
  EXPECT_EQ(env_records.back()["seed_source"], "env:BRAIDENT_SEED");
  for (std::size_t i = 0; i + 1 < env_records.size(); ++i)
    EXPECT_EQ(env_records[i], flag_records[i]);
}

TEST(Cli, DefaultSeed)
{
  ScopedEnv env(cli::kSeedEnvVar, "");
  auto const records = lines(run({"count-snlr", "--n", "12", "--samples", "100"}).out);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.front()["seed"], cli::kDefaultSeed);
  EXPECT_EQ(records.front()["seed_source"], "default");
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"certify"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"certify", "--n", "10", "--mode", "bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"certify", "--n", "10", "--seed", "-3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"quantitative", "--eps", "1.5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"quantitative", "--eps", "zero"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"exact-tuples", "--N", "3", "--w", "s1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"burau", "--braid", "1 5", "--n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fibers", "--N", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, Burau)
{
  Result const r = run({"burau", "--braid", "1 -2", "--n", "3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  json const summary = lines(r.out).back();
  EXPECT_EQ(summary["gamma"], "[[2,1],[1,1]]");
  EXPECT_EQ(summary["gamma_trace"], 3);
  EXPECT_EQ(summary["trace_certified"], true);
  EXPECT_EQ(summary["writhe"], 0);
  EXPECT_NEAR(summary["entropy_lower_bound"].get<double>(), 0.9624236501, 1e-6);

  json const four = lines(run({"burau", "--braid", "1 2 3", "--n", "4"}).out).back();
  EXPECT_FALSE(four.contains("gamma"));
}

TEST(Cli, Lemma6ExitCodeFollowsExtendedFamily)
{
  Result const r = run({"lemma6", "--bound", "8"});
  EXPECT_EQ(r.code, cli::kExitOk);
  auto const records = lines(r.out);
  ASSERT_EQ(records.size(), 5u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(records[i]["matches_display"], true);
  EXPECT_EQ(records[3]["index"], 4);
  EXPECT_EQ(records[3]["matches_display"], false);
  EXPECT_EQ(records[3]["gamma"], json::parse("[[-7,4],[-2,1]]"));
  EXPECT_EQ(records[3]["displayed"], json::parse("[[1,-2],[4,-7]]"));
  EXPECT_EQ(records[4]["displayed"]["verdict"], "no common matrix");
  EXPECT_EQ(records[4]["computed"]["verdict"], "common matrix found");
  EXPECT_EQ(records[4]["extended"]["verdict"], "no common matrix");
}

TEST(Cli, OutFile)
{
  auto const path = std::filesystem::temp_directory_path() / "braident_cli_out.jsonl";
  Result const r = run({"quantitative", "--eps", "0.5", "--out", path.string()});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
  auto const records = lines(read_file(path));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0]["r_min"], 64679);
  EXPECT_EQ(records[0]["verified"], true);
  std::filesystem::remove(path);
}
