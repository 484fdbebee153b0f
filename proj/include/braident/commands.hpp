#ifndef BRAIDENT_COMMANDS_HPP
#define BRAIDENT_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "braident/counting.hpp"
#include "braident/reduction.hpp"

namespace braident::cli {

/// Bad arguments; maps to exit code 1.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAssertion = 2;

inline constexpr char const *kSeedEnvVar = "BRAIDENT_SEED";
inline constexpr std::uint64_t kDefaultSeed = 1;

struct RunConfig
{
  std::string command;
  std::size_t n = 0;
  std::size_t N = 0;
  std::size_t ell = 7;
  std::size_t r = 1;
  std::size_t k = 1;
  std::string eps = "0.1";
  std::uint64_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string seed_source = "default";
  std::size_t grid = 512;
  std::string mode = "all3";
  std::size_t jobs = 0;
  std::string out;
  std::string braid;
  std::string w = "s12";
  long bound = 8;
};

struct CertifySample
{
  std::uint64_t index = 0;
  Certificate certificate;
};

struct CertifyRun
{
  std::vector<CertifySample> samples;
  Estimate fraction;
};

/// Certifies `samples` uniform permutations of degree n; sample i is drawn
/// with seed derive_seed(seed, i).
CertifyRun certify_sample(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                          CertifyMode mode, std::size_t jobs = 0);

/// Same for uniform full cycles of degree m (divisible by 3), certified
/// directly with certify_cycle.
CertifyRun certify_full_cycles(std::size_t m, std::uint64_t samples, std::uint64_t seed,
                               std::size_t jobs = 0);

/// {"orbit": [...], "N": int, "trace": int|null, "certified": bool}.
/// Traces beyond 64 bits are written as decimal strings.
nlohmann::ordered_json certificate_record(Certificate const &cert);

/// Runs one subcommand, writing JSON lines to out. Returns kExitOk or
/// kExitAssertion; throws UsageError on invalid configuration.
int run_command(RunConfig const &config, std::ostream &out);

/// Full command-line entry point: parses argv, resolves the seed (flag, then
/// the BRAIDENT_SEED environment variable, then the default) and dispatches.
int main(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace braident::cli

#endif // BRAIDENT_COMMANDS_HPP
