#include "braident/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "braident/braid.hpp"
#include "braident/burau.hpp"
#include "braident/lemma6.hpp"
#include "braident/parallel.hpp"
#include "braident/series.hpp"

namespace braident::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kShardSize = 256;

Json integer_json(mpz_class const &v)
{
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

void emit(std::ostream &out, Json const &record)
{
  out << record.dump() << '\n';
}

Json seed_fields(RunConfig const &config)
{
  return Json{{"seed", config.seed}, {"seed_source", config.seed_source}};
}

template <class Draw>
CertifyRun run_certify(std::uint64_t samples, std::size_t jobs, Draw draw)
{
  std::uint64_t const shards = (samples + kShardSize - 1) / kShardSize;
  auto shard = [&](std::size_t s) {
    std::vector<CertifySample> part;
    std::uint64_t const end = std::min<std::uint64_t>(samples, (s + 1) * kShardSize);
    for (std::uint64_t i = s * kShardSize; i < end; ++i)
      part.push_back({i, draw(i)});
    return part;
  };

  CertifyRun run;
  run.samples.reserve(samples);
  for (auto &part : run_shards(static_cast<std::size_t>(shards), jobs, shard))
    std::move(part.begin(), part.end(), std::back_inserter(run.samples));
  std::uint64_t const hits = static_cast<std::uint64_t>(std::count_if(
      run.samples.begin(), run.samples.end(),
      [](CertifySample const &s) { return s.certificate.certified(); }));
  run.fraction = binomial_estimate(hits, samples);
  return run;
}

void require(bool ok, std::string const &message)
{
  if (!ok)
    throw UsageError(message);
}

S3 parse_three_cycle(std::string const &text)
{
  S3 w;
  try {
    w = parse_s3(text);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
  require(w == S3::s12 || w == S3::s21, "--w must name a 3-cycle (s12 or s21)");
  return w;
}

int cmd_certify(RunConfig const &config, std::ostream &out)
{
  require(config.n >= 1, "certify: --n must be >= 1");
  CertifyMode mode;
  try {
    mode = parse_certify_mode(config.mode);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }

  CertifyRun const run = certify_sample(config.n, config.samples, config.seed, mode, config.jobs);
  for (auto const &s : run.samples) {
    Json record = {{"type", "sample"}, {"index", s.index}};
    record.update(certificate_record(s.certificate));
    emit(out, record);
  }
  Json summary = {{"type", "summary"},
                  {"command", "certify"},
                  {"n", config.n},
                  {"mode", name(mode)},
                  {"samples", config.samples}};
  summary.update(seed_fields(config));
  summary["certified"] = run.fraction.hits;
  summary["certified_fraction"] = run.fraction.value;
  summary["stderr"] = run.fraction.standard_error;
  emit(out, summary);
  return kExitOk;
}

int cmd_exact_tuples(RunConfig const &config, std::ostream &out)
{
  require(config.N >= 1 && config.N <= kMaxEnumeratedN,
          "exact-tuples: --N must lie in [1, " + std::to_string(kMaxEnumeratedN) + "]");
  S3 const w = parse_three_cycle(config.w);
  TupleCount const count = lemma_crazy_count(w, config.N, config.jobs);

  constexpr std::size_t kWitnessWrithe = 6;
  Json summary = {{"type", "summary"},
                  {"command", "exact-tuples"},
                  {"N", config.N},
                  {"w", name(w)},
                  {"certified", count.certified},
                  {"total", count.total}};
  bool ok = true;
  if (config.N >= kWitnessWrithe + 1) {
    std::uint64_t const bound = lemma_crazy_bound(config.N, kWitnessWrithe);
    ok = count.certified >= bound;
    summary["L"] = kWitnessWrithe;
    summary["bound"] = bound;
    summary["bound_holds"] = ok;
  }
  emit(out, summary);
  return ok ? kExitOk : kExitAssertion;
}

int cmd_fibers(RunConfig const &config, std::ostream &out)
{
  require(config.N >= 1 && config.N <= kMaxFiberN,
          "fibers: --N must lie in [1, " + std::to_string(kMaxFiberN) + "]");
  auto const hist = fiber_histogram(config.N, config.jobs);

  mpz_class const cycles = factorial(3 * config.N - 1);
  std::uint64_t keys_expected = 2;
  for (std::size_t i = 1; i < config.N; ++i)
    keys_expected *= 6;
  mpz_class const expected = cycles / keys_expected;

  bool ok = hist.size() == keys_expected;
  std::uint64_t total = 0;
  for (auto const &[tuple, count] : hist) {
    Json names = Json::array();
    for (S3 x : tuple.entries)
      names.push_back(name(x));
    S3 const product = tuple.product();
    ok = ok && count == expected && (product == S3::s12 || product == S3::s21);
    total += count;
    emit(out, Json{{"type", "fiber"}, {"tuple", names}, {"product", name(product)}, {"count", count}});
  }
  emit(out, Json{{"type", "summary"},
                 {"command", "fibers"},
                 {"N", config.N},
                 {"cycles", integer_json(cycles)},
                 {"fibers", hist.size()},
                 {"expected_fibers", keys_expected},
                 {"expected_count", integer_json(expected)},
                 {"total", total},
                 {"equinumerous", ok}});
  return ok ? kExitOk : kExitAssertion;
}

Json mat_list(std::vector<Mat2> const &ms)
{
  Json out = Json::array();
  for (auto const &m : ms)
    out.push_back(Json::array({Json::array({m[0], m[1]}), Json::array({m[2], m[3]})}));
  return out;
}

Json scan_json(WitnessScan const &scan)
{
  return Json{{"witnesses", scan.witnesses.size()},
              {"analytic_survivors", mat_list(scan.analytic_survivors)},
              {"box_solutions", mat_list(scan.box_solutions)},
              {"verdict", scan.blocking() ? "no common matrix" : "common matrix found"}};
}

int cmd_lemma6(RunConfig const &config, std::ostream &out)
{
  require(config.bound >= 8, "lemma6: --bound must be >= 8");
  Lemma6Witnesses const w = lemma6_witnesses();
  for (std::size_t i = 0; i < 4; ++i) {
    emit(out, Json{{"type", "witness"},
                   {"index", i + 1},
                   {"braid", to_string(w.words[i])},
                   {"writhe", writhe(w.words[i])},
                   {"displayed", mat_list({w.displayed[i]})[0]},
                   {"gamma", mat_list({w.computed[i]})[0]},
                   {"matches_display", w.displayed[i] == w.computed[i]}});
  }

  Lemma6Report const report = lemma6_verify(config.bound, config.jobs);
  Json summary = {{"type", "summary"},
                  {"command", "lemma6"},
                  {"bound", report.bound},
                  {"L", w.L},
                  {"box_matrices", report.box_matrices},
                  {"analytic_candidates", mat_list(report.analytic_candidates)},
                  {"displayed", scan_json(report.displayed)},
                  {"computed", scan_json(report.computed)},
                  {"extended", scan_json(report.extended)}};
  emit(out, summary);
  // What downstream counting needs is some blocking family of genuine
  // pure positive braids with writhe <= L.
  return report.extended.blocking() ? kExitOk : kExitAssertion;
}

int cmd_burau(RunConfig const &config, std::ostream &out)
{
  require(config.n >= 1, "burau: --n must be >= 1");
  require(config.grid >= 1, "burau: --grid must be >= 1");
  BraidWord beta(1);
  try {
    beta = parse_braid(config.braid, config.n);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }

  LaurentMatrix const rho = unreduced_burau(beta);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rho.size(); ++j)
      row.push_back(to_string(rho(i, j)));
    matrix.push_back(row);
  }
  SpectralSample const sample = spectral_radius_sample(rho, config.grid);
  double const h = sample.radius > 1.0 ? std::log(sample.radius) : 0.0;

  Json summary = {{"type", "summary"},
                  {"command", "burau"},
                  {"braid", to_string(beta)},
                  {"n", config.n},
                  {"grid", config.grid},
                  {"writhe", writhe(beta)},
                  {"matrix", matrix},
                  {"spectral_radius_lower_bound", sample.radius},
                  {"attained_at", Json::array({sample.at.real(), sample.at.imag()})},
                  {"entropy_lower_bound", h},
                  {"positive_entropy", h > kEntropyPositivityThreshold}};
  if (config.n == 3) {
    SL2Int const g = gamma(beta);
    summary["gamma"] = to_string(g);
    summary["gamma_trace"] = integer_json(g.trace());
    summary["trace_certified"] = is_hyperbolic(g);
  }
  emit(out, summary);
  return kExitOk;
}

int cmd_count_avoid(RunConfig const &config, std::ostream &out)
{
  require(config.k >= 1, "count-avoid: --k must be >= 1");
  mpz_class const exact = x_nk_exact(config.n, config.k);
  mpq_class ratio(exact, factorial(config.n));
  ratio.canonicalize();
  mpq_class const bound = avoid_ratio_bound(config.n, config.k);
  bool ok = ratio <= bound;

  Json record = {{"type", "count"},
                 {"quantity", "X_nk"},
                 {"n", config.n},
                 {"k", config.k},
                 {"method", name(CountMethod::ExactEgf)},
                 {"count", exact.get_str()},
                 {"ratio", to_string(ratio)},
                 {"bound", to_string(bound)},
                 {"bound_holds", ratio <= bound}};
  emit(out, record);
  if (config.n <= kMaxBruteForceN) {
    std::uint64_t const brute = x_nk_bruteforce(config.n, config.k);
    ok = ok && exact == brute;
    emit(out, Json{{"type", "count"},
                   {"quantity", "X_nk"},
                   {"n", config.n},
                   {"k", config.k},
                   {"method", name(CountMethod::BruteForce)},
                   {"count", std::to_string(brute)},
                   {"agrees", exact == brute}});
  }
  emit(out, Json{{"type", "summary"}, {"command", "count-avoid"}, {"ok", ok}});
  return ok ? kExitOk : kExitAssertion;
}

int cmd_count_snlr(RunConfig const &config, std::ostream &out)
{
  require(config.n >= 1, "count-snlr: --n must be >= 1");
  require(config.ell >= 1 && config.r >= 1, "count-snlr: --ell and --r must be >= 1");
  Estimate const est =
      snlr_montecarlo(config.n, config.ell, config.r, config.samples, config.seed, config.jobs);

  Json record = {{"type", "count"},
                 {"quantity", "S_n(ell,r)"},
                 {"n", config.n},
                 {"ell", config.ell},
                 {"r", config.r},
                 {"method", name(CountMethod::MonteCarlo)},
                 {"samples", config.samples}};
  record.update(seed_fields(config));
  record["ratio"] = est.value;
  record["stderr"] = est.standard_error;
  emit(out, record);

  if (config.n <= kMaxBruteForceN) {
    std::uint64_t const exact = snlr_bruteforce(config.n, config.ell, config.r);
    mpq_class ratio(mpz_class(std::to_string(exact)), factorial(config.n));
    ratio.canonicalize();
    emit(out, Json{{"type", "count"},
                   {"quantity", "S_n(ell,r)"},
                   {"n", config.n},
                   {"ell", config.ell},
                   {"r", config.r},
                   {"method", name(CountMethod::BruteForce)},
                   {"count", std::to_string(exact)},
                   {"ratio", to_string(ratio)}});
  }
  emit(out, Json{{"type", "summary"}, {"command", "count-snlr"}, {"ok", true}});
  return kExitOk;
}

int cmd_quantitative(RunConfig const &config, std::ostream &out)
{
  mpq_class eps;
  try {
    eps = parse_decimal(config.eps);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
  require(eps > 0 && eps < 1, "quantitative: --eps must lie in (0, 1)");
  QuantitativeBound const q = quantitative_bound(eps);
  bool const ok = miss_power_below(q.r_min, q.delta) &&
                  (q.r_min == 0 || !miss_power_below(q.r_min - 1, q.delta));
  emit(out, Json{{"type", "summary"},
                 {"command", "quantitative"},
                 {"eps", to_string(q.eps)},
                 {"delta", to_string(q.delta)},
                 {"r_min", q.r_min},
                 {"residual_ratio", to_string(q.residual_ratio)},
                 {"verified", ok},
                 {"description", q.description}});
  return ok ? kExitOk : kExitAssertion;
}

} // namespace

CertifyRun certify_sample(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                          CertifyMode mode, std::size_t jobs)
{
  return run_certify(samples, jobs, [&](std::uint64_t i) {
    return certify_permutation(sample_uniform(n, derive_seed(seed, i)), mode);
  });
}

CertifyRun certify_full_cycles(std::size_t m, std::uint64_t samples, std::uint64_t seed,
                               std::size_t jobs)
{
  if (m == 0 || m % 3 != 0)
    throw std::invalid_argument("certify_full_cycles: degree must be a positive multiple of 3");
  return run_certify(samples, jobs, [&](std::uint64_t i) {
    return certify_cycle(sample_full_cycle(m, derive_seed(seed, i)));
  });
}

Json certificate_record(Certificate const &cert)
{
  Json orbit = Json::array();
  if (cert.certified())
    orbit = cert.orbit;
  return Json{{"orbit", orbit},
              {"N", cert.certified() ? cert.N : 0},
              {"trace", cert.certified() ? integer_json(*cert.trace) : Json(nullptr)},
              {"certified", cert.certified()}};
}

int run_command(RunConfig const &config, std::ostream &out)
{
  if (config.command == "certify")
    return cmd_certify(config, out);
  if (config.command == "exact-tuples")
    return cmd_exact_tuples(config, out);
  if (config.command == "fibers")
    return cmd_fibers(config, out);
  if (config.command == "lemma6")
    return cmd_lemma6(config, out);
  if (config.command == "burau")
    return cmd_burau(config, out);
  if (config.command == "count-avoid")
    return cmd_count_avoid(config, out);
  if (config.command == "count-snlr")
    return cmd_count_snlr(config, out);
  if (config.command == "quantitative")
    return cmd_quantitative(config, out);
  throw UsageError("unknown command '" + config.command + "'");
}

int main(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Positive-entropy certificates for simple braids"};
  app.require_subcommand(1);

  RunConfig config;
  std::string seed_flag;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
    sub->add_option("--out", config.out, "write JSON lines here instead of stdout");
  };
  auto seeded = [&](CLI::App *sub) {
    sub->add_option("--seed", seed_flag,
                    std::string("RNG seed (default: $") + kSeedEnvVar + " or " +
                        std::to_string(kDefaultSeed) + ")");
    sub->add_option("--samples", config.samples, "number of samples");
  };

  auto *certify = app.add_subcommand("certify", "certify uniformly sampled simple braids");
  certify->add_option("--n", config.n, "strand count")->required();
  certify->add_option("--mode", config.mode, "all3 or paper")
      ->check(CLI::IsMember({"all3", "paper"}));
  seeded(certify);
  common(certify);

  auto *tuples = app.add_subcommand("exact-tuples", "exact certified count over P(w, N)");
  tuples->add_option("--N", config.N, "tuple length")->required();
  tuples->add_option("--w", config.w, "target 3-cycle: s12 or s21");
  common(tuples);

  auto *fibers = app.add_subcommand("fibers", "fiber sizes of the cycle-to-tuple reduction");
  fibers->add_option("--N", config.N, "cycles of length 3N")->required();
  common(fibers);

  auto *lemma6 = app.add_subcommand("lemma6", "search SL2(Z) for a matrix defeating the witnesses");
  lemma6->add_option("--bound", config.bound, "entry bound for the exhaustive scan");
  common(lemma6);

  auto *burau = app.add_subcommand("burau", "Burau matrix and entropy lower bound of a braid");
  burau->add_option("--braid", config.braid, "signed generator indices, e.g. \"1 -2\"")->required();
  burau->add_option("--n", config.n, "strand count")->required();
  burau->add_option("--grid", config.grid, "unit-circle sample points");
  common(burau);

  auto *avoid = app.add_subcommand("count-avoid", "permutations avoiding odd multiples of k");
  avoid->add_option("--n", config.n, "degree")->required();
  avoid->add_option("--k", config.k, "cycle length base")->required();
  common(avoid);

  auto *snlr = app.add_subcommand("count-snlr", "fraction of S_n with r long 3-divisible cycles");
  snlr->add_option("--n", config.n, "degree")->required();
  snlr->add_option("--ell", config.ell, "minimum length 3*ell");
  snlr->add_option("--r", config.r, "minimum number of cycles");
  seeded(snlr);
  common(snlr);

  auto *quant = app.add_subcommand("quantitative", "cycle count r needed for a 1 - eps guarantee");
  quant->add_option("--eps", config.eps, "target failure fraction in (0, 1)")->required();
  common(quant);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    std::ostringstream help, error;
    int const code = app.exit(e, help, error);
    out << help.str();
    err << error.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();

  try {
    char const *env = std::getenv(kSeedEnvVar);
    std::string seed_text;
    if (!seed_flag.empty()) {
      seed_text = seed_flag;
      config.seed_source = "flag";
    } else if (env != nullptr && *env != '\0') {
      seed_text = env;
      config.seed_source = std::string("env:") + kSeedEnvVar;
    }
    if (!seed_text.empty()) {
      char const *end = seed_text.data() + seed_text.size();
      auto const [ptr, ec] = std::from_chars(seed_text.data(), end, config.seed);
      if (ec != std::errc() || ptr != end)
        throw UsageError("seed must be a nonnegative integer, got '" + seed_text + "'");
    }

    if (config.out.empty())
      return run_command(config, out);
    std::ofstream file(config.out);
    if (!file)
      throw UsageError("cannot open output file '" + config.out + "'");
    return run_command(config, file);
  } catch (UsageError const &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace braident::cli
