#include "braident/counting.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "braident/parallel.hpp"
#include "braident/permutation.hpp"
#include "braident/random.hpp"

namespace braident {

namespace {

void require_brute_force(std::size_t n)
{
  if (n > kMaxBruteForceN)
    throw std::invalid_argument("brute-force enumeration limited to n <= " +
                                std::to_string(kMaxBruteForceN));
}

// Calls visit with the cycle lengths of every element of S_n.
template <class Visit>
void for_each_cycle_type(std::size_t n, Visit visit)
{
  if (n == 0) {
    visit(std::vector<std::size_t>{});
    return;
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(cycle_decomposition(Permutation(images)).lengths());
  } while (std::next_permutation(images.begin(), images.end()));
}

bool avoids_odd_multiples(std::vector<std::size_t> const &lengths, std::size_t k)
{
  return std::none_of(lengths.begin(), lengths.end(), [k](std::size_t len) {
    return len % k == 0 && (len / k) % 2 == 1;
  });
}

constexpr unsigned long kSixPow6 = 46656;

} // namespace

mpz_class factorial(std::size_t n)
{
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

RationalSeries avoid_egf(std::size_t k, std::size_t order)
{
  if (k == 0)
    throw std::invalid_argument("avoid_egf: k must be positive");
  auto const kk = static_cast<long>(k);
  RationalSeries const tail =
      binomial_series(mpq_class(1, kk), k, order) *
      binomial_series(mpq_class(-1, 2 * kk), 2 * k, order);

  // Multiplying by (1 - x)^-1 takes partial sums.
  RationalSeries out(order);
  mpq_class running = 0;
  for (std::size_t i = 0; i <= order; ++i) {
    running += tail[i];
    out[i] = running;
  }
  return out;
}

std::vector<mpz_class> x_nk_exact_table(std::size_t max_n, std::size_t k)
{
  RationalSeries const egf = avoid_egf(k, max_n);
  std::vector<mpz_class> out;
  out.reserve(max_n + 1);
  mpz_class fact = 1;
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (n > 0)
      fact *= static_cast<unsigned long>(n);
    mpq_class scaled = egf[n] * fact;
    scaled.canonicalize();
    if (scaled.get_den() != 1 || scaled < 0 || scaled > fact)
      throw std::logic_error("x_nk_exact: n! * coefficient is not a count in [0, n!] at n = " +
                             std::to_string(n));
    out.push_back(scaled.get_num());
  }
  return out;
}

mpz_class x_nk_exact(std::size_t n, std::size_t k)
{
  return x_nk_exact_table(n, k).back();
}

std::uint64_t x_nk_bruteforce(std::size_t n, std::size_t k)
{
  require_brute_force(n);
  if (k == 0)
    throw std::invalid_argument("x_nk_bruteforce: k must be positive");
  std::uint64_t count = 0;
  for_each_cycle_type(n, [&](std::vector<std::size_t> const &lengths) {
    if (avoids_odd_multiples(lengths, k))
      ++count;
  });
  return count;
}

mpq_class avoid_ratio_bound(std::size_t n, std::size_t k)
{
  if (k == 0)
    throw std::invalid_argument("avoid_ratio_bound: k must be positive");
  auto const kk = static_cast<long>(k);
  mpq_class const alpha = mpq_class(1, 2 * kk) - 1;
  return 2 * abs(binomial(alpha, n / k));
}

bool in_snlr(std::vector<std::size_t> const &cycle_lengths, std::size_t ell, std::size_t r)
{
  auto const hits = std::count_if(cycle_lengths.begin(), cycle_lengths.end(),
                                  [ell](std::size_t len) { return len % 3 == 0 && len >= 3 * ell; });
  return static_cast<std::size_t>(hits) >= r;
}

std::uint64_t snlr_bruteforce(std::size_t n, std::size_t ell, std::size_t r)
{
  require_brute_force(n);
  std::uint64_t count = 0;
  for_each_cycle_type(n, [&](std::vector<std::size_t> const &lengths) {
    if (in_snlr(lengths, ell, r))
      ++count;
  });
  return count;
}

Estimate binomial_estimate(std::uint64_t hits, std::uint64_t samples)
{
  Estimate e;
  e.hits = hits;
  e.samples = samples;
  if (samples == 0)
    return e;
  double const m = static_cast<double>(samples);
  e.value = static_cast<double>(hits) / m;
  e.standard_error = std::sqrt(e.value * (1.0 - e.value) / m);
  return e;
}

Estimate snlr_montecarlo(std::size_t n, std::size_t ell, std::size_t r,
                         std::uint64_t samples, std::uint64_t seed, std::size_t jobs)
{
  if (n == 0)
    throw std::invalid_argument("snlr_montecarlo: n must be positive");
  constexpr std::uint64_t kShard = 1024;
  std::uint64_t const shards = (samples + kShard - 1) / kShard;
  auto shard = [&](std::size_t s) {
    std::uint64_t hits = 0;
    std::uint64_t const end = std::min<std::uint64_t>(samples, (s + 1) * kShard);
    for (std::uint64_t i = s * kShard; i < end; ++i) {
      Permutation const w = sample_uniform(n, derive_seed(seed, i));
      if (in_snlr(cycle_decomposition(w).lengths(), ell, r))
        ++hits;
    }
    return hits;
  };
  auto const parts = run_shards(static_cast<std::size_t>(shards), jobs, shard);
  return binomial_estimate(std::accumulate(parts.begin(), parts.end(), std::uint64_t{0}),
                           samples);
}

mpq_class certify_miss_rate()
{
  return mpq_class(kSixPow6 - 1, kSixPow6);
}

bool miss_power_below(std::uint64_t r, mpq_class const &delta)
{
  // (46655/46656)^r < p/q  <=>  46655^r q < p 46656^r
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), kSixPow6 - 1, static_cast<unsigned long>(r));
  mpz_ui_pow_ui(den.get_mpz_t(), kSixPow6, static_cast<unsigned long>(r));
  mpq_class d(delta);
  d.canonicalize();
  return num * d.get_den() < d.get_num() * den;
}

QuantitativeBound quantitative_bound(mpq_class const &eps)
{
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("quantitative_bound: eps must lie in (0, 1)");

  QuantitativeBound out;
  out.eps = eps;
  out.delta = eps / 2;
  out.delta.canonicalize();

  // Floating-point guess, then exact correction in both directions.
  double const guess = std::log(out.delta.get_d()) / std::log1p(-1.0 / kSixPow6);
  std::uint64_t r = guess > 0 ? static_cast<std::uint64_t>(std::ceil(guess)) : 0;
  while (!miss_power_below(r, out.delta))
    ++r;
  while (r > 0 && miss_power_below(r - 1, out.delta))
    --r;
  out.r_min = r;

  out.residual_ratio = 1 - out.delta;
  out.description =
      "r_min = " + std::to_string(r) + " is the least r with (1 - 6^-6)^r < eps/2 = " +
      to_string(out.delta) + "; it then suffices that |S_n(7, r_min)| / |S_n| > 1 - eps/2 = " +
      to_string(out.residual_ratio) +
      ", which holds for all large n, so the certified fraction exceeds 1 - eps";
  return out;
}

mpq_class parse_decimal(std::string_view text)
{
  auto bad = [&text]() {
    return std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-'))
    negative = text[i++] == '-';

  std::string digits;
  long scale = 0;
  bool any = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any = true)
    digits += text[i];
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any = true) {
      digits += text[i];
      --scale;
    }
  }
  if (!any)
    throw bad();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(std::string(text.substr(i + 1)), &used);
    } catch (std::exception const &) {
      throw bad();
    }
    if (used != text.size() - i - 1)
      throw bad();
    scale += exponent;
    i = text.size();
  }
  if (i != text.size())
    throw bad();

  mpz_class mantissa(digits);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class out = scale >= 0 ? mpq_class(mantissa * power) : mpq_class(mantissa, power);
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

std::string_view name(CountMethod m)
{
  switch (m) {
  case CountMethod::ExactEgf:
    return "exact-egf";
  case CountMethod::BruteForce:
    return "brute-force";
  case CountMethod::MonteCarlo:
    return "monte-carlo";
  }
  return "unknown";
}

} // namespace braident
