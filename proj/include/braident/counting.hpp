#ifndef BRAIDENT_COUNTING_HPP
#define BRAIDENT_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "braident/series.hpp"

namespace braident {

mpz_class factorial(std::size_t n);

/// Exponential generating function of permutations with no cycle of length
/// k, 3k, 5k, ...:  (1 - x)^-1 (1 - x^k)^(1/k) (1 - x^2k)^(-1/2k), truncated
/// after x^order.
RationalSeries avoid_egf(std::size_t k, std::size_t order);

/// |X_{n,k}|: number of permutations of n letters with no cycle whose length
/// is an odd multiple of k, read off avoid_egf. Throws std::logic_error if
/// n! times the coefficient is not a nonnegative integer.
mpz_class x_nk_exact(std::size_t n, std::size_t k);

/// x_nk_exact(n, k) for n = 0..max_n from a single series expansion.
std::vector<mpz_class> x_nk_exact_table(std::size_t max_n, std::size_t k);

inline constexpr std::size_t kMaxBruteForceN = 9;

/// |X_{n,k}| by enumerating S_n (n <= 9).
std::uint64_t x_nk_bruteforce(std::size_t n, std::size_t k);

/// 2 |binomial(1/(2k) - 1, floor(n/k))|, an upper bound for |X_{n,k}| / n!.
mpq_class avoid_ratio_bound(std::size_t n, std::size_t k);

/// Whether p has at least r cycles of length divisible by 3 and >= 3 ell.
bool in_snlr(std::vector<std::size_t> const &cycle_lengths, std::size_t ell, std::size_t r);

/// |S_n(ell, r)| by enumerating S_n (n <= 9).
std::uint64_t snlr_bruteforce(std::size_t n, std::size_t ell, std::size_t r);

struct Estimate
{
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Fraction of sample_uniform draws (sample i seeded with derive_seed(seed, i))
/// that lie in S_n(ell, r), with its binomial standard error.
Estimate snlr_montecarlo(std::size_t n, std::size_t ell, std::size_t r,
                         std::uint64_t samples, std::uint64_t seed, std::size_t jobs = 0);

/// Estimate from hit counts: p = hits / samples, stderr = sqrt(p (1 - p) / samples).
Estimate binomial_estimate(std::uint64_t hits, std::uint64_t samples);

/// 1 - 6^-6 as an exact rational.
mpq_class certify_miss_rate();

/// Whether (1 - 6^-6)^r < delta, decided exactly.
bool miss_power_below(std::uint64_t r, mpq_class const &delta);

struct QuantitativeBound
{
  mpq_class eps;
  mpq_class delta;      ///< eps / 2, the share given to the certification factor
  std::uint64_t r_min = 0;
  /// |S_n(7, r_min)| / |S_n| above this suffices (1 - delta).
  mpq_class residual_ratio;
  std::string description;
};

/// Smallest r with (1 - 6^-6)^r < eps / 2, decided in exact arithmetic.
/// Throws std::invalid_argument unless 0 < eps < 1.
QuantitativeBound quantitative_bound(mpq_class const &eps);

/// Exact rational from a decimal literal such as "0.01" or "1e-3".
mpq_class parse_decimal(std::string_view text);

/// Named tag for how a count was obtained.
enum class CountMethod { ExactEgf, BruteForce, MonteCarlo };
std::string_view name(CountMethod m);

} // namespace braident

#endif // BRAIDENT_COUNTING_HPP
