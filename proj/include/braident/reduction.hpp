#ifndef BRAIDENT_REDUCTION_HPP
#define BRAIDENT_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "braident/braid.hpp"
#include "braident/permutation.hpp"
#include "braident/sl2.hpp"

namespace braident {

// ---------------------------------------------------------------------------
// S_3 and tuples over it
// ---------------------------------------------------------------------------

/// The six elements of S_3 by name. s12 = compose(s1, s2) and
/// s21 = compose(s2, s1) are the two 3-cycles; w0 is the half twist 1 <-> 3.
enum class S3 : std::uint8_t { e, s1, s2, s12, s21, w0 };

inline constexpr std::size_t kS3Order = 6;

Permutation to_permutation(S3 x);
/// Throws std::invalid_argument unless p has degree 3.
S3 to_s3(Permutation const &p);
std::string_view name(S3 x);
/// Inverse of name(); throws std::invalid_argument on unknown names.
S3 parse_s3(std::string_view text);

S3 s3_compose(S3 x, S3 y);
S3 s3_inverse(S3 x);

/// An ordered tuple (w_1, ..., w_N) of elements of S_3.
struct S3Tuple
{
  std::vector<S3> entries;

  std::size_t size() const { return entries.size(); }
  /// Left-to-right product w_1 ... w_N.
  S3 product() const;
  /// Membership in P(w, N): the product equals w.
  bool in_P(S3 w) const { return product() == w; }

  auto operator<=>(S3Tuple const &) const = default;
};

std::string to_string(S3Tuple const &t);

/// sigma_{w_1} ... sigma_{w_N} on 3 strands.
BraidWord braid_of_tuple(S3Tuple const &t);

/// Trace of gamma(sigma_{w_1}) ... gamma(sigma_{w_N}).
mpz_class trace_of_tuple(S3Tuple const &t);

// ---------------------------------------------------------------------------
// The reduction from a (3N)-cycle to a tuple in P(s12, N) u P(s21, N)
// ---------------------------------------------------------------------------

/// For a full cycle c of S_{3N} with a_i = c^i(1), entry p_i (i = 1..N) is
/// the permutation of {1, 2, 3} obtained by
///   1. ranking {a_{i-1}, a_{i-1+N}, a_{i-1+2N}} in increasing order,
///   2. moving each a_k to a_{k+1},
///   3. reading off ranks in {a_i, a_{i+N}, a_{i+2N}}.
/// The product of the entries is s21 (1 -> 2) when a_N < a_{2N} and s12
/// (1 -> 3) otherwise.
///
/// Throws std::invalid_argument if c is not a full cycle or its degree is not
/// divisible by 3.
S3Tuple p_vec(Permutation const &c);

/// The points a_N and a_{2N} of a full (3N)-cycle, in that order.
std::pair<int, int> third_points(Permutation const &c);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class Verdict { TraceCertified, NotCertified };

struct Certificate
{
  Verdict verdict = Verdict::NotCertified;
  /// Points of the certifying orbit (sorted); for certify_cycle, the orbit
  /// that was examined even when it fails.
  std::vector<int> orbit;
  /// Orbit size / 3.
  std::size_t N = 0;
  /// Trace of gamma along p_vec of the orbit, when one was examined.
  std::optional<mpz_class> trace;

  bool certified() const { return verdict == Verdict::TraceCertified; }
};

/// Throws std::invalid_argument unless c is a full cycle of degree 3N.
Certificate certify_cycle(Permutation const &c);

enum class CertifyMode
{
  Paper, ///< relevant cycles only (length divisible by 3 and >= 21)
  All3,  ///< every cycle of length divisible by 3
};

std::string_view name(CertifyMode mode);
CertifyMode parse_certify_mode(std::string_view text);

/// Scans the qualifying cycles of w in order of smallest point, relabels each
/// orbit onto its ranks and returns the first trace certificate.
Certificate certify_permutation(Permutation const &w, CertifyMode mode = CertifyMode::All3);

// ---------------------------------------------------------------------------
// Exact enumerations
// ---------------------------------------------------------------------------

/// Calls visit once for each tuple of P(w, N) (N >= 1): the first N - 1
/// entries range freely, the last is forced.
void enumerate_P(S3 w, std::size_t N, std::function<void(S3Tuple const &)> const &visit);

struct TupleCount
{
  std::uint64_t certified = 0; ///< tuples with |trace_of_tuple| > 2
  std::uint64_t total = 0;     ///< |P(w, N)| = 6^(N-1)
};

/// Exact count over P(w, N), sharded by the first entry.
TupleCount lemma_crazy_count(S3 w, std::size_t N, std::size_t jobs = 0);

/// Lower bound 6^(N-L-1) on the certified count, valid for N >= L + 1.
std::uint64_t lemma_crazy_bound(std::size_t N, std::size_t L);

/// Largest N accepted by the exhaustive tuple enumeration.
inline constexpr std::size_t kMaxEnumeratedN = 8;

/// Histogram of p_vec over all (3N - 1)! full cycles of S_{3N}, N <= 3.
std::map<S3Tuple, std::uint64_t> fiber_histogram(std::size_t N, std::size_t jobs = 0);

inline constexpr std::size_t kMaxFiberN = 3;

struct RestrictionCheck
{
  long restricted_writhe = 0;
  long tuple_writhe = 0;
  mpz_class restricted_abs_trace;
  mpz_class tuple_abs_trace;

  bool consistent() const
  {
    return restricted_writhe == tuple_writhe && restricted_abs_trace == tuple_abs_trace;
  }
};

/// Compares delete_strands(power(sigma_c, N), {1, a_N, a_2N}) with
/// sigma_{p_vec(c)} on the conjugacy invariants writhe and |tr gamma|.
RestrictionCheck restriction_consistency_check(Permutation const &c);

} // namespace braident

#endif // BRAIDENT_REDUCTION_HPP
