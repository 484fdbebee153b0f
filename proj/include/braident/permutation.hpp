#ifndef BRAIDENT_PERMUTATION_HPP
#define BRAIDENT_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "braident/random.hpp"

namespace braident {

/// A bijection of {1, ..., n}, stored by its one-line images.
///
/// Products follow the "left factor acts first" convention throughout the
/// library: compose(p, q)(x) = q(p(x)). With that choice the quotient map from
/// braid words to permutations is a homomorphism for left-to-right
/// concatenation of words.
class Permutation
{
public:
  /// Identity of degree n (n >= 1).
  explicit Permutation(std::size_t n = 1);

  /// One-line notation, 1-based. Throws std::invalid_argument unless images
  /// is a bijection of {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n) { return Permutation(n); }

  /// Simple transposition s_i swapping i and i + 1, 1 <= i < n.
  static Permutation transposition(std::size_t n, int i);

  /// Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t n,
                                 std::vector<std::vector<int>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  std::vector<int> const &images() const { return images_; }

  bool is_identity() const;

  bool operator==(Permutation const &) const = default;
  auto operator<=>(Permutation const &) const = default;

private:
  std::vector<int> images_;
};

/// x -> q(p(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

/// Number of pairs i < j with p(i) > p(j).
std::size_t inversion_count(Permutation const &p);

using Cycle = std::vector<int>;

/// Cycles partition {1..degree}; each starts at its smallest point and the
/// list is ordered by smallest point. Fixed points appear as 1-cycles.
struct CycleDecomposition
{
  std::size_t degree = 0;
  std::vector<Cycle> cycles;

  std::vector<std::size_t> lengths() const;
  /// Number of cycles of length m.
  std::size_t count_of_length(std::size_t m) const;
};

CycleDecomposition cycle_decomposition(Permutation const &p);

/// True iff p consists of one cycle through all of its points.
bool is_full_cycle(Permutation const &p);

/// Cycles of length divisible by 3 and at least this are "relevant".
inline constexpr std::size_t kRelevantMinLength = 21;

enum class CycleFilter
{
  Relevant,     ///< length divisible by 3 and >= kRelevantMinLength
  DivisibleBy3, ///< every cycle of length divisible by 3
};

std::vector<Cycle> relevant_cycles(Permutation const &p,
                                   CycleFilter filter = CycleFilter::Relevant);

/// Same irrelevant cycles (as cyclic sequences) and same relevant orbits (as
/// sets). Throws std::invalid_argument on degree mismatch.
bool approx_equivalent(Permutation const &w, Permutation const &v);

/// Indices i_1..i_n of the factorization
///   w = (s_{i_1} ... s_1)(s_{i_2} ... s_2) ... (s_{i_n} ... s_n),
/// j - 1 <= i_j <= n - 1, where i_j = j - 1 encodes an empty factor.
struct SimpleFactorization
{
  std::size_t degree = 0;
  std::vector<int> indices;

  /// The transposition indices in order, e.g. {i_1, ..., 1, i_2, ..., 2, ...}.
  std::vector<int> letters() const;
  Permutation reconstruct() const;
};

SimpleFactorization canonical_factorization(Permutation const &w);

/// The permutation p induces on a p-stable set of points, relabeled
/// order-isomorphically onto {1..|keep|}. Throws if keep is not stable.
Permutation restrict_to(Permutation const &p, std::vector<int> const &keep);

/// The cycle orbit[0] -> orbit[1] -> ... -> orbit[0] written on the ranks of
/// its points, i.e. as a full cycle of S_{|orbit|}.
Permutation cycle_on_ranks(Cycle const &orbit);

/// Uniform over S_n (Fisher-Yates).
Permutation sample_uniform(std::size_t n, Rng &rng);
Permutation sample_uniform(std::size_t n, std::uint64_t seed);

/// Uniform over the (m-1)! full cycles of S_m: 1 followed by a uniform
/// arrangement of {2..m}.
Permutation sample_full_cycle(std::size_t m, Rng &rng);
Permutation sample_full_cycle(std::size_t m, std::uint64_t seed);

/// "2,1,4,5,6,3"
std::string to_one_line(Permutation const &p);
Permutation parse_one_line(std::string_view text);

/// "(1 2)(3 4 5 6)"; fixed points are written as 1-cycles.
std::string to_cycle_string(Permutation const &p);
/// Parses cycle notation. If n is 0 the degree is the largest point named.
Permutation parse_cycles(std::string_view text, std::size_t n = 0);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace braident

#endif // BRAIDENT_PERMUTATION_HPP
