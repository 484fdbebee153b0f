#ifndef BRAIDENT_LEMMA6_HPP
#define BRAIDENT_LEMMA6_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "braident/braid.hpp"
#include "braident/sl2.hpp"

namespace braident {

/// Plain 2x2 integer matrix {a, b, c, d} for the bounded scans.
using Mat2 = std::array<long, 4>;

Mat2 to_mat2(SL2Int const &m);
std::string to_string(Mat2 const &m);

/// The four pure positive 3-braids (1, s1^2 s2^2, s2^2 s1^2, s1^4 s2^2) and
/// the reference matrices used for them in the stated inequalities.
struct Lemma6Witnesses
{
  std::array<BraidWord, 4> words;
  /// Reference matrices stated alongside the inequalities.
  std::array<Mat2, 4> displayed;
  /// gamma of the words above.
  std::array<Mat2, 4> computed;
  /// Maximum writhe among the words.
  long L = 6;

  /// Indices i where displayed[i] != computed[i].
  std::vector<std::size_t> mismatches() const;
};

Lemma6Witnesses lemma6_witnesses();

/// gamma of every pure positive 3-braid word of writhe <= max_writhe
/// (including the empty word), deduplicated and sorted.
std::vector<Mat2> pure_positive_family(long max_writhe);

/// A set of witness matrices M_1..M_k is "blocking" when no g in SL_2(Z) has
/// |tr(g M_i)| <= 2 for every i.
struct WitnessScan
{
  std::string label;
  std::vector<Mat2> witnesses;
  /// Every g in SL_2(Z) satisfying the identity, s1^2 s2^2 and s2^2 s1^2
  /// inequalities (a finite list, derived below) that also satisfies all of
  /// this set's inequalities. Empty means the set blocks over all of SL_2(Z).
  std::vector<Mat2> analytic_survivors;
  /// Solutions found by brute force with all entries bounded by the box.
  std::vector<Mat2> box_solutions;

  bool blocking() const { return analytic_survivors.empty() && box_solutions.empty(); }
};

struct Lemma6Report
{
  long bound = 0;
  /// Number of determinant-one matrices in the box.
  std::size_t box_matrices = 0;
  /// All g in SL_2(Z) with |tr g|, |tr(g M_2)|, |tr(g M_3)| <= 2.
  std::vector<Mat2> analytic_candidates;

  WitnessScan displayed; ///< the stated inequalities
  WitnessScan computed;  ///< gamma of the four listed braids
  WitnessScan extended;  ///< every pure positive braid of writhe <= 6
};

/// Checks whether any g in SL_2(Z) keeps |tr(g gamma(beta_i))| <= 2 for all
/// witnesses.
///
/// Phase 1 is the hand argument made exhaustive. For g = [[a, b], [c, d]],
/// the identity witness gives |a + d| <= 2; subtracting the two s1/s2
/// inequalities (-3a - 2b + 2c + d and a - 2b + 2c - 3d) gives 4|a - d| <= 4.
/// Hence a, d are in {-1, 0, 1}. For each such pair, c - b is confined to
/// |c - b| <= 3, and bc = ad - 1 then leaves finitely many integer (b, c),
/// found as roots of b^2 + (c - b) b - (ad - 1) = 0. The candidates are then
/// tested against each witness set.
///
/// Phase 2 scans every determinant-one matrix with entries in [-bound, bound]
/// directly. Requires bound >= 8.
Lemma6Report lemma6_verify(long bound, std::size_t jobs = 0);

} // namespace braident

#endif // BRAIDENT_LEMMA6_HPP
