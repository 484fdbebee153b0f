#ifndef BRAIDENT_BRAID_HPP
#define BRAIDENT_BRAID_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "braident/permutation.hpp"

namespace braident {

/// A braid word on n strands. Letter g stands for sigma_{|g|}^{sign(g)}, the
/// crossing of the strands currently at positions |g| and |g| + 1.
///
/// Words are kept exactly as written: nothing is freely reduced or put in
/// normal form, and equality is equality of words.
class BraidWord
{
public:
  /// Throws std::invalid_argument if n == 0 or a letter is 0 or out of range.
  explicit BraidWord(std::size_t strands, std::vector<int> letters = {});

  std::size_t strands() const { return strands_; }
  std::vector<int> const &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(BraidWord const &) const = default;

private:
  std::size_t strands_;
  std::vector<int> letters_;
};

/// Image under sigma_i -> s_i. Strand starting at x ends at position w(x).
Permutation permutation_image(BraidWord const &beta);

/// Exponent sum.
long writhe(BraidWord const &beta);

/// sigma_w, the positive word read off canonical_factorization(w).
BraidWord simple_braid(Permutation const &w);

/// Number of times each pair of strands crosses, attributed by simulating
/// strand positions. Indexed [a-1][b-1] for strands a, b (symmetric).
std::vector<std::vector<int>> crossing_counts(BraidWord const &beta);

/// All letters positive and every pair of strands crosses at most once.
bool is_simple_word(BraidWord const &beta);

/// Removes every strand not in keep, relabeling the survivors
/// order-isomorphically by position. keep must be stable under the braid's
/// permutation; otherwise std::invalid_argument is thrown.
BraidWord delete_strands(BraidWord const &beta, std::vector<int> const &keep);

BraidWord power(BraidWord const &beta, std::size_t k);
BraidWord concat(BraidWord const &alpha, BraidWord const &beta);

/// Whitespace-separated signed generator indices, e.g. "1 2 -1".
std::string to_string(BraidWord const &beta);
BraidWord parse_braid(std::string_view text, std::size_t strands);

std::ostream &operator<<(std::ostream &os, BraidWord const &beta);

} // namespace braident

#endif // BRAIDENT_BRAID_HPP
