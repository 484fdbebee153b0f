#include "braident/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braident {

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
  : strands_(strands), letters_(std::move(letters))
{
  if (strands_ == 0)
    throw std::invalid_argument("braid must have at least one strand");
  for (int g : letters_) {
    if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= strands_)
      throw std::invalid_argument("braid letter " + std::to_string(g) +
                                  " out of range for " + std::to_string(strands_) +
                                  " strands");
  }
}

Permutation permutation_image(BraidWord const &beta)
{
  // at[p] = strand currently at position p; the image sends a strand's start
  // position to its end position.
  std::vector<int> at(beta.strands());
  std::iota(at.begin(), at.end(), 1);
  for (int g : beta.letters()) {
    auto i = static_cast<std::size_t>(std::abs(g));
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> images(beta.strands());
  for (std::size_t p = 0; p < at.size(); ++p)
    images[at[p] - 1] = static_cast<int>(p + 1);
  return Permutation(std::move(images));
}

long writhe(BraidWord const &beta)
{
  long sum = 0;
  for (int g : beta.letters())
    sum += g > 0 ? 1 : -1;
  return sum;
}

BraidWord simple_braid(Permutation const &w)
{
  return BraidWord(w.degree(), canonical_factorization(w).letters());
}

std::vector<std::vector<int>> crossing_counts(BraidWord const &beta)
{
  std::size_t const n = beta.strands();
  std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  for (int g : beta.letters()) {
    auto i = static_cast<std::size_t>(std::abs(g));
    int a = at[i - 1];
    int b = at[i];
    ++counts[a - 1][b - 1];
    ++counts[b - 1][a - 1];
    std::swap(at[i - 1], at[i]);
  }
  return counts;
}

bool is_simple_word(BraidWord const &beta)
{
  if (std::any_of(beta.letters().begin(), beta.letters().end(),
                  [](int g) { return g < 0; }))
    return false;
  for (auto const &row : crossing_counts(beta)) {
    if (std::any_of(row.begin(), row.end(), [](int c) { return c > 1; }))
      return false;
  }
  return true;
}

BraidWord delete_strands(BraidWord const &beta, std::vector<int> const &keep)
{
  std::size_t const n = beta.strands();
  std::vector<bool> kept(n + 1, false);
  for (int x : keep) {
    if (x < 1 || static_cast<std::size_t>(x) > n || kept[x])
      throw std::invalid_argument("delete_strands: keep must be a set of strands");
    kept[x] = true;
  }
  if (keep.empty())
    throw std::invalid_argument("delete_strands: keep must be nonempty");

  Permutation const image = permutation_image(beta);
  for (int x : keep) {
    if (!kept[image(x)])
      throw std::invalid_argument("delete_strands: strand set is not stable");
  }

  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  std::vector<int> out;
  for (int g : beta.letters()) {
    auto i = static_cast<std::size_t>(std::abs(g));
    if (kept[at[i - 1]] && kept[at[i]]) {
      // Rank of position i among positions holding kept strands.
      int rank = static_cast<int>(std::count_if(
          at.begin(), at.begin() + static_cast<std::ptrdiff_t>(i),
          [&kept](int s) { return kept[s]; }));
      out.push_back(g > 0 ? rank : -rank);
    }
    std::swap(at[i - 1], at[i]);
  }
  return BraidWord(keep.size(), std::move(out));
}

BraidWord power(BraidWord const &beta, std::size_t k)
{
  std::vector<int> out;
  out.reserve(beta.length() * k);
  for (std::size_t r = 0; r < k; ++r)
    out.insert(out.end(), beta.letters().begin(), beta.letters().end());
  return BraidWord(beta.strands(), std::move(out));
}

BraidWord concat(BraidWord const &alpha, BraidWord const &beta)
{
  if (alpha.strands() != beta.strands())
    throw std::invalid_argument("concat: strand count mismatch");
  std::vector<int> out(alpha.letters());
  out.insert(out.end(), beta.letters().begin(), beta.letters().end());
  return BraidWord(alpha.strands(), std::move(out));
}

std::string to_string(BraidWord const &beta)
{
  std::string out;
  for (std::size_t k = 0; k < beta.length(); ++k) {
    if (k)
      out += ' ';
    out += std::to_string(beta.letters()[k]);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, std::size_t strands)
{
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(token, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != token.size() || used == 0)
      throw std::invalid_argument("braid word: bad letter '" + token + "'");
    letters.push_back(g);
  }
  return BraidWord(strands, std::move(letters));
}

std::ostream &operator<<(std::ostream &os, BraidWord const &beta)
{
  return os << to_string(beta);
}

} // namespace braident
