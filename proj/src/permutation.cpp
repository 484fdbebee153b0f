#include "braident/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braident {

namespace {

void check_bijection(std::vector<int> const &images)
{
  std::vector<bool> seen(images.size() + 1, false);
  for (int x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > images.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

void require_same_degree(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch");
}

std::string_view trim(std::string_view s)
{
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view s)
{
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return value;
}

bool is_relevant_length(std::size_t len, CycleFilter filter)
{
  if (len % 3 != 0)
    return false;
  return filter == CycleFilter::DivisibleBy3 || len >= kRelevantMinLength;
}

} // namespace

Permutation::Permutation(std::size_t n)
  : images_(n)
{
  if (n == 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images)
  : images_(std::move(images))
{
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be positive");
  check_bijection(images_);
}

Permutation Permutation::transposition(std::size_t n, int i)
{
  if (i < 1 || static_cast<std::size_t>(i) >= n)
    throw std::invalid_argument("transposition index out of range");
  Permutation s(n);
  std::swap(s.images_[i - 1], s.images_[i]);
  return s;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     std::vector<std::vector<int>> const &cycles)
{
  std::vector<int> images(n, 0);
  for (auto const &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int x = cycle[k];
      if (x < 1 || static_cast<std::size_t>(x) > n || images[x - 1] != 0)
        throw std::invalid_argument("cycles are not disjoint subsets of {1..n}");
      images[x - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  for (std::size_t x = 1; x <= n; ++x) {
    if (images[x - 1] == 0)
      images[x - 1] = static_cast<int>(x);
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1))
      return false;
  }
  return true;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  require_same_degree(p, q);
  std::vector<int> images(p.degree());
  for (std::size_t x = 1; x <= p.degree(); ++x)
    images[x - 1] = q(p(static_cast<int>(x)));
  return Permutation(std::move(images));
}

Permutation inverse(Permutation const &p)
{
  std::vector<int> images(p.degree());
  for (std::size_t x = 1; x <= p.degree(); ++x)
    images[p(static_cast<int>(x)) - 1] = static_cast<int>(x);
  return Permutation(std::move(images));
}

std::size_t inversion_count(Permutation const &p)
{
  auto const &im = p.images();
  std::size_t count = 0;
  for (std::size_t i = 0; i < im.size(); ++i) {
    for (std::size_t j = i + 1; j < im.size(); ++j) {
      if (im[i] > im[j])
        ++count;
    }
  }
  return count;
}

std::vector<std::size_t> CycleDecomposition::lengths() const
{
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (auto const &c : cycles)
    out.push_back(c.size());
  return out;
}

std::size_t CycleDecomposition::count_of_length(std::size_t m) const
{
  return static_cast<std::size_t>(std::count_if(
      cycles.begin(), cycles.end(), [m](Cycle const &c) { return c.size() == m; }));
}

CycleDecomposition cycle_decomposition(Permutation const &p)
{
  CycleDecomposition out;
  out.degree = p.degree();
  std::vector<bool> seen(p.degree() + 1, false);
  for (int start = 1; static_cast<std::size_t>(start) <= p.degree(); ++start) {
    if (seen[start])
      continue;
    Cycle cycle;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool is_full_cycle(Permutation const &p)
{
  std::size_t len = 1;
  for (int x = p(1); x != 1; x = p(x))
    ++len;
  return len == p.degree();
}

std::vector<Cycle> relevant_cycles(Permutation const &p, CycleFilter filter)
{
  std::vector<Cycle> out;
  for (auto &cycle : cycle_decomposition(p).cycles) {
    if (is_relevant_length(cycle.size(), filter))
      out.push_back(std::move(cycle));
  }
  return out;
}

bool approx_equivalent(Permutation const &w, Permutation const &v)
{
  require_same_degree(w, v);

  auto split = [](Permutation const &p) {
    std::set<Cycle> irrelevant;
    std::set<Cycle> orbits;
    for (auto &cycle : cycle_decomposition(p).cycles) {
      if (is_relevant_length(cycle.size(), CycleFilter::Relevant)) {
        std::sort(cycle.begin(), cycle.end());
        orbits.insert(std::move(cycle));
      } else {
        irrelevant.insert(std::move(cycle));
      }
    }
    return std::pair{irrelevant, orbits};
  };

  return split(w) == split(v);
}

std::vector<int> SimpleFactorization::letters() const
{
  std::vector<int> out;
  for (std::size_t j = 1; j <= indices.size(); ++j) {
    for (int k = indices[j - 1]; k >= static_cast<int>(j); --k)
      out.push_back(k);
  }
  return out;
}

Permutation SimpleFactorization::reconstruct() const
{
  Permutation w(degree);
  for (int i : letters())
    w = compose(w, Permutation::transposition(degree, i));
  return w;
}

SimpleFactorization canonical_factorization(Permutation const &w)
{
  // Factor j sends i_j + 1 to j and shifts j..i_j up by one; later factors fix
  // everything below j + 1. So i_j + 1 is the preimage of j in what remains.
  std::size_t const n = w.degree();
  SimpleFactorization out{n, std::vector<int>(n)};
  std::vector<int> rest = w.images();

  for (int j = 1; static_cast<std::size_t>(j) <= n; ++j) {
    int const source = static_cast<int>(
        std::find(rest.begin(), rest.end(), j) - rest.begin()) + 1;
    int const top = source - 1;
    out.indices[j - 1] = top;

    // rest <- rest after undoing factor j: x -> rest(F_j^{-1}(x)).
    std::vector<int> next(rest);
    next[j - 1] = rest[source - 1];
    for (int y = j; y <= top; ++y)
      next[y] = rest[y - 1];
    rest = std::move(next);
  }
  return out;
}

Permutation restrict_to(Permutation const &p, std::vector<int> const &keep)
{
  std::vector<int> sorted(keep);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("restrict_to: keep must be a nonempty set");

  auto rank = [&sorted](int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x)
      return 0;
    return static_cast<int>(it - sorted.begin()) + 1;
  };

  std::vector<int> images(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    int r = rank(p(sorted[k]));
    if (r == 0)
      throw std::invalid_argument("restrict_to: set is not stable");
    images[k] = r;
  }
  return Permutation(std::move(images));
}

Permutation cycle_on_ranks(Cycle const &orbit)
{
  std::vector<int> sorted(orbit);
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&sorted](int x) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                            sorted.begin()) + 1;
  };
  std::vector<int> images(orbit.size());
  for (std::size_t k = 0; k < orbit.size(); ++k)
    images[rank(orbit[k]) - 1] = rank(orbit[(k + 1) % orbit.size()]);
  return Permutation(std::move(images));
}

Permutation sample_uniform(std::size_t n, Rng &rng)
{
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t i = n; i > 1; --i)
    std::swap(images[i - 1], images[uniform_below(rng, i)]);
  return Permutation(std::move(images));
}

Permutation sample_uniform(std::size_t n, std::uint64_t seed)
{
  Rng rng(seed);
  return sample_uniform(n, rng);
}

Permutation sample_full_cycle(std::size_t m, Rng &rng)
{
  if (m == 0)
    throw std::invalid_argument("sample_full_cycle: m must be positive");
  Cycle cycle(m);
  std::iota(cycle.begin(), cycle.end(), 1);
  for (std::size_t i = m; i > 2; --i)
    std::swap(cycle[i - 1], cycle[1 + uniform_below(rng, i - 1)]);
  return Permutation::from_cycles(m, {cycle});
}

Permutation sample_full_cycle(std::size_t m, std::uint64_t seed)
{
  Rng rng(seed);
  return sample_full_cycle(m, rng);
}

std::string to_one_line(Permutation const &p)
{
  std::string out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(p.images()[i]);
  }
  return out;
}

Permutation parse_one_line(std::string_view text)
{
  std::vector<int> images;
  std::size_t pos = 0;
  for (;;) {
    auto comma = text.find(',', pos);
    images.push_back(parse_int(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return Permutation(std::move(images));
}

std::string to_cycle_string(Permutation const &p)
{
  std::string out;
  for (auto const &cycle : cycle_decomposition(p).cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t n)
{
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int largest = 0;
  for (;;) {
    auto open = text.find('(', pos);
    if (!trim(text.substr(pos, open == std::string_view::npos ? text.npos : open - pos)).empty())
      throw std::invalid_argument("cycle notation: stray text outside parentheses");
    if (open == std::string_view::npos)
      break;
    auto close = text.find(')', open);
    if (close == std::string_view::npos)
      throw std::invalid_argument("cycle notation: unbalanced parenthesis");

    std::istringstream body{std::string(text.substr(open + 1, close - open - 1))};
    std::vector<int> cycle;
    std::string token;
    while (body >> token) {
      cycle.push_back(parse_int(token));
      largest = std::max(largest, cycle.back());
    }
    if (cycle.empty())
      throw std::invalid_argument("cycle notation: empty cycle");
    cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  if (n == 0)
    n = static_cast<std::size_t>(largest);
  return Permutation::from_cycles(n, cycles);
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << to_cycle_string(p);
}

} // namespace braident
