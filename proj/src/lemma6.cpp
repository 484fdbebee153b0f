#include "braident/lemma6.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

#include "braident/burau.hpp"
#include "braident/parallel.hpp"

namespace braident {

namespace {

long trace_of_product(Mat2 const &g, Mat2 const &m)
{
  // tr(g m) = a m11 + b m21 + c m12 + d m22
  return g[0] * m[0] + g[1] * m[2] + g[2] * m[1] + g[3] * m[3];
}

bool satisfies_all(Mat2 const &g, std::vector<Mat2> const &witnesses)
{
  return std::all_of(witnesses.begin(), witnesses.end(), [&g](Mat2 const &m) {
    return std::labs(trace_of_product(g, m)) <= 2;
  });
}

// Every g in SL_2(Z) with |tr g|, |tr(g M_2)|, |tr(g M_3)| <= 2.
std::vector<Mat2> bounded_candidates(Mat2 const &m2, Mat2 const &m3)
{
  Mat2 const identity = {1, 0, 0, 1};
  std::vector<Mat2> out;
  for (long a = -1; a <= 1; ++a) {
    for (long d = -1; d <= 1; ++d) {
      if (std::labs(a + d) > 2 || std::labs(a - d) > 1)
        continue;
      for (long delta = -3; delta <= 3; ++delta) {
        // b (b + delta) = ad - 1
        long const disc = delta * delta + 4 * (a * d - 1);
        if (disc < 0)
          continue;
        long const root = std::lround(std::sqrt(static_cast<double>(disc)));
        if (root * root != disc)
          continue;
        std::set<long> roots;
        for (long sign : {-1L, 1L}) {
          long const twice_b = -delta + sign * root;
          if (twice_b % 2 == 0)
            roots.insert(twice_b / 2);
        }
        for (long b : roots) {
          Mat2 const g = {a, b, b + delta, d};
          if (satisfies_all(g, {identity, m2, m3}))
            out.push_back(g);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void pure_words(std::vector<int> &word, std::size_t length, std::vector<Mat2> &out)
{
  if (word.size() == length) {
    BraidWord const beta(3, word);
    if (permutation_image(beta).is_identity())
      out.push_back(to_mat2(gamma(beta)));
    return;
  }
  for (int g : {1, 2}) {
    word.push_back(g);
    pure_words(word, length, out);
    word.pop_back();
  }
}

} // namespace

Mat2 to_mat2(SL2Int const &m)
{
  for (auto const *e : {&m.a(), &m.b(), &m.c(), &m.d()}) {
    if (!e->fits_slong_p())
      throw std::overflow_error("to_mat2: entry does not fit in long");
  }
  return {m.a().get_si(), m.b().get_si(), m.c().get_si(), m.d().get_si()};
}

std::string to_string(Mat2 const &m)
{
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
         std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

std::vector<std::size_t> Lemma6Witnesses::mismatches() const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (displayed[i] != computed[i])
      out.push_back(i);
  }
  return out;
}

Lemma6Witnesses lemma6_witnesses()
{
  Lemma6Witnesses w{
      {BraidWord(3), BraidWord(3, {1, 1, 2, 2}), BraidWord(3, {2, 2, 1, 1}),
       BraidWord(3, {1, 1, 1, 1, 2, 2})},
      {Mat2{1, 0, 0, 1}, Mat2{-3, 2, -2, 1}, Mat2{1, 2, -2, -3}, Mat2{1, -2, 4, -7}},
      {},
      0};
  for (std::size_t i = 0; i < 4; ++i) {
    w.computed[i] = to_mat2(gamma(w.words[i]));
    w.L = std::max(w.L, writhe(w.words[i]));
  }
  return w;
}

std::vector<Mat2> pure_positive_family(long max_writhe)
{
  std::vector<Mat2> out;
  std::vector<int> word;
  for (long len = 0; len <= max_writhe; ++len)
    pure_words(word, static_cast<std::size_t>(len), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Lemma6Report lemma6_verify(long bound, std::size_t jobs)
{
  if (bound < 8)
    throw std::invalid_argument("lemma6_verify: bound must be at least 8");

  Lemma6Witnesses const w = lemma6_witnesses();
  Lemma6Report report;
  report.bound = bound;
  report.analytic_candidates = bounded_candidates(w.displayed[1], w.displayed[2]);

  report.displayed.label = "displayed";
  report.displayed.witnesses.assign(w.displayed.begin(), w.displayed.end());
  report.computed.label = "computed";
  report.computed.witnesses.assign(w.computed.begin(), w.computed.end());
  report.extended.label = "pure-positive-writhe<=6";
  report.extended.witnesses = pure_positive_family(w.L);

  std::array<WitnessScan *, 3> const scans = {&report.displayed, &report.computed,
                                              &report.extended};
  for (WitnessScan *scan : scans) {
    for (Mat2 const &g : report.analytic_candidates) {
      if (satisfies_all(g, scan->witnesses))
        scan->analytic_survivors.push_back(g);
    }
  }

  // Phase 2: shard the box by the value of a.
  struct Shard
  {
    std::size_t matrices = 0;
    std::array<std::vector<Mat2>, 3> solutions;
  };
  auto const width = static_cast<std::size_t>(2 * bound + 1);
  auto shard = [&](std::size_t s) {
    Shard out;
    long const a = static_cast<long>(s) - bound;
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1)
            continue;
          ++out.matrices;
          Mat2 const g = {a, b, c, d};
          for (std::size_t k = 0; k < scans.size(); ++k) {
            if (satisfies_all(g, scans[k]->witnesses))
              out.solutions[k].push_back(g);
          }
        }
      }
    }
    return out;
  };
  for (auto const &part : run_shards(width, jobs, shard)) {
    report.box_matrices += part.matrices;
    for (std::size_t k = 0; k < scans.size(); ++k)
      scans[k]->box_solutions.insert(scans[k]->box_solutions.end(),
                                     part.solutions[k].begin(), part.solutions[k].end());
  }
  return report;
}

} // namespace braident
