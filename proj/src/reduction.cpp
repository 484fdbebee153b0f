#include "braident/reduction.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "braident/burau.hpp"
#include "braident/parallel.hpp"

namespace braident {

namespace {

constexpr std::array<S3, kS3Order> kAllS3 = {S3::e, S3::s1, S3::s2, S3::s12, S3::s21, S3::w0};
constexpr std::array<std::string_view, kS3Order> kS3Names = {"e", "s1", "s2", "s12", "s21", "w0"};

std::array<Permutation, kS3Order> const &s3_permutations()
{
  static std::array<Permutation, kS3Order> const table = [] {
    Permutation const s1 = Permutation::transposition(3, 1);
    Permutation const s2 = Permutation::transposition(3, 2);
    return std::array<Permutation, kS3Order>{
        Permutation(3), s1, s2, compose(s1, s2), compose(s2, s1),
        Permutation(std::vector<int>{3, 2, 1})};
  }();
  return table;
}

std::size_t index(S3 x) { return static_cast<std::size_t>(x); }

struct S3Tables
{
  std::array<std::array<S3, kS3Order>, kS3Order> product;
  std::array<S3, kS3Order> inverse;
  std::array<SL2Int, kS3Order> gamma;
};

S3Tables const &tables()
{
  static S3Tables const t = [] {
    S3Tables out;
    for (S3 x : kAllS3) {
      for (S3 y : kAllS3)
        out.product[index(x)][index(y)] =
            to_s3(compose(to_permutation(x), to_permutation(y)));
      out.inverse[index(x)] = to_s3(inverse(to_permutation(x)));
      out.gamma[index(x)] = gamma_of_simple(to_permutation(x));
    }
    return out;
  }();
  return t;
}

void require_reducible_cycle(Permutation const &c)
{
  if (c.degree() % 3 != 0)
    throw std::invalid_argument("cycle length must be divisible by 3");
  if (!is_full_cycle(c))
    throw std::invalid_argument("permutation is not a single full cycle");
}

// a[k] = c^k(1) for k = 0 .. 3N-1.
std::vector<int> orbit_of_one(Permutation const &c)
{
  std::vector<int> a;
  a.reserve(c.degree());
  int x = 1;
  do {
    a.push_back(x);
    x = c(x);
  } while (x != 1);
  return a;
}

std::uint64_t pow6(std::size_t e)
{
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i)
    out *= 6;
  return out;
}

} // namespace

Permutation to_permutation(S3 x) { return s3_permutations()[index(x)]; }

S3 to_s3(Permutation const &p)
{
  if (p.degree() != 3)
    throw std::invalid_argument("to_s3: permutation must have degree 3");
  auto const &table = s3_permutations();
  for (std::size_t i = 0; i < kS3Order; ++i) {
    if (table[i] == p)
      return kAllS3[i];
  }
  throw std::logic_error("to_s3: unreachable");
}

std::string_view name(S3 x) { return kS3Names[index(x)]; }

S3 parse_s3(std::string_view text)
{
  for (std::size_t i = 0; i < kS3Order; ++i) {
    if (kS3Names[i] == text)
      return kAllS3[i];
  }
  throw std::invalid_argument("unknown S3 element '" + std::string(text) + "'");
}

S3 s3_compose(S3 x, S3 y) { return tables().product[index(x)][index(y)]; }
S3 s3_inverse(S3 x) { return tables().inverse[index(x)]; }

S3 S3Tuple::product() const
{
  S3 acc = S3::e;
  for (S3 x : entries)
    acc = s3_compose(acc, x);
  return acc;
}

std::string to_string(S3Tuple const &t)
{
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      out += ',';
    out += name(t.entries[i]);
  }
  return out + ")";
}

BraidWord braid_of_tuple(S3Tuple const &t)
{
  BraidWord out(3);
  for (S3 x : t.entries)
    out = concat(out, simple_braid(to_permutation(x)));
  return out;
}

mpz_class trace_of_tuple(S3Tuple const &t)
{
  auto const &g = tables().gamma;
  SL2Int m;
  for (S3 x : t.entries)
    m *= g[index(x)];
  return m.trace();
}

S3Tuple p_vec(Permutation const &c)
{
  require_reducible_cycle(c);
  std::size_t const len = c.degree();
  std::size_t const N = len / 3;
  std::vector<int> const a = orbit_of_one(c);

  std::vector<std::size_t> where(len + 1); // where[a_k] = k
  for (std::size_t k = 0; k < len; ++k)
    where[a[k]] = k;

  auto triple = [&](std::size_t start) {
    std::array<int, 3> t = {a[start % len], a[(start + N) % len], a[(start + 2 * N) % len]};
    std::sort(t.begin(), t.end());
    return t;
  };

  S3Tuple out;
  out.entries.reserve(N);
  for (std::size_t i = 1; i <= N; ++i) {
    auto const from = triple(i - 1);
    auto const to = triple(i);
    std::vector<int> images(3);
    for (std::size_t r = 0; r < 3; ++r) {
      int const moved = a[(where[from[r]] + 1) % len];
      images[r] = static_cast<int>(std::find(to.begin(), to.end(), moved) - to.begin()) + 1;
    }
    out.entries.push_back(to_s3(Permutation(std::move(images))));
  }
  return out;
}

std::pair<int, int> third_points(Permutation const &c)
{
  require_reducible_cycle(c);
  std::size_t const N = c.degree() / 3;
  std::vector<int> const a = orbit_of_one(c);
  return {a[N], a[2 * N]};
}

Certificate certify_cycle(Permutation const &c)
{
  S3Tuple const tuple = p_vec(c);
  Certificate cert;
  cert.orbit.resize(c.degree());
  std::iota(cert.orbit.begin(), cert.orbit.end(), 1);
  cert.N = tuple.size();
  cert.trace = trace_of_tuple(tuple);
  if (abs(*cert.trace) > 2)
    cert.verdict = Verdict::TraceCertified;
  return cert;
}

std::string_view name(CertifyMode mode)
{
  return mode == CertifyMode::Paper ? "paper" : "all3";
}

CertifyMode parse_certify_mode(std::string_view text)
{
  if (text == "paper")
    return CertifyMode::Paper;
  if (text == "all3")
    return CertifyMode::All3;
  throw std::invalid_argument("unknown certify mode '" + std::string(text) + "'");
}

Certificate certify_permutation(Permutation const &w, CertifyMode mode)
{
  CycleFilter const filter =
      mode == CertifyMode::Paper ? CycleFilter::Relevant : CycleFilter::DivisibleBy3;
  for (auto const &cycle : relevant_cycles(w, filter)) {
    Certificate cert = certify_cycle(cycle_on_ranks(cycle));
    if (cert.certified()) {
      cert.orbit = cycle;
      std::sort(cert.orbit.begin(), cert.orbit.end());
      return cert;
    }
  }
  return {};
}

void enumerate_P(S3 w, std::size_t N, std::function<void(S3Tuple const &)> const &visit)
{
  if (N == 0)
    throw std::invalid_argument("enumerate_P: N must be positive");

  S3Tuple tuple{std::vector<S3>(N, S3::e)};
  // Fill entries [pos, N - 1); prefix is the product of entries [0, pos).
  auto fill = [&](auto &self, std::size_t pos, S3 prefix) -> void {
    if (pos + 1 == N) {
      tuple.entries[pos] = s3_compose(s3_inverse(prefix), w);
      visit(tuple);
      return;
    }
    for (S3 x : kAllS3) {
      tuple.entries[pos] = x;
      self(self, pos + 1, s3_compose(prefix, x));
    }
  };
  fill(fill, 0, S3::e);
}

TupleCount lemma_crazy_count(S3 w, std::size_t N, std::size_t jobs)
{
  if (N == 0 || N > kMaxEnumeratedN)
    throw std::invalid_argument("lemma_crazy_count: N must lie in [1, " +
                                std::to_string(kMaxEnumeratedN) + "]");
  if (N == 1) {
    S3Tuple single{{w}};
    return {abs(trace_of_tuple(single)) > 2 ? 1u : 0u, 1};
  }

  auto const &g = tables().gamma;
  // Shard by the first entry; a depth-first walk keeps the running product.
  auto shard = [&](std::size_t first) {
    TupleCount count;
    auto walk = [&](auto &self, std::size_t pos, S3 prefix, SL2Int const &m) -> void {
      if (pos + 1 == N) {
        S3 const last = s3_compose(s3_inverse(prefix), w);
        SL2Int const full = m * g[index(last)];
        ++count.total;
        if (is_hyperbolic(full))
          ++count.certified;
        return;
      }
      for (S3 x : kAllS3)
        self(self, pos + 1, s3_compose(prefix, x), m * g[index(x)]);
    };
    S3 const head = kAllS3[first];
    walk(walk, 1, head, g[index(head)]);
    return count;
  };

  TupleCount total;
  for (auto const &part : run_shards(kS3Order, jobs, shard)) {
    total.certified += part.certified;
    total.total += part.total;
  }
  return total;
}

std::uint64_t lemma_crazy_bound(std::size_t N, std::size_t L)
{
  if (N < L + 1)
    throw std::invalid_argument("lemma_crazy_bound requires N >= L + 1");
  return pow6(N - L - 1);
}

std::map<S3Tuple, std::uint64_t> fiber_histogram(std::size_t N, std::size_t jobs)
{
  if (N == 0 || N > kMaxFiberN)
    throw std::invalid_argument("fiber_histogram: N must lie in [1, " +
                                std::to_string(kMaxFiberN) + "]");
  int const len = static_cast<int>(3 * N);

  // Shard by the point that follows 1 in the cycle.
  auto shard = [&](std::size_t s) {
    std::map<S3Tuple, std::uint64_t> hist;
    int const second = static_cast<int>(s) + 2;
    std::vector<int> rest;
    for (int x = 2; x <= len; ++x) {
      if (x != second)
        rest.push_back(x);
    }
    do {
      Cycle cycle{1, second};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      ++hist[p_vec(Permutation::from_cycles(static_cast<std::size_t>(len), {cycle}))];
    } while (std::next_permutation(rest.begin(), rest.end()));
    return hist;
  };

  std::map<S3Tuple, std::uint64_t> merged;
  for (auto const &part : run_shards(static_cast<std::size_t>(len - 1), jobs, shard)) {
    for (auto const &[key, count] : part)
      merged[key] += count;
  }
  return merged;
}

RestrictionCheck restriction_consistency_check(Permutation const &c)
{
  S3Tuple const tuple = p_vec(c);
  std::size_t const N = tuple.size();
  auto const [aN, a2N] = third_points(c);

  BraidWord const restricted =
      delete_strands(power(simple_braid(c), N), std::vector<int>{1, aN, a2N});
  BraidWord const reduced = braid_of_tuple(tuple);

  RestrictionCheck out;
  out.restricted_writhe = writhe(restricted);
  out.tuple_writhe = writhe(reduced);
  out.restricted_abs_trace = abs(gamma(restricted).trace());
  out.tuple_abs_trace = abs(gamma(reduced).trace());
  return out;
}

} // namespace braident
