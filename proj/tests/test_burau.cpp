#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "braident/burau.hpp"

using namespace braident;

namespace {

BraidWord random_word(Rng &rng, std::size_t strands, std::size_t max_len)
{
  std::size_t const len = uniform_below(rng, max_len + 1);
  std::vector<int> letters;
  for (std::size_t i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(uniform_below(rng, strands - 1));
    letters.push_back(uniform_below(rng, 2) ? g : -g);
  }
  return BraidWord(strands, letters);
}

LaurentPoly random_poly(Rng &rng)
{
  LaurentPoly p;
  std::size_t const terms = uniform_below(rng, 5);
  for (std::size_t i = 0; i < terms; ++i) {
    long const c = static_cast<long>(uniform_below(rng, 21)) - 10;
    int const e = static_cast<int>(uniform_below(rng, 9)) - 4;
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

// (-t)^e
LaurentPoly minus_t_power(long e)
{
  return LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, static_cast<int>(e));
}

SL2Int sl2(long a, long b, long c, long d) { return SL2Int(a, b, c, d); }

} // namespace

TEST(Laurent, Arithmetic)
{
  LaurentPoly const t = LaurentPoly::t();
  LaurentPoly const one_minus_t = LaurentPoly(1) - t;
  EXPECT_EQ(one_minus_t * one_minus_t, LaurentPoly(1) - LaurentPoly::monomial(2, 1) + t * t);
  EXPECT_EQ(t * LaurentPoly::monomial(1, -1), LaurentPoly(1));
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_TRUE(LaurentPoly(0).is_zero());
  EXPECT_EQ(laurent_add(t, t), LaurentPoly::monomial(2, 1));
  EXPECT_EQ(laurent_mul(t, t), LaurentPoly::monomial(1, 2));
  EXPECT_EQ((LaurentPoly(3) - t).coefficient(1), -1);
  EXPECT_EQ((LaurentPoly(3) - t).coefficient(7), 0);
}

TEST(Laurent, RingLawsRandomized)
{
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly const a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    std::complex<double> const z = std::polar(1.0, 0.37 * trial);
    EXPECT_LT(std::abs((a * b).evaluate(z) - a.evaluate(z) * b.evaluate(z)), 1e-9);
  }
}

TEST(Laurent, TextRoundTrip)
{
  LaurentPoly const p = LaurentPoly(1) - LaurentPoly::monomial(1, 2);
  EXPECT_EQ(to_string(p), "1*t^0+-1*t^2");
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(parse_laurent("0"), LaurentPoly());
  EXPECT_EQ(parse_laurent("1*t^0+-1*t^2"), p);
  EXPECT_THROW(parse_laurent("1*x^2"), std::invalid_argument);

  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly const q = random_poly(rng);
    EXPECT_EQ(parse_laurent(to_string(q)), q);
  }
}

TEST(Laurent, EvaluateAtZeroThrows)
{
  EXPECT_THROW(LaurentPoly::monomial(1, -1).evaluate(0.0), std::domain_error);
}

TEST(Laurent, DeterminantMatchesHandExpansion)
{
  LaurentMatrix m(3);
  LaurentPoly const t = LaurentPoly::t();
  m(0, 0) = t;   m(0, 1) = 1;   m(0, 2) = 2;
  m(1, 0) = 0;   m(1, 1) = t;   m(1, 2) = -1;
  m(2, 0) = 1;   m(2, 1) = 0;   m(2, 2) = t;
  // t(t^2) - 1(0 + 1) + 2(0 - t) = t^3 - 2t - 1
  EXPECT_EQ(m.determinant(), t * t * t - LaurentPoly::monomial(2, 1) - LaurentPoly(1));
  EXPECT_EQ(LaurentMatrix::identity(5).determinant(), LaurentPoly(1));
}

TEST(SL2, RejectsDeterminantOtherThanOne)
{
  EXPECT_THROW(sl2(1, 1, 1, 1), std::invalid_argument);
  EXPECT_NO_THROW(sl2(2, 1, 1, 1));
}

TEST(SL2, GroupOperations)
{
  SL2Int const m = sl2(2, 1, 1, 1);
  EXPECT_EQ(m * m.inverse(), SL2Int::identity());
  EXPECT_EQ(m * m, sl2(5, 3, 3, 2));
  EXPECT_EQ(m.trace(), 3);
  EXPECT_TRUE(is_hyperbolic(m));
  EXPECT_FALSE(is_hyperbolic(sl2(1, 5, 0, 1)));
  EXPECT_FALSE(is_hyperbolic(sl2(-1, 0, 0, -1)));
  EXPECT_EQ(to_string(m), "[[2,1],[1,1]]");
}

TEST(Gamma, Generators)
{
  EXPECT_EQ(gamma_generator(1), sl2(1, 1, 0, 1));
  EXPECT_EQ(gamma_generator(2), sl2(1, 0, -1, 1));
  EXPECT_EQ(gamma_generator(-1), sl2(1, -1, 0, 1));
  EXPECT_EQ(gamma_generator(-2), sl2(1, 0, 1, 1));
  EXPECT_THROW(gamma(BraidWord(4, {1})), std::invalid_argument);
}

TEST(Gamma, Examples)
{
  EXPECT_EQ(gamma(BraidWord(3)), SL2Int::identity());
  EXPECT_EQ(gamma(BraidWord(3, {1, -2})), sl2(2, 1, 1, 1));
  // Braid relation and its image.
  EXPECT_EQ(gamma(BraidWord(3, {1, 2, 1})), gamma(BraidWord(3, {2, 1, 2})));
  // The full twist is central and maps to -I.
  EXPECT_EQ(gamma(power(BraidWord(3, {1, 2}), 3)), sl2(-1, 0, 0, -1));
}

TEST(Gamma, HomomorphismAndReducedBurauTrace)
{
  // gamma is the reduced Burau representation at t = -1; the unreduced one
  // adds a trivial summand, so the traces differ by exactly 1.
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    BraidWord const a = random_word(rng, 3, 12);
    BraidWord const b = random_word(rng, 3, 12);
    EXPECT_EQ(gamma(concat(a, b)), gamma(a) * gamma(b));
    std::complex<double> const tr =
        evaluate(unreduced_burau(a), std::complex<double>(-1.0, 0.0)).trace();
    EXPECT_NEAR(tr.real(), gamma(a).trace().get_d() + 1.0, 1e-6);
    EXPECT_NEAR(tr.imag(), 0.0, 1e-9);
  }
}

TEST(Gamma, OfSimple)
{
  EXPECT_EQ(gamma_of_simple(Permutation(3)), SL2Int::identity());
  EXPECT_EQ(gamma_of_simple(Permutation::transposition(3, 1)), gamma_generator(1));
  // s1 s2 composed left to right is sigma_1 sigma_2.
  Permutation const s12 = compose(Permutation::transposition(3, 1), Permutation::transposition(3, 2));
  EXPECT_EQ(gamma_of_simple(s12), gamma_generator(1) * gamma_generator(2));
}

TEST(Burau, GeneratorBlocks)
{
  LaurentPoly const t = LaurentPoly::t();
  LaurentMatrix const g = burau_generator(3, 2);
  EXPECT_EQ(g(0, 0), LaurentPoly(1));
  EXPECT_EQ(g(1, 1), LaurentPoly(1) - t);
  EXPECT_EQ(g(1, 2), t);
  EXPECT_EQ(g(2, 1), LaurentPoly(1));
  EXPECT_TRUE(g(2, 2).is_zero());
  EXPECT_EQ(matrix_mul(g, burau_generator(3, -2)), LaurentMatrix::identity(3));
  EXPECT_EQ(matrix_mul(burau_generator(3, -2), g), LaurentMatrix::identity(3));
}

TEST(Burau, BraidRelations)
{
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int i = 1; i < static_cast<int>(n); ++i) {
      EXPECT_EQ(unreduced_burau(BraidWord(n, {i, -i})), LaurentMatrix::identity(n));
      if (i + 1 < static_cast<int>(n)) {
        EXPECT_EQ(unreduced_burau(BraidWord(n, {i, i + 1, i})),
                  unreduced_burau(BraidWord(n, {i + 1, i, i + 1})));
      }
      for (int j = i + 2; j < static_cast<int>(n); ++j)
        EXPECT_EQ(unreduced_burau(BraidWord(n, {i, j})), unreduced_burau(BraidWord(n, {j, i})));
    }
  }
}

TEST(Burau, DeterminantLaw)
{
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const n = 2 + uniform_below(rng, 5);
    BraidWord const beta = random_word(rng, n, 12);
    EXPECT_EQ(unreduced_burau(beta).determinant(), minus_t_power(writhe(beta))) << to_string(beta);
  }
}

TEST(Burau, AtOneIsPermutationMatrix)
{
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = 2 + uniform_below(rng, 5);
    BraidWord const beta = random_word(rng, n, 15);
    ComplexMatrix const m = evaluate(unreduced_burau(beta), 1.0);
    Permutation const p = permutation_image(beta);
    for (int x = 1; x <= static_cast<int>(n); ++x) {
      for (int y = 1; y <= static_cast<int>(n); ++y)
        EXPECT_NEAR(std::abs(m(x - 1, y - 1) - (p(x) == y ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
}

TEST(Burau, SpectralOracleAtMinusOne)
{
  // rho(sigma_1 sigma_2^-1)(-1) built by hand from the blocks [[2,-1],[1,0]]
  // and [[0,1],[-1,2]].
  std::array<std::array<double, 3>, 3> const m{{{2, 0, -1}, {1, 0, 0}, {0, -1, 2}}};
  ComplexMatrix const lib = evaluate(unreduced_burau(BraidWord(3, {1, -2})), -1.0);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c)
      EXPECT_NEAR(std::abs(lib(r, c) - m[r][c]), 0.0, 1e-12);
  }

  // Characteristic polynomial x^3 - c1 x^2 + c2 x - c3; it has the root 1,
  // leaving a quadratic solved in closed form.
  double const c1 = m[0][0] + m[1][1] + m[2][2];
  double const c2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                    (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  double const c3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  ASSERT_NEAR(1 - c1 + c2 - c3, 0.0, 1e-12);
  // (x - 1)(x^2 - p x + q)
  double const p = c1 - 1;
  double const q = c3;
  double const top = (p + std::sqrt(p * p - 4 * q)) / 2;
  EXPECT_NEAR(top, (3 + std::sqrt(5.0)) / 2, 1e-12);

  EXPECT_NEAR(max_eigenvalue_modulus(lib), top, 1e-9);
  SpectralSample const s = spectral_radius_sample(unreduced_burau(BraidWord(3, {1, -2})), 512);
  EXPECT_GE(s.radius, top - 1e-9);
  EXPECT_NEAR(entropy_lower_bound(BraidWord(3, {1, -2})), std::log(top), 1e-3);
}

TEST(Burau, EntropyLowerBoundEdgeCases)
{
  EXPECT_EQ(entropy_lower_bound(BraidWord(3)), 0.0);
  EXPECT_LE(entropy_lower_bound(BraidWord(2, {1})), kEntropyPositivityThreshold);
  // Periodic braids have zero entropy.
  EXPECT_LE(entropy_lower_bound(BraidWord(3, {1, 2})), 1e-6);
}

TEST(Burau, NestedGridsAreMonotone)
{
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentMatrix const m = unreduced_burau(random_word(rng, 4, 10));
    double const coarse = spectral_radius_lower_bound(m, 64);
    double const fine = spectral_radius_lower_bound(m, 256);
    EXPECT_GE(fine, coarse - 1e-9);
    EXPECT_GE(spectral_radius_lower_bound(m, 1024), spectral_radius_lower_bound(m, 1) - 1e-9);
  }
}

TEST(Burau, EvaluateRejectsZero)
{
  EXPECT_THROW(evaluate(burau_generator(3, -1), 0.0), std::domain_error);
}
