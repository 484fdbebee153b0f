#include "braident/burau.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace braident {

namespace {

LaurentPoly const &t_pow(int e)
{
  static LaurentPoly const t = LaurentPoly::monomial(1, 1);
  static LaurentPoly const t_inv = LaurentPoly::monomial(1, -1);
  return e > 0 ? t : t_inv;
}

void check_letter(std::size_t strands, int letter)
{
  if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) >= strands)
    throw std::invalid_argument("Burau: letter out of range");
}

// m <- m * rho(letter), touching only columns i and i+1.
void apply_generator(LaurentMatrix &m, int letter)
{
  std::size_t const i = static_cast<std::size_t>(std::abs(letter)) - 1;
  for (std::size_t r = 0; r < m.size(); ++r) {
    LaurentPoly const left = m(r, i);
    LaurentPoly const right = m(r, i + 1);
    if (letter > 0) {
      m(r, i) = left - left * t_pow(1) + right;
      m(r, i + 1) = left * t_pow(1);
    } else {
      m(r, i) = right * t_pow(-1);
      m(r, i + 1) = left + right - right * t_pow(-1);
    }
  }
}

} // namespace

LaurentMatrix burau_generator(std::size_t strands, int letter)
{
  check_letter(strands, letter);
  LaurentMatrix m = LaurentMatrix::identity(strands);
  apply_generator(m, letter);
  return m;
}

LaurentMatrix unreduced_burau(BraidWord const &beta)
{
  LaurentMatrix m = LaurentMatrix::identity(beta.strands());
  for (int g : beta.letters())
    apply_generator(m, g);
  return m;
}

SL2Int gamma_generator(int letter)
{
  switch (letter) {
  case 1:
    return SL2Int(1, 1, 0, 1);
  case -1:
    return SL2Int(1, -1, 0, 1);
  case 2:
    return SL2Int(1, 0, -1, 1);
  case -2:
    return SL2Int(1, 0, 1, 1);
  default:
    throw std::invalid_argument("gamma: letter out of range for 3 strands");
  }
}

SL2Int gamma(BraidWord const &beta)
{
  if (beta.strands() != 3)
    throw std::invalid_argument("gamma is defined on 3-strand braids only");
  SL2Int m;
  for (int g : beta.letters())
    m *= gamma_generator(g);
  return m;
}

SL2Int gamma_of_simple(Permutation const &w)
{
  if (w.degree() != 3)
    throw std::invalid_argument("gamma_of_simple: permutation must lie in S_3");
  return gamma(simple_braid(w));
}

ComplexMatrix evaluate(LaurentMatrix const &m, std::complex<double> z)
{
  if (z == std::complex<double>(0.0))
    throw std::domain_error("evaluate: z must be nonzero");
  auto const n = static_cast<Eigen::Index>(m.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).evaluate(z);
  }
  return out;
}

double max_eigenvalue_modulus(ComplexMatrix const &m)
{
  if (m.rows() == 0)
    return 0.0;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue iteration did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

SpectralSample spectral_radius_sample(LaurentMatrix const &m, std::size_t grid_size)
{
  if (grid_size == 0)
    throw std::invalid_argument("spectral radius: grid_size must be >= 1");

  SpectralSample best;
  auto consider = [&](std::complex<double> z) {
    double r = max_eigenvalue_modulus(evaluate(m, z));
    if (r > best.radius) {
      best.radius = r;
      best.at = z;
    }
  };

  consider({1.0, 0.0});
  consider({-1.0, 0.0});
  for (std::size_t k = 1; k < grid_size; ++k) {
    if (2 * k == grid_size)
      continue; // already sampled -1
    double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(grid_size);
    consider(std::polar(1.0, theta));
  }
  return best;
}

double spectral_radius_lower_bound(LaurentMatrix const &m, std::size_t grid_size)
{
  return spectral_radius_sample(m, grid_size).radius;
}

double entropy_lower_bound(BraidWord const &beta, std::size_t grid_size)
{
  double r = spectral_radius_lower_bound(unreduced_burau(beta), grid_size);
  return r > 1.0 ? std::log(r) : 0.0;
}

} // namespace braident
