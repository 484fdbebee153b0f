#ifndef BRAIDENT_BURAU_HPP
#define BRAIDENT_BURAU_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "braident/braid.hpp"
#include "braident/laurent.hpp"
#include "braident/permutation.hpp"
#include "braident/sl2.hpp"

namespace braident {

/// Unreduced Burau matrix of a single letter on n strands: the identity
/// except for the 2x2 block at (i, i+1), which is [[1-t, t], [1, 0]] for
/// sigma_i and its inverse [[0, 1], [t^-1, 1-t^-1]] for sigma_i^-1.
LaurentMatrix burau_generator(std::size_t strands, int letter);

/// Product of the generator matrices in word order.
LaurentMatrix unreduced_burau(BraidWord const &beta);

/// gamma(sigma_1) = [[1, 1], [0, 1]], gamma(sigma_2) = [[1, 0], [-1, 1]]:
/// the reduced Burau representation of the 3-strand braid group at t = -1.
SL2Int gamma_generator(int letter);

/// Throws std::invalid_argument unless beta has 3 strands.
SL2Int gamma(BraidWord const &beta);

/// gamma(sigma_w) for w in S_3.
SL2Int gamma_of_simple(Permutation const &w);

using ComplexMatrix = Eigen::MatrixXcd;

/// Entrywise t -> z. Throws std::domain_error for z = 0.
ComplexMatrix evaluate(LaurentMatrix const &m, std::complex<double> z);

/// Largest eigenvalue modulus of a dense complex matrix. Throws
/// std::runtime_error if the eigenvalue iteration does not converge.
double max_eigenvalue_modulus(ComplexMatrix const &m);

/// Default number of unit-circle sample points.
inline constexpr std::size_t kDefaultGrid = 512;

/// Log-radius above this counts as positive entropy on the Burau route.
inline constexpr double kEntropyPositivityThreshold = 1e-9;

struct SpectralSample
{
  double radius = 0.0;           ///< max |lambda| over the sampled points
  std::complex<double> at{1.0};  ///< a sample point attaining it
};

/// Max eigenvalue modulus of m(z) over z = exp(2 pi i k / grid_size),
/// k = 0..grid_size-1, together with z = -1 and z = 1. Every sample is a
/// lower bound for the spectral radius over the whole unit circle.
SpectralSample spectral_radius_sample(LaurentMatrix const &m, std::size_t grid_size);
double spectral_radius_lower_bound(LaurentMatrix const &m, std::size_t grid_size);

/// max(0, log spectral_radius_lower_bound(rho(beta))): a lower bound for the
/// topological entropy of beta.
double entropy_lower_bound(BraidWord const &beta, std::size_t grid_size = kDefaultGrid);

} // namespace braident

#endif // BRAIDENT_BURAU_HPP
