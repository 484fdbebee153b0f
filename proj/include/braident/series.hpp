#ifndef BRAIDENT_SERIES_HPP
#define BRAIDENT_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace braident {

/// Power series in x truncated after x^T, with exact rational coefficients.
class RationalSeries
{
public:
  /// The zero series of order T.
  explicit RationalSeries(std::size_t order);
  RationalSeries(std::size_t order, std::vector<mpq_class> coefficients);

  std::size_t order() const { return coeffs_.size() - 1; }
  mpq_class const &operator[](std::size_t i) const { return coeffs_[i]; }
  mpq_class &operator[](std::size_t i) { return coeffs_[i]; }
  std::vector<mpq_class> const &coefficients() const { return coeffs_; }

  /// Products and sums truncate to the smaller order of the two operands.
  friend RationalSeries operator*(RationalSeries const &a, RationalSeries const &b);
  friend RationalSeries operator+(RationalSeries const &a, RationalSeries const &b);
  friend bool operator==(RationalSeries const &, RationalSeries const &) = default;

private:
  std::vector<mpq_class> coeffs_;
};

/// Generalized binomial coefficient alpha (alpha - 1) ... (alpha - i + 1) / i!.
mpq_class binomial(mpq_class const &alpha, std::size_t i);

/// (1 - x^k)^alpha truncated after x^T: the coefficient of x^{ik} is
/// binomial(alpha, i) (-1)^i.
RationalSeries binomial_series(mpq_class const &alpha, std::size_t k, std::size_t order);

/// Renders "p/q", or "p" when q = 1.
std::string to_string(mpq_class const &q);

} // namespace braident

#endif // BRAIDENT_SERIES_HPP
