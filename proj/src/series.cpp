#include "braident/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace braident {

RationalSeries::RationalSeries(std::size_t order)
  : coeffs_(order + 1, mpq_class(0))
{
}

RationalSeries::RationalSeries(std::size_t order, std::vector<mpq_class> coefficients)
  : coeffs_(std::move(coefficients))
{
  coeffs_.resize(order + 1, mpq_class(0));
}

RationalSeries operator*(RationalSeries const &a, RationalSeries const &b)
{
  std::size_t const order = std::min(a.order(), b.order());
  RationalSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] != 0)
        out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RationalSeries operator+(RationalSeries const &a, RationalSeries const &b)
{
  std::size_t const order = std::min(a.order(), b.order());
  RationalSeries out(order);
  for (std::size_t i = 0; i <= order; ++i)
    out[i] = a[i] + b[i];
  return out;
}

mpq_class binomial(mpq_class const &alpha, std::size_t i)
{
  mpq_class out = 1;
  for (std::size_t j = 0; j < i; ++j) {
    out *= alpha - mpq_class(static_cast<unsigned long>(j));
    out /= mpq_class(static_cast<unsigned long>(j + 1));
  }
  return out;
}

RationalSeries binomial_series(mpq_class const &alpha, std::size_t k, std::size_t order)
{
  if (k == 0)
    throw std::invalid_argument("binomial_series: k must be positive");
  RationalSeries out(order);
  mpq_class term = 1; // binomial(alpha, i) (-1)^i
  for (std::size_t i = 0; i * k <= order; ++i) {
    out[i * k] = term;
    term *= -(alpha - mpq_class(static_cast<unsigned long>(i)));
    term /= mpq_class(static_cast<unsigned long>(i + 1));
  }
  return out;
}

std::string to_string(mpq_class const &q)
{
  mpq_class c(q);
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace braident
