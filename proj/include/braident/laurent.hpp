#ifndef BRAIDENT_LAURENT_HPP
#define BRAIDENT_LAURENT_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace braident {

/// Integer Laurent polynomial in t. Coefficients are arbitrary precision;
/// zero coefficients are never stored.
class LaurentPoly
{
public:
  LaurentPoly() = default;
  LaurentPoly(long constant); // NOLINT: implicit from integers is intended
  static LaurentPoly monomial(mpz_class const &coefficient, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::map<int, mpz_class> const &terms() const { return terms_; }
  mpz_class coefficient(int exponent) const;

  /// Lowest and highest exponent; undefined for the zero polynomial.
  int low_degree() const { return terms_.begin()->first; }
  int high_degree() const { return terms_.rbegin()->first; }

  LaurentPoly &operator+=(LaurentPoly const &rhs);
  LaurentPoly &operator-=(LaurentPoly const &rhs);
  LaurentPoly &operator*=(LaurentPoly const &rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const &b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly const &a, LaurentPoly const &b);
  friend bool operator==(LaurentPoly const &a, LaurentPoly const &b)
  {
    return a.terms_ == b.terms_;
  }

  std::complex<double> evaluate(std::complex<double> z) const;

private:
  void add_term(int exponent, mpz_class const &coefficient);

  std::map<int, mpz_class> terms_;
};

LaurentPoly laurent_add(LaurentPoly const &a, LaurentPoly const &b);
LaurentPoly laurent_mul(LaurentPoly const &a, LaurentPoly const &b);

/// "c*t^e" terms in increasing exponent joined by "+", e.g. "1*t^0+-1*t^2".
/// The zero polynomial prints as "0".
std::string to_string(LaurentPoly const &p);
LaurentPoly parse_laurent(std::string_view text);

std::ostream &operator<<(std::ostream &os, LaurentPoly const &p);

/// Square matrix over LaurentPoly, row-major.
class LaurentMatrix
{
public:
  /// Zero matrix of the given size.
  explicit LaurentMatrix(std::size_t size);
  static LaurentMatrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  LaurentPoly &operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  LaurentPoly const &operator()(std::size_t row, std::size_t col) const
  {
    return entries_[row * size_ + col];
  }

  /// Exact determinant by expansion over column subsets; fine for size <= 16.
  LaurentPoly determinant() const;

  friend bool operator==(LaurentMatrix const &, LaurentMatrix const &) = default;

private:
  std::size_t size_;
  std::vector<LaurentPoly> entries_;
};

/// Throws std::invalid_argument on size mismatch.
LaurentMatrix matrix_mul(LaurentMatrix const &a, LaurentMatrix const &b);

} // namespace braident

#endif // BRAIDENT_LAURENT_HPP
