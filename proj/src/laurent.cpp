#include "braident/laurent.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace braident {

LaurentPoly::LaurentPoly(long constant)
{
  if (constant != 0)
    terms_.emplace(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(mpz_class const &coefficient, int exponent)
{
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

mpz_class LaurentPoly::coefficient(int exponent) const
{
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int exponent, mpz_class const &coefficient)
{
  if (coefficient == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(LaurentPoly const &rhs)
{
  for (auto const &[e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(LaurentPoly const &rhs)
{
  for (auto const &[e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
  LaurentPoly out(*this);
  for (auto &term : out.terms_)
    term.second = -term.second;
  return out;
}

LaurentPoly operator*(LaurentPoly const &a, LaurentPoly const &b)
{
  LaurentPoly out;
  for (auto const &[ea, ca] : a.terms_) {
    for (auto const &[eb, cb] : b.terms_)
      out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly &LaurentPoly::operator*=(LaurentPoly const &rhs)
{
  *this = *this * rhs;
  return *this;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> z) const
{
  if (z == std::complex<double>(0.0))
    throw std::domain_error("cannot evaluate a Laurent polynomial at 0");
  std::complex<double> sum = 0.0;
  for (auto const &[e, c] : terms_)
    sum += c.get_d() * std::pow(z, e);
  return sum;
}

LaurentPoly laurent_add(LaurentPoly const &a, LaurentPoly const &b) { return a + b; }
LaurentPoly laurent_mul(LaurentPoly const &a, LaurentPoly const &b) { return a * b; }

std::string to_string(LaurentPoly const &p)
{
  if (p.is_zero())
    return "0";
  std::string out;
  for (auto const &[e, c] : p.terms()) {
    if (!out.empty())
      out += '+';
    out += c.get_str() + "*t^" + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text)
{
  auto bad = [&text]() {
    return std::invalid_argument("bad Laurent polynomial '" + std::string(text) + "'");
  };
  if (text == "0")
    return {};

  LaurentPoly out;
  std::size_t pos = 0;
  for (;;) {
    auto plus = text.find('+', pos);
    std::string term(text.substr(pos, plus == std::string_view::npos ? text.npos : plus - pos));
    auto star = term.find("*t^");
    if (star == std::string::npos || star == 0)
      throw bad();
    mpz_class c;
    if (c.set_str(term.substr(0, star), 10) != 0)
      throw bad();
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(term.substr(star + 3), &used);
    } catch (std::exception const &) {
      throw bad();
    }
    if (used != term.size() - star - 3)
      throw bad();
    out += LaurentPoly::monomial(c, e);
    if (plus == std::string_view::npos)
      break;
    pos = plus + 1;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, LaurentPoly const &p)
{
  return os << to_string(p);
}

LaurentMatrix::LaurentMatrix(std::size_t size)
  : size_(size), entries_(size * size)
{
}

LaurentMatrix LaurentMatrix::identity(std::size_t size)
{
  LaurentMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    m(i, i) = 1;
  return m;
}

LaurentPoly LaurentMatrix::determinant() const
{
  if (size_ > 16)
    throw std::invalid_argument("determinant: matrix too large for subset expansion");
  if (size_ == 0)
    return 1;

  // partial[mask]: signed sum over injections of the first popcount(mask)
  // rows onto the columns in mask.
  std::size_t const full = (std::size_t{1} << size_) - 1;
  std::vector<LaurentPoly> partial(full + 1);
  partial[0] = 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (partial[mask].is_zero())
      continue;
    std::size_t const row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < size_; ++col) {
      std::size_t const bit = std::size_t{1} << col;
      if ((mask & bit) || (*this)(row, col).is_zero())
        continue;
      // Columns already used that lie to the right of col each add an inversion.
      bool odd = std::popcount(mask >> col) % 2 == 1;
      LaurentPoly term = partial[mask] * (*this)(row, col);
      if (odd)
        partial[mask | bit] -= term;
      else
        partial[mask | bit] += term;
    }
  }
  return partial[full];
}

LaurentMatrix matrix_mul(LaurentMatrix const &a, LaurentMatrix const &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("matrix_mul: size mismatch");
  std::size_t const n = a.size();
  LaurentMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero())
          out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

} // namespace braident
