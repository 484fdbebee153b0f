#include "braident/sl2.hpp"

#include <stdexcept>

namespace braident {

SL2Int::SL2Int(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
  : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
  if (a_ * d_ - b_ * c_ != 1)
    throw std::invalid_argument("SL2Int: determinant is not 1");
}

SL2Int SL2Int::inverse() const
{
  return SL2Int(Unchecked{}, d_, -b_, -c_, a_);
}

SL2Int &SL2Int::operator*=(SL2Int const &rhs)
{
  mpz_class a = a_ * rhs.a_ + b_ * rhs.c_;
  mpz_class b = a_ * rhs.b_ + b_ * rhs.d_;
  mpz_class c = c_ * rhs.a_ + d_ * rhs.c_;
  mpz_class d = c_ * rhs.b_ + d_ * rhs.d_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

bool is_hyperbolic(SL2Int const &m)
{
  return abs(m.trace()) > 2;
}

std::string to_string(SL2Int const &m)
{
  return "[[" + m.a().get_str() + "," + m.b().get_str() + "],[" + m.c().get_str() +
         "," + m.d().get_str() + "]]";
}

std::ostream &operator<<(std::ostream &os, SL2Int const &m)
{
  return os << to_string(m);
}

} // namespace braident
