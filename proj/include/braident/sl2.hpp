#ifndef BRAIDENT_SL2_HPP
#define BRAIDENT_SL2_HPP

#include <array>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace braident {

/// [[a, b], [c, d]] with ad - bc = 1. Entries are arbitrary precision since
/// products along long words grow exponentially.
class SL2Int
{
public:
  SL2Int() : a_(1), b_(0), c_(0), d_(1) {}
  /// Throws std::invalid_argument unless ad - bc = 1.
  SL2Int(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  static SL2Int identity() { return {}; }

  mpz_class const &a() const { return a_; }
  mpz_class const &b() const { return b_; }
  mpz_class const &c() const { return c_; }
  mpz_class const &d() const { return d_; }

  mpz_class trace() const { return a_ + d_; }
  SL2Int inverse() const;

  SL2Int &operator*=(SL2Int const &rhs);
  friend SL2Int operator*(SL2Int lhs, SL2Int const &rhs) { return lhs *= rhs; }
  friend bool operator==(SL2Int const &, SL2Int const &) = default;

private:
  struct Unchecked {};
  SL2Int(Unchecked, mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  mpz_class a_, b_, c_, d_;
};

/// |tr| > 2, i.e. the matrix has a real eigenvalue of modulus > 1.
bool is_hyperbolic(SL2Int const &m);

/// "[[a,b],[c,d]]"
std::string to_string(SL2Int const &m);
std::ostream &operator<<(std::ostream &os, SL2Int const &m);

} // namespace braident

#endif // BRAIDENT_SL2_HPP
