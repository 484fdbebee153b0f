#include "braident/random.hpp"

#include <limits>
#include <stdexcept>

namespace braident {

std::uint64_t uniform_below(Rng &rng, std::uint64_t bound)
{
  if (bound == 0)
    throw std::invalid_argument("uniform_below: bound must be positive");

  // Largest multiple of bound representable; draws above it are rejected.
  std::uint64_t const max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t const limit = max - (max % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x <= limit)
      return x % bound;
  }
}

double uniform_unit(Rng &rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
  return mix64(mix64(base) ^ (index * 0xd1b54a32d192ed03ULL));
}

} // namespace braident
