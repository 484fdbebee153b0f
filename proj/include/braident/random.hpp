#ifndef BRAIDENT_RANDOM_HPP
#define BRAIDENT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace braident {

// mt19937_64 output is fixed by the standard; the distributions in <random>
// are not, so bounded draws go through uniform_below instead.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// Uniform double in [0, 1) built from the top 53 bits.
double uniform_unit(Rng &rng);

/// splitmix64 finalizer; used to give sample i of a run its own stream.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the index-th sample of a run seeded with base. Independent of
/// how samples are sharded across threads.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

} // namespace braident

#endif // BRAIDENT_RANDOM_HPP
