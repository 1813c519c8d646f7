#pragma once

#include <cstdint>
#include <random>

#include "ppg/permutation.hpp"

namespace ppg {

/// Uniform integer in [0, bound) by rejection on raw mt19937_64 output, so
/// sequences do not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Fisher-Yates shuffle of 1..n.
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Shuffles until an even, nonidentity permutation comes up.
Permutation random_even_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace ppg
