#pragma once

#include <cstdint>
#include <map>

#include "ppg/permutation.hpp"

namespace ppg {

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases, which is exact below 3.3e24).
bool is_prime(std::uint64_t n);

/// Prime factorization n = prod p^e (empty map for n <= 1).
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// A prime strictly inside (lo, hi).
struct PrimeWitness {
  std::uint64_t p = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// The largest prime p with floor(n/2) < p < n. Requires n >= 4.
PrimeWitness bertrand_prime(std::uint64_t n);

/// Least prime dividing the order; DomainError for order 1.
std::uint64_t least_prime_factor_of_order(const FactoredOrder& o);

/// Largest prime dividing n(n-1)(n-2), factoring each term separately.
/// Requires n >= 5.
std::uint64_t max_prime_factor_triple(std::uint64_t n);

}  // namespace ppg
