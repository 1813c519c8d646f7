#include "ppg/primes.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ppg/error.hpp"

namespace ppg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Pollard-Brent; n must be odd, composite and not a prime power of a tiny
// prime (those are stripped by trial division first).
std::uint64_t rho_divisor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = rho_divisor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2,  3,  5,  7,  11, 13,
                                                         17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  if (n <= 1) return out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

PrimeWitness bertrand_prime(std::uint64_t n) {
  if (n < 4) throw DomainError("bertrand_prime: n must be at least 4");
  const std::uint64_t lo = n / 2;
  for (std::uint64_t p = n - 1; p > lo; --p) {
    if (is_prime(p)) return PrimeWitness{p, lo, n};
  }
  throw std::logic_error("bertrand_prime: no prime in (n/2, n)");
}

std::uint64_t least_prime_factor_of_order(const FactoredOrder& o) {
  if (o.is_one()) throw DomainError("order 1 has no prime factor");
  return o.prime_powers.begin()->first;
}

std::uint64_t max_prime_factor_triple(std::uint64_t n) {
  if (n < 5) throw DomainError("max_prime_factor_triple: n must be at least 5");
  std::uint64_t best = 0;
  for (std::uint64_t term : {n, n - 1, n - 2}) {
    auto f = factorize(term);
    if (!f.empty()) best = std::max(best, f.rbegin()->first);
  }
  return best;
}

}  // namespace ppg
