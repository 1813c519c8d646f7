#include <doctest.h>

#include "oracles.hpp"
#include "ppg/bigint.hpp"
#include "ppg/error.hpp"
#include "ppg/primes.hpp"

using namespace ppg;

TEST_CASE("is_prime examples") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(49));
  CHECK(is_prime(2017));
  CHECK(is_prime(2305843009213693951ULL));       // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));      // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to bases up to 23
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("is_prime matches trial division") {
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == oracle::trial_prime(n));
  for (std::uint64_t n = 4294967000ULL; n < 4294968000ULL; ++n) REQUIRE(is_prime(n) == oracle::trial_prime(n));
}

TEST_CASE("factorize matches trial division") {
  for (std::uint64_t n = 1; n < 20000; ++n) REQUIRE(factorize(n) == oracle::trial_factor(n));
  CHECK(factorize(2024) == std::map<std::uint64_t, unsigned>{{2, 3}, {11, 1}, {23, 1}});
  // product of two primes near 2^31
  CHECK(factorize(2147483647ULL * 2147483629ULL) ==
        std::map<std::uint64_t, unsigned>{{2147483629ULL, 1}, {2147483647ULL, 1}});
  CHECK(factorize(1ULL << 63) == std::map<std::uint64_t, unsigned>{{2, 63}});
}

TEST_CASE("bertrand_prime") {
  CHECK(bertrand_prime(10).p == 7);
  CHECK(bertrand_prime(52).p == 47);
  CHECK(bertrand_prime(6).p == 5);
  CHECK(bertrand_prime(4).p == 3);
  const PrimeWitness w = bertrand_prime(52);
  CHECK(w.lo == 26);
  CHECK(w.hi == 52);
  CHECK_THROWS_AS(bertrand_prime(3), DomainError);
}

TEST_CASE("least_prime_factor_of_order") {
  FactoredOrder a;
  a.prime_powers = {{2, 1}, {3, 1}};
  CHECK(least_prime_factor_of_order(a) == 2);
  FactoredOrder b;
  b.prime_powers = {{3, 2}, {5, 1}};
  CHECK(least_prime_factor_of_order(b) == 3);
  CHECK_THROWS_AS(least_prime_factor_of_order(FactoredOrder{}), DomainError);
}

TEST_CASE("max_prime_factor_triple") {
  CHECK(max_prime_factor_triple(2025) == 23);
  CHECK(max_prime_factor_triple(7) == 7);
  CHECK(max_prime_factor_triple(52) == 17);
  for (std::uint64_t n = 5; n <= 10000; ++n) {
    std::uint64_t best = 0;
    for (std::uint64_t v : {n, n - 1, n - 2}) {
      for (auto [p, e] : oracle::trial_factor(v)) best = std::max(best, p);
    }
    REQUIRE(max_prime_factor_triple(n) == best);
  }
  CHECK_THROWS_AS(max_prime_factor_triple(4), DomainError);
}

TEST_CASE("crt_merge and inverse_mod") {
  auto m = crt_merge({1, 3}, {0, 2});
  REQUIRE(m);
  CHECK(m->residue == 4);
  CHECK(m->modulus == 6);
  auto nc = crt_merge({1, 4}, {3, 6});
  REQUIRE(nc);
  CHECK(nc->residue == 9);
  CHECK(nc->modulus == 12);
  CHECK_FALSE(crt_merge({1, 4}, {2, 6}));
  CHECK(inverse_mod(2, 3) == 2);
  CHECK(inverse_mod(5, 3) == 2);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS(inverse_mod(2, 4));
}
