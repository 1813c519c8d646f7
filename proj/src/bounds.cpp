#include <map>

#include "ppg/error.hpp"
#include "ppg/pathsynth.hpp"
#include "ppg/primes.hpp"

namespace ppg {

bool connectivity_condition(std::uint64_t n) {
  if (n < 3) throw DomainError("connectivity_condition needs n >= 3");
  for (std::uint64_t v : {n, n - 1, n - 2}) {
    if (is_prime(v)) return false;
    // odd v has no integral half and passes
    if (v % 2 == 0 && is_prime(v / 2)) return false;
  }
  return true;
}

bool diam8_condition(std::uint64_t n) {
  if (n < 5) throw DomainError("diam8_condition needs n >= 5");
  const std::uint64_t p = max_prime_factor_triple(n);
  return (n - 2) / p >= 3 * p + 2;
}

std::pair<Permutation, Permutation> lower_bound_witness(std::size_t n) {
  if (n < 5 || !connectivity_condition(n)) {
    throw HypothesisError("lower-bound witness needs the connectivity condition");
  }
  const std::uint64_t p = bertrand_prime(n).p;
  Cycle up, down;
  for (std::uint64_t i = 1; i <= p; ++i) {
    up.push_back(static_cast<Point>(i));
    down.push_back(static_cast<Point>(n + 1 - i));
  }
  return {Permutation::from_cycles(n, {up}), Permutation::from_cycles(n, {down})};
}

BoundsReport diameter_bounds(std::uint64_t n, bool with_witness) {
  BoundsReport r;
  r.n = n;
  r.connected_hypothesis = connectivity_condition(n);
  if (n >= 5) {
    r.diam8_hypothesis = diam8_condition(n);
    r.max_prime_factor = max_prime_factor_triple(n);
  }
  if (!r.connected_hypothesis) {
    r.note = "connectivity condition fails: one of n, n-1, n-2 or an integral half of them is prime";
    return r;
  }
  if (n < kMinSynthesisDegree) {
    r.note = "condition holds but the bounds are established only for n >= 52";
    return r;
  }
  r.lower = 6;
  r.upper = r.diam8_hypothesis ? 8 : 11;
  r.note = r.diam8_hypothesis ? "floor((n-2)/p') >= 3p'+2 gives the sharper upper bound"
                              : "general upper bound";
  if (with_witness) r.witness_pair = lower_bound_witness(n);
  return r;
}

WitnessChecks verify_witness(const Permutation& x, const Permutation& y, std::size_t n) {
  if (x.degree() != n || y.degree() != n) throw DomainError("degree mismatch");
  WitnessChecks c;
  c.common_fixed_points_empty = true;
  for (Point i = 1; i <= n; ++i) {
    if (x.moves(i) && y.moves(i)) c.supports_overlap = true;
    if (!x.moves(i) && !y.moves(i)) c.common_fixed_points_empty = false;
  }
  c.commute = commute(x, y);
  c.same_cyclic_subgroup = cyclic_membership(x, y).has_value() && cyclic_membership(y, x).has_value();
  const FactoredOrder ox = order_factored(x), oy = order_factored(y);
  c.prime_order_equal = ox.is_prime() && ox == oy;
  c.conclusion_d_ge_6 = c.supports_overlap && !c.commute && c.common_fixed_points_empty &&
                        !c.same_cyclic_subgroup && c.prime_order_equal;
  return c;
}

BigInt centralizer_order(const Permutation& x) {
  const CycleDecomposition d = decompose(x);
  std::map<std::size_t, std::size_t> by_length;
  by_length[1] = d.fixed_count();
  for (const Cycle& c : d.cycles) ++by_length[c.size()];
  BigInt total = 1;
  for (auto [t, m] : by_length) {
    for (std::size_t i = 1; i <= m; ++i) total *= BigInt(t) * BigInt(i);
  }
  return total;
}

}  // namespace ppg
