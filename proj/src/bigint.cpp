#include "ppg/bigint.hpp"

#include <stdexcept>

namespace ppg {

namespace {

// Returns g = gcd(a, b) and sets x with a*x = g (mod b).
BigInt ext_gcd(BigInt a, BigInt b, BigInt& x) {
  BigInt x0 = 1, x1 = 0;
  while (b != 0) {
    BigInt q = a / b;
    BigInt t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  x = x0;
  return a;
}

BigInt mod_floor(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::optional<Congruence> crt_merge(const Congruence& a, const Congruence& b) {
  BigInt inv;
  BigInt g = ext_gcd(a.modulus, b.modulus, inv);
  BigInt diff = b.residue - a.residue;
  if (mod_floor(diff, g) != 0) return std::nullopt;
  BigInt step = b.modulus / g;
  BigInt lcm = a.modulus * step;
  // a.residue + a.modulus * t, with t = (diff / g) * inv (mod step)
  BigInt t = step == 1 ? BigInt(0) : mod_floor((diff / g) * inv, step);
  return Congruence{mod_floor(a.residue + a.modulus * t, lcm), lcm};
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  BigInt inv;
  BigInt g = ext_gcd(BigInt(a % m), BigInt(m), inv);
  if (g != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
  return mod_floor(inv, BigInt(m)).convert_to<std::uint64_t>();
}

}  // namespace ppg
