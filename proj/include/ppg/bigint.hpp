#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ppg {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// A congruence x = residue (mod modulus) with modulus >= 1.
struct Congruence {
  BigInt residue;
  BigInt modulus;
};

/// Merges two congruences with possibly non-coprime moduli. Returns nullopt
/// when they are inconsistent; otherwise the residue is reduced into
/// [0, lcm).
std::optional<Congruence> crt_merge(const Congruence& a, const Congruence& b);

/// Inverse of a modulo m (m >= 2, gcd(a, m) == 1).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace ppg
