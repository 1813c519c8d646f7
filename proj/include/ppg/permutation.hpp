#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppg/bigint.hpp"

namespace ppg {

/// A point of {1..n}. Points are 1-based everywhere in the public API.
using Point = std::uint32_t;

/// An ordered cycle (p1 p2 ... pt) sending p_i to p_{i+1}.
using Cycle = std::vector<Point>;

/// A permutation of {1..n}, stored as its image map.
///
/// Values are immutable once built; all group operations return new
/// permutations. Composition is right-to-left: compose(a, b) applies b first.
class Permutation {
 public:
  /// The identity on n points.
  explicit Permutation(std::size_t n = 1);

  /// Builds from a 1-based image sequence; throws DomainError unless it is a
  /// bijection on {1..n}.
  static Permutation from_images(std::vector<Point> images);

  /// Builds the product of pairwise disjoint cycles; throws DomainError on
  /// overlaps, repeated points, points outside {1..n} or cycles shorter than 2.
  static Permutation from_cycles(std::size_t n, const std::vector<Cycle>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i - 1]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  bool moves(Point i) const { return images_[i - 1] != i; }
  std::size_t support_size() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  explicit Permutation(std::vector<Point> images, int /*unchecked*/)
      : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// o(x) as a map prime -> exponent. Empty for the identity.
struct FactoredOrder {
  std::map<std::uint64_t, unsigned> prime_powers;

  bool is_one() const { return prime_powers.empty(); }
  bool is_prime() const {
    return prime_powers.size() == 1 && prime_powers.begin()->second == 1;
  }
  /// Smallest prime divisor; throws DomainError for order 1.
  std::uint64_t least_prime() const;
  /// Exact integer value; may be far beyond 64 bits.
  BigInt value() const;
  /// o / p for a prime p dividing o.
  FactoredOrder divided_by(std::uint64_t p) const;

  friend bool operator==(const FactoredOrder&, const FactoredOrder&) = default;
};

/// Canonical disjoint-cycle form: every cycle starts at its least point,
/// cycles are sorted by least point, fixed points ascend.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<Cycle> cycles;
  std::vector<Point> fixed_points;

  /// S(x): the moved points, ascending.
  std::vector<Point> support() const;
  std::size_t moved_count() const { return degree - fixed_points.size(); }
  std::size_t fixed_count() const { return fixed_points.size(); }
  std::size_t cycle_count() const { return cycles.size(); }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& x);

/// x^e computed cycle by cycle: a cycle of length t is rotated by e mod t.
Permutation power(const Permutation& x, std::int64_t e);
Permutation power(const Permutation& x, const BigInt& e);

bool commute(const Permutation& a, const Permutation& b);

/// True when no point is moved by both.
bool disjoint_supports(const Permutation& a, const Permutation& b);

CycleDecomposition decompose(const Permutation& x);

/// Product of the cycles of d (they commute, so order is irrelevant).
Permutation recompose(const CycleDecomposition& d);

FactoredOrder order_factored(const CycleDecomposition& d);
FactoredOrder order_factored(const Permutation& x);

/// Parses cycle notation, e.g. "(1 2 3)(4,5)" or "()". Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t n);

/// Space separated points, cycles by least point, "()" for the identity.
std::string format_cycles(const Permutation& x);

}  // namespace ppg
