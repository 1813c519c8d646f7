#pragma once

// Helpers shared by the synthesis sources. Not installed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppg/pathsynth.hpp"

namespace ppg::detail {

/// Vertex sequence of a path, certified only at the end.
using Chain = std::vector<Permutation>;

using Mask = std::vector<char>;  // indexed by point, size n + 1

Mask support_mask(const Permutation& x);
Mask support_mask(const std::vector<const Permutation*>& xs, std::size_t n);

/// a followed by b; b must start where a ends.
Chain concat(Chain a, const Chain& b);
Chain reversed(Chain c);

std::uint64_t prime_order(const Permutation& x);  // 0 unless the order is prime

/// An even element of prime order r on the given points: an r-cycle for odd
/// r, a double transposition on four points for r = 2.
Permutation prime_element(std::size_t n, std::uint64_t r, const std::vector<Point>& points);
inline std::size_t points_needed(std::uint64_t r) { return r == 2 ? 4 : r; }

/// [x, xy, y]; caller guarantees commuting, coprime prime orders.
Chain bridge_chain(const Permutation& x, const Permutation& y);

/// Lowest-indexed cycles of d meeting no point of `avoid`.
std::vector<std::size_t> cycles_avoiding(const CycleDecomposition& d, const Mask& avoid,
                                         std::size_t count);

/// [x, root, endpoint] for a stitch on the chosen cycle indices.
struct Stitch {
  Chain chain;
  Permutation endpoint;
};
Stitch stitch_chain(const Permutation& x, const CycleDecomposition& d,
                    const std::vector<std::vector<std::size_t>>& groups,
                    std::optional<std::pair<Point, Point>> swap = std::nullopt);

/// Cost 0, 1 or 2 when a, b are equal, adjacent, or commute with coprime
/// prime orders.
std::optional<Chain> direct_link(const Permutation& a, const Permutation& b);

/// direct_link, else a length-4 detour through an element of a third prime
/// order on points moved by neither.
std::optional<Chain> link(const Permutation& a, const Permutation& b);

/// Shortest chain from x to y found by combining short hub moves on both
/// sides, of length at most `budget`. x, y have prime order.
std::optional<Chain> hub_search(const Permutation& x, const Permutation& y, std::size_t budget);

/// Prime-order machines; both return unverified chains.
Chain small_chain(const Permutation& alpha, const Permutation& beta, std::string& region);
Chain general_chain(const Permutation& alpha, const Permutation& beta, std::string& region,
                    std::size_t& bound);

}  // namespace ppg::detail
