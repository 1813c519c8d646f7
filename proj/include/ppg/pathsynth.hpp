#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ppg/bigint.hpp"
#include "ppg/permutation.hpp"
#include "ppg/powergraph.hpp"

namespace ppg {

/// Which result a path instantiates.
enum class LemmaTag { Bridge21, ThreeCycles22, PrimeSmall23, PrimeGeneral24, AnyPair31, Diam8_35 };

std::string to_string(LemmaTag tag);
std::optional<LemmaTag> lemma_tag_from_string(std::string_view s);

/// An explicit path in the proper power graph with one certificate per edge.
struct PathWitness {
  std::size_t n = 0;
  std::vector<Permutation> vertices;
  std::vector<AdjacencyCertificate> certificates;
  LemmaTag lemma = LemmaTag::AnyPair31;
  std::size_t declared_bound = 0;
  /// Name of the construction branch, e.g. "small 3/3 tight/tight".
  std::string region;
  /// Produced with the connectivity hypothesis overridden.
  bool best_effort = false;

  std::size_t length() const { return certificates.size(); }
};

/// Certifies every edge of `vertices` and checks the bound. Throws
/// BoundViolation if an edge is missing, a vertex is the identity or odd, or
/// the path is longer than `bound`.
PathWitness certify_path(std::vector<Permutation> vertices, LemmaTag lemma, std::size_t bound,
                         std::string region);

/// Full re-validation; on failure `why` receives the reason.
bool validate(const PathWitness& path, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Predicates on n

/// None of n, n-1, n-2 is prime and, for each of them that is even, neither
/// is its half. Odd terms have no integral half and pass that part vacuously.
bool connectivity_condition(std::uint64_t n);

/// floor((n-2)/p') >= 3p' + 2, p' the largest prime factor of n(n-1)(n-2).
bool diam8_condition(std::uint64_t n);

/// The smallest degree the synthesizer supports.
inline constexpr std::size_t kMinSynthesisDegree = 52;

// ---------------------------------------------------------------------------
// Building blocks

/// x ~ xy ~ y for commuting x, y of coprime orders. Certificates are the CRT
/// exponents a = 1 (mod o(x)), a = 0 (mod o(y)) and symmetrically.
PathWitness bridge(const Permutation& x, const Permutation& y);

/// The `count` smallest points moved by none of `exclusions`.
/// Throws ConstructionError when fewer are available.
std::vector<Point> free_points(std::span<const Permutation> exclusions, std::size_t count,
                               std::size_t n);

/// Merges m disjoint t-cycles column by column into one mt-cycle whose m-th
/// power is the product of the inputs.
Permutation interleave(std::size_t n, const std::vector<Cycle>& cycles);

/// Result of rooting a permutation whose cycles all have the same length t.
///
/// With heads split into groups of h cycles, sigma the product of the
/// interleaved groups and l = h^-1 mod t,
///   root = swap * sigma * prod(tail cycles)^l,   root^h == beta,
///   endpoint = root^t = swap * sigma^t,          of order h (or lcm(h, 2)).
struct StitchResult {
  Permutation root;
  Permutation endpoint;
  std::size_t group_size = 0;
  std::size_t cycle_length = 0;
};

/// `groups` index into decompose(beta).cycles. The optional swap is a
/// transposition on two fixed points of beta, allowed only for an even group
/// size and odd cycle length (it repairs the parity of a single 2t-cycle).
StitchResult stitch_step(const Permutation& beta, const std::vector<std::vector<std::size_t>>& groups,
                         std::optional<std::pair<Point, Point>> swap = std::nullopt);

struct Reduction {
  Permutation reduced;   // x^(o(x)/p), of order p
  std::uint64_t prime = 0;
  std::optional<AdjacencyCertificate> certificate;  // absent when reduced == x
};

/// Replaces x by x^(o(x)/p), p the least prime dividing o(x). The exponent is
/// reduced modulo each cycle length from the factored order.
Reduction prime_order_reduction(const Permutation& x);

/// Same with an explicit prime divisor of o(x).
Reduction prime_order_reduction(const Permutation& x, std::uint64_t prime);

// ---------------------------------------------------------------------------
// Path synthesis

struct SynthesisOptions {
  /// Attempt synthesis even when the degree is below 52 or the connectivity
  /// hypothesis fails. Results are marked best_effort.
  bool force = false;
};

/// Between two 3-cycles for n >= 10: length <= 1 inside one cyclic subgroup,
/// otherwise c ~ cx ~ x ~ c'x ~ c' with x a double transposition on the four
/// smallest points moved by neither.
PathWitness path_3cycles(const Permutation& c, const Permutation& c2, std::size_t n);

/// Prime orders p, q with pq <= 9; length <= 6.
PathWitness path_prime_small(const Permutation& alpha, const Permutation& beta, std::size_t n,
                             const SynthesisOptions& opts = {});

/// Prime orders; length <= 8, or <= 10 when the larger-prime element has
/// exactly three cycles and both elements fix fewer than three points.
PathWitness path_prime_general(const Permutation& alpha, const Permutation& beta, std::size_t n,
                               const SynthesisOptions& opts = {});

/// Any two nonidentity even permutations; length <= 11, and <= 8 whenever
/// diam8_condition(n) holds.
PathWitness path_any(const Permutation& x, const Permutation& y, std::size_t n,
                     const SynthesisOptions& opts = {});

/// Greedy shortcutting: repeatedly replaces the widest-spanning pair of
/// adjacent (or equal) non-consecutive vertices by a direct edge.
PathWitness shortcut(const PathWitness& path);

// ---------------------------------------------------------------------------
// Diameter bounds and the lower-bound witness

struct BoundsReport {
  std::uint64_t n = 0;
  bool connected_hypothesis = false;
  bool diam8_hypothesis = false;
  /// Largest prime factor of n(n-1)(n-2); 0 for n < 5.
  std::uint64_t max_prime_factor = 0;
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;
  std::optional<std::pair<Permutation, Permutation>> witness_pair;
  std::string note;
};

BoundsReport diameter_bounds(std::uint64_t n, bool with_witness = false);

/// x = (1 2 ... p), y = (n n-1 ... n-p+1) with p the largest prime in
/// (floor(n/2), n). Requires the connectivity condition; the distance
/// bounds it certifies are claimed only for n >= 52.
std::pair<Permutation, Permutation> lower_bound_witness(std::size_t n);

struct WitnessChecks {
  bool supports_overlap = false;
  bool commute = false;
  bool common_fixed_points_empty = false;
  bool same_cyclic_subgroup = false;
  bool prime_order_equal = false;
  bool conclusion_d_ge_6 = false;
};

/// Structural certificate that d(x, y) >= 6 for an equal-prime-order pair.
WitnessChecks verify_witness(const Permutation& x, const Permutation& y, std::size_t n);

/// |C_{S_n}(x)| = prod over cycle lengths t of t^{m_t} * m_t!, with fixed
/// points counted as cycles of length 1.
BigInt centralizer_order(const Permutation& x);

}  // namespace ppg
