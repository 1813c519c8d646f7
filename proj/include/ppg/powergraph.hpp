#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppg/bigint.hpp"
#include "ppg/permutation.hpp"

namespace ppg {

enum class Direction { SecondIsPowerOfFirst, FirstIsPowerOfSecond };

std::string to_string(Direction d);

/// Proof of an edge {first, second}: one endpoint is the `exponent`-th power
/// of the other.
struct AdjacencyCertificate {
  Direction direction = Direction::SecondIsPowerOfFirst;
  BigInt exponent;

  friend bool operator==(const AdjacencyCertificate&, const AdjacencyCertificate&) = default;
};

/// Least e >= 0 with x^e == z, or nullopt when z is not in <x>.
///
/// Works per cycle of x: z has to fix the fixed points of x and act on each
/// cycle as a rotation; the per-cycle rotation amounts are then combined by
/// CRT. The cyclic group itself is never enumerated.
std::optional<BigInt> cyclic_membership(const Permutation& z, const Permutation& x);

/// Certificate for x ~ y in the proper power graph, or nullopt. Irreflexive.
/// Throws DomainError if either vertex is the identity.
std::optional<AdjacencyCertificate> is_adjacent(const Permutation& x, const Permutation& y);

/// Re-derives the edge from the certificate by powering.
bool certificate_holds(const Permutation& first, const Permutation& second,
                       const AdjacencyCertificate& cert);

/// Exact distance, or nullopt for different components.
struct DistanceResult {
  std::optional<std::size_t> distance;
  std::vector<Permutation> path;  // filled on request when reachable
};

struct ComponentSummary {
  std::size_t size = 0;
  std::size_t diameter = 0;
  Permutation least;  // least member in lexicographic image order
};

struct ComponentReport {
  std::size_t n = 0;
  std::size_t cutoff = 0;
  std::vector<ComponentSummary> components;  // ordered by least member
};

/// The proper power graph of A_n, materialised as a CSR adjacency over the
/// even permutations indexed by lexicographic rank.
///
/// Edges come from one sweep over the group: every g contributes {g, g^k}
/// for 2 <= k < o(g) with g^k != g; pairs generating the same cyclic
/// subgroup are emitted once. Immutable after construction.
class AlternatingPowerGraph {
 public:
  static constexpr std::size_t kDefaultCutoff = 10;
  static constexpr std::size_t kMaxDegree = 12;

  /// Throws CutoffError when n > cutoff (or n > kMaxDegree).
  explicit AlternatingPowerGraph(std::size_t n, std::size_t cutoff = kDefaultCutoff);

  /// Rough memory footprint of the index for A_n in bytes.
  static std::uint64_t estimated_bytes(std::size_t n);

  std::size_t degree() const { return n_; }
  std::size_t cutoff() const { return cutoff_; }
  /// |A_n| - 1: the identity is not a vertex.
  std::size_t vertex_count() const { return group_order_ - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::uint32_t index_of(const Permutation& x) const;
  Permutation element(std::uint32_t index) const;

  std::vector<Permutation> neighbors(const Permutation& x) const;

  /// BFS distances from x to every element index; -1 marks unreachable
  /// (and the identity). max_depth < 0 means unbounded.
  std::vector<std::int16_t> distances_from(const Permutation& x, int max_depth = -1) const;

  DistanceResult distance(const Permutation& x, const Permutation& y, bool with_path = false) const;

  /// Component sizes and per-component diameters.
  ComponentReport components() const;

 private:
  void require_vertex(const Permutation& x) const;
  std::uint32_t rank_of(const std::uint8_t* images) const;
  void unrank(std::uint64_t rank, std::uint8_t* images) const;

  std::size_t n_;
  std::size_t cutoff_;
  std::size_t group_order_;
  std::vector<std::uint64_t> factorial_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
};

/// Convenience wrapper: neighbors of x in the proper power graph of A_n.
std::vector<Permutation> neighbors(const Permutation& x, std::size_t n,
                                   std::size_t cutoff = AlternatingPowerGraph::kDefaultCutoff);

/// Convenience wrapper building a one-off index.
DistanceResult bfs_distance(const Permutation& x, const Permutation& y, std::size_t n,
                            std::size_t cutoff = AlternatingPowerGraph::kDefaultCutoff);

ComponentReport exact_components_and_diameter(std::size_t n,
                                              std::size_t cutoff = AlternatingPowerGraph::kDefaultCutoff);

}  // namespace ppg
