#include "ppg/powergraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "ppg/error.hpp"

namespace ppg {

std::string to_string(Direction d) {
  return d == Direction::SecondIsPowerOfFirst ? "SecondIsPowerOfFirst" : "FirstIsPowerOfSecond";
}

std::optional<BigInt> cyclic_membership(const Permutation& z, const Permutation& x) {
  if (z.degree() != x.degree()) throw DomainError("degree mismatch");
  const CycleDecomposition d = decompose(x);
  for (Point f : d.fixed_points) {
    if (z(f) != f) return std::nullopt;
  }
  // position of every moved point inside its cycle
  std::vector<std::uint32_t> pos(x.degree() + 1, 0);
  std::vector<std::uint32_t> owner(x.degree() + 1, 0);
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    for (std::size_t j = 0; j < d.cycles[ci].size(); ++j) {
      pos[d.cycles[ci][j]] = static_cast<std::uint32_t>(j);
      owner[d.cycles[ci][j]] = static_cast<std::uint32_t>(ci);
    }
  }
  std::map<std::size_t, std::size_t> shift_by_length;
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    const Cycle& c = d.cycles[ci];
    const std::size_t t = c.size();
    const Point head_image = z(c[0]);
    if (!x.moves(head_image) || owner[head_image] != ci) return std::nullopt;
    const std::size_t shift = pos[head_image];
    for (std::size_t j = 1; j < t; ++j) {
      if (z(c[j]) != c[(j + shift) % t]) return std::nullopt;
    }
    auto [it, inserted] = shift_by_length.emplace(t, shift);
    if (!inserted && it->second != shift) return std::nullopt;
  }
  Congruence acc{0, 1};
  for (auto [t, shift] : shift_by_length) {
    auto merged = crt_merge(acc, Congruence{BigInt(shift), BigInt(t)});
    if (!merged) return std::nullopt;
    acc = *merged;
  }
  return acc.residue;
}

std::optional<AdjacencyCertificate> is_adjacent(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DomainError("degree mismatch");
  if (x.is_identity() || y.is_identity()) {
    throw DomainError("the identity is not a vertex of the proper power graph");
  }
  if (x == y) return std::nullopt;
  if (auto e = cyclic_membership(y, x)) {
    return AdjacencyCertificate{Direction::SecondIsPowerOfFirst, *e};
  }
  if (auto e = cyclic_membership(x, y)) {
    return AdjacencyCertificate{Direction::FirstIsPowerOfSecond, *e};
  }
  return std::nullopt;
}

bool certificate_holds(const Permutation& first, const Permutation& second,
                       const AdjacencyCertificate& cert) {
  if (first.degree() != second.degree() || first == second) return false;
  if (first.is_identity() || second.is_identity() || cert.exponent < 0) return false;
  if (cert.direction == Direction::SecondIsPowerOfFirst) {
    return power(first, cert.exponent) == second;
  }
  return power(second, cert.exponent) == first;
}

// ---------------------------------------------------------------------------
// AlternatingPowerGraph

namespace {

using Small = std::array<std::uint8_t, AlternatingPowerGraph::kMaxDegree>;

bool small_even(const Small& a, std::size_t n) {
  std::array<bool, AlternatingPowerGraph::kMaxDegree> seen{};
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true;
  }
  return (n - cycles) % 2 == 0;
}

std::uint64_t small_order(const Small& a, std::size_t n) {
  std::array<bool, AlternatingPowerGraph::kMaxDegree> seen{};
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::vector<std::uint8_t> small_cycle_type(const Small& a, std::size_t n) {
  std::array<bool, AlternatingPowerGraph::kMaxDegree> seen{};
  std::vector<std::uint8_t> type;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint8_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

Small to_small(const Permutation& x) {
  Small a{};
  for (std::size_t i = 0; i < x.degree(); ++i) a[i] = static_cast<std::uint8_t>(x.images()[i] - 1);
  return a;
}

Permutation from_small(const Small& a, std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = a[i] + 1u;
  return Permutation::from_images(std::move(img));
}

}  // namespace

std::uint64_t AlternatingPowerGraph::estimated_bytes(std::size_t n) {
  std::uint64_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  order = std::max<std::uint64_t>(order / 2, 1);
  // offsets + BFS scratch + adjacency at ~2 x 10 directed entries per vertex
  return order * (8 + 8 + 4 * 20);
}

AlternatingPowerGraph::AlternatingPowerGraph(std::size_t n, std::size_t cutoff)
    : n_(n), cutoff_(cutoff) {
  if (n == 0) throw DomainError("degree must be positive");
  if (n > cutoff || n > kMaxDegree) {
    throw CutoffError("exhaustive analysis of A_" + std::to_string(n) + " exceeds cutoff " +
                      std::to_string(std::min(cutoff, kMaxDegree)));
  }
  factorial_.assign(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorial_[i] = factorial_[i - 1] * i;
  group_order_ = n >= 2 ? factorial_[n] / 2 : 1;

  // Two sweeps over the group: count degrees, then fill the CSR arrays.
  std::vector<std::uint32_t> degree(group_order_, 0);
  auto sweep = [&](auto&& emit) {
    Small g{};
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<std::uint8_t>(i);
    std::uint64_t rank = 0;
    do {
      if (rank != 0 && small_even(g, n)) {
        const auto gi = static_cast<std::uint32_t>(rank / 2);
        const std::uint64_t o = small_order(g, n);
        Small h = g;
        for (std::uint64_t k = 2; k < o; ++k) {
          Small next{};
          for (std::size_t i = 0; i < n; ++i) next[i] = g[h[i]];
          h = next;
          const std::uint32_t hi = rank_of(h.data());
          if (std::gcd(k, o) == 1 && hi < gi) continue;  // emitted from h's side
          emit(gi, hi);
        }
      }
      ++rank;
    } while (std::next_permutation(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n)));
  };

  sweep([&](std::uint32_t a, std::uint32_t b) {
    ++degree[a];
    ++degree[b];
  });
  offsets_.assign(group_order_ + 1, 0);
  for (std::size_t i = 0; i < group_order_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  sweep([&](std::uint32_t a, std::uint32_t b) {
    adjacency_[cursor[a]++] = b;
    adjacency_[cursor[b]++] = a;
  });
  for (std::size_t i = 0; i < group_order_; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
}

std::uint32_t AlternatingPowerGraph::rank_of(const std::uint8_t* a) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n_; ++j) smaller += a[j] < a[i];
    r += smaller * factorial_[n_ - 1 - i];
  }
  return static_cast<std::uint32_t>(r / 2);
}

void AlternatingPowerGraph::unrank(std::uint64_t rank, std::uint8_t* out) const {
  std::vector<std::uint8_t> pool(n_);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint64_t f = factorial_[n_ - 1 - i];
    const std::uint64_t q = rank / f;
    rank %= f;
    out[i] = pool[q];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
}

void AlternatingPowerGraph::require_vertex(const Permutation& x) const {
  if (x.degree() != n_) throw DomainError("degree mismatch");
  if (!x.is_even()) throw DomainError("not an element of the alternating group");
  if (x.is_identity()) throw DomainError("the identity is not a vertex of the proper power graph");
}

std::uint32_t AlternatingPowerGraph::index_of(const Permutation& x) const {
  if (x.degree() != n_) throw DomainError("degree mismatch");
  if (!x.is_even()) throw DomainError("not an element of the alternating group");
  const Small a = to_small(x);
  return rank_of(a.data());
}

Permutation AlternatingPowerGraph::element(std::uint32_t index) const {
  Small a{};
  unrank(2ull * index, a.data());
  if (!small_even(a, n_)) unrank(2ull * index + 1, a.data());
  return from_small(a, n_);
}

std::vector<Permutation> AlternatingPowerGraph::neighbors(const Permutation& x) const {
  require_vertex(x);
  const std::uint32_t i = index_of(x);
  std::vector<Permutation> out;
  for (std::uint64_t e = offsets_[i]; e < offsets_[i + 1]; ++e) out.push_back(element(adjacency_[e]));
  return out;
}

std::vector<std::int16_t> AlternatingPowerGraph::distances_from(const Permutation& x,
                                                                int max_depth) const {
  require_vertex(x);
  std::vector<std::int16_t> dist(group_order_, -1);
  std::vector<std::uint32_t> frontier{index_of(x)}, next;
  dist[frontier[0]] = 0;
  for (std::int16_t depth = 1; !frontier.empty() && (max_depth < 0 || depth <= max_depth); ++depth) {
    next.clear();
    for (std::uint32_t v : frontier) {
      for (std::uint64_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
        const std::uint32_t w = adjacency_[e];
        if (dist[w] < 0) {
          dist[w] = depth;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

DistanceResult AlternatingPowerGraph::distance(const Permutation& x, const Permutation& y,
                                               bool with_path) const {
  require_vertex(x);
  require_vertex(y);
  const std::uint32_t src = index_of(x), dst = index_of(y);
  DistanceResult result;
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> parent(group_order_, kNone);
  std::vector<std::uint32_t> frontier{src}, next;
  parent[src] = src;
  std::size_t depth = 0;
  while (!frontier.empty() && parent[dst] == kNone) {
    ++depth;
    next.clear();
    for (std::uint32_t v : frontier) {
      for (std::uint64_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
        const std::uint32_t w = adjacency_[e];
        if (parent[w] == kNone) {
          parent[w] = v;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  if (parent[dst] == kNone) return result;
  result.distance = src == dst ? 0 : depth;
  if (with_path) {
    std::vector<std::uint32_t> chain{dst};
    while (chain.back() != src) chain.push_back(parent[chain.back()]);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) result.path.push_back(element(*it));
  }
  return result;
}

ComponentReport AlternatingPowerGraph::components() const {
  ComponentReport report;
  report.n = n_;
  report.cutoff = cutoff_;
  if (group_order_ <= 1) return report;

  // Component labels by repeated BFS; index 0 is the identity.
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> label(group_order_, kNone);
  std::vector<std::uint32_t> first_member, sizes;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 1; s < group_order_; ++s) {
    if (label[s] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(first_member.size());
    first_member.push_back(s);
    queue.assign(1, s);
    label[s] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::uint32_t v = queue[q];
      for (std::uint64_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
        const std::uint32_t w = adjacency_[e];
        if (label[w] == kNone) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
    sizes.push_back(static_cast<std::uint32_t>(queue.size()));
  }

  // Conjugation by S_n is a graph automorphism and preserves cycle type, so
  // the eccentricity of a vertex depends only on its cycle type: one BFS per
  // type suffices.
  std::map<std::vector<std::uint8_t>, std::size_t> type_ids;
  std::vector<std::uint8_t> type_of(group_order_, 0);
  std::vector<std::uint32_t> type_rep;
  for (std::uint32_t v = 1; v < group_order_; ++v) {
    Small a{};
    unrank(2ull * v, a.data());
    if (!small_even(a, n_)) unrank(2ull * v + 1, a.data());
    auto [it, inserted] = type_ids.emplace(small_cycle_type(a, n_), type_rep.size());
    if (inserted) type_rep.push_back(v);
    type_of[v] = static_cast<std::uint8_t>(it->second);
  }
  std::vector<std::size_t> ecc(type_rep.size(), 0);
  for (std::size_t t = 0; t < type_rep.size(); ++t) {
    const auto dist = distances_from(element(type_rep[t]));
    std::int16_t best = 0;
    for (std::int16_t d : dist) best = std::max(best, d);
    ecc[t] = static_cast<std::size_t>(best);
  }
  std::vector<std::size_t> diam(first_member.size(), 0);
  for (std::uint32_t v = 1; v < group_order_; ++v) {
    diam[label[v]] = std::max(diam[label[v]], ecc[type_of[v]]);
  }
  for (std::size_t c = 0; c < first_member.size(); ++c) {
    report.components.push_back(ComponentSummary{sizes[c], diam[c], element(first_member[c])});
  }
  return report;
}

std::vector<Permutation> neighbors(const Permutation& x, std::size_t n, std::size_t cutoff) {
  return AlternatingPowerGraph(n, cutoff).neighbors(x);
}

DistanceResult bfs_distance(const Permutation& x, const Permutation& y, std::size_t n,
                            std::size_t cutoff) {
  return AlternatingPowerGraph(n, cutoff).distance(x, y, true);
}

ComponentReport exact_components_and_diameter(std::size_t n, std::size_t cutoff) {
  return AlternatingPowerGraph(n, cutoff).components();
}

}  // namespace ppg
