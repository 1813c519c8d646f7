#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ppg/error.hpp"
#include "ppg/powergraph.hpp"
#include "ppg/random.hpp"

using namespace ppg;

namespace {

Permutation P(const char* s, std::size_t n) { return parse_cycles(s, n); }

const AlternatingPowerGraph& graph(std::size_t n) {
  static std::map<std::size_t, std::unique_ptr<AlternatingPowerGraph>> cache;
  auto& g = cache[n];
  if (!g) g = std::make_unique<AlternatingPowerGraph>(n);
  return *g;
}

// Independent graph on A_n: vertices are the even permutations found by
// enumeration, edges come from naive powering.
struct NaiveGraph {
  std::vector<oracle::Perm> verts;
  std::map<oracle::Perm, int> index;
  std::vector<std::set<int>> adj;

  explicit NaiveGraph(int n) {
    const oracle::Perm id = oracle::identity(n);
    for (const auto& p : oracle::all_perms(n)) {
      if (oracle::even(p) && p != id) {
        index[p] = static_cast<int>(verts.size());
        verts.push_back(p);
      }
    }
    adj.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      oracle::Perm r = oracle::mul(verts[i], verts[i]);
      while (r != id) {
        if (r != verts[i]) {
          const int j = index.at(r);
          adj[i].insert(j);
          adj[j].insert(static_cast<int>(i));
        }
        r = oracle::mul(verts[i], r);
      }
    }
  }

  std::vector<int> bfs(int s) const {
    std::vector<int> d(verts.size(), -1);
    std::deque<int> q{s};
    d[s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int v : adj[u]) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          q.push_back(v);
        }
      }
    }
    return d;
  }
};

}  // namespace

TEST_CASE("cyclic_membership examples") {
  CHECK(cyclic_membership(P("(1 3 5 2 4)", 5), P("(1 2 3 4 5)", 5)) == BigInt(2));
  CHECK_FALSE(cyclic_membership(P("(4 5 6)", 6), P("(1 2 3)", 6)));
  CHECK(cyclic_membership(P("(1 2 3)", 5), P("(1 2 3)(4 5)", 5)) == BigInt(4));
  CHECK(cyclic_membership(Permutation(5), P("(1 2 3)(4 5)", 5)) == BigInt(0));
  CHECK(cyclic_membership(P("(3 5)(4 6)", 6), P("(1 2)(3 4 5 6)", 6)) == BigInt(2));
  // per-cycle rotations exist but the congruences clash
  CHECK_FALSE(cyclic_membership(P("(1 2)", 6), P("(1 2)(3 4 5 6)", 6)));
  CHECK_FALSE(cyclic_membership(P("(3 4 5 6)", 6), P("(1 2)(3 4 5 6)", 6)));
  CHECK_THROWS_AS(cyclic_membership(P("(1 2 3)", 4), P("(1 2 3)", 5)), DomainError);
}

TEST_CASE("is_adjacent examples") {
  auto c = is_adjacent(P("(1 2 3 4 5)", 5), P("(1 3 5 2 4)", 5));
  REQUIRE(c);
  CHECK(c->direction == Direction::SecondIsPowerOfFirst);
  CHECK(c->exponent == 2);
  CHECK_FALSE(is_adjacent(P("(1 2 3)", 6), P("(4 5 6)", 6)));
  CHECK_FALSE(is_adjacent(P("(1 2 3)", 6), P("(1 2 3)", 6)));
  CHECK_THROWS_AS(is_adjacent(Permutation(6), P("(1 2 3)", 6)), DomainError);
  auto r = is_adjacent(P("(1 2 3)", 5), P("(1 2 3)(4 5)", 5));
  REQUIRE(r);
  CHECK(r->direction == Direction::FirstIsPowerOfSecond);
  CHECK(r->exponent == 4);
  CHECK(certificate_holds(P("(1 2 3)", 5), P("(1 2 3)(4 5)", 5), *r));
  CHECK_FALSE(certificate_holds(P("(1 2 3)", 5), P("(1 2 3)(4 5)", 5),
                                AdjacencyCertificate{Direction::FirstIsPowerOfSecond, 1}));
}

TEST_CASE("is_adjacent matches brute force on A_5") {
  std::vector<oracle::Perm> g;
  for (const auto& p : oracle::all_perms(5)) {
    if (oracle::even(p) && p != oracle::identity(5)) g.push_back(p);
  }
  for (const auto& a : g) {
    for (const auto& b : g) {
      const auto cert = is_adjacent(oracle::to(a), oracle::to(b));
      REQUIRE(cert.has_value() == oracle::adjacent(a, b));
      REQUIRE(is_adjacent(oracle::to(b), oracle::to(a)).has_value() == cert.has_value());
      if (cert) REQUIRE(certificate_holds(oracle::to(a), oracle::to(b), *cert));
    }
  }
}

TEST_CASE("neighbors") {
  CHECK(neighbors(P("(1 2 3)", 4), 4) == std::vector<Permutation>{P("(1 3 2)", 4)});
  CHECK_THROWS_AS(neighbors(Permutation(5), 5), DomainError);
  CHECK_THROWS_AS(neighbors(P("(1 2)", 5), 5), DomainError);
  CHECK_THROWS_AS(neighbors(P("(1 2 3)", 11), 11), CutoffError);
  // brute force on A_5 and A_6
  for (int n : {5, 6}) {
    const NaiveGraph ng(n);
    const AlternatingPowerGraph& g = graph(n);
    CHECK(g.vertex_count() == ng.verts.size());
    std::size_t edges = 0;
    for (std::size_t i = 0; i < ng.verts.size(); ++i) {
      std::set<Permutation> expect;
      for (int j : ng.adj[i]) expect.insert(oracle::to(ng.verts[j]));
      const auto got = g.neighbors(oracle::to(ng.verts[i]));
      REQUIRE(std::set<Permutation>(got.begin(), got.end()) == expect);
      REQUIRE(got.size() == expect.size());
      edges += expect.size();
    }
    CHECK(g.edge_count() * 2 == edges);
  }
  // (1 2 3 4 5) in A_5: its three other powers and nothing else
  const auto nb = neighbors(P("(1 2 3 4 5)", 5), 5);
  CHECK(nb.size() == 3);
}

TEST_CASE("bfs distance examples") {
  for (std::size_t n : {3, 5, 9}) {
    CHECK(bfs_distance(P("(1 2 3)", n), P("(1 3 2)", n), n).distance == std::size_t{1});
  }
  // different maximal cyclic subgroups of A_5
  CHECK_FALSE(graph(5).distance(P("(1 2 3)", 5), P("(1 2 4)", 5)).distance);
  {
    const NaiveGraph ng(5);
    const int a = ng.index.at(oracle::from(P("(1 2 3)", 5)));
    const int b = ng.index.at(oracle::from(P("(1 2 4)", 5)));
    CHECK(ng.bfs(a)[b] == -1);
  }
  const DistanceResult r = graph(10).distance(P("(1 2 3)", 10), P("(4 5 6)", 10), true);
  CHECK(r.distance == std::size_t{4});
  REQUIRE(r.path.size() == 5);
  for (std::size_t i = 0; i + 1 < r.path.size(); ++i) CHECK(is_adjacent(r.path[i], r.path[i + 1]));
  CHECK(graph(7).distance(P("(1 2 3)", 7), P("(1 2 3)", 7)).distance == std::size_t{0});
  CHECK_THROWS_AS(graph(5).distance(Permutation(5), P("(1 2 3)", 5)), DomainError);
  CHECK_THROWS_AS(AlternatingPowerGraph(11), CutoffError);
}

TEST_CASE("bfs distances agree with an independent BFS") {
  for (int n : {5, 6, 7}) {
    const NaiveGraph ng(n);
    const AlternatingPowerGraph& g = graph(n);
    std::mt19937_64 rng(n);
    for (int t = 0; t < 12; ++t) {
      const int s = static_cast<int>(uniform_below(rng, ng.verts.size()));
      const std::vector<int> expect = ng.bfs(s);
      const std::vector<std::int16_t> got = g.distances_from(oracle::to(ng.verts[s]));
      for (std::size_t v = 0; v < ng.verts.size(); ++v) {
        REQUIRE(got[g.index_of(oracle::to(ng.verts[v]))] == expect[v]);
      }
    }
  }
}

TEST_CASE("component reports") {
  const ComponentReport r3 = exact_components_and_diameter(3);
  REQUIRE(r3.components.size() == 1);
  CHECK(r3.components[0].size == 2);
  CHECK(r3.components[0].diameter == 1);

  // A_4: maximal cyclic subgroups are 4 of order 3 and 3 of order 2
  const ComponentReport r4 = exact_components_and_diameter(4);
  CHECK(r4.components.size() == 7);
  std::size_t total = 0, pairs = 0;
  for (const auto& c : r4.components) {
    total += c.size;
    pairs += c.size == 2;
    CHECK(c.diameter == (c.size == 2 ? 1u : 0u));
  }
  CHECK(total == 11);
  CHECK(pairs == 4);

  const ComponentReport r5 = exact_components_and_diameter(5);
  for (const auto& c : r5.components) CHECK(c.diameter <= 1);
  // independent count of components in A_5
  const NaiveGraph ng(5);
  std::vector<int> seen(ng.verts.size(), 0);
  std::size_t comps = 0;
  for (std::size_t i = 0; i < ng.verts.size(); ++i) {
    if (seen[i]) continue;
    ++comps;
    for (std::size_t j = 0; j < ng.verts.size(); ++j) {
      if (ng.bfs(static_cast<int>(i))[j] >= 0) seen[j] = 1;
    }
  }
  CHECK(r5.components.size() == comps);
  // ordered by least member
  for (std::size_t i = 1; i < r5.components.size(); ++i) {
    CHECK(r5.components[i - 1].least < r5.components[i].least);
  }
}

TEST_CASE("component diameters agree with all-pairs BFS on A_6 and A_7") {
  for (int n : {6, 7}) {
    const NaiveGraph ng(n);
    std::vector<int> comp(ng.verts.size(), -1), ecc(ng.verts.size(), 0);
    for (std::size_t i = 0; i < ng.verts.size(); ++i) {
      const auto d = ng.bfs(static_cast<int>(i));
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] >= 0) {
          ecc[i] = std::max(ecc[i], d[j]);
          if (comp[i] < 0 || static_cast<int>(j) < comp[i]) comp[i] = static_cast<int>(j);
        }
      }
    }
    std::map<int, std::pair<std::size_t, int>> stats;
    for (std::size_t i = 0; i < ng.verts.size(); ++i) {
      auto& s = stats[comp[i]];
      ++s.first;
      s.second = std::max(s.second, ecc[i]);
    }
    std::multiset<std::pair<std::size_t, int>> expect, got;
    for (auto& [c, s] : stats) expect.insert(s);
    for (const auto& c : graph(n).components().components) got.insert({c.size, static_cast<int>(c.diameter)});
    CHECK(expect == got);
  }
}

TEST_CASE("triangle inequality and identity of indiscernibles on A_7") {
  const AlternatingPowerGraph& g = graph(7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const Permutation x = random_even_permutation(7, rng), y = random_even_permutation(7, rng),
                      z = random_even_permutation(7, rng);
    const auto dx = g.distances_from(x), dy = g.distances_from(y);
    const auto xy = dx[g.index_of(y)], yz = dy[g.index_of(z)], xz = dx[g.index_of(z)];
    CHECK((xy == 0) == (x == y));
    if (xy >= 0 && yz >= 0) CHECK(xz <= xy + yz);
  }
}
