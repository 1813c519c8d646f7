#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "ppg/error.hpp"
#include "ppg/pathsynth.hpp"

using namespace ppg;

namespace {
Permutation P(const char* s, std::size_t n) { return parse_cycles(s, n); }

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> v;
  for (Point i = from; i <= to; ++i) v.push_back(i);
  return v;
}

void check_endpoints(const PathWitness& w, const Permutation& x, const Permutation& y, bool oracle_edges = true) {
  REQUIRE(!w.vertices.empty());
  CHECK(w.vertices.front() == x);
  CHECK(w.vertices.back() == y);
  std::string why;
  CHECK_MESSAGE(validate(w, &why), why);
  // edges re-checked with the independent oracle
  if (oracle_edges)
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    CHECK(oracle::adjacent(oracle::from(w.vertices[i]), oracle::from(w.vertices[i + 1])));
}
}  // namespace

TEST_CASE("path_3cycles") {
  const PathWitness a = path_3cycles(P("(1 2 3)", 10), P("(4 5 6)", 10), 10);
  check_endpoints(a, P("(1 2 3)", 10), P("(4 5 6)", 10));
  CHECK(a.length() == 4);
  CHECK(a.vertices[2] == P("(7 8)(9 10)", 10));
  CHECK(a.lemma == LemmaTag::ThreeCycles22);

  const PathWitness b = path_3cycles(P("(1 2 3)", 10), P("(1 3 2)", 10), 10);
  CHECK(b.length() == 1);
  check_endpoints(b, P("(1 2 3)", 10), P("(1 3 2)", 10));

  const PathWitness c = path_3cycles(P("(1 2 3)", 10), P("(2 3 4)", 10), 10);
  CHECK(c.length() == 4);
  CHECK(c.vertices[2] == P("(5 6)(7 8)", 10));
  check_endpoints(c, P("(1 2 3)", 10), P("(2 3 4)", 10));

  CHECK(path_3cycles(P("(1 2 3)", 10), P("(1 2 3)", 10), 10).length() == 0);
  CHECK_THROWS(path_3cycles(P("(1 2 3)", 9), P("(4 5 6)", 9), 9));
  CHECK_THROWS(path_3cycles(P("(1 2 3 4 5)", 10), P("(4 5 6)", 10), 10));
}

TEST_CASE("path_prime_small") {
  const Permutation a = P("(1 2 3)", 52), b = P("(4 5 6)(7 8 9)", 52);
  const PathWitness w = path_prime_small(a, b, 52);
  check_endpoints(w, a, b);
  CHECK(w.length() <= 4);
  CHECK(w.lemma == LemmaTag::PrimeSmall23);

  CHECK(path_prime_small(a, a, 52).length() == 0);

  const Permutation x = gen::typed(52, 3, 17, range(1, 51)), y = gen::typed(52, 3, 17, range(2, 52));
  const PathWitness t = path_prime_small(x, y, 52);
  check_endpoints(t, x, y);
  CHECK(t.length() <= 6);
  CHECK(t.region == "small 3/3 tight/tight");

  CHECK_THROWS_AS(path_prime_small(P("(1 2 3 4 5)", 52), a, 52), DomainError);
  CHECK_THROWS_AS(path_prime_small(P("(1 2 3)", 53), P("(4 5 6)", 53), 53), HypothesisError);
}

TEST_CASE("path_prime_general") {
  const Permutation a = P("(1 2 3 4 5)", 52), b = P("(10 11 12 13 14 15 16)", 52);
  const PathWitness w = path_prime_general(a, b, 52);
  check_endpoints(w, a, b);
  CHECK(w.length() == 2);

  const Permutation x = gen::typed(52, 47, 1, range(1, 47)), y = gen::typed(52, 47, 1, range(6, 52));
  const PathWitness v = path_prime_general(x, y, 52);
  check_endpoints(v, x, y);
  CHECK(v.length() <= 8);
  CHECK(v.declared_bound == 8);

  // three 17-cycles, each fixing one point, on different supports
  const Permutation c = gen::typed(52, 17, 3, range(1, 51)), d = gen::typed(52, 17, 3, range(2, 52));
  const PathWitness u = path_prime_general(c, d, 52);
  check_endpoints(u, c, d);
  CHECK(u.length() <= 10);
  CHECK(u.declared_bound == 10);
  CHECK(u.region.rfind("general corner", 0) == 0);
  CHECK(u.lemma == LemmaTag::PrimeGeneral24);

  CHECK_THROWS_AS(path_prime_general(P("(1 2 3 4 5 6)", 52), a, 52), DomainError);
  CHECK_THROWS_AS(path_prime_general(P("(1 2 3 4 5)", 40), P("(6 7 8 9 10 11 12)", 40), 40), HypothesisError);
}

TEST_CASE("path_any") {
  const Permutation x = P("(1 2 3)(4 5)(6 7)", 52);
  CHECK(path_any(x, x, 52).length() == 0);

  const Permutation a = P("(1 2 3 4 5 6)(7 8)", 52), b = P("(10 11 12 13 14 15 16 17 18 19)(20 21)", 52);
  CHECK(order_factored(a).value() == 6);
  CHECK(order_factored(b).value() == 10);
  const PathWitness w = path_any(a, b, 52);
  check_endpoints(w, a, b);
  CHECK(w.length() <= 8);

  CHECK_THROWS_AS(path_any(Permutation(52), x, 52), DomainError);
  CHECK_THROWS_AS(path_any(P("(1 2)", 52), x, 52), DomainError);
  CHECK_THROWS_AS(path_any(P("(1 2 3)", 53), P("(4 5 6)", 53), 53), HypothesisError);
  CHECK_THROWS_AS(path_any(x, P("(1 2 3)", 51), 52), DomainError);
}

TEST_CASE("path_any: forced synthesis is marked") {
  const Permutation a = P("(1 2 3)", 53), b = P("(4 5 6)", 53);
  const PathWitness w = path_any(a, b, 53, SynthesisOptions{true});
  CHECK(w.best_effort);
  check_endpoints(w, a, b);
  CHECK_FALSE(path_any(P("(1 2 3)", 52), P("(4 5 6)", 52), 52).best_effort);
}

TEST_CASE("path_any: diam8 regime") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Permutation x = random_even_permutation(2025, rng), y = random_even_permutation(2025, rng);
    const PathWitness w = path_any(x, y, 2025);
    check_endpoints(w, x, y, false);
    CHECK(w.declared_bound == 8);
    CHECK(w.length() <= 8);
  }
}

TEST_CASE("shortcut") {
  const Permutation a = P("(1 2 3 4 5)", 5), b = P("(1 3 5 2 4)", 5), c = P("(1 4 2 5 3)", 5);
  const PathWitness two = certify_path({a, b, c}, LemmaTag::AnyPair31, 2, "test");
  const PathWitness s = shortcut(two);
  CHECK(s.length() == 1);
  CHECK(validate(s));

  const PathWitness br = bridge(P("(1 2 3)", 7), P("(4 5)(6 7)", 7));
  const PathWitness same = shortcut(br);
  CHECK(same.vertices == br.vertices);

  // c ~ cx ~ x ~ c'x ~ c' with c' = c^2 collapses to the single edge c ~ c'
  const Permutation c3 = P("(1 2 3)", 10), c3b = P("(1 3 2)", 10), dx = P("(7 8)(9 10)", 10);
  const PathWitness loop =
      certify_path({c3, compose(c3, dx), dx, compose(c3b, dx), c3b}, LemmaTag::ThreeCycles22, 4, "test");
  CHECK(loop.length() == 4);
  const PathWitness cut = shortcut(loop);
  CHECK(cut.length() == 1);
  check_endpoints(cut, c3, c3b);
}

TEST_CASE("prime-type sweep at n = 52") {
  const std::size_t n = 52;
  const auto types = gen::prime_types(n);
  std::mt19937_64 rng(11);
  std::vector<Point> id = range(1, static_cast<Point>(n)), rev(id.rbegin(), id.rend());
  std::size_t cases = 0, corner = 0;
  for (auto [p, m] : types)
    for (auto [q, m2] : types)
      for (int arrangement = 0; arrangement < 2; ++arrangement) {
        const auto o1 = arrangement == 0 ? id : gen::shuffled_points(n, rng);
        const auto o2 = arrangement == 0 ? rev : gen::shuffled_points(n, rng);
        const Permutation x = gen::typed(n, p, m, o1), y = gen::typed(n, q, m2, o2);
        const std::size_t bound = gen::expected_bound(p, m, n - p * m, q, m2, n - q * m2);
        const PathWitness w = path_prime_general(x, y, n);
        ++cases;
        corner += bound == 10;
        if (w.length() > bound || !validate(w) || w.vertices.front() != x || w.vertices.back() != y)
          FAIL_CHECK("p=" << p << " m=" << m << " q=" << q << " m'=" << m2 << " len " << w.length());
      }
  CHECK(cases == 2 * types.size() * types.size());
  CHECK(corner > 0);
}
