#include <algorithm>
#include <numeric>
#include <set>

#include "ppg/error.hpp"
#include "ppg/pathsynth.hpp"
#include "ppg/primes.hpp"

namespace ppg {

namespace {

constexpr std::pair<LemmaTag, const char*> kTagNames[] = {
    {LemmaTag::Bridge21, "Bridge21"},           {LemmaTag::ThreeCycles22, "ThreeCycles22"},
    {LemmaTag::PrimeSmall23, "PrimeSmall23"},   {LemmaTag::PrimeGeneral24, "PrimeGeneral24"},
    {LemmaTag::AnyPair31, "AnyPair31"},         {LemmaTag::Diam8_35, "Diam8_35"},
};

// e mod t for e given in factored form.
std::uint64_t factored_mod(const FactoredOrder& e, std::uint64_t t) {
  std::uint64_t r = 1 % t;
  for (auto [p, k] : e.prime_powers) {
    for (unsigned i = 0; i < k; ++i) r = r * (p % t) % t;
  }
  return r;
}

}  // namespace

std::string to_string(LemmaTag tag) {
  for (auto [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<LemmaTag> lemma_tag_from_string(std::string_view s) {
  for (auto [t, name] : kTagNames) {
    if (s == name) return t;
  }
  return std::nullopt;
}

PathWitness certify_path(std::vector<Permutation> vertices, LemmaTag lemma, std::size_t bound,
                         std::string region) {
  if (vertices.empty()) throw BoundViolation("empty path");
  PathWitness w;
  w.n = vertices.front().degree();
  w.lemma = lemma;
  w.declared_bound = bound;
  w.region = std::move(region);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Permutation& v = vertices[i];
    if (v.degree() != w.n) throw BoundViolation("vertex degree mismatch");
    if (v.is_identity()) throw BoundViolation("path visits the identity");
    if (!v.is_even()) throw BoundViolation("path leaves the alternating group at " + format_cycles(v));
    if (i == 0) continue;
    auto cert = is_adjacent(vertices[i - 1], v);
    if (!cert) {
      throw BoundViolation("no power relation between " + format_cycles(vertices[i - 1]) + " and " +
                           format_cycles(v) + " [" + w.region + "]");
    }
    w.certificates.push_back(std::move(*cert));
  }
  w.vertices = std::move(vertices);
  if (w.length() > bound) {
    throw BoundViolation("path of length " + std::to_string(w.length()) + " exceeds bound " +
                         std::to_string(bound) + " [" + w.region + "]");
  }
  return w;
}

bool validate(const PathWitness& path, std::string* why) {
  auto fail = [why](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (path.vertices.empty()) return fail("no vertices");
  if (path.certificates.size() + 1 != path.vertices.size()) return fail("certificate count mismatch");
  if (path.length() > path.declared_bound) return fail("length exceeds declared bound");
  for (const Permutation& v : path.vertices) {
    if (v.degree() != path.n) return fail("vertex degree mismatch");
    if (v.is_identity()) return fail("identity vertex");
    if (!v.is_even()) return fail("odd vertex");
  }
  for (std::size_t i = 0; i < path.certificates.size(); ++i) {
    if (!certificate_holds(path.vertices[i], path.vertices[i + 1], path.certificates[i])) {
      return fail("certificate " + std::to_string(i) + " does not hold");
    }
  }
  return true;
}

PathWitness bridge(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DomainError("degree mismatch");
  if (x.is_identity() || y.is_identity()) throw DomainError("bridge endpoints must be nonidentity");
  if (!commute(x, y)) throw DomainError("bridge endpoints do not commute");
  const FactoredOrder ox = order_factored(x), oy = order_factored(y);
  for (auto [p, e] : ox.prime_powers) {
    if (oy.prime_powers.count(p)) throw DomainError("bridge endpoint orders are not coprime");
  }
  const BigInt mx = ox.value(), my = oy.value();
  const Permutation xy = compose(x, y);
  // (xy)^a = x for a = 1 mod o(x), 0 mod o(y); symmetrically for y.
  const BigInt to_x = crt_merge({1 % mx, mx}, {0, my})->residue;
  const BigInt to_y = crt_merge({0, mx}, {1 % my, my})->residue;

  PathWitness w;
  w.n = x.degree();
  w.vertices = {x, xy, y};
  w.certificates = {AdjacencyCertificate{Direction::FirstIsPowerOfSecond, to_x},
                    AdjacencyCertificate{Direction::SecondIsPowerOfFirst, to_y}};
  w.lemma = LemmaTag::Bridge21;
  w.declared_bound = 2;
  w.region = "2.1";
  return w;
}

std::vector<Point> free_points(std::span<const Permutation> exclusions, std::size_t count,
                               std::size_t n) {
  std::vector<char> used(n + 1, 0);
  for (const Permutation& e : exclusions) {
    if (e.degree() != n) throw DomainError("degree mismatch");
    for (Point i = 1; i <= n; ++i) used[i] |= e.moves(i);
  }
  std::vector<Point> out;
  for (Point i = 1; i <= n && out.size() < count; ++i) {
    if (!used[i]) out.push_back(i);
  }
  if (out.size() < count) {
    throw ConstructionError("only " + std::to_string(out.size()) + " free points, " +
                            std::to_string(count) + " needed");
  }
  return out;
}

Permutation interleave(std::size_t n, const std::vector<Cycle>& cycles) {
  if (cycles.size() < 2) throw DomainError("interleave needs at least two cycles");
  const std::size_t t = cycles.front().size();
  for (const Cycle& c : cycles) {
    if (c.size() != t || t < 2) throw DomainError("interleave needs cycles of one common length >= 2");
  }
  Cycle merged;
  merged.reserve(t * cycles.size());
  for (std::size_t j = 0; j < t; ++j) {
    for (const Cycle& c : cycles) merged.push_back(c[j]);
  }
  try {
    return Permutation::from_cycles(n, {merged});
  } catch (const DomainError&) {
    throw DomainError("interleave needs pairwise disjoint cycles within {1..n}");
  }
}

StitchResult stitch_step(const Permutation& beta, const std::vector<std::vector<std::size_t>>& groups,
                         std::optional<std::pair<Point, Point>> swap) {
  const CycleDecomposition d = decompose(beta);
  if (d.cycles.empty()) throw DomainError("stitch_step: identity input");
  const std::size_t t = d.cycles.front().size();
  for (const Cycle& c : d.cycles) {
    if (c.size() != t) throw DomainError("stitch_step: mixed cycle lengths");
  }
  if (groups.empty()) throw DomainError("stitch_step: no head cycles");
  const std::size_t h = groups.front().size();
  if (h < 2) throw DomainError("stitch_step: groups need at least two cycles");
  if (std::gcd(h, t) != 1) throw DomainError("stitch_step: gcd(h, t) != 1");

  std::vector<char> in_head(d.cycles.size(), 0);
  std::vector<Cycle> merged_cycles;
  for (const auto& g : groups) {
    if (g.size() != h) throw DomainError("stitch_step: groups of unequal size");
    std::vector<Cycle> members;
    for (std::size_t idx : g) {
      if (idx >= d.cycles.size() || in_head[idx]) throw DomainError("stitch_step: bad head index");
      in_head[idx] = 1;
      members.push_back(d.cycles[idx]);
    }
    const CycleDecomposition sd = decompose(interleave(beta.degree(), members));
    merged_cycles.push_back(sd.cycles.front());
  }
  const auto l = static_cast<std::int64_t>(inverse_mod(h % t, t));
  std::vector<Cycle> root_cycles = merged_cycles;
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    if (in_head[i]) continue;
    const CycleDecomposition pd = decompose(power(Permutation::from_cycles(beta.degree(), {d.cycles[i]}), l));
    root_cycles.insert(root_cycles.end(), pd.cycles.begin(), pd.cycles.end());
  }
  if (swap) {
    if (h % 2 != 0 || t % 2 == 0) throw DomainError("stitch_step: swap needs even h and odd t");
    auto [u, v] = *swap;
    if (u == v || u < 1 || v < 1 || u > beta.degree() || v > beta.degree() || beta.moves(u) ||
        beta.moves(v)) {
      throw DomainError("stitch_step: swap points must be distinct fixed points");
    }
    root_cycles.push_back({u, v});
  }
  StitchResult r{Permutation::from_cycles(beta.degree(), root_cycles), Permutation(beta.degree()), h, t};
  r.endpoint = power(r.root, static_cast<std::int64_t>(t));
  if (power(r.root, static_cast<std::int64_t>(h)) != beta) {
    throw std::logic_error("stitch_step: root does not power to beta");
  }
  return r;
}

Reduction prime_order_reduction(const Permutation& x, std::uint64_t prime) {
  if (x.is_identity()) throw DomainError("prime_order_reduction: identity input");
  const CycleDecomposition d = decompose(x);
  const FactoredOrder o = order_factored(d);
  const FactoredOrder e = o.divided_by(prime);
  std::vector<Point> img(x.degree());
  std::iota(img.begin(), img.end(), Point{1});
  for (const Cycle& c : d.cycles) {
    const std::uint64_t r = factored_mod(e, c.size());
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + r) % c.size()];
  }
  Reduction out{Permutation::from_images(std::move(img)), prime, std::nullopt};
  if (out.reduced != x) out.certificate = is_adjacent(x, out.reduced);
  return out;
}

Reduction prime_order_reduction(const Permutation& x) {
  if (x.is_identity()) throw DomainError("prime_order_reduction: identity input");
  return prime_order_reduction(x, order_factored(x).least_prime());
}

}  // namespace ppg
