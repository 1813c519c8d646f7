#include <algorithm>

#include "ppg/error.hpp"
#include "ppg/primes.hpp"
#include "synth_internal.hpp"

namespace ppg {

using detail::Chain;
using detail::bridge_chain;
using detail::concat;
using detail::cycles_avoiding;
using detail::prime_element;
using detail::reversed;
using detail::stitch_chain;
using detail::support_mask;

namespace {

std::vector<Point> first_fixed(const CycleDecomposition& d, std::size_t count) {
  if (d.fixed_points.size() < count) throw ConstructionError("not enough fixed points");
  return {d.fixed_points.begin(), d.fixed_points.begin() + count};
}

std::vector<std::size_t> first_cycles(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

std::vector<Point> outside(const std::vector<const Permutation*>& xs, std::size_t n, std::size_t count) {
  const detail::Mask m = support_mask(xs, n);
  std::vector<Point> out;
  for (Point i = 1; i <= n && out.size() < count; ++i) {
    if (!m[i]) out.push_back(i);
  }
  return out;
}

std::size_t count_outside(const std::vector<const Permutation*>& xs, std::size_t n) {
  const detail::Mask m = support_mask(xs, n);
  return static_cast<std::size_t>(std::count(m.begin() + 1, m.end(), 0));
}

std::optional<Chain> short_circuit(const Permutation& a, const Permutation& b) {
  if (a == b) return Chain{a};
  if (is_adjacent(a, b)) return Chain{a, b};
  const std::uint64_t oa = detail::prime_order(a), ob = detail::prime_order(b);
  if (oa && ob && oa != ob && commute(a, b)) return bridge_chain(a, b);
  if ((!oa || !ob) && commute(a, b)) {
    const FactoredOrder fa = order_factored(a), fb = order_factored(b);
    for (auto [p, e] : fa.prime_powers) {
      if (fb.prime_powers.count(p)) return std::nullopt;
    }
    return bridge_chain(a, b);
  }
  return std::nullopt;
}

bool hypothesis(std::size_t n) { return n >= kMinSynthesisDegree && connectivity_condition(n); }

void check_inputs(const Permutation& a, const Permutation& b, std::size_t n) {
  if (a.degree() != n || b.degree() != n) throw DomainError("permutation degree differs from n");
  if (a.is_identity() || b.is_identity()) {
    throw DomainError("the identity is not a vertex of the proper power graph");
  }
  if (!a.is_even() || !b.is_even()) throw DomainError("odd permutation is not in A_n");
}

void check_hypothesis(std::size_t n, const SynthesisOptions& opts) {
  if (opts.force || hypothesis(n)) return;
  if (n < kMinSynthesisDegree) {
    throw HypothesisError("synthesis needs n >= 52 (got " + std::to_string(n) + ")");
  }
  throw HypothesisError("connectivity condition fails for n = " + std::to_string(n));
}

Chain three_cycle_chain(const Permutation& c, const Permutation& c2) {
  if (auto s = short_circuit(c, c2)) return *s;
  const Permutation x = prime_element(c.degree(), 2, outside({&c, &c2}, c.degree(), 4));
  return concat(bridge_chain(c, x), bridge_chain(x, c2));
}

}  // namespace

namespace detail {

namespace {

// p = q = 3. Roomy means at least four fixed points.
Chain small_33(const Permutation& a, const Permutation& b, std::string& region) {
  const std::size_t n = a.degree();
  const CycleDecomposition da = decompose(a), db = decompose(b);
  const bool ra = da.fixed_count() >= 4, rb = db.fixed_count() >= 4;
  if (!ra && rb) {
    Chain c = small_33(b, a, region);
    region += " (mirrored)";
    return reversed(std::move(c));
  }
  if (ra && rb && count_outside({&a, &b}, n) >= 4) {
    region = "small 3/3 roomy/roomy, common fixed points";
    const Permutation x = prime_element(n, 2, outside({&a, &b}, n, 4));
    return concat(bridge_chain(a, x), bridge_chain(x, b));
  }
  if (ra) {
    const Permutation x = prime_element(n, 2, first_fixed(da, 4));
    const Chain head = bridge_chain(a, x);
    if (rb) {
      region = "small 3/3 roomy/roomy";
      if (commute(x, b)) return concat(head, bridge_chain(x, b));
      if (count_outside({&b, &x}, n) >= 5) {
        const Permutation y = prime_element(n, 5, outside({&b, &x}, n, 5));
        return concat(concat(head, bridge_chain(x, y)), bridge_chain(y, b));
      }
    } else {
      region = "small 3/3 roomy/tight";
    }
    Stitch s = stitch_chain(b, db, {cycles_avoiding(db, support_mask(x), 5)});
    return concat(concat(head, bridge_chain(x, s.endpoint)), reversed(s.chain));
  }
  region = "small 3/3 tight/tight";
  Stitch t = stitch_chain(a, da, {{0, 1}, {2, 3}});
  Stitch s = stitch_chain(b, db, {cycles_avoiding(db, support_mask(t.endpoint), 5)});
  return concat(concat(t.chain, bridge_chain(t.endpoint, s.endpoint)), reversed(s.chain));
}

// p = q = 2. Roomy means at least three fixed points.
Chain small_22(const Permutation& a, const Permutation& b, std::string& region) {
  const std::size_t n = a.degree();
  const CycleDecomposition da = decompose(a), db = decompose(b);
  const bool ra = da.fixed_count() >= 3, rb = db.fixed_count() >= 3;
  if (!ra && rb) {
    Chain c = small_22(b, a, region);
    region += " (mirrored)";
    return reversed(std::move(c));
  }
  if (ra && rb && count_outside({&a, &b}, n) >= 3) {
    region = "small 2/2 roomy/roomy, common fixed points";
    const Permutation x = prime_element(n, 3, outside({&a, &b}, n, 3));
    return concat(bridge_chain(a, x), bridge_chain(x, b));
  }
  if (ra) {
    const Permutation x = prime_element(n, 3, first_fixed(da, 3));
    const Chain head = bridge_chain(a, x);
    if (rb) {
      region = "small 2/2 roomy/roomy";
      if (commute(x, b)) return concat(head, bridge_chain(x, b));
      if (count_outside({&b, &x}, n) >= 5) {
        const Permutation y = prime_element(n, 5, outside({&b, &x}, n, 5));
        return concat(concat(head, bridge_chain(x, y)), bridge_chain(y, b));
      }
    } else {
      region = "small 2/2 roomy/tight";
    }
    Stitch s = stitch_chain(b, db, {cycles_avoiding(db, support_mask(x), 5)});
    return concat(concat(head, bridge_chain(x, s.endpoint)), reversed(s.chain));
  }
  region = "small 2/2 tight/tight";
  Stitch t = stitch_chain(a, da, {first_cycles(3)});
  Stitch s = stitch_chain(b, db, {cycles_avoiding(db, support_mask(t.endpoint), 5)});
  return concat(concat(t.chain, bridge_chain(t.endpoint, s.endpoint)), reversed(s.chain));
}

// a of order 2, b of order 3.
Chain small_23(const Permutation& a, const Permutation& b, std::string& region) {
  const std::size_t n = a.degree();
  const CycleDecomposition da = decompose(a), db = decompose(b);
  if (da.fixed_count() >= 3) {
    if (count_outside({&a, &b}, n) >= 5) {
      region = "small 2/3 roomy, open";
      const Permutation y = prime_element(n, 5, outside({&a, &b}, n, 5));
      return concat(bridge_chain(a, y), bridge_chain(y, b));
    }
    const Permutation c = prime_element(n, 3, first_fixed(da, 3));
    const Chain head = bridge_chain(a, c);
    if (c == b) return head;
    if (is_adjacent(c, b)) return concat(head, {c, b});
    try {
      const auto pick = cycles_avoiding(db, support_mask(c), 4);
      region = "small 2/3 roomy, many cycles";
      Stitch t = stitch_chain(b, db, {{pick[0], pick[1]}, {pick[2], pick[3]}});
      return concat(concat(head, bridge_chain(c, t.endpoint)), reversed(t.chain));
    } catch (const ConstructionError&) {
      region = "small 2/3 roomy, few cycles";
      const Permutation x = prime_element(n, 2, outside({&b, &c}, n, 4));
      return concat(concat(head, bridge_chain(c, x)), bridge_chain(x, b));
    }
  }
  if (db.fixed_count() >= 4) {
    region = "small 2/3 tight/roomy";
    const Permutation x = prime_element(n, 2, first_fixed(db, 4));
    Stitch s = stitch_chain(a, da, {cycles_avoiding(da, support_mask(x), 3)});
    return concat(concat(s.chain, bridge_chain(s.endpoint, x)), bridge_chain(x, b));
  }
  region = "small 2/3 tight/tight";
  Stitch f = stitch_chain(a, da, {first_cycles(5)});
  const auto pick = cycles_avoiding(db, support_mask(f.endpoint), 4);
  Stitch t = stitch_chain(b, db, {{pick[0], pick[1]}, {pick[2], pick[3]}});
  return concat(concat(f.chain, bridge_chain(f.endpoint, t.endpoint)), reversed(t.chain));
}

std::string general_case_name(std::uint64_t p, std::uint64_t q) {
  if (p == q) return "general p=q>=5";
  if (p >= 5) return "general p<q, both >=5";
  if (p == 3) return "general p=3, q>=5";
  return "general p=2, q>=5";
}

// Cost-2 move from an element with at least three cycles to an element of
// order 3: the endpoint of a stitch on its first three cycles.
Stitch to_order3(const Permutation& x, const CycleDecomposition& d) {
  if (d.cycle_count() < 3) {
    throw ConstructionError("element with " + std::to_string(d.cycle_count()) +
                            " cycles and no room to move: " + format_cycles(x));
  }
  return stitch_chain(x, d, {first_cycles(3)});
}

// r has at least three fixed points, c has exactly three cycles and fewer
// than three fixed points. Length 8.
Chain roomy_to_three_cycle_element(const Permutation& r, const Permutation& c) {
  const std::size_t n = r.degree();
  const CycleDecomposition dr = decompose(r), dc = decompose(c);
  Stitch y = to_order3(c, dc);
  const CycleDecomposition dy = decompose(y.endpoint);
  if (prime_order(r) != 3) {
    const Permutation c3 = prime_element(n, 3, first_fixed(dr, 3));
    const auto pick = cycles_avoiding(dy, support_mask(c3), 4);
    Stitch t = stitch_chain(y.endpoint, dy, {{pick[0], pick[1]}, {pick[2], pick[3]}});
    return concat(concat(concat(bridge_chain(r, c3), bridge_chain(c3, t.endpoint)), reversed(t.chain)),
                  reversed(y.chain));
  }
  Chain head;
  Permutation a(n);
  if (dr.cycle_count() >= 2 && dr.fixed_count() >= 2) {
    Stitch s = stitch_chain(r, dr, {{0, 1}}, std::pair{dr.fixed_points[0], dr.fixed_points[1]});
    head = s.chain;
    a = s.endpoint;
  } else {
    a = prime_element(n, 2, first_fixed(dr, 4));
    head = bridge_chain(r, a);
  }
  Stitch f = stitch_chain(y.endpoint, dy, {cycles_avoiding(dy, support_mask(a), 5)});
  return concat(concat(concat(head, bridge_chain(a, f.endpoint)), reversed(f.chain)), reversed(y.chain));
}

}  // namespace

Chain small_chain(const Permutation& alpha, const Permutation& beta, std::string& region) {
  const std::uint64_t p = prime_order(alpha), q = prime_order(beta);
  if (!p || !q || p * q > 9) throw DomainError("small machine needs prime orders with pq <= 9");
  if (auto s = short_circuit(alpha, beta)) {
    region = "short-circuit";
    return *s;
  }
  if (p > q) {
    Chain c = small_23(beta, alpha, region);
    return reversed(std::move(c));
  }
  if (p == 2 && q == 3) return small_23(alpha, beta, region);
  if (p == 3) return small_33(alpha, beta, region);
  return small_22(alpha, beta, region);
}

Chain general_chain(const Permutation& alpha, const Permutation& beta, std::string& region,
                    std::size_t& bound) {
  std::uint64_t p = prime_order(alpha), q = prime_order(beta);
  if (!p || !q) throw DomainError("prime-order machine needs elements of prime order");
  if (p * q <= 9) {
    bound = 6;
    return small_chain(alpha, beta, region);
  }
  bound = 8;
  if (auto s = short_circuit(alpha, beta)) {
    region = "short-circuit";
    return *s;
  }
  if (p > q) {
    Chain c = general_chain(beta, alpha, region, bound);
    return reversed(std::move(c));
  }
  const std::size_t n = alpha.degree();
  const CycleDecomposition da = decompose(alpha), db = decompose(beta);
  const std::size_t k = da.fixed_count(), k2 = db.fixed_count();

  if (k < 3 && k2 < 3 && (db.cycle_count() == 3 || (p == q && da.cycle_count() == 3))) {
    if (db.cycle_count() != 3) {
      Chain c = general_chain(beta, alpha, region, bound);
      return reversed(std::move(c));
    }
    bound = 10;
    Chain tail = reversed(to_order3(beta, db).chain);
    Chain head = p == 3 ? Chain{alpha} : to_order3(alpha, da).chain;
    std::string inner;
    Chain mid = small_chain(head.back(), tail.front(), inner);
    region = "general corner via " + inner;
    return concat(concat(head, mid), tail);
  }

  const std::string top = general_case_name(p, q);
  if (k >= 3 && k2 >= 3) {
    const Permutation c2 = prime_element(n, 3, first_fixed(db, 3));
    if (p != 3) {
      region = top + ", roomy/roomy";
      const Permutation c = prime_element(n, 3, first_fixed(da, 3));
      return concat(concat(bridge_chain(alpha, c), three_cycle_chain(c, c2)), bridge_chain(c2, beta));
    }
    std::string inner;
    Chain c = concat(small_chain(alpha, c2, inner), bridge_chain(c2, beta));
    region = top + ", roomy/roomy via " + inner;
    return c;
  }

  if (auto c = hub_search(alpha, beta, 8)) {
    region = top + ", hub search";
    return *c;
  }

  // A side with three cycles and almost no fixed points against a roomy side.
  if (k2 < 3 && db.cycle_count() == 3 && k >= 3) {
    region = top + ", roomy/three cycles";
    return roomy_to_three_cycle_element(alpha, beta);
  }
  if (k < 3 && da.cycle_count() == 3 && k2 >= 3) {
    region = top + ", three cycles/roomy";
    return reversed(roomy_to_three_cycle_element(beta, alpha));
  }

  // Both sides through elements of order 3. Length at most 10, so the bound
  // assertion downstream reports it.
  Chain head = p == 3 ? Chain{alpha}
               : k >= 3 ? bridge_chain(alpha, prime_element(n, 3, first_fixed(da, 3)))
                        : to_order3(alpha, da).chain;
  Chain tail = k2 >= 3 ? reversed(bridge_chain(beta, prime_element(n, 3, first_fixed(db, 3))))
                       : reversed(to_order3(beta, db).chain);
  std::string inner;
  Chain mid = small_chain(head.back(), tail.front(), inner);
  region = top + ", fallback via " + inner;
  return concat(concat(head, mid), tail);
}

}  // namespace detail

PathWitness path_3cycles(const Permutation& c, const Permutation& c2, std::size_t n) {
  if (n < 10) throw DomainError("path_3cycles needs n >= 10");
  if (c.degree() != n || c2.degree() != n) throw DomainError("permutation degree differs from n");
  for (const Permutation* x : {&c, &c2}) {
    if (x->support_size() != 3) throw DomainError("path_3cycles needs 3-cycles");
  }
  return certify_path(three_cycle_chain(c, c2), LemmaTag::ThreeCycles22, 4, "3-cycles");
}

PathWitness path_prime_small(const Permutation& alpha, const Permutation& beta, std::size_t n,
                             const SynthesisOptions& opts) {
  check_inputs(alpha, beta, n);
  check_hypothesis(n, opts);
  const std::uint64_t p = detail::prime_order(alpha), q = detail::prime_order(beta);
  if (!p || !q || p * q > 9) throw DomainError("path_prime_small needs prime orders p, q with pq <= 9");
  std::string region;
  Chain c = detail::small_chain(alpha, beta, region);
  PathWitness w = certify_path(std::move(c), LemmaTag::PrimeSmall23, 6, region);
  w.best_effort = !hypothesis(n);
  return w;
}

PathWitness path_prime_general(const Permutation& alpha, const Permutation& beta, std::size_t n,
                               const SynthesisOptions& opts) {
  check_inputs(alpha, beta, n);
  check_hypothesis(n, opts);
  const std::uint64_t p = detail::prime_order(alpha), q = detail::prime_order(beta);
  if (!p || !q) throw DomainError("path_prime_general needs elements of prime order");
  if (p * q <= 9) return path_prime_small(alpha, beta, n, opts);
  std::string region;
  std::size_t bound = 8;
  Chain c = detail::general_chain(alpha, beta, region, bound);
  PathWitness w = certify_path(std::move(c), LemmaTag::PrimeGeneral24, bound, region);
  w.best_effort = !hypothesis(n);
  return w;
}

namespace {

Chain with_reduction(const Permutation& x, const Permutation& rx) {
  return x == rx ? Chain{x} : Chain{x, rx};
}

Chain prime_machine(const Permutation& a, const Permutation& b, std::string& region) {
  std::size_t bound = 0;
  return detail::general_chain(a, b, region, bound);
}

}  // namespace

PathWitness path_any(const Permutation& x, const Permutation& y, std::size_t n,
                     const SynthesisOptions& opts) {
  check_inputs(x, y, n);
  check_hypothesis(n, opts);
  const bool hyp = hypothesis(n);
  const bool tight = n >= 5 && diam8_condition(n);
  const LemmaTag tag = tight ? LemmaTag::Diam8_35 : LemmaTag::AnyPair31;
  const std::size_t bound = tight ? 8 : 11;

  Chain chain;
  std::string region;
  if (auto s = short_circuit(x, y)) {
    chain = *s;
    region = "short-circuit";
  } else {
    const Reduction rx = prime_order_reduction(x), ry = prime_order_reduction(y);
    const Chain hx = with_reduction(x, rx.reduced), hy = reversed(with_reduction(y, ry.reduced));
    std::string inner;
    chain = concat(concat(hx, prime_machine(rx.reduced, ry.reduced, inner)), hy);
    region = "least-prime reduction, " + inner;

    if (chain.size() - 1 > bound) {
      // Other prime reductions and the hub search on each.
      std::optional<Chain> better;
      const FactoredOrder ox = order_factored(x), oy = order_factored(y);
      for (auto [a, ea] : ox.prime_powers) {
        for (auto [b, eb] : oy.prime_powers) {
          const Permutation ax = prime_order_reduction(x, a).reduced;
          const Permutation by = prime_order_reduction(y, b).reduced;
          const Chain cx = with_reduction(x, ax), cy = reversed(with_reduction(y, by));
          const std::size_t used = (cx.size() - 1) + (cy.size() - 1);
          if (used >= bound) continue;
          std::optional<Chain> mid = detail::hub_search(ax, by, bound - used);
          if (!mid) {
            try {
              std::string r;
              Chain m = prime_machine(ax, by, r);
              if (m.size() - 1 + used <= bound) mid = std::move(m);
            } catch (const ConstructionError&) {
            }
          }
          if (mid) {
            Chain full = concat(concat(cx, *mid), cy);
            if (!better || full.size() < better->size()) better = std::move(full);
          }
        }
      }
      if (better) {
        chain = std::move(*better);
        region = "alternative reduction, hub search";
      }
    }
  }
  PathWitness w = certify_path(std::move(chain), tag, bound, region);
  w.best_effort = !hyp;
  return w;
}

PathWitness shortcut(const PathWitness& path) {
  std::vector<Permutation> v = path.vertices;
  for (;;) {
    bool changed = false;
    for (std::size_t span = v.size() - 1; span >= 2 && !changed; --span) {
      for (std::size_t i = 0; i + span < v.size(); ++i) {
        const std::size_t j = i + span;
        if (v[i] == v[j]) {
          v.erase(v.begin() + i + 1, v.begin() + j + 1);
          changed = true;
          break;
        }
        if (is_adjacent(v[i], v[j])) {
          v.erase(v.begin() + i + 1, v.begin() + j);
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }
  PathWitness w = certify_path(std::move(v), path.lemma, path.declared_bound, path.region);
  w.best_effort = path.best_effort;
  return w;
}

}  // namespace ppg
