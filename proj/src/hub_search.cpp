#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "ppg/error.hpp"
#include "synth_internal.hpp"

namespace ppg::detail {

Mask support_mask(const Permutation& x) {
  Mask m(x.degree() + 1, 0);
  for (Point i = 1; i <= x.degree(); ++i) m[i] = x.moves(i);
  return m;
}

Mask support_mask(const std::vector<const Permutation*>& xs, std::size_t n) {
  Mask m(n + 1, 0);
  for (const Permutation* x : xs) {
    for (Point i = 1; i <= n; ++i) m[i] |= x->moves(i);
  }
  return m;
}

Chain concat(Chain a, const Chain& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() != b.front()) throw std::logic_error("concat: chains do not meet");
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

Chain reversed(Chain c) {
  std::reverse(c.begin(), c.end());
  return c;
}

std::uint64_t prime_order(const Permutation& x) {
  const FactoredOrder o = order_factored(x);
  return o.is_prime() ? o.prime_powers.begin()->first : 0;
}

Permutation prime_element(std::size_t n, std::uint64_t r, const std::vector<Point>& points) {
  if (points.size() < points_needed(r)) throw ConstructionError("prime_element: too few points");
  if (r == 2) return Permutation::from_cycles(n, {{points[0], points[1]}, {points[2], points[3]}});
  return Permutation::from_cycles(n, {Cycle(points.begin(), points.begin() + r)});
}

Chain bridge_chain(const Permutation& x, const Permutation& y) { return {x, compose(x, y), y}; }

std::vector<std::size_t> cycles_avoiding(const CycleDecomposition& d, const Mask& avoid,
                                         std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.cycles.size() && out.size() < count; ++i) {
    bool clean = true;
    for (Point p : d.cycles[i]) {
      if (avoid[p]) {
        clean = false;
        break;
      }
    }
    if (clean) out.push_back(i);
  }
  if (out.size() < count) {
    throw ConstructionError("only " + std::to_string(out.size()) + " cycles avoid the excluded points, " +
                            std::to_string(count) + " needed");
  }
  return out;
}

Stitch stitch_chain(const Permutation& x, const CycleDecomposition& d,
                    const std::vector<std::vector<std::size_t>>& groups,
                    std::optional<std::pair<Point, Point>> swap) {
  (void)d;
  StitchResult s = stitch_step(x, groups, swap);
  return {{x, s.root, s.endpoint}, s.endpoint};
}

namespace {

bool coprime_prime_orders(std::uint64_t a, std::uint64_t b) { return a && b && a != b; }

}  // namespace

std::optional<Chain> direct_link(const Permutation& a, const Permutation& b) {
  if (a == b) return Chain{a};
  const std::uint64_t oa = prime_order(a), ob = prime_order(b);
  if (oa && oa == ob) {
    if (is_adjacent(a, b)) return Chain{a, b};
    return std::nullopt;
  }
  if (!oa || !ob) {
    if (is_adjacent(a, b)) return Chain{a, b};
  }
  if (coprime_prime_orders(oa, ob) && commute(a, b)) return bridge_chain(a, b);
  return std::nullopt;
}

std::optional<Chain> link(const Permutation& a, const Permutation& b) {
  if (auto c = direct_link(a, b)) return c;
  const std::uint64_t oa = prime_order(a), ob = prime_order(b);
  if (!oa || !ob) return std::nullopt;
  const std::size_t n = a.degree();
  std::vector<Point> free;
  for (Point i = 1; i <= n; ++i) {
    if (!a.moves(i) && !b.moves(i)) free.push_back(i);
  }
  for (std::uint64_t r : {2, 3, 5, 7, 11, 13}) {
    if (r == oa || r == ob || free.size() < points_needed(r)) continue;
    const Permutation c = prime_element(n, r, free);
    return concat(bridge_chain(a, c), bridge_chain(c, b));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hub search
//
// A hub of x is an element reachable from x in a couple of cheap moves: a
// bridge to a small element on fixed points of x, or a stitch of some of its
// cycles. The search links a hub of x to a hub of y and keeps the cheapest.

namespace {

struct Hub {
  Chain chain;  // from the source to the hub
  std::uint64_t order = 0;
  std::size_t cost() const { return chain.size() - 1; }
  const Permutation& end() const { return chain.back(); }
};

std::size_t binomial_capped(std::size_t m, std::size_t c, std::size_t cap) {
  if (c > m) return 0;
  double v = 1;
  for (std::size_t i = 0; i < c; ++i) {
    v = v * double(m - i) / double(i + 1);
    if (v > double(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(v + 0.5);
}

class HubGenerator {
 public:
  HubGenerator(const Permutation& x, const Mask& context, bool enumerate)
      : x_(x), d_(decompose(x)), ctx_(context), enumerate_(enumerate), p_(prime_order(x)) {}

  std::vector<Hub> generate() {
    std::vector<Hub> out;
    if (!p_) return out;
    free_hubs(out);
    stitch_hubs(out);
    return out;
  }

 private:
  std::size_t overlap(const Cycle& c) const {
    std::size_t k = 0;
    for (Point p : c) k += ctx_[p] ? 1 : 0;
    return k;
  }

  void add(std::vector<Hub>& out, Chain chain, std::uint64_t order) {
    if (!seen_.insert(chain.back()).second) return;
    out.push_back(Hub{std::move(chain), order});
  }

  std::vector<std::vector<Point>> placements(std::size_t count) const {
    std::vector<Point> outside, inside;
    for (Point f : d_.fixed_points) (ctx_[f] ? inside : outside).push_back(f);
    std::vector<std::vector<Point>> res;
    if (d_.fixed_points.size() < count) return res;
    if (outside.size() >= count) res.emplace_back(outside.begin(), outside.begin() + count);
    res.emplace_back(d_.fixed_points.begin(), d_.fixed_points.begin() + count);
    std::vector<Point> in_first = inside;
    in_first.insert(in_first.end(), outside.begin(), outside.end());
    res.emplace_back(in_first.begin(), in_first.begin() + count);
    return res;
  }

  void free_hubs(std::vector<Hub>& out) {
    for (std::uint64_t r : {2, 3, 5, 7}) {
      if (r == p_) continue;
      for (const auto& pts : placements(points_needed(r))) {
        const Permutation c = prime_element(x_.degree(), r, pts);
        add(out, bridge_chain(x_, c), r);
      }
    }
  }

  std::vector<std::vector<std::size_t>> selections(std::size_t c) const {
    std::vector<std::vector<std::size_t>> res;
    const std::size_t m = d_.cycles.size();
    if (m < c) return res;
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    auto by_overlap = [&](bool ascending) {
      std::vector<std::size_t> s = idx;
      std::stable_sort(s.begin(), s.end(), [&](std::size_t a, std::size_t b) {
        const std::size_t oa = overlap(d_.cycles[a]), ob = overlap(d_.cycles[b]);
        return ascending ? oa < ob : oa > ob;
      });
      s.resize(c);
      std::sort(s.begin(), s.end());
      return s;
    };
    res.push_back(by_overlap(true));
    res.push_back(by_overlap(false));
    res.emplace_back(idx.begin(), idx.begin() + c);
    if (enumerate_ && binomial_capped(m, c, 128) <= 128) {
      std::vector<char> pick(m, 0);
      std::fill(pick.begin(), pick.begin() + c, 1);
      do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i) {
          if (pick[i]) s.push_back(i);
        }
        res.push_back(std::move(s));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return res;
  }

  void try_stitch(std::vector<Hub>& out, const std::vector<std::vector<std::size_t>>& groups,
                  std::optional<std::pair<Point, Point>> swap, std::uint64_t r) {
    try {
      Stitch s = stitch_chain(x_, d_, groups, swap);
      add(out, std::move(s.chain), r);
    } catch (const DomainError&) {
    }
  }

  void stitch_hubs(std::vector<Hub>& out) {
    for (std::uint64_t r : {2, 3, 5}) {
      if (r == p_) continue;
      if (r % 2 == 1) {
        for (const auto& s : selections(r)) try_stitch(out, {s}, std::nullopt, r);
        continue;
      }
      // r == 2, p odd: two pairs, or one pair and a swap on fixed points
      for (const auto& s : selections(4)) try_stitch(out, {{s[0], s[1]}, {s[2], s[3]}}, std::nullopt, 2);
      for (const auto& pts : placements(2)) {
        for (const auto& s : selections(2)) try_stitch(out, {s}, std::pair{pts[0], pts[1]}, 2);
      }
    }
  }

  const Permutation& x_;
  CycleDecomposition d_;
  const Mask& ctx_;
  bool enumerate_;
  std::uint64_t p_;
  std::unordered_set<Permutation, PermutationHash> seen_;
};

std::vector<Hub> hubs_of(const Permutation& x, const Mask& ctx, bool enumerate, bool second_level) {
  std::vector<Hub> out;
  out.push_back(Hub{{x}, prime_order(x)});
  std::vector<Hub> first = HubGenerator(x, ctx, enumerate).generate();
  out.insert(out.end(), first.begin(), first.end());
  if (second_level) {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const Hub& h : out) seen.insert(h.end());
    for (const Hub& h : first) {
      for (Hub& g : HubGenerator(h.end(), ctx, false).generate()) {
        if (!seen.insert(g.end()).second) continue;
        out.push_back(Hub{concat(h.chain, g.chain), g.order});
      }
    }
  }
  return out;
}

struct Best {
  std::optional<Chain> chain;
  std::size_t length = SIZE_MAX;
};

void search(const std::vector<Hub>& hx, const std::vector<Hub>& hy, std::size_t budget, Best& best) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < hx.size(); ++i) {
    for (std::size_t j = 0; j < hy.size(); ++j) {
      if (hx[i].cost() + hy[j].cost() <= budget) pairs.emplace_back(i, j);
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
    return hx[a.first].cost() + hy[a.second].cost() < hx[b.first].cost() + hy[b.second].cost();
  });
  for (auto [i, j] : pairs) {
    const std::size_t base = hx[i].cost() + hy[j].cost();
    if (base >= best.length || base > budget) break;
    const std::size_t room = std::min(budget, best.length - 1) - base;
    std::optional<Chain> mid = room >= 4 ? link(hx[i].end(), hy[j].end())
                                         : direct_link(hx[i].end(), hy[j].end());
    if (!mid || mid->size() - 1 > room) continue;
    Chain full = concat(concat(hx[i].chain, *mid), reversed(hy[j].chain));
    best.length = full.size() - 1;
    best.chain = std::move(full);
  }
}

}  // namespace

std::optional<Chain> hub_search(const Permutation& x, const Permutation& y, std::size_t budget) {
  if (!prime_order(x) || !prime_order(y)) return std::nullopt;
  const Mask sx = support_mask(x), sy = support_mask(y);
  Best best;
  const bool deep = budget >= 6;
  for (int pass = 0; pass < 3; ++pass) {
    const bool enumerate = pass == 1;
    if (pass == 2 && !deep) break;
    const std::vector<Hub> hx = hubs_of(x, sy, enumerate, pass == 2);
    const std::vector<Hub> hy = hubs_of(y, sx, enumerate, pass == 2);
    search(hx, hy, budget, best);
    if (best.chain) break;
  }
  return best.chain;
}

}  // namespace ppg::detail
