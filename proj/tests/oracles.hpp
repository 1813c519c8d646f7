#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library except to convert values at the boundary.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ppg/permutation.hpp"

namespace oracle {

// 0-based image vector, composed naively.
using Perm = std::vector<int>;

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// apply b, then a
inline Perm mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm from(const ppg::Permutation& x) {
  Perm p(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) p[i] = static_cast<int>(x.images()[i]) - 1;
  return p;
}

inline ppg::Permutation to(const Perm& p) {
  std::vector<ppg::Point> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) img[i] = static_cast<ppg::Point>(p[i] + 1);
  return ppg::Permutation::from_images(img);
}

// repeated multiplication, so only usable for small exponents
inline Perm pow(const Perm& x, long e) {
  Perm r = identity(static_cast<int>(x.size()));
  for (long i = 0; i < e; ++i) r = mul(x, r);
  return r;
}

inline long order(const Perm& x) {
  const Perm id = identity(static_cast<int>(x.size()));
  Perm r = x;
  long k = 1;
  while (r != id) {
    r = mul(x, r);
    ++k;
  }
  return k;
}

// parity by counting inversions
inline bool even(const Perm& x) {
  long inv = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) inv += x[i] > x[j];
  }
  return inv % 2 == 0;
}

// y is some power x^k with 1 <= k <= o(x)
inline bool in_cyclic(const Perm& y, const Perm& x) {
  Perm r = x;
  const long o = order(x);
  for (long k = 1; k <= o; ++k) {
    if (r == y) return true;
    r = mul(x, r);
  }
  return false;
}

inline bool adjacent(const Perm& x, const Perm& y) { return x != y && (in_cyclic(y, x) || in_cyclic(x, y)); }

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t centralizer_count(const Perm& x) {
  std::uint64_t c = 0;
  for (const Perm& g : all_perms(static_cast<int>(x.size()))) c += mul(g, x) == mul(x, g);
  return c;
}

inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// cycle lengths including fixed points, sorted
inline std::vector<int> cycle_type(const Perm& x) {
  std::vector<int> seen(x.size(), 0), t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = x[j]) {
      seen[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

// g with g x g^-1 == y, for x and y of the same cycle type
inline Perm conjugator(const Perm& x, const Perm& y) {
  auto cycles = [](const Perm& p) {
    std::vector<std::vector<int>> cs;
    std::vector<int> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      cs.push_back(c);
    }
    std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return cs;
  };
  const auto cx = cycles(x), cy = cycles(y);
  Perm g(x.size());
  for (std::size_t i = 0; i < cx.size(); ++i) {
    for (std::size_t j = 0; j < cx[i].size(); ++j) g[cx[i][j]] = cy[i][j];
  }
  return g;
}

inline Perm inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
  return r;
}

}  // namespace oracle
