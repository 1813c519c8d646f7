#include "ppg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ppg/error.hpp"
#include "ppg/primes.hpp"

namespace ppg {

Permutation::Permutation(std::size_t n) : images_(n) {
  if (n == 0) throw DomainError("permutation degree must be positive");
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<Point>(i + 1);
}

Permutation Permutation::from_images(std::vector<Point> images) {
  const std::size_t n = images.size();
  if (n == 0) throw DomainError("permutation degree must be positive");
  std::vector<char> seen(n + 1, 0);
  for (Point v : images) {
    if (v < 1 || v > n || seen[v]) throw DomainError("image sequence is not a bijection");
    seen[v] = 1;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<Cycle>& cycles) {
  Permutation out(n);
  std::vector<char> used(n + 1, 0);
  for (const Cycle& c : cycles) {
    if (c.size() < 2) throw DomainError("cycle must have at least two points");
    for (Point p : c) {
      if (p < 1 || p > n) throw DomainError("cycle point out of range");
      if (used[p]) throw DomainError("cycles are not disjoint");
      used[p] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      out.images_[c[i] - 1] = c[(i + 1) % c.size()];
    }
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  // (-1)^(n - #cycles, fixed points included)
  std::vector<char> seen(images_.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1) seen[j] = 1;
  }
  return (images_.size() - cycles) % 2 == 0;
}

std::size_t Permutation::support_size() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) s += images_[i] != i + 1;
  return s;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t FactoredOrder::least_prime() const { return least_prime_factor_of_order(*this); }

BigInt FactoredOrder::value() const {
  BigInt v = 1;
  for (auto [p, e] : prime_powers) {
    for (unsigned i = 0; i < e; ++i) v *= p;
  }
  return v;
}

FactoredOrder FactoredOrder::divided_by(std::uint64_t p) const {
  FactoredOrder out = *this;
  auto it = out.prime_powers.find(p);
  if (it == out.prime_powers.end()) throw DomainError("prime does not divide the order");
  if (--it->second == 0) out.prime_powers.erase(it);
  return out;
}

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch");
}

// Rotates every cycle of x by shift(t), t the cycle length.
template <class Shift>
Permutation rotate_cycles(const Permutation& x, Shift shift) {
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Point>(i + 1);
  for (const Cycle& c : decompose(x).cycles) {
    const std::size_t t = c.size();
    const std::size_t r = shift(t);
    for (std::size_t i = 0; i < t; ++i) img[c[i] - 1] = c[(i + r) % t];
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b(static_cast<Point>(i + 1)));
  return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& x) {
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[x.images()[i] - 1] = static_cast<Point>(i + 1);
  return Permutation::from_images(std::move(img));
}

Permutation power(const Permutation& x, std::int64_t e) {
  return rotate_cycles(x, [e](std::size_t t) {
    const auto m = static_cast<std::int64_t>(t);
    return static_cast<std::size_t>(((e % m) + m) % m);
  });
}

Permutation power(const Permutation& x, const BigInt& e) {
  return rotate_cycles(x, [&e](std::size_t t) {
    BigInt r = e % t;
    if (r < 0) r += t;
    return r.convert_to<std::size_t>();
  });
}

bool commute(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  for (Point i = 1; i <= a.degree(); ++i) {
    if (a(b(i)) != b(a(i))) return false;
  }
  return true;
}

bool disjoint_supports(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  for (Point i = 1; i <= a.degree(); ++i) {
    if (a.moves(i) && b.moves(i)) return false;
  }
  return true;
}

std::vector<Point> CycleDecomposition::support() const {
  std::vector<Point> s;
  for (const Cycle& c : cycles) s.insert(s.end(), c.begin(), c.end());
  std::sort(s.begin(), s.end());
  return s;
}

CycleDecomposition decompose(const Permutation& x) {
  CycleDecomposition d;
  d.degree = x.degree();
  std::vector<char> seen(x.degree() + 1, 0);
  for (Point i = 1; i <= x.degree(); ++i) {
    if (seen[i]) continue;
    if (!x.moves(i)) {
      seen[i] = 1;
      d.fixed_points.push_back(i);
      continue;
    }
    Cycle c;
    for (Point j = i; !seen[j]; j = x(j)) {
      seen[j] = 1;
      c.push_back(j);
    }
    d.cycles.push_back(std::move(c));
  }
  return d;
}

Permutation recompose(const CycleDecomposition& d) {
  return Permutation::from_cycles(d.degree, d.cycles);
}

FactoredOrder order_factored(const CycleDecomposition& d) {
  FactoredOrder o;
  std::vector<char> length_seen(d.degree + 1, 0);
  for (const Cycle& c : d.cycles) {
    if (length_seen[c.size()]) continue;
    length_seen[c.size()] = 1;
    for (auto [p, e] : factorize(c.size())) {
      unsigned& cur = o.prime_powers[p];
      cur = std::max(cur, e);
    }
  }
  return o;
}

FactoredOrder order_factored(const Permutation& x) { return order_factored(decompose(x)); }

Permutation parse_cycles(std::string_view text, std::size_t n) {
  if (n == 0) throw ParseError("degree must be positive");
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cycle notation: " + why + " in \"" + std::string(text) + "\"");
  };

  skip_ws();
  std::size_t body_start = pos;
  std::size_t end = text.size();
  while (end > body_start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(body_start, end - body_start);
  if (body.empty()) throw fail("empty input");
  if (body == "()") return Permutation(n);

  std::vector<Cycle> cycles;
  std::vector<char> used(n + 1, 0);
  while (pos < end) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    Cycle c;
    bool need_point = true;
    while (true) {
      skip_ws();
      if (pos >= end) throw fail("unterminated cycle");
      char ch = text[pos];
      if (ch == ')') {
        if (need_point) throw fail("expected a point");
        ++pos;
        break;
      }
      if (ch == ',') {
        if (need_point) throw fail("unexpected ','");
        need_point = true;
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail("unexpected character");
      if (!need_point && pos > 0 && !std::isspace(static_cast<unsigned char>(text[pos - 1])) &&
          text[pos - 1] != ',') {
        throw fail("points must be separated");
      }
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
      if (ec != std::errc()) throw fail("point out of range");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (v < 1) throw fail("points are 1-based");
      if (v > n) throw fail("point " + std::to_string(v) + " exceeds degree " + std::to_string(n));
      if (used[v]) throw fail("repeated point " + std::to_string(v));
      used[v] = 1;
      c.push_back(static_cast<Point>(v));
      need_point = false;
    }
    if (c.size() < 2) throw fail("a cycle needs at least two points");
    cycles.push_back(std::move(c));
    skip_ws();
  }
  return Permutation::from_cycles(n, cycles);
}

std::string format_cycles(const Permutation& x) {
  const CycleDecomposition d = decompose(x);
  if (d.cycles.empty()) return "()";
  std::ostringstream out;
  for (const Cycle& c : d.cycles) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace ppg
