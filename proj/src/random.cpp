#include "ppg/random.hpp"

#include <numeric>

#include "ppg/error.hpp"

namespace ppg {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{1});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(img[i - 1], img[uniform_below(rng, i)]);
  }
  return Permutation::from_images(std::move(img));
}

Permutation random_even_permutation(std::size_t n, std::mt19937_64& rng) {
  if (n < 3) throw DomainError("A_n has no nonidentity element for n < 3");
  for (;;) {
    Permutation p = random_permutation(n, rng);
    if (p.is_even() && !p.is_identity()) return p;
  }
}

}  // namespace ppg
