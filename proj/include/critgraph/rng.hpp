#pragma once

#include <cstdint>
#include <random>

#include "critgraph/errors.hpp"

namespace critgraph {

// Seeded PRNG with a rejection-sampled bounded draw. mt19937_64 output is
// fixed by the standard, so the same seed yields the same stream on every
// platform and build.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InputError("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

private:
  std::mt19937_64 eng_;
};

}  // namespace critgraph
