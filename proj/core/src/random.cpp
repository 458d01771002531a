#include "rankmine/random.hpp"

#include <limits>

#include "rankmine/error.hpp"

namespace rankmine {

std::uint64_t Rng::uniform(std::uint64_t n) {
  if (n == 0) throw PreconditionError("uniform: empty range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod n, computed without overflow.
  const std::uint64_t excess = (kMax % n + 1) % n;
  const std::uint64_t limit = kMax - excess;  // accept x <= limit
  std::uint64_t x;
  do {
    x = next();
  } while (excess != 0 && x > limit);
  return x % n;
}

bool Rng::bernoulli(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace rankmine
