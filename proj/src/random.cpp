#include "skit/random.hpp"

#include "skit/error.hpp"

namespace skit {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational random_rational(Rng& rng, std::int64_t max_numerator, std::int64_t max_denominator,
                         bool nonzero) {
  if (max_numerator < 1 && nonzero) throw DomainError("no nonzero numerator in range");
  std::int64_t p;
  do {
    p = uniform_int(rng, -max_numerator, max_numerator);
  } while (nonzero && p == 0);
  const std::int64_t q = uniform_int(rng, 1, max_denominator);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

}  // namespace skit
