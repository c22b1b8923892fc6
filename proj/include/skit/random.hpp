#pragma once

// Seeded sampling that gives identical streams on every platform; the
// standard distributions are implementation-defined.

#include <cstdint>
#include <random>

#include "skit/vector.hpp"

namespace skit {

using Rng = std::mt19937_64;

// Uniform on [lo, hi], by rejection.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// p/q with |p| <= max_numerator, 1 <= q <= max_denominator; never zero when
// nonzero is set.
Rational random_rational(Rng& rng, std::int64_t max_numerator, std::int64_t max_denominator,
                         bool nonzero);

}  // namespace skit
