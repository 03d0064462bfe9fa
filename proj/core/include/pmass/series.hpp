#pragma once

#include <cstdint>

#include "pmass/rational.hpp"

namespace pmass {

/// Sum of x^m for m in [0, n). Returns 0 for n = 0 and n for x = 1.
Rational geom_finite(const Rational& x, std::uint64_t n);

/// 1 / (1 - x) for |x| < 1; throws std::domain_error("divergent series") otherwise.
Rational geom_infinite(const Rational& x);

}  // namespace pmass
