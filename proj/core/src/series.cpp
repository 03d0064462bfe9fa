#include "pmass/series.hpp"

#include <stdexcept>

namespace pmass {

Rational geom_finite(const Rational& x, std::uint64_t n) {
    if (n == 0) return Rational(0);
    const Rational one(1);
    if (x == one) return Rational(Integer(static_cast<unsigned long>(n)));
    return (one - rat_pow(x, static_cast<std::int64_t>(n))) / (one - x);
}

Rational geom_infinite(const Rational& x) {
    if (x.abs() >= Rational(1)) throw std::domain_error("divergent series");
    return Rational(1) / (Rational(1) - x);
}

}  // namespace pmass
