#include "pmass/tame.hpp"

#include "pmass/errors.hpp"
#include "pmass/local_field.hpp"

namespace pmass {

TameReport tame_mass(int pprime, int p, const Integer& q) {
    if (!is_prime(pprime)) throw InvalidParameter("p' must be prime");
    if (!is_prime(p)) throw InvalidParameter("p must be prime");
    if (pprime == p) throw InvalidParameter("use the wild-case operations");
    Integer rest = q;
    while (rest > 1 && rest % p == 0) rest /= p;
    if (rest != 1 || q < p) throw InvalidParameter("q must be a power of p");

    TameReport r;
    r.pprime = pprime;
    r.p = p;
    r.q = q;

    const Integer qmod = q % pprime;
    Integer power = qmod;
    r.deg_kprime = 1;
    while (power != 1) {
        power = (power * qmod) % pprime;
        ++r.deg_kprime;
    }
    r.omega_trivial = r.deg_kprime == 1;

    // Only chi' = 1 has lines besides the unramified one. When omega' = 1 the
    // 1-eigenspace is the whole plane: p'+1 lines minus the unramified one,
    // one extension each. Otherwise it is the valuation line, carrying p'
    // conjugate extensions.
    const Integer P(pprime);
    if (r.omega_trivial) {
        r.lines = (P * P - 1) / (P - 1) - 1;
        r.ramified_count = r.lines;
    } else {
        r.lines = 1;
        r.ramified_count = P * r.lines;
    }
    r.conjugacy_classes = r.lines;
    // Tame ramified extensions of degree p' have c(E) = 0.
    r.mass = Rational(r.ramified_count);
    r.unramified_mass = Rational(1);
    if (r.mass != Rational(P)) throw IdentityViolation("tame mass differs from p'");
    return r;
}

}  // namespace pmass
