#pragma once

#include "pmass/rational.hpp"

namespace pmass {

/// Degree-p' extensions of a field with residue characteristic p != p'.
/// K' = F(zeta_{p'}) is unramified of degree ord(q mod p'), and
/// K'^x/K'^{xp'} = F_{p'}{omega'} + F_{p'} is two-dimensional.
struct TameReport {
    int pprime = 0;
    int p = 0;
    Integer q;
    int deg_kprime = 0;       ///< order of q in F_{p'}^x
    bool omega_trivial = false;  ///< p' | q - 1
    Integer lines;            ///< G'-stable lines other than the unramified one
    Integer ramified_count;
    Integer conjugacy_classes;
    Rational mass;            ///< ramified mass, = p'
    Rational unramified_mass;  ///< the unramified extension, counted apart: 1
};

/// Throws InvalidParameter("use the wild-case operations") when p' = p, and
/// IdentityViolation if the mass does not come out to p'.
TameReport tame_mass(int pprime, int p, const Integer& q);

}  // namespace pmass
