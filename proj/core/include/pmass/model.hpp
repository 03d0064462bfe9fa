#pragma once

/**
 * @file model.hpp
 * @brief Index arithmetic of the filtered eigenspace model.
 *
 * The filtered F_p[G]-module attached to F decomposes into strata
 * V_1, V_2, ...; stratum i (counting from 0) contributes to the eigenspace of
 * a character chi a block of F_p-dimension f sitting at level p*i + j, where
 * j = j_index(chi, i) in [1, p-1]. Level 0 holds the omega line; in
 * characteristic 0 the trivial character also carries one line at level p*e.
 */

#include <cstdint>

#include "pmass/local_field.hpp"

namespace pmass {

/// The n-th positive integer prime to p; b_seq(p, 0) = 0.
std::int64_t b_seq(int p, std::int64_t n);
std::int64_t b_seq(const LocalField& field, std::int64_t n);

/// Valuation class of omega: e mod (p-1), or 0 in characteristic p.
int vbar_omega(const LocalField& field);

/// The unique j in [1, p-1] with vbar(chi) + i + j = vbar(omega) mod (p-1).
int j_index(const LocalField& field, int vbar, std::int64_t i);
int j_index(const LocalField& field, const CharClass& chi, std::int64_t i);

/// p*i + j_index; the level of every line first appearing in stratum i.
/// In characteristic 0 requires i < e.
std::int64_t level_of(const LocalField& field, const CharClass& chi, std::int64_t i);

/// Dimension of the chi-eigenspace of the first t strata plus the omega line:
/// t*f + [chi == omega]. In characteristic 0 requires t <= e.
std::int64_t eigenspace_dim(const LocalField& field, const CharClass& chi, std::int64_t t);

/// Characteristic 0 only: the whole chi-eigenspace, which also contains the
/// level-pe line when chi is trivial.
std::int64_t full_eigenspace_dim(const LocalField& field, const CharClass& chi);

/// Level of the line attached to the unramified degree-p extension.
constexpr int c_of_unramified() { return 0; }

/// Ramification data of a degree-p extension E|F, read off the square
/// E, E~, F, F' with F'|F tame of inertia order t and residual degree r.
struct BreakData {
    std::int64_t b = 1;  ///< the ramification break
    std::int64_t t = 1;  ///< order of the inertia quotient, divides p-1
    std::int64_t r = 1;  ///< residual degree

    /// Throws InvalidParameter unless b, t, r >= 1, t | p-1 and gcd(b, t) = 1.
    void validate(int p) const;
};

/// v(disc(E|F)) = (p-1)(b+t)/t.
std::int64_t disc_valuation(int p, const BreakData& bd);

/// c(E) = v(disc(E|F)) - (p-1).
std::int64_t wild_exponent(int p, const BreakData& bd);

}  // namespace pmass
