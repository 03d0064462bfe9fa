#pragma once

/**
 * @file mass.hpp
 * @brief Per-character contributions to the degree-p mass formula.
 *
 * A G-stable line D of level d in the chi-eigenspace accounts for one
 * extension (chi = omega) or p conjugate extensions (chi != omega), each
 * weighted q^{-d}. Summed stratum by stratum this gives the contribution
 *
 *     p(q-1)/(p-1) * sum_i q^{i - (p*i + j_{chi,i})}
 *
 * over i in [0, e) (characteristic 0) or all i >= 0 (characteristic p), plus
 * p*q^{-(p-1)e} for the trivial character in characteristic 0. The direct
 * evaluation below is authoritative; the closed forms are checked against it.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pmass/counts.hpp"
#include "pmass/local_field.hpp"
#include "pmass/rational.hpp"

namespace pmass {

/// Direct evaluation. Characteristic p sums each residue class of i modulo
/// p-1 as one geometric series of ratio q^{-(p-1)^2}.
Rational char_contribution(const LocalField& field, const CharClass& chi);

/// Closed forms: the cyclic-character and a-offset formulas in characteristic
/// p, the I/J split generalised to every valuation class in characteristic 0.
Rational char_contribution_closed(const LocalField& field, const CharClass& chi);

/// Direct sum restricted to lines of level <= max_level (the very-ramified
/// line included when p*e <= max_level).
Rational char_contribution_partial(const LocalField& field, const CharClass& chi,
                                   std::int64_t max_level);

/// Contribution of a single ramified stratum to one character of class vbar.
Rational stratum_contribution(const LocalField& field, int vbar, std::int64_t i);

/// p*q^{-(p-1)e}: the lines outside the principal units, all in the trivial eigenspace.
Rational tres_contribution(const LocalField& field);

struct PeuTresSplit {
    Rational peu;
    Rational tres;
};

/// (p(1 - q^{(1-p)e}), p q^{(1-p)e}); characteristic 0 only.
PeuTresSplit peu_tres_split(const LocalField& field);

struct ChecksumResult {
    Rational lhs;
    Rational rhs;
    Rational total;  ///< the ramified mass the identity reproduces; equals p
};

/// Sum over a in [0, p-2] of the a-offset numerators, compared with its
/// closed value. Throws IdentityViolation on mismatch.
ChecksumResult checksum_identity(int p, const Integer& q);

struct CharacterEntry {
    CharClass chi;
    Rational contribution;
};

struct MassReport {
    LocalField field;
    std::vector<Rational> per_vbar;  ///< one non-trivial character of each class
    Rational tres_extra;             ///< 0 in characteristic p
    std::vector<CharacterEntry> per_character;
    std::optional<PeuTresSplit> split;
    Rational total;        ///< ramified mass, = p
    Rational grand_total;  ///< including the unramified extension, = 1 + p
    std::optional<std::int64_t> count_bound;
    std::optional<CountTable> counts;
    bool degenerate = false;  ///< p = 2: one character, trivial and omega at once
};

/// Fills the report and asserts the total identities; a failed identity
/// raises IdentityViolation. Counts are attached in characteristic 0 when
/// omega's triviality is known, and in characteristic p up to `count_bound`.
MassReport total_mass(const LocalField& field, std::optional<std::int64_t> count_bound = std::nullopt);

}  // namespace pmass
