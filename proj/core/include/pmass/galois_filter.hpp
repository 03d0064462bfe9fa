#pragma once

/**
 * @file galois_filter.hpp
 * @brief Contributions of extensions selected by their Galois closure.
 *
 * For E of character chi, the tame part of its Galois closure is cut out by
 * omega * chi^{-1}: its image in F_p^x has order n, and Gal(closure|F) is the
 * extension of that order-n subgroup by a group of order p (cyclic E for
 * n = 1, dihedral of order 2p for n = 2). A subfield F' of K corresponds to
 * the subgroup of characters trivial on Gal(K|F'); EF'|F is Galois exactly
 * when omega * chi^{-1} lies in it.
 */

#include <variant>
#include <vector>

#include "pmass/local_field.hpp"
#include "pmass/rational.hpp"

namespace pmass {

namespace filter {

/// chi = omega.
struct Cyclic {};

/// EF'|F Galois for some unramified F': vbar(chi) = vbar(omega).
struct UnramifiedClosure {};

/// |Im(omega chi^{-1})| = order; order must divide p-1.
struct GroupOrder {
    int order = 1;
};

/// Characters of Gal(F'|F), given by generators in (Z/(p-1))^2. With `exact`
/// set, selects chi whose tame closure is F' itself rather than inside F'.
struct Subfield {
    std::vector<CharCoords> generators;
    bool exact = false;
};

}  // namespace filter

using ClosureFilter = std::variant<filter::Cyclic, filter::UnramifiedClosure, filter::GroupOrder, filter::Subfield>;

/// The characters a filter selects. Characteristic-0 group-order and subfield
/// filters need omega's coordinates ("omega class required").
std::vector<CharClass> qualifying_chars(const LocalField& field, const ClosureFilter& filter);

/// Sum of char_contribution over qualifying_chars.
Rational galois_closure_contribution(const LocalField& field, const ClosureFilter& filter);

/// Closure of the generators under addition in (Z/(p-1))^2, sorted.
std::vector<CharCoords> generated_subgroup(const LocalField& field, const std::vector<CharCoords>& generators);

/// Divisors of p-1 in increasing order.
std::vector<int> closure_orders(const LocalField& field);

}  // namespace pmass
