#pragma once

/**
 * @file group_verify.hpp
 * @brief Brute-force checks of the transitive subgroups of S_p.
 *
 * P is the subgroup generated by the p-cycle x -> x+1, and N its normalizer
 * in S_p. All checks throw IdentityViolation when an assertion fails.
 */

#include <string>
#include <vector>

#include "pmass/perm.hpp"

namespace pmass::perm {

struct NormalizerResult {
    int p = 0;
    int normalizer_order = 0;   ///< p(p-1)
    int kernel_order = 0;       ///< kernel of the conjugation character: P
    int character_image = 0;    ///< size of its image in F_p^x: p-1
    int image_generator = 0;    ///< an element of order p-1 in the image
    int complement_order = 0;   ///< point stabilizer of 0 in N, meets P trivially
};

/// N -> F_p^x, sigma -> k with sigma c sigma^{-1} = c^k, is onto with kernel P
/// and splits through the stabilizer of 0.
NormalizerResult verify_normalizer(int p);

/// The normalizer of the fixed order-p subgroup.
Subgroup normalizer_of_cycle(int p);

struct GaloisCriterionResult {
    int p = 0;
    bool exhaustive = false;  ///< every subgroup of S_p examined
    std::string scope;
    std::vector<SubgroupRecord> transitive;
};

/// Solvable <=> unique Sylow p-subgroup on every transitive subgroup found.
/// p <= 5: all subgroups of S_p (two-generated ones closed under joins).
/// p = 7: the subgroups <c, x> for every x in S_7, c the fixed p-cycle.
GaloisCriterionResult verify_galois_criterion(int p);

struct IndexPEntry {
    int order = 0;
    bool skipped_commutative = false;
    int index_p_subgroups = 0;
    bool pairwise_trivial = false;
    bool pairwise_generate = false;
};

struct IndexPResult {
    int p = 0;
    std::vector<IndexPEntry> entries;
};

/// For every solvable transitive group strictly containing P (they are the
/// groups between P and N): exactly p subgroups of index p, pairwise
/// intersecting trivially and pairwise generating the group.
IndexPResult verify_index_p_subgroups(int p);

}  // namespace pmass::perm
