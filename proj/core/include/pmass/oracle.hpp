#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force line enumeration in one eigenspace of the filtered module.
 *
 * The oracle rebuilds the chi-eigenspace from the module description alone:
 * level n (prime to p) carries l[-n]{omega}, whose characters are those with
 * vbar = vbar(omega) - n. It then walks every vector over F_p, reads the
 * level off the coordinate support and groups vectors into lines. No level
 * index or counting formula from the mass module is used.
 */

#include <cstdint>
#include <map>
#include <vector>

#include "pmass/local_field.hpp"
#include "pmass/rational.hpp"

namespace pmass::oracle {

/// Enumeration guard: eigenspace dimension and number of vectors.
inline constexpr int kMaxDim = 12;
inline constexpr std::int64_t kMaxVectors = std::int64_t{1} << 24;

struct BlockId {
    std::int64_t level = 0;
    int vbar = 0;
    int slot = 0;  ///< coordinate index inside the block, < dim
    friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

struct OracleBlock {
    std::int64_t level = 0;
    int vbar = 0;
    int dim = 0;
};

/// A vector of the eigenspace; absent coordinates are zero.
struct EigenVector {
    std::map<BlockId, int> coordinates;

    /// Highest level carrying a nonzero coordinate; throws on the zero vector.
    [[nodiscard]] std::int64_t level() const;
};

/// The blocks of the chi-eigenspace with level <= max_level.
std::vector<OracleBlock> eigenspace_blocks(const LocalField& field, const CharClass& chi, std::int64_t max_level);

struct LineCensus {
    int dim = 0;
    std::int64_t vectors = 0;                 ///< nonzero vectors visited
    std::map<std::int64_t, Integer> lines;    ///< level -> number of lines
};

/// Throws ScaleExceeded("oracle scale exceeded") past the guard.
LineCensus enumerate_lines(const LocalField& field, const CharClass& chi, std::int64_t max_level);

/// Sum over ramified lines of multiplicity * q^{-level}, the multiplicity
/// being 1 on the omega eigenspace and p elsewhere.
Rational oracle_mass(const LocalField& field, const CharClass& chi, std::int64_t max_level);

struct OracleComparison {
    CharClass chi;
    Rational enumerated;  ///< oracle_mass
    Rational formula;     ///< char_contribution, or its truncation below max_level
    bool full = false;    ///< the bound covers every line of the eigenspace
    [[nodiscard]] bool agrees() const { return enumerated == formula; }
};

/// Oracle against the mass module for every character of the field.
std::vector<OracleComparison> oracle_check(const LocalField& field, std::int64_t max_level);

}  // namespace pmass::oracle
