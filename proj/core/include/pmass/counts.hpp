#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>

#include "pmass/local_field.hpp"
#include "pmass/rational.hpp"

namespace pmass {

/// The very-ramified stratum: the level-pe line of the trivial eigenspace.
struct TresStratum {};

using Stratum = std::variant<std::int64_t, TresStratum>;

struct ExtensionCount {
    std::int64_t level = 0;
    Integer lines;
    Integer extensions;
    Integer conjugacy_classes;
    bool degenerate = false;  ///< p = 2
};

/// Lines of the chi-eigenspace first appearing in the given stratum, and the
/// extensions they account for (one per line for omega, p otherwise).
ExtensionCount count_extensions(const LocalField& field, const CharClass& chi, const Stratum& stratum);

/// Counts at one level, summed over the p-1 characters of its valuation class.
struct LevelCount {
    int vbar = 0;
    bool tres = false;
    Integer lines;
    Integer extensions;
    Integer conjugacy_classes;
};

using CountTable = std::map<std::int64_t, LevelCount>;

/// Every ramified level up to the bound (characteristic 0: all of them).
/// Throws InvalidParameter("omega class required") in characteristic 0 when
/// omega's triviality is undetermined.
CountTable count_table(const LocalField& field, std::optional<std::int64_t> max_level = std::nullopt);

/// sum of extensions * q^{-level} over the table.
Rational mass_from_counts(const LocalField& field, const CountTable& table);

}  // namespace pmass
