#pragma once

/**
 * @file report_io.hpp
 * @brief Deterministic JSON and TSV renderings of the library's reports.
 *
 * Quantities (masses, counts, q) are emitted as "num/den" strings in lowest
 * terms, "n" for integers. Structural indices (p, f, levels, valuation
 * classes, dimensions, coordinates) are plain JSON integers. Keys appear in a
 * fixed order; nothing depends on time or environment.
 */

#include <string>
#include <vector>

#include "pmass/counts.hpp"
#include "pmass/galois_filter.hpp"
#include "pmass/group_verify.hpp"
#include "pmass/layout.hpp"
#include "pmass/mass.hpp"
#include "pmass/oracle.hpp"
#include "pmass/tame.hpp"

namespace pmass::io {

std::string to_json(const MassReport& report);
std::string to_json(const TameReport& report);
std::string to_json(const FilteredLayout& layout);
std::string to_json(const ChecksumResult& result, int p, const Integer& q);
std::string to_json(const perm::NormalizerResult& normalizer, const perm::GaloisCriterionResult& criterion,
                    const perm::IndexPResult& index_p);
std::string to_json(const std::vector<oracle::OracleComparison>& rows, const LocalField& field,
                    std::int64_t max_level);
std::string counts_to_json(const LocalField& field, const CountTable& table);
std::string filter_to_json(const LocalField& field, const std::string& filter_name,
                           const std::vector<CharClass>& chars, const Rational& contribution);

/// Header "vbar\tlevel\tlines\textensions\tconjugacy_classes", one row per level.
std::string to_tsv(const CountTable& table);
/// Header "vbar\tcontribution" followed by the per-character table.
std::string to_tsv(const MassReport& report);
/// Header "level\tvbar\tdim\tdistinguished".
std::string to_tsv(const FilteredLayout& layout);

/// Human-readable summaries.
std::string to_text(const MassReport& report);
std::string to_text(const TameReport& report);

}  // namespace pmass::io
