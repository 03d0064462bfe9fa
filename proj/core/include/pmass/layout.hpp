#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmass/local_field.hpp"

namespace pmass {

enum class BlockKind { OmegaLine, Stratum, TresLine };

/// One eigen-block of the filtered module: all characters of valuation class
/// `vbar` together span `dim` F_p-dimensions at filtration level `level`.
struct EigenBlock {
    std::int64_t level = 0;
    int vbar = 0;
    std::int64_t dim = 0;
    BlockKind kind = BlockKind::Stratum;
    std::optional<std::int64_t> stratum;  ///< set for BlockKind::Stratum

    /// "omega", "trivial" or "none".
    [[nodiscard]] std::string distinguished() const;
};

/// K^x/K^xp (characteristic 0) or a truncation of K+/P(K+) (characteristic p),
/// as an ordered list of eigen-blocks sorted by level.
struct FilteredLayout {
    LocalField field;
    std::int64_t max_level = 0;
    std::vector<EigenBlock> blocks;

    [[nodiscard]] std::int64_t total_dim() const;
};

/// Blocks of level <= max_level. In characteristic 0 max_level is clamped to
/// p*e, and with no bound the full module is produced; characteristic p
/// requires a bound.
FilteredLayout layout(const LocalField& field, std::optional<std::int64_t> max_level = std::nullopt);

}  // namespace pmass
