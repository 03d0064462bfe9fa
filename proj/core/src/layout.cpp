#include "pmass/layout.hpp"

#include <algorithm>
#include <numeric>

#include "pmass/errors.hpp"
#include "pmass/model.hpp"

namespace pmass {

std::string EigenBlock::distinguished() const {
    switch (kind) {
        case BlockKind::OmegaLine: return "omega";
        case BlockKind::TresLine: return "trivial";
        case BlockKind::Stratum: return "none";
    }
    return "none";
}

std::int64_t FilteredLayout::total_dim() const {
    return std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0},
                           [](std::int64_t acc, const EigenBlock& b) { return acc + b.dim; });
}

FilteredLayout layout(const LocalField& field, std::optional<std::int64_t> max_level) {
    const std::int64_t p = field.p();
    std::int64_t bound = 0;
    if (field.char_zero()) {
        const std::int64_t top = p * field.finite_e();
        bound = max_level ? std::min(*max_level, top) : top;
    } else {
        if (!max_level) throw InvalidParameter("a level bound is required in characteristic p");
        bound = *max_level;
    }
    if (bound < 0) throw InvalidParameter("max_level must be >= 0");

    FilteredLayout out{field, bound, {}};
    out.blocks.push_back({0, vbar_omega(field), 1, BlockKind::OmegaLine, std::nullopt});

    // Each valuation class holds p-1 characters, each contributing an f-dimensional block.
    const std::int64_t class_dim = (p - 1) * field.f();
    const std::int64_t strata = field.char_zero() ? field.finite_e() : bound / p + 1;
    for (std::int64_t i = 0; i < strata; ++i) {
        for (int w = 0; w < field.modulus(); ++w) {
            const std::int64_t level = p * i + j_index(field, w, i);
            if (level > bound) continue;
            out.blocks.push_back({level, w, class_dim, BlockKind::Stratum, i});
        }
    }
    if (field.char_zero() && bound == p * field.finite_e()) {
        out.blocks.push_back({bound, 0, 1, BlockKind::TresLine, std::nullopt});
    }
    std::stable_sort(out.blocks.begin(), out.blocks.end(),
                     [](const EigenBlock& a, const EigenBlock& b) { return a.level < b.level; });
    return out;
}

}  // namespace pmass
