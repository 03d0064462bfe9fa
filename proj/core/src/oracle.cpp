#include "pmass/oracle.hpp"

#include <numeric>

#include "pmass/errors.hpp"
#include "pmass/mass.hpp"

namespace pmass::oracle {

std::int64_t EigenVector::level() const {
    bool any = false;
    std::int64_t top = 0;
    for (const auto& [id, value] : coordinates) {
        if (value == 0) continue;
        top = any ? std::max(top, id.level) : id.level;
        any = true;
    }
    if (!any) throw InvalidParameter("the zero vector has no level");
    return top;
}

std::vector<OracleBlock> eigenspace_blocks(const LocalField& field, const CharClass& chi, std::int64_t max_level) {
    chi.validate(field);
    const std::int64_t p = field.p();
    const std::int64_t omega_val = field.char_zero() ? field.finite_e() : 0;
    const std::int64_t top = field.char_zero() ? p * field.finite_e() : max_level + 1;

    std::vector<OracleBlock> blocks;
    if (chi.omega) blocks.push_back({0, chi.vbar, 1});
    for (std::int64_t n = 1; n < top && n <= max_level; ++n) {
        if (n % p == 0) continue;
        if (field.residue(omega_val - n) == chi.vbar) blocks.push_back({n, chi.vbar, field.f()});
    }
    if (field.char_zero() && chi.trivial && top <= max_level) blocks.push_back({top, chi.vbar, 1});
    return blocks;
}

LineCensus enumerate_lines(const LocalField& field, const CharClass& chi, std::int64_t max_level) {
    const std::vector<OracleBlock> blocks = eigenspace_blocks(field, chi, max_level);
    const int p = field.p();

    // One entry per coordinate: the level of the block it belongs to.
    std::vector<std::int64_t> coord_level;
    for (const OracleBlock& b : blocks) coord_level.insert(coord_level.end(), b.dim, b.level);
    const int dim = static_cast<int>(coord_level.size());
    if (dim > kMaxDim) throw ScaleExceeded("oracle scale exceeded");
    std::int64_t total = 1;
    for (int k = 0; k < dim; ++k) {
        total *= p;
        if (total > kMaxVectors) throw ScaleExceeded("oracle scale exceeded");
    }

    LineCensus census;
    census.dim = dim;
    std::map<std::int64_t, std::int64_t> vectors_at;
    std::vector<int> digits(static_cast<std::size_t>(dim), 0);
    for (std::int64_t visited = 1; visited < total; ++visited) {
        // Odometer step to the next vector.
        for (int k = 0; k < dim; ++k) {
            if (++digits[k] < p) break;
            digits[k] = 0;
        }
        bool any = false;
        std::int64_t level = 0;
        for (int k = 0; k < dim; ++k) {
            if (digits[k] == 0) continue;
            level = any ? std::max(level, coord_level[k]) : coord_level[k];
            any = true;
        }
        ++vectors_at[level];
        ++census.vectors;
    }
    for (const auto& [level, count] : vectors_at) {
        // Each line holds p-1 nonzero vectors, all of the same level.
        if (count % (p - 1) != 0) throw IdentityViolation("vector count not a multiple of p-1");
        census.lines[level] = Integer(static_cast<long>(count / (p - 1)));
    }
    return census;
}

Rational oracle_mass(const LocalField& field, const CharClass& chi, std::int64_t max_level) {
    const LineCensus census = enumerate_lines(field, chi, max_level);
    const Integer multiplicity = chi.omega ? Integer(1) : Integer(field.p());
    Rational out;
    for (const auto& [level, lines] : census.lines) {
        if (level == 0) continue;  // the unramified extension
        out += Rational(lines * multiplicity) * rat_pow(field.q_rational(), -level);
    }
    return out;
}

std::vector<OracleComparison> oracle_check(const LocalField& field, std::int64_t max_level) {
    std::vector<OracleComparison> out;
    const bool full = field.char_zero() && max_level >= static_cast<std::int64_t>(field.p()) * field.finite_e();
    for (const CharClass& chi : enumerate_chars(field)) {
        Rational formula = full ? char_contribution(field, chi) : char_contribution_partial(field, chi, max_level);
        out.push_back({chi, oracle_mass(field, chi, max_level), std::move(formula), full});
    }
    return out;
}

}  // namespace pmass::oracle
