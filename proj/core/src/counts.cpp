#include "pmass/counts.hpp"

#include "pmass/errors.hpp"
#include "pmass/model.hpp"

namespace pmass {

namespace {

/// Number of lines in an F_p-space with `points` elements.
Integer lines_in(const Integer& points, int p) {
    const Integer n = points - 1;
    if (n % (p - 1) != 0) throw IdentityViolation("point count not congruent to 1 mod p-1");
    return n / (p - 1);
}

/// Lines of the chi-eigenspace gained at stratum i. The eigenspace before the
/// stratum has q^i points, times p when it contains the omega line.
Integer stratum_lines(const LocalField& field, bool is_omega, std::int64_t i) {
    const auto ui = static_cast<std::uint64_t>(i);
    const Integer base = is_omega ? Integer(field.p()) : Integer(1);
    return lines_in(base * int_pow(field.q(), ui + 1), field.p()) -
           lines_in(base * int_pow(field.q(), ui), field.p());
}

/// Lines of the trivial eigenspace outside the principal units. Before the
/// very-ramified line it has q^e points (times p when 1 = omega).
Integer tres_lines(const LocalField& field, bool trivial_is_omega) {
    const Integer base = trivial_is_omega ? Integer(field.p()) : Integer(1);
    const Integer inner = base * int_pow(field.q(), static_cast<std::uint64_t>(field.finite_e()));
    return lines_in(Integer(field.p()) * inner, field.p()) - lines_in(inner, field.p());
}

}  // namespace

ExtensionCount count_extensions(const LocalField& field, const CharClass& chi, const Stratum& stratum) {
    chi.validate(field);
    ExtensionCount out;
    out.degenerate = field.p() == 2;
    const Integer p(field.p());

    if (std::holds_alternative<TresStratum>(stratum)) {
        if (field.char_p()) throw InvalidParameter("no tres ramifiees stratum");
        if (!chi.trivial) throw InvalidParameter("only the trivial character has a level-pe line");
        const Tristate trivial_omega = field.omega_trivial();
        if (trivial_omega == Tristate::Unknown) throw InvalidParameter("omega class required");
        const bool is_omega = trivial_omega == Tristate::Yes;
        out.level = static_cast<std::int64_t>(field.p()) * field.finite_e();
        out.lines = tres_lines(field, is_omega);
        out.extensions = is_omega ? out.lines : Integer(p * out.lines);
    } else {
        const std::int64_t i = std::get<std::int64_t>(stratum);
        if (i < 0) throw InvalidParameter("stratum index must be >= 0");
        out.level = level_of(field, chi, i);
        out.lines = stratum_lines(field, chi.omega, i);
        out.extensions = chi.omega ? out.lines : Integer(p * out.lines);
    }
    out.conjugacy_classes = out.lines;
    return out;
}

CountTable count_table(const LocalField& field, std::optional<std::int64_t> max_level) {
    const std::int64_t p = field.p();
    const int m = field.modulus();
    const int omega_class = vbar_omega(field);
    std::int64_t bound = 0;
    if (field.char_zero()) {
        if (field.omega_trivial() == Tristate::Unknown) throw InvalidParameter("omega class required");
        bound = max_level.value_or(p * field.finite_e());
    } else {
        if (!max_level) throw InvalidParameter("a level bound is required in characteristic p");
        bound = *max_level;
    }

    CountTable table;
    std::int64_t strata = bound < 1 ? 0 : (bound - 1) / p + 1;
    if (field.char_zero()) strata = std::min<std::int64_t>(strata, field.finite_e());
    for (std::int64_t i = 0; i < strata; ++i) {
        for (int w = 0; w < m; ++w) {
            const std::int64_t level = p * i + j_index(field, w, i);
            if (level > bound) continue;
            // Exactly one character of omega's class is omega itself.
            const long omegas = w == omega_class ? 1 : 0;
            const long others = m - omegas;
            const Integer omega_lines = stratum_lines(field, true, i);
            const Integer other_lines = stratum_lines(field, false, i);
            LevelCount row;
            row.vbar = w;
            row.lines = omegas * omega_lines + others * other_lines;
            row.extensions = omegas * omega_lines + others * p * other_lines;
            row.conjugacy_classes = row.lines;
            table.emplace(level, std::move(row));
        }
    }
    if (field.char_zero() && p * field.finite_e() <= bound) {
        const bool is_omega = field.omega_trivial() == Tristate::Yes;
        LevelCount row;
        row.tres = true;
        row.lines = tres_lines(field, is_omega);
        row.extensions = is_omega ? row.lines : Integer(p * row.lines);
        row.conjugacy_classes = row.lines;
        table.emplace(p * field.finite_e(), std::move(row));
    }
    return table;
}

Rational mass_from_counts(const LocalField& field, const CountTable& table) {
    Rational out;
    for (const auto& [level, row] : table) out += Rational(row.extensions) * rat_pow(field.q_rational(), -level);
    return out;
}

}  // namespace pmass
