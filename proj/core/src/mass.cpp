#include "pmass/mass.hpp"

#include <algorithm>

#include "pmass/errors.hpp"
#include "pmass/model.hpp"
#include "pmass/series.hpp"

namespace pmass {

namespace {

Rational q_pow(const LocalField& field, std::int64_t exponent) {
    return rat_pow(field.q_rational(), exponent);
}

/// p(q-1)/(p-1): points gained per stratum, times p, per character.
Rational prefactor(const LocalField& field) {
    const Integer p(field.p());
    return Rational(p * (field.q() - 1), p - 1);
}

Rational direct_class_sum(const LocalField& field, int vbar) {
    const std::int64_t p = field.p();
    Rational sum;
    if (field.char_zero()) {
        for (std::int64_t i = 0; i < field.finite_e(); ++i) {
            sum += q_pow(field, i - (p * i + j_index(field, vbar, i)));
        }
        return prefactor(field) * sum;
    }
    // j_{chi,i} depends on i mod (p-1) only, so each residue class r is a
    // geometric series with ratio q^{-(p-1)^2}.
    const std::int64_t m = field.modulus();
    for (std::int64_t r = 0; r < m; ++r) {
        sum += q_pow(field, r - (p * r + j_index(field, vbar, r)));
    }
    return prefactor(field) * sum * geom_infinite(q_pow(field, -m * m));
}

/// p q^{p-2}(q-1)(q^{(p-2)(p-1)}-1) / ((p-1)(q^{p-2}-1)(q^{(p-1)^2}-1))
Rational closed_char_p_cyclic(const LocalField& field) {
    const Integer& q = field.q();
    const Integer p(field.p());
    const auto pl = static_cast<std::uint64_t>(field.p());
    const Integer num = p * int_pow(q, pl - 2) * (q - 1) * (int_pow(q, (pl - 2) * (pl - 1)) - 1);
    const Integer den = (p - 1) * (int_pow(q, pl - 2) - 1) * (int_pow(q, (pl - 1) * (pl - 1)) - 1);
    return Rational(num, den);
}

/// p(q-1)/(p-1) times
///   q^{p-2}(q^{(p-2)a}-1) / (q^{(p-1)a}(q^{p-2}-1))
/// + q^{p-2}(q^{(p-2)(p-1)}-1) / (q^{(p-1)a}(q^{p-2}-1)(q^{(p-1)^2}-1))
Rational closed_char_p_offset(const LocalField& field, int a) {
    const Integer& q = field.q();
    const auto pl = static_cast<std::uint64_t>(field.p());
    const auto al = static_cast<std::uint64_t>(a);
    const Integer qp2 = int_pow(q, pl - 2);
    const Integer qa = int_pow(q, (pl - 1) * al);
    const Rational head(qp2 * (int_pow(q, (pl - 2) * al) - 1), qa * (qp2 - 1));
    const Rational tail(qp2 * (int_pow(q, (pl - 2) * (pl - 1)) - 1),
                        qa * (qp2 - 1) * (int_pow(q, (pl - 1) * (pl - 1)) - 1));
    return prefactor(field) * (head + tail);
}

/// Characteristic 0, any class: with vbar(chi) = vbar(omega) - a, the strata
/// i < min(a, e) have j = a - i; the remaining e - a strata are split as
/// e - a - 1 = (p-1)N + R into N full periods (I) and a remainder (J).
Rational closed_char_zero(const LocalField& field, int a) {
    const std::int64_t p = field.p();
    const std::int64_t m = p - 1;
    const std::int64_t e = field.finite_e();
    const Rational step = q_pow(field, -(p - 2));

    const std::int64_t head_terms = std::min<std::int64_t>(a, e);
    Rational sum = q_pow(field, -a) * geom_finite(step, static_cast<std::uint64_t>(head_terms));

    const std::int64_t body = e - a;
    if (body >= 1) {
        const std::int64_t N = (body - 1) / m;
        const std::int64_t R = (body - 1) % m;
        const Rational period_sum = geom_finite(step, static_cast<std::uint64_t>(m));
        const Rational qmm = q_pow(field, m * m);
        const Rational qmmN = q_pow(field, m * m * N);
        const Rational I = q_pow(field, -m * (a + 1)) * (qmm / (qmm - 1)) * ((qmmN - 1) / qmmN) * period_sum;
        const Rational J = q_pow(field, -m * m * N - m * (a + 1)) *
                           geom_finite(step, static_cast<std::uint64_t>(R + 1));
        sum += I + J;
    }
    return prefactor(field) * sum;
}

Rational closed_class_sum(const LocalField& field, int vbar) {
    if (field.char_p() && field.p() == 2) return Rational(2);
    const int a = field.residue(static_cast<std::int64_t>(vbar_omega(field)) - vbar);
    if (field.char_zero()) return closed_char_zero(field, a);
    return a == 0 ? closed_char_p_cyclic(field) : closed_char_p_offset(field, a);
}

}  // namespace

Rational stratum_contribution(const LocalField& field, int vbar, std::int64_t i) {
    if (field.char_zero() && i >= field.finite_e()) {
        throw InvalidParameter("stratum beyond ramification bound");
    }
    const std::int64_t level = static_cast<std::int64_t>(field.p()) * i + j_index(field, vbar, i);
    return prefactor(field) * q_pow(field, i - level);
}

Rational tres_contribution(const LocalField& field) {
    const std::int64_t p = field.p();
    return Rational(p) * q_pow(field, -(p - 1) * field.finite_e());
}

Rational char_contribution(const LocalField& field, const CharClass& chi) {
    chi.validate(field);
    Rational out = direct_class_sum(field, chi.vbar);
    if (field.char_zero() && chi.trivial) out += tres_contribution(field);
    return out;
}

Rational char_contribution_closed(const LocalField& field, const CharClass& chi) {
    chi.validate(field);
    Rational out = closed_class_sum(field, chi.vbar);
    if (field.char_zero() && chi.trivial) out += tres_contribution(field);
    return out;
}

Rational char_contribution_partial(const LocalField& field, const CharClass& chi,
                                   std::int64_t max_level) {
    chi.validate(field);
    const std::int64_t p = field.p();
    Rational out;
    // Levels in stratum i are at least p*i + 1.
    std::int64_t strata = max_level < 1 ? 0 : (max_level - 1) / p + 1;
    if (field.char_zero()) strata = std::min<std::int64_t>(strata, field.finite_e());
    for (std::int64_t i = 0; i < strata; ++i) {
        if (p * i + j_index(field, chi, i) <= max_level) out += stratum_contribution(field, chi.vbar, i);
    }
    if (field.char_zero() && chi.trivial && p * field.finite_e() <= max_level) {
        out += tres_contribution(field);
    }
    return out;
}

PeuTresSplit peu_tres_split(const LocalField& field) {
    if (field.char_p()) throw InvalidParameter("no tres ramifiees stratum");
    const std::int64_t p = field.p();
    const Rational decay = q_pow(field, (1 - p) * field.finite_e());
    PeuTresSplit split{Rational(p) * (Rational(1) - decay), Rational(p) * decay};

    Rational peu_from_classes;
    for (int w = 0; w < field.modulus(); ++w) peu_from_classes += direct_class_sum(field, w);
    peu_from_classes *= Rational(p - 1);
    if (peu_from_classes != split.peu) {
        throw IdentityViolation("peu ramifiees sum " + peu_from_classes.str() + " != " + split.peu.str());
    }
    if (split.tres != tres_contribution(field)) throw IdentityViolation("tres ramifiees term mismatch");
    return split;
}

ChecksumResult checksum_identity(int p, const Integer& q) {
    if (!is_prime(p) || p < 3) throw InvalidParameter("checksum needs an odd prime p");
    Integer power = q;
    std::uint64_t f = 0;
    while (power > 1 && power % p == 0) {
        power /= p;
        ++f;
    }
    if (power != 1 || f == 0) throw InvalidParameter("q must be a power of p");

    const auto pl = static_cast<std::uint64_t>(p);
    const Integer qmm1 = int_pow(q, (pl - 1) * (pl - 1)) - 1;
    const Integer qp2 = int_pow(q, pl - 2);
    Rational lhs;
    for (std::uint64_t a = 0; a + 2 <= pl; ++a) {
        const Integer num = (int_pow(q, (pl - 2) * a) - 1) * qmm1 + (int_pow(q, (pl - 2) * (pl - 1)) - 1);
        lhs += Rational(num, int_pow(q, (pl - 1) * a));
    }
    const Rational rhs((qp2 - 1) * qmm1, qp2 * (q - 1));
    if (lhs != rhs) throw IdentityViolation("checksum identity failed: " + lhs.str() + " != " + rhs.str());

    // Each a-term, scaled by the common factor of the offset formula, is one
    // valuation class; there are p-1 characters per class.
    const Integer P(p);
    const Rational per_class_scale = Rational(P * (q - 1), P - 1) * Rational(qp2, (qp2 - 1) * qmm1);
    const Rational total = Rational(Integer(P - 1)) * per_class_scale * lhs;
    if (total != Rational(P)) throw IdentityViolation("checksum does not reproduce the mass p");
    return {lhs, rhs, total};
}

MassReport total_mass(const LocalField& field, std::optional<std::int64_t> count_bound) {
    const std::int64_t p = field.p();
    MassReport report{field, {}, Rational(0), {}, std::nullopt, Rational(0), Rational(0),
                      count_bound, std::nullopt, p == 2};

    for (int w = 0; w < field.modulus(); ++w) report.per_vbar.push_back(direct_class_sum(field, w));
    if (field.char_zero()) {
        report.tres_extra = tres_contribution(field);
        report.split = peu_tres_split(field);
    }
    for (const CharClass& chi : enumerate_chars(field)) {
        Rational c = char_contribution(field, chi);
        report.total += c;
        report.per_character.push_back({chi, std::move(c)});
    }

    Rational by_class = report.tres_extra;
    for (const Rational& v : report.per_vbar) by_class += Rational(p - 1) * v;
    if (by_class != report.total) {
        throw IdentityViolation("per-class total " + by_class.str() + " != per-character total " +
                                report.total.str());
    }
    if (report.total != Rational(p)) {
        throw IdentityViolation("ramified mass " + report.total.str() + " != " + std::to_string(p));
    }
    report.grand_total = report.total + q_pow(field, -c_of_unramified());

    const bool counts_known = field.char_p() ? count_bound.has_value()
                                             : field.omega_trivial() != Tristate::Unknown;
    if (counts_known) {
        report.counts = count_table(field, count_bound);
        if (field.char_zero() && !count_bound && mass_from_counts(field, *report.counts) != report.total) {
            throw IdentityViolation("mass rebuilt from extension counts differs from the total");
        }
    }
    return report;
}

}  // namespace pmass
