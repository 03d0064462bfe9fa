#include "pmass/model.hpp"

#include <numeric>
#include <string>

#include "pmass/errors.hpp"

namespace pmass {

std::int64_t b_seq(int p, std::int64_t n) {
    if (n < 0) throw InvalidParameter("b_seq index must be >= 0");
    if (n == 0) return 0;
    return n + (n - 1) / (p - 1);
}

std::int64_t b_seq(const LocalField& field, std::int64_t n) { return b_seq(field.p(), n); }

int vbar_omega(const LocalField& field) {
    return field.char_p() ? 0 : field.residue(field.finite_e());
}

int j_index(const LocalField& field, int vbar, std::int64_t i) {
    if (i < 0) throw InvalidParameter("stratum index must be >= 0");
    const int j = field.residue(static_cast<std::int64_t>(vbar_omega(field)) - vbar - i);
    return j == 0 ? field.modulus() : j;
}

int j_index(const LocalField& field, const CharClass& chi, std::int64_t i) {
    return j_index(field, chi.vbar, i);
}

std::int64_t level_of(const LocalField& field, const CharClass& chi, std::int64_t i) {
    if (field.char_zero() && i >= field.finite_e()) {
        throw InvalidParameter("stratum beyond ramification bound");
    }
    return static_cast<std::int64_t>(field.p()) * i + j_index(field, chi, i);
}

std::int64_t eigenspace_dim(const LocalField& field, const CharClass& chi, std::int64_t t) {
    if (t < 0) throw InvalidParameter("step must be >= 0");
    if (field.char_zero() && t > field.finite_e()) {
        throw InvalidParameter("step beyond ramification bound");
    }
    return t * field.f() + (chi.omega ? 1 : 0);
}

std::int64_t full_eigenspace_dim(const LocalField& field, const CharClass& chi) {
    if (field.char_p()) throw InvalidParameter("eigenspaces are infinite-dimensional in characteristic p");
    return eigenspace_dim(field, chi, field.finite_e()) + (chi.trivial ? 1 : 0);
}

void BreakData::validate(int p) const {
    if (b < 1 || t < 1 || r < 1) throw InvalidParameter("break data must be positive");
    if ((p - 1) % t != 0) throw InvalidParameter("t must divide p-1");
    if (std::gcd(b, t) != 1) throw InvalidParameter("gcd(b, t) must be 1");
}

std::int64_t disc_valuation(int p, const BreakData& bd) {
    bd.validate(p);
    const std::int64_t numerator = static_cast<std::int64_t>(p - 1) * (bd.b + bd.t);
    if (numerator % bd.t != 0) throw InvalidParameter("inconsistent break data");
    return numerator / bd.t;
}

std::int64_t wild_exponent(int p, const BreakData& bd) { return disc_valuation(p, bd) - (p - 1); }

}  // namespace pmass
