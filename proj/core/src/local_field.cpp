#include "pmass/local_field.hpp"

#include <numeric>
#include <sstream>

#include "pmass/errors.hpp"

namespace pmass {

namespace {

constexpr int kMaxPrime = 1 << 15;
constexpr int kMaxResidueDegree = 256;

int mod(std::int64_t value, int m) {
    const auto r = static_cast<int>(value % m);
    return r < 0 ? r + m : r;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

LocalField::LocalField(int p, int f, std::optional<int> e, std::optional<CharCoords> omega)
    : p_(p), f_(f), e_(e) {
    if (p > kMaxPrime || !is_prime(p)) {
        throw InvalidParameter("p must be a prime below " + std::to_string(kMaxPrime) +
                               ", got " + std::to_string(p));
    }
    if (f < 1 || f > kMaxResidueDegree) {
        throw InvalidParameter("f must lie in [1, " + std::to_string(kMaxResidueDegree) + "]");
    }
    if (e && *e < 1) throw InvalidParameter("e must be >= 1 or inf");
    q_ = int_pow(Integer(p), static_cast<std::uint64_t>(f));

    if (omega) {
        CharCoords w{mod(omega->a, modulus()), mod(omega->b, modulus())};
        if (char_p() && !(w == CharCoords{})) {
            throw InvalidParameter("omega is trivial in characteristic p");
        }
        if (char_zero() && w.a != residue(*e_)) {
            throw InvalidParameter("omega must have valuation class e mod (p-1)");
        }
        omega_ = w;
    }
}

LocalField LocalField::mixed(int p, int f, int e, std::optional<CharCoords> omega) {
    return LocalField(p, f, e, omega);
}

LocalField LocalField::equal_char(int p, int f) { return LocalField(p, f, std::nullopt, std::nullopt); }

int LocalField::finite_e() const {
    if (!e_) throw InvalidParameter("no finite ramification index in characteristic p");
    return *e_;
}

std::optional<CharCoords> LocalField::omega_coords() const {
    if (char_p() || p_ == 2) return CharCoords{};
    return omega_;
}

Tristate LocalField::omega_trivial() const {
    if (auto w = omega_coords()) return *w == CharCoords{} ? Tristate::Yes : Tristate::No;
    return residue(*e_) != 0 ? Tristate::No : Tristate::Unknown;
}

int LocalField::residue(std::int64_t value) const { return mod(value, modulus()); }

std::string LocalField::describe() const {
    std::ostringstream os;
    os << "p=" << p_ << " f=" << f_ << " e=";
    if (e_) {
        os << *e_;
    } else {
        os << "inf";
    }
    if (char_zero() && omega_) os << " omega=(" << omega_->a << "," << omega_->b << ")";
    return os.str();
}

CharClass CharClass::generic(const LocalField& field, int vbar) {
    CharClass c;
    c.vbar = field.residue(vbar);
    c.validate(field);
    return c;
}

CharClass CharClass::trivial_char(const LocalField& field) {
    return from_coords(field, CharCoords{});
}

CharClass CharClass::omega_char(const LocalField& field) {
    if (auto w = field.omega_coords()) return from_coords(field, *w);
    // Omega's coordinates are unknown but its valuation class is e mod (p-1);
    // it can only be represented when it is certainly not trivial.
    if (field.omega_trivial() != Tristate::No) throw InvalidParameter("omega class required");
    CharClass c;
    c.vbar = field.residue(field.finite_e());
    c.omega = true;
    return c;
}

CharClass CharClass::from_coords(const LocalField& field, CharCoords coords) {
    CharClass c;
    coords = {field.residue(coords.a), field.residue(coords.b)};
    c.coords = coords;
    c.vbar = coords.a;
    c.trivial = coords == CharCoords{};
    if (auto w = field.omega_coords()) c.omega = *w == coords;
    return c;
}

std::string CharClass::label() const {
    if (trivial && omega) return "trivial+omega";
    if (trivial) return "trivial";
    if (omega) return "omega";
    return "none";
}

void CharClass::validate(const LocalField& field) const {
    const int m = field.modulus();
    if (vbar < 0 || vbar >= m) throw InvalidParameter("vbar out of range [0, p-1)");
    if (trivial && vbar != 0) throw InvalidParameter("the trivial character has vbar 0");
    if (coords) {
        if (coords->a != vbar) throw InvalidParameter("character coordinates disagree with vbar");
        if (trivial != (*coords == CharCoords{})) {
            throw InvalidParameter("trivial flag disagrees with coordinates");
        }
    }
    if (field.char_p() || field.p() == 2) {
        if (trivial != omega) throw InvalidParameter("omega is the trivial character here");
        return;
    }
    if (omega && vbar != field.residue(field.finite_e())) {
        throw InvalidParameter("omega has valuation class e mod (p-1)");
    }
    if (auto w = field.omega_coords(); w && coords && omega != (*w == *coords)) {
        throw InvalidParameter("omega flag disagrees with the field's omega class");
    }
}

std::vector<CharClass> enumerate_chars(const LocalField& field) {
    const int m = field.modulus();
    std::vector<CharClass> out;
    out.reserve(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) out.push_back(CharClass::from_coords(field, {a, b}));
    }
    return out;
}

int char_order(const LocalField& field, CharCoords coords) {
    const int m = field.modulus();
    const int g = std::gcd(std::gcd(field.residue(coords.a), field.residue(coords.b)), m);
    return m / g;
}

}  // namespace pmass
