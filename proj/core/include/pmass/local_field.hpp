#pragma once

/**
 * @file local_field.hpp
 * @brief Parameters of a local field with finite residue field, and the
 *        characters of G = Gal(K|F) as the mass formulas see them.
 *
 * A field is described by (p, f, e): residue characteristic p, residue
 * degree f and absolute ramification index e, with e = infinity meaning the
 * equal-characteristic case k((t)). Nothing here represents field elements.
 *
 * Characters of G are identified with F^x / F^x(p-1) ~ (Z/(p-1))^2 through
 * coordinates (a, b) in the basis (class of a uniformiser, class of a
 * generator of k^x). The first coordinate is the valuation class vbar.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmass/rational.hpp"

namespace pmass {

/// Coordinates of a character in (Z/(p-1))^2; `a` is the valuation class.
struct CharCoords {
    int a = 0;
    int b = 0;
    friend bool operator==(const CharCoords&, const CharCoords&) = default;
};

enum class Tristate { No, Yes, Unknown };

bool is_prime(std::int64_t n);

class LocalField {
public:
    /// Finite extension of Q_p with ramification index e. `omega` optionally
    /// pins the coordinates of the cyclotomic character (the class of -p).
    static LocalField mixed(int p, int f, int e, std::optional<CharCoords> omega = std::nullopt);

    /// k((t)) with |k| = p^f.
    static LocalField equal_char(int p, int f);

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int f() const { return f_; }
    [[nodiscard]] std::optional<int> e() const { return e_; }
    [[nodiscard]] bool char_p() const { return !e_.has_value(); }
    [[nodiscard]] bool char_zero() const { return e_.has_value(); }

    /// e, throwing InvalidParameter in the equal-characteristic case.
    [[nodiscard]] int finite_e() const;

    [[nodiscard]] const Integer& q() const { return q_; }
    [[nodiscard]] Rational q_rational() const { return Rational(q_); }

    /// p - 1, the modulus of valuation classes.
    [[nodiscard]] int modulus() const { return p_ - 1; }

    /// Coordinates of omega when known: always (0,0) in characteristic p.
    [[nodiscard]] std::optional<CharCoords> omega_coords() const;

    /// Whether omega is the trivial character.
    [[nodiscard]] Tristate omega_trivial() const;

    /// Reduces an integer into [0, p-1).
    [[nodiscard]] int residue(std::int64_t value) const;

    /// e.g. "p=3 f=1 e=inf".
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const LocalField&, const LocalField&) = default;

private:
    LocalField(int p, int f, std::optional<int> e, std::optional<CharCoords> omega);

    int p_;
    int f_;
    std::optional<int> e_;
    std::optional<CharCoords> omega_;
    Integer q_;
};

/// A character of G reduced to what the formulas consume.
struct CharClass {
    int vbar = 0;
    bool trivial = false;
    bool omega = false;
    std::optional<CharCoords> coords;

    /// A non-distinguished character of the given valuation class. Throws if
    /// the class forces a distinguished character (p = 2).
    static CharClass generic(const LocalField& field, int vbar);
    static CharClass trivial_char(const LocalField& field);
    /// Throws InvalidParameter("omega class required") when omega cannot be
    /// told apart from the trivial character.
    static CharClass omega_char(const LocalField& field);
    static CharClass from_coords(const LocalField& field, CharCoords coords);

    /// "trivial", "omega", "trivial+omega" or "none".
    [[nodiscard]] std::string label() const;

    /// Throws InvalidParameter when the flags contradict the field.
    void validate(const LocalField& field) const;

    friend bool operator==(const CharClass&, const CharClass&) = default;
};

/// All (p-1)^2 characters, ordered lexicographically by (a, b).
std::vector<CharClass> enumerate_chars(const LocalField& field);

/// Order of the character with these coordinates in (Z/(p-1))^2.
int char_order(const LocalField& field, CharCoords coords);

}  // namespace pmass
