#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by GMP.
 *
 * Every mass, contribution and partial sum in the library is a Rational.
 * Values are always kept in lowest terms with a positive denominator, so
 * equality is structural equality of the normalized pair.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pmass {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
    /// Accepts unevaluated gmpxx integer expressions such as a * b - 1.
    template <class Expr>
    Rational(const __gmp_expr<mpz_t, Expr>& value) : Rational(Integer(value)) {}  // NOLINT

    /// Throws std::domain_error("division by zero") when den == 0.
    Rational(const Integer& num, const Integer& den);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] Rational abs() const;

    /// "num/den" in lowest terms, or just "num" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    /// Inverse of str(); accepts "n" or "n/d" with optional sign.
    static Rational parse(std::string_view text);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

// Free-function surface used throughout the formulas.

/// Normalized num/den; throws std::domain_error on den == 0.
Rational rat(const Integer& num, const Integer& den);

enum class ArithOp { Add, Sub, Mul, Div };

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// Exact integer power; negative exponents invert. 0^n with n < 0 throws.
Rational rat_pow(const Rational& base, std::int64_t exponent);

/// base^exponent for a non-negative exponent.
Integer int_pow(const Integer& base, std::uint64_t exponent);

}  // namespace pmass
