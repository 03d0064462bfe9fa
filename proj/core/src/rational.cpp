#include "pmass/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pmass {

Rational::Rational(std::int64_t value) : value_(Integer(static_cast<long>(value))) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("division by zero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        return Rational(Integer(std::string(text.substr(0, slash))),
                        Integer(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat(const Integer& num, const Integer& den) { return Rational(num, den); }

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

Integer int_pow(const Integer& base, std::uint64_t exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational rat_pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0 && base.is_zero()) throw std::domain_error("division by zero");
    const auto n = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
    const Integer num = int_pow(base.numerator(), n);
    const Integer den = int_pow(base.denominator(), n);
    return exponent < 0 ? Rational(den, num) : Rational(num, den);
}

}  // namespace pmass
