#include "fibprod/rational.hpp"

#include <stdexcept>
#include <utility>

#include "fibprod/errors.hpp"

namespace fibprod {

Rational::Rational(std::int64_t value) {
    // mpz_class has no int64_t constructor where long is 32 bits.
    if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
        value_ = mpq_class(static_cast<long>(value));
    } else {
        value_ = mpq_class(BigInt(std::to_string(value)));
    }
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rational(mpq_class(1 / value_));
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
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator().get_str();
    }
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational rat_arith(const Rational& x, const Rational& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    Rational result(1);
    Rational square = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) result *= square;
        e >>= 1U;
        if (e != 0) square *= square;
    }
    return result;
}

BigInt isqrt(const BigInt& value) {
    if (value < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
    return root;
}

BigInt pow10(unsigned long exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace fibprod
