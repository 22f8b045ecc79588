#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fibprod {

using BigInt = mpz_class;

enum class ArithOp { add, sub, mul, div };

// Arbitrary-precision fraction, always held in lowest terms with a positive
// denominator, so equal values have identical representations.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
    // Throws DivisionByZero when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    const BigInt& numerator() const { return value_.get_num(); }
    const BigInt& denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational abs() const;
    // Throws DivisionByZero for zero.
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

// Exact x op y. Throws DivisionByZero for op == div and y == 0.
Rational rat_arith(const Rational& x, const Rational& y, ArithOp op);

Rational pow(const Rational& base, std::int64_t exponent);

// Floor of the square root of a non-negative integer.
BigInt isqrt(const BigInt& value);

BigInt pow10(unsigned long exponent);

std::string to_string(const BigInt& value);

}  // namespace fibprod
