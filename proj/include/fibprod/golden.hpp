#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fibprod/rational.hpp"

namespace fibprod {

// An element a + b*sqrt(5) of the field Q(sqrt 5). Since sqrt(5) is
// irrational the (a, b) pair is unique for every value, so operator== is
// exact equality of real numbers.
class GoldenExt {
public:
    GoldenExt() = default;
    GoldenExt(Rational a, Rational b = Rational(0))  // NOLINT(google-explicit-constructor)
        : a_(std::move(a)), b_(std::move(b)) {}
    GoldenExt(std::int64_t a)  // NOLINT(google-explicit-constructor)
        : a_(a) {}

    static GoldenExt sqrt5() { return {Rational(0), Rational(1)}; }
    static GoldenExt phi() { return {Rational(1, 2), Rational(1, 2)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    // a - b*sqrt(5)
    GoldenExt conj() const { return {a_, -b_}; }
    // x * conj(x) = a^2 - 5 b^2
    Rational norm() const;
    // Throws DivisionByZero for zero.
    GoldenExt inverse() const;

    // Sign of the real value, by exact integer comparison of a^2 and 5 b^2.
    int sign() const;
    GoldenExt abs() const { return sign() < 0 ? -*this : *this; }

    GoldenExt& operator+=(const GoldenExt& rhs);
    GoldenExt& operator-=(const GoldenExt& rhs);
    GoldenExt& operator*=(const GoldenExt& rhs);
    GoldenExt& operator/=(const GoldenExt& rhs);

    friend GoldenExt operator+(GoldenExt lhs, const GoldenExt& rhs) { return lhs += rhs; }
    friend GoldenExt operator-(GoldenExt lhs, const GoldenExt& rhs) { return lhs -= rhs; }
    friend GoldenExt operator*(GoldenExt lhs, const GoldenExt& rhs) { return lhs *= rhs; }
    friend GoldenExt operator/(GoldenExt lhs, const GoldenExt& rhs) { return lhs /= rhs; }
    GoldenExt operator-() const { return {-a_, -b_}; }

    friend bool operator==(const GoldenExt& lhs, const GoldenExt& rhs) = default;
    // Order of the real values.
    friend std::strong_ordering operator<=>(const GoldenExt& lhs, const GoldenExt& rhs);

    // "a + b*sqrt5" with exact rational coefficients.
    std::string to_string() const;

private:
    Rational a_;
    Rational b_;
};

GoldenExt golden_arith(const GoldenExt& x, const GoldenExt& y, ArithOp op);
inline GoldenExt golden_conj(const GoldenExt& x) { return x.conj(); }
inline Rational golden_norm(const GoldenExt& x) { return x.norm(); }
std::strong_ordering golden_cmp(const GoldenExt& x, const GoldenExt& y);

GoldenExt pow(const GoldenExt& base, std::int64_t exponent);

// Rational bracket lo <= x <= hi with width at most |b| * 10^-digits.
struct Enclosure {
    Rational lo;
    Rational hi;
};
Enclosure enclose(const GoldenExt& x, unsigned long digits);

// A rational r >= |x| with r <= |x| * (1 + 10^-rel_digits); 0 for x == 0.
Rational upper_bound_abs(const GoldenExt& x, unsigned long rel_digits = 6);

// Round-half-even decimal expansion with exactly `digits` fractional digits.
// A negative value that rounds to zero keeps its minus sign.
std::string golden_to_decimal(const GoldenExt& x, unsigned long digits);
inline std::string to_decimal(const Rational& x, unsigned long digits) {
    return golden_to_decimal(GoldenExt(x), digits);
}

// Scientific notation of a positive rational, rounded up (or down) to
// `significant` digits, e.g. "9.36e-17". Zero renders as "0".
std::string to_scientific(const Rational& x, unsigned significant, bool round_up = true);

}  // namespace fibprod
