#include "fibprod/golden.hpp"

#include <cstdio>
#include <stdexcept>

#include "fibprod/errors.hpp"

namespace fibprod {

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

BigInt ceil_of(const Rational& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

std::strong_ordering from_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Round-half-even of a rational to an integer.
BigInt round_half_even(const Rational& r) {
    const BigInt fl = floor_of(r);
    const Rational frac = r - Rational(fl);
    const auto half = frac <=> Rational(1, 2);
    if (half < 0) return fl;
    if (half > 0) return fl + 1;
    return mpz_even_p(fl.get_mpz_t()) != 0 ? fl : BigInt(fl + 1);
}

// Nearest integer to y, where y is irrational (b != 0). Estimates with
// `guard` extra digits of sqrt(5) and accepts only an exactly certified answer.
BigInt nearest_integer_irrational(const GoldenExt& y) {
    unsigned long guard = 10;
    const Rational half(1, 2);
    for (;;) {
        const BigInt scale = pow10(guard);
        const BigInt s = isqrt(BigInt(5 * scale * scale));
        const BigInt approx = floor_of(y.a() * Rational(scale)) + floor_of(y.b() * Rational(s));
        const BigInt z = floor_div(approx + scale / 2, scale);
        const GoldenExt d = y - GoldenExt(Rational(z));
        if (d < GoldenExt(half) && d > GoldenExt(-half)) {
            return z;
        }
        guard = 2 * guard + mpz_sizeinbase(y.b().numerator().get_mpz_t(), 10);
    }
}

}  // namespace

Rational GoldenExt::norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

GoldenExt GoldenExt::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    const Rational n = norm();
    return {a_ / n, -b_ / n};
}

int GoldenExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: |a| vs |b| sqrt5, i.e. a^2 vs 5 b^2 cross-multiplied.
    const BigInt lhs = a_.numerator() * a_.numerator() * b_.denominator() * b_.denominator();
    const BigInt rhs = 5 * b_.numerator() * b_.numerator() * a_.denominator() * a_.denominator();
    const int c = cmp(lhs, rhs);
    return c > 0 ? sa : sb;
}

GoldenExt& GoldenExt::operator+=(const GoldenExt& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

GoldenExt& GoldenExt::operator-=(const GoldenExt& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

GoldenExt& GoldenExt::operator*=(const GoldenExt& rhs) {
    if (rhs.is_rational()) {
        a_ *= rhs.a_;
        b_ *= rhs.a_;
        return *this;
    }
    Rational a = a_ * rhs.a_ + Rational(5) * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenExt& GoldenExt::operator/=(const GoldenExt& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    if (rhs.is_rational()) {
        a_ /= rhs.a_;
        b_ /= rhs.a_;
        return *this;
    }
    return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const GoldenExt& lhs, const GoldenExt& rhs) {
    return from_sign((lhs - rhs).sign());
}

std::string GoldenExt::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out;
    if (!a_.is_zero()) {
        out = a_.to_string() + (b_.sign() < 0 ? " - " : " + ");
    } else if (b_.sign() < 0) {
        out = "-";
    }
    const Rational mag = b_.abs();
    if (mag != Rational(1)) out += mag.to_string() + "*";
    return out + "sqrt5";
}

GoldenExt golden_arith(const GoldenExt& x, const GoldenExt& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

std::strong_ordering golden_cmp(const GoldenExt& x, const GoldenExt& y) { return x <=> y; }

GoldenExt pow(const GoldenExt& base, std::int64_t exponent) {
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    GoldenExt result(1);
    GoldenExt square = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) result *= square;
        e >>= 1U;
        if (e != 0) square *= square;
    }
    return result;
}

Enclosure enclose(const GoldenExt& x, unsigned long digits) {
    if (x.is_rational()) {
        return {x.a(), x.a()};
    }
    const BigInt scale = pow10(digits);
    const BigInt s = isqrt(BigInt(5 * scale * scale));
    const Rational s_lo(s, scale);
    const Rational s_hi(s + 1, scale);
    if (x.b().sign() > 0) {
        return {x.a() + x.b() * s_lo, x.a() + x.b() * s_hi};
    }
    return {x.a() + x.b() * s_hi, x.a() + x.b() * s_lo};
}

Rational upper_bound_abs(const GoldenExt& x, unsigned long rel_digits) {
    const GoldenExt y = x.abs();
    if (y.is_rational()) return y.a();
    const Rational tolerance(BigInt(1), pow10(rel_digits));
    unsigned long digits = 20 + rel_digits;
    for (;;) {
        const Enclosure e = enclose(y, digits);
        if (e.lo.sign() > 0 && e.hi - e.lo <= e.lo * tolerance) {
            return e.hi;
        }
        digits *= 2;
    }
}

std::string golden_to_decimal(const GoldenExt& x, unsigned long digits) {
    if (digits < 1) {
        throw std::invalid_argument("decimal rendering needs at least one digit");
    }
    const BigInt scale = pow10(digits);
    const GoldenExt scaled = x * GoldenExt(Rational(scale));
    const BigInt z = scaled.is_rational() ? round_half_even(scaled.a())
                                          : nearest_integer_irrational(scaled);

    BigInt mag = ::abs(z);
    const BigInt int_part = mag / scale;
    std::string frac = BigInt(mag % scale).get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string out = x.sign() < 0 ? "-" : "";
    return out + int_part.get_str() + "." + frac;
}

std::string to_scientific(const Rational& x, unsigned significant, bool round_up) {
    if (x.sign() < 0) {
        throw std::invalid_argument("to_scientific expects a non-negative value");
    }
    if (x.is_zero()) return "0";
    if (significant < 1) significant = 1;

    // Decimal exponent e with 10^e <= x < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 10));
    auto power = [](long k) {
        return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                      : Rational(BigInt(1), pow10(static_cast<unsigned long>(-k)));
    };
    while (power(e) > x) --e;
    while (power(e + 1) <= x) ++e;

    const Rational shifted = x * power(static_cast<long>(significant) - 1 - e);
    BigInt mantissa = round_up ? ceil_of(shifted) : floor_of(shifted);
    if (mantissa == pow10(significant)) {
        mantissa = pow10(significant - 1);
        ++e;
    }
    std::string m = mantissa.get_str();
    if (m.size() > 1) m.insert(1, ".");
    char exp_buf[16];
    std::snprintf(exp_buf, sizeof exp_buf, "e%+03ld", e);
    return m + exp_buf;
}

}  // namespace fibprod
