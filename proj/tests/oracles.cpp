#include "oracles.hpp"

#include <stdexcept>

namespace fibprod::oracle {

namespace {

template <class Seed>
BigInt step_recurrence(std::int64_t n, Seed seed0, Seed seed1) {
    BigInt a = seed0;  // x_i
    BigInt b = seed1;  // x_{i+1}
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) {
            BigInt next = a + b;
            a = b;
            b = next;
        }
        return a;
    }
    // x_{i-1} = x_{i+1} - x_i
    for (std::int64_t i = 0; i > n; --i) {
        BigInt prev = b - a;
        b = a;
        a = prev;
    }
    return a;
}

BigInt ten_pow(unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

// value / 10^guard rounded half-even; the caller guarantees no near-ties.
std::string render_scaled(const BigInt& scaled, unsigned guard, unsigned digits) {
    const BigInt unit = ten_pow(guard);
    BigInt q = scaled / unit;
    const BigInt rem = scaled % unit;
    if (2 * rem > unit || (2 * rem == unit && q % 2 != 0)) q += 1;
    std::string s = q.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return s;
}

}  // namespace

BigInt naive_fib(std::int64_t n) { return step_recurrence<int>(n, 0, 1); }

BigInt naive_lucas(std::int64_t n) { return step_recurrence<int>(n, 2, 1); }

BigInt digit_sqrt(const BigInt& value) {
    if (value < 0) throw std::domain_error("negative");
    std::string digits = value.get_str();
    if (digits.size() % 2 != 0) digits.insert(0, "0");
    BigInt root = 0;
    BigInt remainder = 0;
    for (std::size_t i = 0; i < digits.size(); i += 2) {
        remainder = remainder * 100 + std::stoi(digits.substr(i, 2));
        int d = 9;
        while ((20 * root + d) * d > remainder) --d;
        remainder -= (20 * root + d) * d;
        root = root * 10 + d;
    }
    return root;
}

std::string sqrt5_decimal(unsigned digits) {
    constexpr unsigned guard = 12;
    const unsigned total = digits + guard;
    const BigInt s = digit_sqrt(5 * ten_pow(2 * total));
    return render_scaled(s, guard, digits);
}

std::string phi_decimal(unsigned digits) {
    constexpr unsigned guard = 12;
    const unsigned total = digits + guard;
    const BigInt s = digit_sqrt(5 * ten_pow(2 * total));
    // phi * 10^total = (10^total + sqrt5 * 10^total) / 2, truncated.
    return render_scaled((ten_pow(total) + s) / 2, guard, digits);
}

Rational parse_decimal(const std::string& text) {
    std::string t = text;
    bool negative = false;
    if (!t.empty() && t[0] == '-') {
        negative = true;
        t.erase(0, 1);
    }
    const auto dot = t.find('.');
    BigInt den = 1;
    if (dot != std::string::npos) {
        den = ten_pow(static_cast<unsigned>(t.size() - dot - 1));
        t.erase(dot, 1);
    }
    Rational r(BigInt(t, 10), den);
    return negative ? -r : r;
}

}  // namespace fibprod::oracle
