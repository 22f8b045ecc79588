#include "fibprod/fiblucas.hpp"

#include <bit>

#include "fibprod/errors.hpp"

namespace fibprod {

namespace {

void check_cap(std::int64_t n, std::int64_t cap) {
    // |n| + 1 is computed, so the cap applies to the magnitude.
    if (n > cap || n < -cap) {
        throw IndexCapExceeded(n, cap);
    }
}

// Fast doubling on n >= 0:
//   F_2k   = F_k (2 F_{k+1} - F_k)
//   F_2k+1 = F_k^2 + F_{k+1}^2
FibPair fib_pair_nonnegative(std::uint64_t n) {
    BigInt a = 0;  // F_k
    BigInt b = 1;  // F_{k+1}
    const int width = std::bit_width(n);
    for (int bit = width - 1; bit >= 0; --bit) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((n >> bit) & 1U) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {static_cast<std::int64_t>(n), std::move(a), std::move(b)};
}

// F_{-k} = (-1)^(k+1) F_k
BigInt negate_index(const BigInt& f_k, std::int64_t k) {
    return (k % 2 == 0) ? BigInt(-f_k) : f_k;
}

}  // namespace

FibPair fib_pair(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    if (n >= 0) {
        return fib_pair_nonnegative(static_cast<std::uint64_t>(n));
    }
    // F_n and F_{n+1} for n = -k from F_{k-1}, F_k.
    const std::int64_t k = -n;
    const FibPair pos = fib_pair_nonnegative(static_cast<std::uint64_t>(k - 1));
    return {n, negate_index(pos.f_n_plus_1, k), negate_index(pos.f_n, k - 1)};
}

BigInt fib(std::int64_t n, std::int64_t cap) { return fib_pair(n, cap).f_n; }

BigInt lucas(std::int64_t n, std::int64_t cap) {
    const FibPair p = fib_pair(n, cap);
    return 2 * p.f_n_plus_1 - p.f_n;
}

GoldenExt phi_power(std::int64_t n, std::int64_t cap) {
    const FibPair p = fib_pair(n, cap);
    const BigInt l = 2 * p.f_n_plus_1 - p.f_n;
    return {Rational(l, 2), Rational(p.f_n, 2)};
}

}  // namespace fibprod
