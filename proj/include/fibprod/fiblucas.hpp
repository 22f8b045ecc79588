#pragma once

#include <cstdint>

#include "fibprod/golden.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

inline constexpr std::int64_t kDefaultIndexCap = 1'000'000;

// Consecutive Fibonacci numbers (F_n, F_{n+1}).
struct FibPair {
    std::int64_t index = 0;
    BigInt f_n{0};
    BigInt f_n_plus_1{1};

    FibPair next() const { return {index + 1, f_n_plus_1, f_n + f_n_plus_1}; }
    BigInt f_n_minus_1() const { return f_n_plus_1 - f_n; }
};

// (F_n, F_{n+1}) by fast doubling; any sign of n. Throws IndexCapExceeded
// when |n| > cap.
FibPair fib_pair(std::int64_t n, std::int64_t cap = kDefaultIndexCap);

BigInt fib(std::int64_t n, std::int64_t cap = kDefaultIndexCap);

// L_n = 2 F_{n+1} - F_n
BigInt lucas(std::int64_t n, std::int64_t cap = kDefaultIndexCap);

// phi^n exactly, as (L_n + F_n sqrt5) / 2.
GoldenExt phi_power(std::int64_t n, std::int64_t cap = kDefaultIndexCap);

}  // namespace fibprod
