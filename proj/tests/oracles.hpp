#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into fast doubling, mpz_sqrt, or the library's decimal renderer.

#include <cstdint>
#include <string>

#include "fibprod/rational.hpp"

namespace fibprod::oracle {

// F_n by stepping the recurrence from (F_0, F_1) = (0, 1), backwards for n < 0.
BigInt naive_fib(std::int64_t n);
// L_n by stepping the recurrence from (L_0, L_1) = (2, 1).
BigInt naive_lucas(std::int64_t n);

// floor(sqrt(value)) by the schoolbook digit-pair method.
BigInt digit_sqrt(const BigInt& value);

// phi and sqrt(5) to `digits` places, round-half-even, from digit_sqrt.
std::string sqrt5_decimal(unsigned digits);
std::string phi_decimal(unsigned digits);

// Parses "-12.345" into an exact rational.
Rational parse_decimal(const std::string& text);

}  // namespace fibprod::oracle
