#pragma once

// Property suites shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>

#include "fibprod/golden.hpp"

namespace fibprod::props {

struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string failure;  // first counterexample

    void fail(std::string what) {
        if (ok) failure = std::move(what);
        ok = false;
    }
};

Rational random_rational(std::mt19937_64& rng);
GoldenExt random_golden(std::mt19937_64& rng);

// Associativity, commutativity, distributivity, inverses; conjugation as a
// ring homomorphism; multiplicative norm.
Outcome field_axioms(std::size_t cases, std::uint64_t seed);

// golden_cmp agrees with the order of 60-digit renderings when those differ
// by more than 1e-50.
Outcome cmp_matches_decimal(std::size_t cases, std::uint64_t seed);

Outcome fast_doubling_matches_recurrence(std::int64_t max_abs_index);

// F_2n = F_n L_n; L_2n - 2(-1)^n = 5F_n^2; 5F_n^2 - L_n^2 = 4(-1)^(n+1);
// L_2n + 2(-1)^n = L_n^2.
Outcome fibonacci_lucas_identities(std::int64_t max_index);

// phi^(m+n) = phi^m phi^n over [lo, hi]^2.
Outcome phi_power_homomorphism(std::int64_t lo, std::int64_t hi);

// phi^n = phi F_n + F_{n-1}; phi^-n = (-1)^n (-phi F_n + F_{n+1});
// phi^n -/+ phi^-n = F_n sqrt5 or L_n by parity; Binet.
Outcome phi_power_identities(std::int64_t lo, std::int64_t hi);

// phi^2 = 1 + phi, sqrt5 = 2 phi - 1, phi - 1 = 1 / phi.
Outcome golden_ratio_constants();

}  // namespace fibprod::props
