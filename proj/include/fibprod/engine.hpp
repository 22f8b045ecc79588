#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibprod/catalog.hpp"
#include "fibprod/golden.hpp"

namespace fibprod {

inline constexpr std::int64_t kDefaultExactCap = 200;

enum class Mode { exact, limit };

std::string_view mode_name(Mode mode);

struct VerificationReport {
    IdentityId id = IdentityId::T1_1;
    Params params;
    std::int64_t N = 0;
    Mode mode = Mode::exact;
    GoldenExt partial_product;
    GoldenExt rhs;
    std::optional<GoldenExt> boundary;   // exact mode
    std::optional<Rational> deviation;   // limit mode: upper bound on |P_N / rhs - 1|
    std::optional<Rational> tail_bound;  // limit mode
    bool passed = false;
    double elapsed_ms = 0.0;
    std::string reason;  // set when a check could not run
};

// prod_{k=1}^N lhs_term(k); 1 for N = 0. Throws ExactCapExceeded when N > cap.
GoldenExt partial_product(IdentityId id, const Params& params, std::int64_t N,
                          std::int64_t cap = kDefaultExactCap);

// Checks product == rhs * B(N)^sigma exactly, sigma = boundary_exponent(id, N).
VerificationReport check_telescoping(IdentityId id, const Params& params, std::int64_t N,
                                     const GoldenExt& product);

VerificationReport verify_exact(IdentityId id, const Params& params, std::int64_t N,
                                std::int64_t cap = kDefaultExactCap);

// Smallest N >= 1 at which tail_bound has a certificate.
std::int64_t minimal_certifiable_n(IdentityId id, const Params& params);

// Proven upper bound on |P_inf / P_N - 1|:
//   T = 4 c phi^(-beta) phi^(-alpha (N+1)) / (1 - phi^(-alpha)),  bound = 2T,
// valid when T <= 1/2 and c / X_k <= 1/2 for all k > N (artanh(x) <= 2x on
// [0, 1/2], e^T - 1 <= 2T on [0, 1/2]). Throws CertificationError otherwise.
Rational tail_bound(IdentityId id, const Params& params, std::int64_t N);

// Exact 2T before rounding up to a rational; throws like tail_bound.
GoldenExt tail_bound_exact(IdentityId id, const Params& params, std::int64_t N);

VerificationReport verify_limit(IdentityId id, const Params& params, std::int64_t N,
                                std::int64_t cap = kDefaultExactCap);

struct SpecialEvaluation {
    IdentityId id;
    std::string constant;  // "3", "phi^4", ...
    GoldenExt expected;
};

inline constexpr std::int64_t kSpecialTerms = 40;

std::vector<SpecialEvaluation> special_constants();

// verify_limit at N = 40 for each special constant with n = q = 1; a report
// also fails if its rhs is not exactly the named constant.
std::vector<VerificationReport> special_evaluations();

// Sorted by (id, n, q, N, mode).
void sort_reports(std::vector<VerificationReport>& reports);

struct GridSpec {
    std::int64_t n_max = 1;
    std::int64_t q_max = 1;
    std::int64_t terms = 40;
    std::vector<Mode> modes{Mode::limit};
    std::int64_t cap = kDefaultExactCap;
};

// Every identity at every (n, q) in the grid, spread over `jobs` worker
// threads (0 = hardware concurrency). Failed certifications become failed
// reports with a reason. The output is sorted and independent of `jobs`.
std::vector<VerificationReport> run_grid(const GridSpec& spec, unsigned jobs = 0);

}  // namespace fibprod
