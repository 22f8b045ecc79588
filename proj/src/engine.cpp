#include "fibprod/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "fibprod/errors.hpp"
#include "fibprod/fiblucas.hpp"

namespace fibprod {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_positive_n(std::int64_t N) {
    if (N < 1) {
        throw std::invalid_argument("truncation N must be >= 1");
    }
}

struct TailCertificate {
    bool certified = false;
    GoldenExt bound;  // 2T
};

TailCertificate certify(const TailModel& model, std::int64_t N) {
    const GoldenExt half(Rational(1, 2));
    // c / X_k <= 1/2 for all k > N follows from 2c <= phi^(alpha (N+1) + beta).
    const GoldenExt x_floor = phi_power(model.alpha * (N + 1) + model.beta);
    if (GoldenExt(2) * model.c > x_floor) {
        return {};
    }
    const GoldenExt decay = phi_power(-model.alpha);
    const GoldenExt t = GoldenExt(4) * model.c * phi_power(-model.beta) *
                        phi_power(-model.alpha * (N + 1)) / (GoldenExt(1) - decay);
    if (t > half) {
        return {};
    }
    return {true, GoldenExt(2) * t};
}

}  // namespace

std::string_view mode_name(Mode mode) { return mode == Mode::exact ? "exact" : "limit"; }

GoldenExt partial_product(IdentityId id, const Params& params, std::int64_t N, std::int64_t cap) {
    if (N < 0) {
        throw std::invalid_argument("truncation N must be non-negative");
    }
    if (N > cap) {
        throw ExactCapExceeded(N, cap);
    }
    GoldenExt product(1);
    for (std::int64_t k = 1; k <= N; ++k) {
        product *= lhs_term(id, params, k);
    }
    return product;
}

VerificationReport check_telescoping(IdentityId id, const Params& params, std::int64_t N,
                                     const GoldenExt& product) {
    VerificationReport r;
    r.id = id;
    r.params = params;
    r.N = N;
    r.mode = Mode::exact;
    r.partial_product = product;
    r.rhs = rhs_closed_form(id, params);
    r.boundary = boundary_factor(id, params, N);
    const GoldenExt predicted = boundary_exponent(id, N) > 0 ? r.rhs * *r.boundary
                                                             : r.rhs / *r.boundary;
    r.passed = predicted == product;
    return r;
}

VerificationReport verify_exact(IdentityId id, const Params& params, std::int64_t N,
                                std::int64_t cap) {
    require_positive_n(N);
    const auto start = Clock::now();
    validate_params(id, params, ParamPolicy::demonstration);
    VerificationReport r = check_telescoping(id, params, N, partial_product(id, params, N, cap));
    r.elapsed_ms = millis_since(start);
    return r;
}

std::int64_t minimal_certifiable_n(IdentityId id, const Params& params) {
    const TailModel model = tail_model(id, params);
    // Both conditions are monotone in N, so the first hit is the minimum.
    for (std::int64_t n = 1;; ++n) {
        if (certify(model, n).certified) return n;
    }
}

GoldenExt tail_bound_exact(IdentityId id, const Params& params, std::int64_t N) {
    require_positive_n(N);
    validate_params(id, params);
    const TailCertificate cert = certify(tail_model(id, params), N);
    if (!cert.certified) {
        throw CertificationError(N, minimal_certifiable_n(id, params));
    }
    return cert.bound;
}

Rational tail_bound(IdentityId id, const Params& params, std::int64_t N) {
    return upper_bound_abs(tail_bound_exact(id, params, N));
}

VerificationReport verify_limit(IdentityId id, const Params& params, std::int64_t N,
                                std::int64_t cap) {
    require_positive_n(N);
    const auto start = Clock::now();
    validate_params(id, params);
    VerificationReport r;
    r.id = id;
    r.params = params;
    r.N = N;
    r.mode = Mode::limit;
    r.tail_bound = tail_bound(id, params, N);
    r.partial_product = partial_product(id, params, N, cap);
    r.rhs = rhs_closed_form(id, params);
    r.deviation = upper_bound_abs(r.partial_product / r.rhs - GoldenExt(1));
    r.passed = *r.deviation <= *r.tail_bound;
    r.elapsed_ms = millis_since(start);
    return r;
}

std::vector<SpecialEvaluation> special_constants() {
    return {
        {IdentityId::T1_4, "3", GoldenExt(3)},
        {IdentityId::T2_3, "phi^4", phi_power(4)},
        {IdentityId::T2_4, "phi^3", phi_power(3)},
        {IdentityId::T4_3, "phi^2", phi_power(2)},
        {IdentityId::T4_6, "phi^3", phi_power(3)},
    };
}

std::vector<VerificationReport> special_evaluations() {
    std::vector<VerificationReport> out;
    for (const auto& s : special_constants()) {
        VerificationReport r = verify_limit(s.id, Params{1, 1}, kSpecialTerms);
        if (r.rhs != s.expected) {
            r.passed = false;
            r.reason = "closed form differs from " + s.constant;
        }
        out.push_back(std::move(r));
    }
    return out;
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.id, a.params.n, a.params.q, a.N, a.mode) <
               std::tuple(b.id, b.params.n, b.params.q, b.N, b.mode);
    });
}

std::vector<VerificationReport> run_grid(const GridSpec& spec, unsigned jobs) {
    struct Task {
        IdentityId id;
        Params params;
        Mode mode;
    };
    std::vector<Task> tasks;
    for (const auto& d : list_identities()) {
        for (std::int64_t n = 1; n <= spec.n_max; ++n) {
            for (std::int64_t q = 1; q <= spec.q_max; ++q) {
                for (Mode mode : spec.modes) tasks.push_back({d.id, Params{n, q}, mode});
            }
        }
    }

    std::vector<VerificationReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            try {
                results[i] = t.mode == Mode::exact
                                 ? verify_exact(t.id, t.params, spec.terms, spec.cap)
                                 : verify_limit(t.id, t.params, spec.terms, spec.cap);
            } catch (const std::exception& e) {
                VerificationReport r;
                r.id = t.id;
                r.params = t.params;
                r.N = spec.terms;
                r.mode = t.mode;
                r.rhs = rhs_closed_form(t.id, t.params);
                r.passed = false;
                r.reason = e.what();
                results[i] = std::move(r);
            }
        }
    };

    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, tasks.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
    }
    sort_reports(results);
    return results;
}

}  // namespace fibprod
