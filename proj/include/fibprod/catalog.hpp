#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fibprod/golden.hpp"

namespace fibprod {

// Identities in display order: four from each of the first three theorems,
// six from the fourth.
enum class IdentityId : std::uint8_t {
    T1_1, T1_2, T1_3, T1_4,
    T2_1, T2_2, T2_3, T2_4,
    T3_1, T3_2, T3_3, T3_4,
    T4_1, T4_2, T4_3, T4_4, T4_5, T4_6,
};

inline constexpr std::size_t kIdentityCount = 18;

struct Params {
    std::int64_t n = 1;
    std::int64_t q = 1;

    friend bool operator==(const Params&, const Params&) = default;
    friend auto operator<=>(const Params&, const Params&) = default;
};

// Generating exponent of g(k) = (phi^e(k) + 1) / (phi^e(k) - 1):
// even_shift e(k) = 2pk, odd_shift e(k) = p(2k - 1).
enum class Shift { even_shift, odd_shift };
// plain telescopes f(k) - f(k+m); alternating telescopes the (-1)^(k-1) weighted form.
enum class Summation { plain, alternating };

enum class SeqKind { fib, lucas, sqrt5_fib };

using IndexOfN = std::int64_t (*)(std::int64_t);
using GrowingIndex = std::int64_t (*)(const Params&, std::int64_t k);
using ConstantIndex = std::int64_t (*)(const Params&);
using ClosedForm = GoldenExt (*)(const Params&);

// One catalog identity. Its k-th product factor is
//     (X_k + s_k c) / (X_k - s_k c)
// with X_k = growing_kind[growing_index(params, k)],
//      c   = constant_kind[constant_index(params)],
//      s_k = 1 (plain) or (-1)^(k-1) (alternating).
struct IdentityDescriptor {
    IdentityId id;
    std::string_view label;
    int theorem;
    int position;
    Shift shift;
    Summation summation;
    std::string_view p_formula;
    std::string_view m_formula;
    IndexOfN p_of;
    IndexOfN m_of;
    SeqKind growing_kind;
    GrowingIndex growing_index;
    SeqKind constant_kind;
    ConstantIndex constant_index;
    ClosedForm rhs;
    std::string_view lhs_display;
    std::string_view rhs_display;

    bool alternating() const { return summation == Summation::alternating; }
    // q = 0 reduces both sides to 1 exactly when m(0) = 0.
    bool supports_degenerate_q() const { return m_of(0) == 0; }
};

std::span<const IdentityDescriptor> list_identities();
const IdentityDescriptor& descriptor(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view label);
std::string_view label(IdentityId id);
std::string family_name(const IdentityDescriptor& d);

inline constexpr std::int64_t kCatalogParamLimit = 8;

enum class ParamPolicy { certified, demonstration };

// Throws InvalidParams for n < 1 or q < 1 (q = 0 is accepted under the
// demonstration policy for identities that support it). Returns a warning
// when n or q exceed kCatalogParamLimit.
std::optional<std::string> validate_params(IdentityId id, const Params& params,
                                           ParamPolicy policy = ParamPolicy::certified);

GoldenExt sequence_value(SeqKind kind, std::int64_t index);

// k-th factor of the infinite product, k >= 1.
GoldenExt lhs_term(IdentityId id, const Params& params, std::int64_t k);

GoldenExt rhs_closed_form(IdentityId id, const Params& params);

// Exact boundary factor B(N) of the finite telescoping identity:
//   plain:       P_N = rhs * B(N),                B(N) = prod_{k=1}^m 1 / g(k+N)
//   alternating: P_N = rhs * B(N)^((-1)^(N-1)),  B(N) = prod_{k=1}^m g(k+N)^((-1)^(k-1))
// evaluated through phi_power.
GoldenExt boundary_factor(IdentityId id, const Params& params, std::int64_t N);

// Exponent sign applied to B(N): +1 for plain identities, (-1)^(N-1) otherwise.
int boundary_exponent(IdentityId id, std::int64_t N);

// Geometric decay certificate for the log-terms:
// X_k >= phi^(alpha k + beta) for all k >= 1.
struct TailModel {
    GoldenExt c;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    SeqKind growing_kind = SeqKind::fib;
    std::int64_t slope = 0;   // X_k index = slope * k + offset
    std::int64_t offset = 0;
    std::string x_lower;
};

TailModel tail_model(IdentityId id, const Params& params);

nlohmann::json catalog_json();

}  // namespace fibprod
