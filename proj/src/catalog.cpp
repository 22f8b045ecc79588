#include "fibprod/catalog.hpp"

#include <array>

#include "fibprod/errors.hpp"
#include "fibprod/fiblucas.hpp"

namespace fibprod {

namespace {

using I = std::int64_t;

GoldenExt F(I j) { return GoldenExt(Rational(fib(j))); }
GoldenExt L(I j) { return GoldenExt(Rational(lucas(j))); }
GoldenExt sqrt5_F(I j) { return GoldenExt(Rational(0), Rational(fib(j))); }
// F_j sqrt5 + 2
GoldenExt sqrt5_F_plus_2(I j) { return GoldenExt(Rational(2), Rational(fib(j))); }

template <class Factor>
GoldenExt prod(I first, I last, Factor factor) {
    GoldenExt out(1);
    for (I k = first; k <= last; ++k) out *= factor(k);
    return out;
}

GoldenExt sqrt5_pow(I e) { return pow(GoldenExt::sqrt5(), e); }

// Closed forms, transcribed factor by factor from the displayed identities.

GoldenExt rhs_t1_1(const Params& p) {
    const I n = p.n;
    return GoldenExt::sqrt5() *
           prod(1, p.q, [n](I k) { return F((2 * k - 1) * (2 * n - 1)) / L((2 * k - 1) * (2 * n - 1)); }) *
           prod(1, p.q - 1, [n](I k) { return L(2 * k * (2 * n - 1)) / F(2 * k * (2 * n - 1)); });
}

GoldenExt rhs_t1_2(const Params& p) {
    const I n = p.n;
    return sqrt5_pow(-(2 * p.q - 1)) *
           prod(1, 2 * p.q - 1, [n](I k) { return L(2 * n * k) / F(2 * n * k); });
}

GoldenExt rhs_t1_3(const Params& p) {
    const I n = p.n;
    return GoldenExt(pow(Rational(5), -p.q)) *
           prod(1, 2 * p.q, [n](I k) { return L(2 * n * k) / F(2 * n * k); });
}

GoldenExt rhs_t1_4(const Params& p) {
    const I n = p.n;
    return prod(1, p.q, [n](I k) {
        return F((2 * n - 1) * (2 * k - 1)) * L((2 * n - 1) * 2 * k) /
               (L((2 * n - 1) * (2 * k - 1)) * F((2 * n - 1) * 2 * k));
    });
}

GoldenExt rhs_t2_1(const Params& p) {
    const I n = p.n;
    return sqrt5_pow(-p.q) *
           prod(1, p.q, [n](I k) { return L(2 * n * (2 * k - 1)) / F(2 * n * (2 * k - 1)); });
}

GoldenExt rhs_t2_2(const Params& p) {
    const I n = p.n;
    return sqrt5_pow(p.q) *
           prod(1, p.q, [n](I k) { return F((2 * n - 1) * (2 * k - 1)) / L((2 * n - 1) * (2 * k - 1)); });
}

GoldenExt rhs_t2_3(const Params& p) {
    const I n = p.n;
    return prod(1, 2 * p.q, [n](I k) {
        return sqrt5_F_plus_2((2 * k - 1) * (2 * n - 1)) / L((2 * k - 1) * (2 * n - 1));
    });
}

GoldenExt rhs_t2_4(const Params& p) {
    const I n = p.n;
    return prod(1, 2 * p.q - 1, [n](I k) {
        return sqrt5_F_plus_2((2 * k - 1) * (2 * n - 1)) / L((2 * k - 1) * (2 * n - 1));
    });
}

GoldenExt rhs_t3_1(const Params& p) {
    const I n = p.n;
    return prod(1, p.q, [n](I k) {
        return L(2 * n * (2 * k - 1)) * F(4 * n * k) / (F(2 * n * (2 * k - 1)) * L(4 * n * k));
    });
}

GoldenExt rhs_t3_2(const Params& p) {
    const I n = p.n;
    return GoldenExt(pow(Rational(5), p.q)) * prod(1, p.q, [n](I k) {
               return F((2 * n - 1) * (2 * k - 1)) * F((2 * n - 1) * 2 * k) /
                      (L((2 * n - 1) * (2 * k - 1)) * L((2 * n - 1) * 2 * k));
           });
}

GoldenExt rhs_t3_3(const Params& p) {
    const I n = p.n;
    return GoldenExt::sqrt5().inverse() *
           prod(1, p.q, [n](I k) { return L(2 * n * (2 * k - 1)) / F(2 * n * (2 * k - 1)); }) *
           prod(1, p.q - 1, [n](I k) { return F(4 * n * k) / L(4 * n * k); });
}

GoldenExt rhs_t3_4(const Params& p) {
    const I n = p.n;
    return sqrt5_pow(2 * p.q - 1) *
           prod(1, p.q, [n](I k) { return F((2 * n - 1) * (2 * k - 1)) / L((2 * n - 1) * (2 * k - 1)); }) *
           prod(1, p.q - 1, [n](I k) { return F((2 * n - 1) * 2 * k) / L((2 * n - 1) * 2 * k); });
}

GoldenExt rhs_t4_1(const Params& p) {
    const I n = p.n;
    return prod(1, p.q, [n](I k) {
        return L(2 * n * (4 * k - 3)) * F(2 * n * (4 * k - 1)) /
               (F(2 * n * (4 * k - 3)) * L(2 * n * (4 * k - 1)));
    });
}

GoldenExt rhs_t4_2(const Params& p) {
    const I n = p.n;
    return prod(1, p.q, [n](I k) {
        return F((2 * n - 1) * (4 * k - 3)) * L((2 * n - 1) * (4 * k - 1)) /
               (L((2 * n - 1) * (4 * k - 3)) * F((2 * n - 1) * (4 * k - 1)));
    });
}

GoldenExt rhs_t4_3(const Params& p) {
    const I n = p.n;
    return prod(1, p.q, [n](I k) {
        return sqrt5_F_plus_2((2 * n - 1) * (4 * k - 3)) * L((2 * n - 1) * (4 * k - 1)) /
               (sqrt5_F_plus_2((2 * n - 1) * (4 * k - 1)) * L((2 * n - 1) * (4 * k - 3)));
    });
}

GoldenExt rhs_t4_4(const Params& p) {
    const I n = p.n;
    return GoldenExt::sqrt5().inverse() *
           prod(1, p.q, [n](I k) { return L(2 * n * (4 * k - 3)) / F(2 * n * (4 * k - 3)); }) *
           prod(1, p.q - 1, [n](I k) { return F(2 * n * (4 * k - 1)) / L(2 * n * (4 * k - 1)); });
}

GoldenExt rhs_t4_5(const Params& p) {
    const I n = p.n;
    return GoldenExt::sqrt5() *
           prod(1, p.q, [n](I k) { return F((2 * n - 1) * (4 * k - 3)) / L((2 * n - 1) * (4 * k - 3)); }) *
           prod(1, p.q - 1, [n](I k) { return L((2 * n - 1) * (4 * k - 1)) / F((2 * n - 1) * (4 * k - 1)); });
}

GoldenExt rhs_t4_6(const Params& p) {
    const I n = p.n;
    return prod(1, p.q, [n](I k) {
               return sqrt5_F_plus_2((2 * n - 1) * (4 * k - 3)) / L((2 * n - 1) * (4 * k - 3));
           }) *
           prod(1, p.q - 1, [n](I k) {
               return L((2 * n - 1) * (4 * k - 1)) / sqrt5_F_plus_2((2 * n - 1) * (4 * k - 1));
           });
}

constexpr Shift kEven = Shift::even_shift;
constexpr Shift kOdd = Shift::odd_shift;
constexpr Summation kPlain = Summation::plain;
constexpr Summation kAlt = Summation::alternating;
constexpr SeqKind kF = SeqKind::fib;
constexpr SeqKind kL = SeqKind::lucas;
constexpr SeqKind kS = SeqKind::sqrt5_fib;

// clang-format off
const std::array<IdentityDescriptor, kIdentityCount> kCatalog{{
    {IdentityId::T1_1, "T1.1", 1, 1, kEven, kPlain, "2n-1", "2q-1",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q - 1; },
     kL, [](const Params& p, I k) { return (2 * p.n - 1) * (2 * k + 2 * p.q - 1); },
     kL, [](const Params& p) { return (2 * p.n - 1) * (2 * p.q - 1); },
     rhs_t1_1,
     "prod_{k>=1} (L_{(2n-1)(2k+2q-1)} + L_{(2n-1)(2q-1)}) / (L_{(2n-1)(2k+2q-1)} - L_{(2n-1)(2q-1)})",
     "sqrt5 prod_{k=1}^{q} F_{(2k-1)(2n-1)}/L_{(2k-1)(2n-1)} prod_{k=1}^{q-1} L_{2k(2n-1)}/F_{2k(2n-1)}"},
    {IdentityId::T1_2, "T1.2", 1, 2, kEven, kPlain, "2n", "2q-1",
     [](I n) { return 2 * n; }, [](I q) { return 2 * q - 1; },
     kF, [](const Params& p, I k) { return 2 * p.n * (2 * k + 2 * p.q - 1); },
     kF, [](const Params& p) { return 2 * p.n * (2 * p.q - 1); },
     rhs_t1_2,
     "prod_{k>=1} (F_{2n(2k+2q-1)} + F_{2n(2q-1)}) / (F_{2n(2k+2q-1)} - F_{2n(2q-1)})",
     "(sqrt5)^{-(2q-1)} prod_{k=1}^{2q-1} L_{2nk}/F_{2nk}"},
    {IdentityId::T1_3, "T1.3", 1, 3, kEven, kPlain, "2n", "2q",
     [](I n) { return 2 * n; }, [](I q) { return 2 * q; },
     kF, [](const Params& p, I k) { return 4 * p.n * (k + p.q); },
     kF, [](const Params& p) { return 4 * p.n * p.q; },
     rhs_t1_3,
     "prod_{k>=1} (F_{4n(k+q)} + F_{4nq}) / (F_{4n(k+q)} - F_{4nq})",
     "5^{-q} prod_{k=1}^{2q} L_{2nk}/F_{2nk}"},
    {IdentityId::T1_4, "T1.4", 1, 4, kEven, kPlain, "2n-1", "2q",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q; },
     kF, [](const Params& p, I k) { return (2 * p.n - 1) * (2 * k + 2 * p.q); },
     kF, [](const Params& p) { return 2 * p.q * (2 * p.n - 1); },
     rhs_t1_4,
     "prod_{k>=1} (F_{(2n-1)(2k+2q)} + F_{2q(2n-1)}) / (F_{(2n-1)(2k+2q)} - F_{2q(2n-1)})",
     "prod_{k=1}^{q} F_{(2n-1)(2k-1)} L_{(2n-1)2k} / (L_{(2n-1)(2k-1)} F_{(2n-1)2k})"},

    {IdentityId::T2_1, "T2.1", 2, 1, kOdd, kPlain, "4n", "q",
     [](I n) { return 4 * n; }, [](I q) { return q; },
     kF, [](const Params& p, I k) { return 4 * p.n * (2 * k + p.q - 1); },
     kF, [](const Params& p) { return 4 * p.n * p.q; },
     rhs_t2_1,
     "prod_{k>=1} (F_{4n(2k+q-1)} + F_{4nq}) / (F_{4n(2k+q-1)} - F_{4nq})",
     "(sqrt5)^{-q} prod_{k=1}^{q} L_{2n(2k-1)}/F_{2n(2k-1)}"},
    {IdentityId::T2_2, "T2.2", 2, 2, kOdd, kPlain, "4n-2", "q",
     [](I n) { return 4 * n - 2; }, [](I q) { return q; },
     kF, [](const Params& p, I k) { return (4 * p.n - 2) * (2 * k + p.q - 1); },
     kF, [](const Params& p) { return 2 * p.q * (2 * p.n - 1); },
     rhs_t2_2,
     "prod_{k>=1} (F_{(4n-2)(2k+q-1)} + F_{2q(2n-1)}) / (F_{(4n-2)(2k+q-1)} - F_{2q(2n-1)})",
     "(sqrt5)^{q} prod_{k=1}^{q} F_{(2n-1)(2k-1)}/L_{(2n-1)(2k-1)}"},
    {IdentityId::T2_3, "T2.3", 2, 3, kOdd, kPlain, "2n-1", "2q",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q; },
     kL, [](const Params& p, I k) { return (2 * k - 1 + 2 * p.q) * (2 * p.n - 1); },
     kS, [](const Params& p) { return 2 * p.q * (2 * p.n - 1); },
     rhs_t2_3,
     "prod_{k>=1} (L_{(2k-1+2q)(2n-1)} + sqrt5 F_{2q(2n-1)}) / (L_{(2k-1+2q)(2n-1)} - sqrt5 F_{2q(2n-1)})",
     "prod_{k=1}^{2q} (F_{(2k-1)(2n-1)} sqrt5 + 2)/L_{(2k-1)(2n-1)}"},
    {IdentityId::T2_4, "T2.4", 2, 4, kOdd, kPlain, "2n-1", "2q-1",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q - 1; },
     kS, [](const Params& p, I k) { return 2 * (2 * p.n - 1) * (k + p.q - 1); },
     kL, [](const Params& p) { return (2 * p.n - 1) * (2 * p.q - 1); },
     rhs_t2_4,
     "prod_{k>=1} (sqrt5 F_{2(2n-1)(k+q-1)} + L_{(2n-1)(2q-1)}) / (sqrt5 F_{2(2n-1)(k+q-1)} - L_{(2n-1)(2q-1)})",
     "prod_{k=1}^{2q-1} (F_{(2k-1)(2n-1)} sqrt5 + 2)/L_{(2k-1)(2n-1)}"},

    {IdentityId::T3_1, "T3.1", 3, 1, kEven, kAlt, "2n", "2q",
     [](I n) { return 2 * n; }, [](I q) { return 2 * q; },
     kF, [](const Params& p, I k) { return 4 * p.n * p.q + 4 * p.n * k; },
     kF, [](const Params& p) { return 4 * p.n * p.q; },
     rhs_t3_1,
     "prod_{k>=1} (F_{4nq+4nk} + (-1)^{k-1} F_{4nq}) / (F_{4nq+4nk} + (-1)^k F_{4nq})",
     "prod_{k=1}^{q} L_{2n(2k-1)} F_{4nk} / (F_{2n(2k-1)} L_{4nk})"},
    {IdentityId::T3_2, "T3.2", 3, 2, kEven, kAlt, "2n-1", "2q",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q; },
     kF, [](const Params& p, I k) { return (2 * p.n - 1) * (2 * p.q + 2 * k); },
     kF, [](const Params& p) { return (2 * p.n - 1) * 2 * p.q; },
     rhs_t3_2,
     "prod_{k>=1} (F_{(2n-1)(2q+2k)} + (-1)^{k-1} F_{(2n-1)2q}) / (F_{(2n-1)(2q+2k)} + (-1)^k F_{(2n-1)2q})",
     "5^q prod_{k=1}^{q} F_{(2n-1)(2k-1)} F_{(2n-1)2k} / (L_{(2n-1)(2k-1)} L_{(2n-1)2k})"},
    {IdentityId::T3_3, "T3.3", 3, 3, kEven, kAlt, "2n", "2q-1",
     [](I n) { return 2 * n; }, [](I q) { return 2 * q - 1; },
     kL, [](const Params& p, I k) { return 4 * p.n * k + 4 * p.n * p.q - 2 * p.n; },
     kL, [](const Params& p) { return 4 * p.n * p.q - 2 * p.n; },
     rhs_t3_3,
     "prod_{k>=1} (L_{4nk+4nq-2n} + (-1)^{k-1} L_{4nq-2n}) / (L_{4nk+4nq-2n} + (-1)^k L_{4nq-2n})",
     "(1/sqrt5) prod_{k=1}^{q} L_{2n(2k-1)}/F_{2n(2k-1)} prod_{k=1}^{q-1} F_{4nk}/L_{4nk}"},
    {IdentityId::T3_4, "T3.4", 3, 4, kEven, kAlt, "2n-1", "2q-1",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q - 1; },
     kF, [](const Params& p, I k) { return (2 * p.n - 1) * (2 * p.q + 2 * k - 1); },
     kF, [](const Params& p) { return (2 * p.n - 1) * (2 * p.q - 1); },
     rhs_t3_4,
     "prod_{k>=1} (F_{(2n-1)(2q+2k-1)} + (-1)^{k-1} F_{(2n-1)(2q-1)}) / (F_{(2n-1)(2q+2k-1)} + (-1)^k F_{(2n-1)(2q-1)})",
     "(sqrt5)^{2q-1} prod_{k=1}^{q} F_{(2n-1)(2k-1)}/L_{(2n-1)(2k-1)} prod_{k=1}^{q-1} F_{(2n-1)2k}/L_{(2n-1)2k}"},

    {IdentityId::T4_1, "T4.1", 4, 1, kOdd, kAlt, "4n", "2q",
     [](I n) { return 4 * n; }, [](I q) { return 2 * q; },
     kF, [](const Params& p, I k) { return 8 * p.n * k + 8 * p.n * p.q - 4 * p.n; },
     kF, [](const Params& p) { return 8 * p.n * p.q; },
     rhs_t4_1,
     "prod_{k>=1} (F_{8nk+8nq-4n} + (-1)^{k-1} F_{8nq}) / (F_{8nk+8nq-4n} + (-1)^k F_{8nq})",
     "prod_{k=1}^{q} L_{2n(4k-3)} F_{2n(4k-1)} / (F_{2n(4k-3)} L_{2n(4k-1)})"},
    {IdentityId::T4_2, "T4.2", 4, 2, kOdd, kAlt, "4n-2", "2q",
     [](I n) { return 4 * n - 2; }, [](I q) { return 2 * q; },
     kF, [](const Params& p, I k) { return (4 * p.n - 2) * (2 * p.q + 2 * k - 1); },
     kF, [](const Params& p) { return (2 * p.n - 1) * 4 * p.q; },
     rhs_t4_2,
     "prod_{k>=1} (F_{(4n-2)(2q+2k-1)} + (-1)^{k-1} F_{(2n-1)4q}) / (F_{(4n-2)(2q+2k-1)} + (-1)^k F_{(2n-1)4q})",
     "prod_{k=1}^{q} F_{(2n-1)(4k-3)} L_{(2n-1)(4k-1)} / (L_{(2n-1)(4k-3)} F_{(2n-1)(4k-1)})"},
    {IdentityId::T4_3, "T4.3", 4, 3, kOdd, kAlt, "2n-1", "2q",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q; },
     kL, [](const Params& p, I k) { return (2 * p.n - 1) * (2 * p.q + 2 * k - 1); },
     kS, [](const Params& p) { return (2 * p.n - 1) * 2 * p.q; },
     rhs_t4_3,
     "prod_{k>=1} (L_{(2n-1)(2q+2k-1)} + (-1)^{k-1} sqrt5 F_{(2n-1)2q}) / (L_{(2n-1)(2q+2k-1)} + (-1)^k sqrt5 F_{(2n-1)2q})",
     "prod_{k=1}^{q} (F_{(2n-1)(4k-3)} sqrt5 + 2) L_{(2n-1)(4k-1)} / ((F_{(2n-1)(4k-1)} sqrt5 + 2) L_{(2n-1)(4k-3)})"},
    {IdentityId::T4_4, "T4.4", 4, 4, kOdd, kAlt, "4n", "2q-1",
     [](I n) { return 4 * n; }, [](I q) { return 2 * q - 1; },
     kL, [](const Params& p, I k) { return 8 * p.n * (k + p.q - 1); },
     kL, [](const Params& p) { return 4 * p.n * (2 * p.q - 1); },
     rhs_t4_4,
     "prod_{k>=1} (L_{8n(k+q-1)} + (-1)^{k-1} L_{4n(2q-1)}) / (L_{8n(k+q-1)} + (-1)^k L_{4n(2q-1)})",
     "(1/sqrt5) prod_{k=1}^{q} L_{2n(4k-3)}/F_{2n(4k-3)} prod_{k=1}^{q-1} F_{2n(4k-1)}/L_{2n(4k-1)}"},
    {IdentityId::T4_5, "T4.5", 4, 5, kOdd, kAlt, "4n-2", "2q-1",
     [](I n) { return 4 * n - 2; }, [](I q) { return 2 * q - 1; },
     kL, [](const Params& p, I k) { return (8 * p.n - 4) * (k + p.q - 1); },
     kL, [](const Params& p) { return (4 * p.n - 2) * (2 * p.q - 1); },
     rhs_t4_5,
     "prod_{k>=1} (L_{(8n-4)(k+q-1)} + (-1)^{k-1} L_{(4n-2)(2q-1)}) / (L_{(8n-4)(k+q-1)} + (-1)^k L_{(4n-2)(2q-1)})",
     "sqrt5 prod_{k=1}^{q} F_{(2n-1)(4k-3)}/L_{(2n-1)(4k-3)} prod_{k=1}^{q-1} L_{(2n-1)(4k-1)}/F_{(2n-1)(4k-1)}"},
    {IdentityId::T4_6, "T4.6", 4, 6, kOdd, kAlt, "2n-1", "2q-1",
     [](I n) { return 2 * n - 1; }, [](I q) { return 2 * q - 1; },
     kL, [](const Params& p, I k) { return (4 * p.n - 2) * (p.q + k - 1); },
     kS, [](const Params& p) { return (2 * p.n - 1) * (2 * p.q - 1); },
     rhs_t4_6,
     "prod_{k>=1} (L_{(4n-2)(q+k-1)} + (-1)^{k-1} sqrt5 F_{(2n-1)(2q-1)}) / (L_{(4n-2)(q+k-1)} + (-1)^k sqrt5 F_{(2n-1)(2q-1)})",
     "prod_{k=1}^{q} (F_{(2n-1)(4k-3)} sqrt5 + 2)/L_{(2n-1)(4k-3)} prod_{k=1}^{q-1} L_{(2n-1)(4k-1)}/(F_{(2n-1)(4k-1)} sqrt5 + 2)"},
}};
// clang-format on

std::string_view kind_symbol(SeqKind kind) {
    switch (kind) {
        case SeqKind::fib: return "F";
        case SeqKind::lucas: return "L";
        case SeqKind::sqrt5_fib: return "sqrt5 F";
    }
    return "?";
}

// g(j) = (phi^e + 1) / (phi^e - 1)
GoldenExt generator_ratio(std::int64_t exponent) {
    const GoldenExt x = phi_power(exponent);
    return (x + GoldenExt(1)) / (x - GoldenExt(1));
}

std::int64_t generator_exponent(const IdentityDescriptor& d, std::int64_t p, std::int64_t j) {
    return d.shift == Shift::even_shift ? 2 * p * j : p * (2 * j - 1);
}

}  // namespace

std::span<const IdentityDescriptor> list_identities() { return kCatalog; }

const IdentityDescriptor& descriptor(IdentityId id) {
    return kCatalog.at(static_cast<std::size_t>(id));
}

std::optional<IdentityId> parse_identity(std::string_view text) {
    for (const auto& d : kCatalog) {
        if (d.label == text) return d.id;
    }
    return std::nullopt;
}

std::string_view label(IdentityId id) { return descriptor(id).label; }

std::string family_name(const IdentityDescriptor& d) {
    std::string out = d.shift == Shift::even_shift ? "even-shift" : "odd-shift";
    out += d.alternating() ? "/alternating" : "/plain";
    return out;
}

std::optional<std::string> validate_params(IdentityId id, const Params& params,
                                           ParamPolicy policy) {
    if (params.n < 1) {
        throw InvalidParams("n must be a positive integer, got " + std::to_string(params.n));
    }
    const bool degenerate_ok =
        policy == ParamPolicy::demonstration && descriptor(id).supports_degenerate_q();
    if (params.q < 1 && !(params.q == 0 && degenerate_ok)) {
        throw InvalidParams("q must be a positive integer, got " + std::to_string(params.q));
    }
    if (params.n > kCatalogParamLimit || params.q > kCatalogParamLimit) {
        return "n or q above " + std::to_string(kCatalogParamLimit) +
               ": big-integer sizes grow linearly in n*q*N";
    }
    return std::nullopt;
}

GoldenExt sequence_value(SeqKind kind, std::int64_t index) {
    switch (kind) {
        case SeqKind::fib: return F(index);
        case SeqKind::lucas: return L(index);
        case SeqKind::sqrt5_fib: return sqrt5_F(index);
    }
    throw std::invalid_argument("unknown sequence kind");
}

GoldenExt lhs_term(IdentityId id, const Params& params, std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("product index k must be >= 1");
    }
    const auto& d = descriptor(id);
    const GoldenExt x = sequence_value(d.growing_kind, d.growing_index(params, k));
    GoldenExt c = sequence_value(d.constant_kind, d.constant_index(params));
    if (d.alternating() && k % 2 == 0) c = -c;
    const GoldenExt den = x - c;
    if (den.is_zero()) {
        throw InvariantViolation(std::string(d.label) + ": vanishing denominator at k = " +
                                 std::to_string(k));
    }
    return (x + c) / den;
}

GoldenExt rhs_closed_form(IdentityId id, const Params& params) { return descriptor(id).rhs(params); }

int boundary_exponent(IdentityId id, std::int64_t N) {
    if (!descriptor(id).alternating()) return 1;
    return (N % 2 != 0) ? 1 : -1;
}

GoldenExt boundary_factor(IdentityId id, const Params& params, std::int64_t N) {
    if (N < 0) {
        throw std::invalid_argument("truncation N must be non-negative");
    }
    const auto& d = descriptor(id);
    const std::int64_t p = d.p_of(params.n);
    const std::int64_t m = d.m_of(params.q);
    GoldenExt numer(1);
    GoldenExt denom(1);
    for (std::int64_t k = 1; k <= m; ++k) {
        const GoldenExt g = generator_ratio(generator_exponent(d, p, k + N));
        const bool in_numerator = d.alternating() && (k % 2 == 1);
        (in_numerator ? numer : denom) *= g;
    }
    return numer / denom;
}

TailModel tail_model(IdentityId id, const Params& params) {
    const auto& d = descriptor(id);
    TailModel t;
    t.c = sequence_value(d.constant_kind, d.constant_index(params));
    t.growing_kind = d.growing_kind;
    const std::int64_t first = d.growing_index(params, 1);
    t.slope = d.growing_index(params, 2) - first;
    t.offset = first - t.slope;
    // F_j >= phi^(j-2); L_j and sqrt5 F_j >= phi^(j-1); all for j >= 1.
    const std::int64_t shift = d.growing_kind == SeqKind::fib ? 2 : 1;
    t.alpha = t.slope;
    t.beta = t.offset - shift;
    t.x_lower = std::string(kind_symbol(t.growing_kind)) + "_{" + std::to_string(t.slope) + "k" +
                (t.offset >= 0 ? "+" : "") + std::to_string(t.offset) + "} >= phi^(" +
                std::to_string(t.alpha) + "k" + (t.beta >= 0 ? "+" : "") +
                std::to_string(t.beta) + ")";
    return t;
}

nlohmann::json catalog_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : kCatalog) {
        out.push_back({
            {"id", d.label},
            {"theorem", d.theorem},
            {"family", family_name(d)},
            {"p", d.p_formula},
            {"m", d.m_formula},
            {"alternating", d.alternating()},
            {"lhs", d.lhs_display},
            {"rhs", d.rhs_display},
        });
    }
    return out;
}

}  // namespace fibprod
