#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "fibprod/catalog.hpp"
#include "fibprod/errors.hpp"
#include "fibprod/fiblucas.hpp"

using namespace fibprod;

namespace {

const Params kUnit{1, 1};

GoldenExt rat(std::int64_t num, std::int64_t den) { return GoldenExt(Rational(BigInt(num), BigInt(den))); }

// Floating evaluation of a displayed product straight from the recurrences.
double float_seq(SeqKind kind, std::int64_t j) {
    double a = kind == SeqKind::lucas ? 2.0 : 0.0;
    double b = 1.0;
    for (std::int64_t i = 0; i < j; ++i) {
        const double next = a + b;
        a = b;
        b = next;
    }
    return kind == SeqKind::sqrt5_fib ? std::sqrt(5.0) * a : a;
}

double float_infinite_product(const IdentityDescriptor& d, const Params& p, int terms) {
    double prod = 1.0;
    const double c = float_seq(d.constant_kind, d.constant_index(p));
    for (int k = 1; k <= terms; ++k) {
        const double x = float_seq(d.growing_kind, d.growing_index(p, k));
        const double s = d.alternating() && k % 2 == 0 ? -1.0 : 1.0;
        prod *= (x + s * c) / (x - s * c);
    }
    return prod;
}

double to_double(const GoldenExt& x) { return std::stod(golden_to_decimal(x, 20)); }

}  // namespace

TEST_CASE("catalog has 18 identities in display order") {
    const auto ids = list_identities();
    REQUIRE(ids.size() == 18);
    const std::vector<std::string_view> expected{"T1.1", "T1.2", "T1.3", "T1.4", "T2.1", "T2.2",
                                                 "T2.3", "T2.4", "T3.1", "T3.2", "T3.3", "T3.4",
                                                 "T4.1", "T4.2", "T4.3", "T4.4", "T4.5", "T4.6"};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(ids[i].label == expected[i]);
        CHECK(static_cast<std::size_t>(ids[i].id) == i);
        CHECK(parse_identity(expected[i]) == ids[i].id);
    }
    CHECK_FALSE(parse_identity("T9.9"));
    CHECK_FALSE(parse_identity("t1.4"));
}

TEST_CASE("alternating flag marks the third and fourth theorems") {
    for (const auto& d : list_identities()) {
        CHECK(d.alternating() == (d.theorem >= 3));
    }
    CHECK(descriptor(IdentityId::T3_1).alternating());
}

TEST_CASE("parameter maps follow the proofs") {
    struct Expect {
        IdentityId id;
        std::int64_t p_at_3;  // p(n = 3)
        std::int64_t m_at_3;  // m(q = 3)
    };
    const std::vector<Expect> table{
        {IdentityId::T1_1, 5, 5},  {IdentityId::T1_2, 6, 5},  {IdentityId::T1_3, 6, 6},
        {IdentityId::T1_4, 5, 6},  {IdentityId::T2_1, 12, 3}, {IdentityId::T2_2, 10, 3},
        {IdentityId::T2_3, 5, 6},  {IdentityId::T2_4, 5, 5},  {IdentityId::T3_1, 6, 6},
        {IdentityId::T3_2, 5, 6},  {IdentityId::T3_3, 6, 5},  {IdentityId::T3_4, 5, 5},
        {IdentityId::T4_1, 12, 6}, {IdentityId::T4_2, 10, 6}, {IdentityId::T4_3, 5, 6},
        {IdentityId::T4_4, 12, 5}, {IdentityId::T4_5, 10, 5}, {IdentityId::T4_6, 5, 5},
    };
    for (const auto& e : table) {
        const auto& d = descriptor(e.id);
        CAPTURE(d.label);
        CHECK(d.p_of(3) == e.p_at_3);
        CHECK(d.m_of(3) == e.m_at_3);
    }
    const auto& t14 = descriptor(IdentityId::T1_4);
    CHECK(t14.p_formula == "2n-1");
    CHECK(t14.m_formula == "2q");
    CHECK(t14.p_of(1) == 1);
    CHECK(t14.m_of(1) == 2);
}

TEST_CASE("families") {
    CHECK(family_name(descriptor(IdentityId::T1_2)) == "even-shift/plain");
    CHECK(family_name(descriptor(IdentityId::T2_2)) == "odd-shift/plain");
    CHECK(family_name(descriptor(IdentityId::T3_2)) == "even-shift/alternating");
    CHECK(family_name(descriptor(IdentityId::T4_2)) == "odd-shift/alternating");
}

TEST_CASE("lhs terms") {
    CHECK(lhs_term(IdentityId::T1_4, kUnit, 1) == GoldenExt(2));
    CHECK(lhs_term(IdentityId::T2_3, kUnit, 1) == GoldenExt(Rational(21, 11), Rational(8, 11)));
    CHECK(lhs_term(IdentityId::T3_2, kUnit, 2) == rat(7, 9));
    CHECK(lhs_term(IdentityId::T3_2, kUnit, 1) == rat(4, 2));  // (F_4 + F_2) / (F_4 - F_2)
    CHECK_THROWS_AS(lhs_term(IdentityId::T1_4, kUnit, 0), std::invalid_argument);
}

TEST_CASE("closed forms and special constants") {
    CHECK(rhs_closed_form(IdentityId::T1_4, kUnit) == GoldenExt(3));
    CHECK(rhs_closed_form(IdentityId::T2_3, kUnit) == GoldenExt(Rational(7, 2), Rational(3, 2)));
    CHECK(rhs_closed_form(IdentityId::T2_3, kUnit) == phi_power(4));
    CHECK(rhs_closed_form(IdentityId::T2_4, kUnit) == phi_power(3));
    CHECK(rhs_closed_form(IdentityId::T4_3, kUnit) == phi_power(2));
    CHECK(rhs_closed_form(IdentityId::T4_6, kUnit) == phi_power(3));
    CHECK(phi_power(3) == GoldenExt(Rational(2), Rational(1)));
}

TEST_CASE("closed forms match a floating evaluation of the displayed products") {
    for (const auto& d : list_identities()) {
        for (const Params p : {Params{1, 1}, Params{1, 2}, Params{2, 1}}) {
            CAPTURE(d.label);
            CAPTURE(p.n);
            CAPTURE(p.q);
            const double expected = to_double(rhs_closed_form(d.id, p));
            CHECK(float_infinite_product(d, p, 40) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("boundary factor") {
    CHECK(boundary_factor(IdentityId::T1_4, kUnit, 1) == rat(2, 3));
    for (const auto& d : list_identities()) {
        for (const Params p : {Params{1, 1}, Params{2, 3}}) {
            CAPTURE(d.label);
            const GoldenExt b0 = boundary_factor(d.id, p, 0);
            const GoldenExt rhs = rhs_closed_form(d.id, p);
            // P_0 = 1 = rhs * B(0)^sigma(0)
            const GoldenExt p0 = boundary_exponent(d.id, 0) > 0 ? rhs * b0 : rhs / b0;
            CHECK(p0 == GoldenExt(1));
            if (!d.alternating()) CHECK(b0 == rhs.inverse());
        }
    }
    const GoldenExt b40 = boundary_factor(IdentityId::T1_4, kUnit, 40);
    const std::string dev = golden_to_decimal((b40 - GoldenExt(1)).abs(), 30);
    CHECK(dev.substr(0, 12) == "0.0000000000");
    CHECK((b40 - GoldenExt(1)).abs() < rat(1, 10'000'000'000));
    CHECK_THROWS_AS(boundary_factor(IdentityId::T1_4, kUnit, -1), std::invalid_argument);
}

TEST_CASE("boundary exponent alternates only for alternating identities") {
    CHECK(boundary_exponent(IdentityId::T1_1, 2) == 1);
    CHECK(boundary_exponent(IdentityId::T3_1, 1) == 1);
    CHECK(boundary_exponent(IdentityId::T3_1, 2) == -1);
    CHECK(boundary_exponent(IdentityId::T4_6, 0) == -1);
}

TEST_CASE("tail models") {
    const TailModel t14 = tail_model(IdentityId::T1_4, kUnit);
    CHECK(t14.c == GoldenExt(1));
    CHECK(t14.growing_kind == SeqKind::fib);
    CHECK(t14.slope == 2);
    CHECK(t14.offset == 2);
    CHECK(t14.alpha == 2);
    CHECK(t14.beta == 0);
    CHECK(t14.x_lower == "F_{2k+2} >= phi^(2k+0)");

    const TailModel t23 = tail_model(IdentityId::T2_3, kUnit);
    CHECK(t23.c == GoldenExt::sqrt5());
    CHECK(t23.growing_kind == SeqKind::lucas);
    CHECK(t23.slope == 2);
    CHECK(t23.offset == 1);
    CHECK(t23.alpha == 2);
    CHECK(t23.beta == 0);

    for (const auto& d : list_identities()) {
        CAPTURE(d.label);
        const TailModel t = tail_model(d.id, kUnit);
        CHECK(t.alpha >= 2);
        CHECK(t.c > GoldenExt(0));
    }
}

TEST_CASE("tail model lower bound holds on the growing quantity") {
    for (const auto& d : list_identities()) {
        for (const Params p : {Params{1, 1}, Params{2, 2}, Params{3, 1}}) {
            const TailModel t = tail_model(d.id, p);
            for (std::int64_t k = 1; k <= 30; ++k) {
                CAPTURE(d.label);
                CAPTURE(k);
                CHECK(d.growing_index(p, k) == t.slope * k + t.offset);
                const GoldenExt x = sequence_value(d.growing_kind, d.growing_index(p, k));
                CHECK(x >= phi_power(t.alpha * k + t.beta));
            }
        }
    }
}

TEST_CASE("term denominators are positive") {
    for (const auto& d : list_identities()) {
        for (std::int64_t n = 1; n <= 4; ++n) {
            for (std::int64_t q = 1; q <= 4; ++q) {
                const Params p{n, q};
                const GoldenExt c = sequence_value(d.constant_kind, d.constant_index(p));
                for (std::int64_t k = 1; k <= 50; ++k) {
                    const GoldenExt x = sequence_value(d.growing_kind, d.growing_index(p, k));
                    const GoldenExt s = d.alternating() && k % 2 == 0 ? GoldenExt(-1) : GoldenExt(1);
                    if (!(x - s * c > GoldenExt(0))) {
                        FAIL_CHECK(d.label << " n=" << n << " q=" << q << " k=" << k);
                    }
                }
            }
        }
    }
}

TEST_CASE("rational identities stay rational") {
    const std::set<IdentityId> rational{IdentityId::T1_2, IdentityId::T1_3, IdentityId::T1_4,
                                        IdentityId::T2_1, IdentityId::T3_1, IdentityId::T3_2,
                                        IdentityId::T4_1, IdentityId::T4_2};
    for (IdentityId id : rational) {
        for (const Params p : {Params{1, 1}, Params{2, 3}}) {
            for (std::int64_t k = 1; k <= 10; ++k) {
                CHECK(lhs_term(id, p, k).is_rational());
            }
        }
    }
    for (const Params p : {Params{1, 1}, Params{2, 2}, Params{3, 4}}) {
        CHECK(rhs_closed_form(IdentityId::T1_4, p).is_rational());
    }
}

TEST_CASE("sqrt5 factors in closed forms") {
    for (const Params p : {Params{1, 1}, Params{1, 2}, Params{2, 3}, Params{3, 2}}) {
        const GoldenExt t11 = rhs_closed_form(IdentityId::T1_1, p);
        CHECK(t11.a().is_zero());  // sqrt5 times a rational
        CHECK((t11 / GoldenExt::sqrt5()).is_rational());

        const GoldenExt t22 = rhs_closed_form(IdentityId::T2_2, p);
        const GoldenExt reduced = t22 / pow(GoldenExt::sqrt5(), p.q);
        CHECK(reduced.is_rational());
        CHECK_FALSE(reduced.is_zero());
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_params(IdentityId::T1_4, {0, 1}), InvalidParams);
    CHECK_THROWS_AS(validate_params(IdentityId::T1_4, {1, 0}), InvalidParams);
    CHECK_THROWS_AS(validate_params(IdentityId::T1_4, {1, -2}, ParamPolicy::demonstration), InvalidParams);
    CHECK_THROWS_AS(validate_params(IdentityId::T1_1, {1, 0}, ParamPolicy::demonstration), InvalidParams);
    CHECK_NOTHROW(validate_params(IdentityId::T1_4, {1, 0}, ParamPolicy::demonstration));
    CHECK_FALSE(validate_params(IdentityId::T1_4, {8, 8}));
    CHECK(validate_params(IdentityId::T1_4, {9, 1}).has_value());
}

TEST_CASE("degenerate q = 0 reduces both sides to one") {
    int supported = 0;
    for (const auto& d : list_identities()) {
        if (!d.supports_degenerate_q()) continue;
        ++supported;
        for (std::int64_t n = 1; n <= 3; ++n) {
            const Params p{n, 0};
            CHECK(rhs_closed_form(d.id, p) == GoldenExt(1));
            for (std::int64_t k = 1; k <= 5; ++k) CHECK(lhs_term(d.id, p, k) == GoldenExt(1));
            CHECK(boundary_factor(d.id, p, 4) == GoldenExt(1));
        }
    }
    CHECK(supported == 10);
    CHECK(descriptor(IdentityId::T1_4).supports_degenerate_q());
}

TEST_CASE("catalog JSON export") {
    const auto doc = catalog_json();
    REQUIRE(doc.size() == 18);
    CHECK(doc[3]["id"] == "T1.4");
    CHECK(doc[3]["theorem"] == 1);
    CHECK(doc[3]["p"] == "2n-1");
    CHECK(doc[3]["m"] == "2q");
    CHECK(doc[3]["alternating"] == false);
    CHECK(doc[8]["alternating"] == true);
    for (const auto& e : doc) {
        for (const char* key : {"id", "theorem", "family", "p", "m", "alternating", "lhs", "rhs"}) {
            CHECK(e.contains(key));
        }
    }
}
