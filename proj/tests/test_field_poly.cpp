#include "doctest.h"

#include "chevwidth/poly.hpp"

using namespace chevwidth;

TEST_CASE("field arithmetic, prime and extension") {
    const Field& F5 = Field::get(5);
    CHECK(F5.add(3, 4) == 2);
    CHECK(F5.mul(3, 4) == 2);
    CHECK(F5.inv(2) == 3);
    CHECK(F5.pow(2, 4) == 1);

    const Field& F4 = Field::get(4);
    CHECK(F4.q() == 4);
    // x * x = x + 1 under x^2 + x + 1: codes x = 2, x+1 = 3
    CHECK(F4.mul(2, 2) == 3);
    CHECK(F4.mul(2, 3) == 1);  // x (x+1) = x^2 + x = 1
    for (uint64_t a = 1; a < 4; ++a) CHECK(F4.mul(a, F4.inv(a)) == 1);

    const Field& F9 = Field::get(9);
    for (uint64_t a = 1; a < 9; ++a) CHECK(F9.mul(a, F9.inv(a)) == 1);
    CHECK(F9.pow(2, 8) == 1);

    // built-in moduli are irreducible
    for (uint64_t q : {4, 8, 9, 16, 25, 27}) {
        const Field& Fq = Field::get(q);
        const Field& Fp = Field::get(Fq.p());
        Poly m(Fp, Fq.modulus());
        CHECK(is_irreducible(m));
    }
}

TEST_CASE("divmod reconstruction and xgcd Bezout over random pairs") {
    for (uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
        const Field& F = Field::get(q);
        Rng rng(42 + q);
        for (int t = 0; t < 200; ++t) {
            Poly num = rng.poly(F, 6);
            Poly den = rng.nonzero_poly(F, 4);
            auto [quot, rem] = poly_divmod(num, den);
            CHECK(num == quot * den + rem);
            CHECK((rem.is_zero() || rem.deg() < den.deg()));

            Poly f = rng.poly(F, 5), g = rng.poly(F, 5);
            if (f.is_zero() && g.is_zero()) continue;
            auto [d, u, v] = poly_xgcd(f, g);
            CHECK(u * f + v * g == d);
            CHECK(d.lc() == 1);
            if (!f.is_zero()) CHECK(poly_divmod(f, d).second.is_zero());
            if (!g.is_zero()) CHECK(poly_divmod(g, d).second.is_zero());
        }
    }
}

TEST_CASE("divmod examples") {
    const Field& F2 = Field::get(2);
    // (t^3 + 1) = (t + 1)(t^2 + t + 1) in characteristic 2
    Poly num(F2, {1, 0, 0, 1});
    Poly den(F2, {1, 1});
    auto [q1, r1] = poly_divmod(num, den);
    CHECK(q1 == Poly(F2, {1, 1, 1}));
    CHECK(r1.is_zero());
    // identity divisor
    auto [q2, r2] = poly_divmod(num, Poly::one(F2));
    CHECK(q2 == num);
    CHECK(r2.is_zero());
    // constant remainder over F3
    const Field& F3 = Field::get(3);
    auto [q3, r3] = poly_divmod(Poly(F3, {1, 0, 1}), Poly::t(F3));
    CHECK(q3 == Poly::t(F3));
    CHECK(r3 == Poly::one(F3));
}

TEST_CASE("xgcd examples") {
    const Field& F2 = Field::get(2);
    auto [d, u, v] = poly_xgcd(Poly::t(F2), Poly(F2, {1, 1}));
    CHECK(d.is_one());
    CHECK(u * Poly::t(F2) + v * Poly(F2, {1, 1}) == d);

    // degenerate arm: xgcd(f, 0) = (monic f, lc^-1, 0)
    const Field& F5 = Field::get(5);
    Poly f(F5, {1, 0, 3});  // 3t^2 + 1
    auto [d2, u2, v2] = poly_xgcd(f, Poly(F5));
    CHECK(d2 == f.monic());
    CHECK(u2 == Poly::constant(F5, F5.inv(3)));
    CHECK(v2.is_zero());

    // g divides f: gcd is the monic form of g
    Poly big(F5, {4, 0, 1});   // t^2 - 1
    Poly small(F5, {4, 1});    // t - 1
    auto [d3, u3, v3] = poly_xgcd(big, small);
    CHECK(d3 == Poly(F5, {4, 1}));  // t + 4 monic
    CHECK(u3 * big + v3 * small == d3);
}

TEST_CASE("irreducibility agrees with trial division up to degree 4") {
    for (uint64_t q : {2ull, 3ull}) {
        const Field& F = Field::get(q);
        // enumerate all monic polynomials of degree 1..4
        std::vector<Poly> irreducibles;
        for (int d = 1; d <= 4; ++d) {
            uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= q;
            for (uint64_t idx = 0; idx < count; ++idx) {
                std::vector<uint64_t> c(d + 1, 0);
                uint64_t rest = idx;
                for (int i = 0; i < d; ++i) {
                    c[i] = rest % q;
                    rest /= q;
                }
                c[d] = 1;
                Poly f(F, c);
                // trial division by all monic polys of smaller positive degree
                bool has_factor = false;
                for (int dd = 1; dd <= d / 2 && !has_factor; ++dd) {
                    uint64_t c2 = 1;
                    for (int i = 0; i < dd; ++i) c2 *= q;
                    for (uint64_t jdx = 0; jdx < c2 && !has_factor; ++jdx) {
                        std::vector<uint64_t> g(dd + 1, 0);
                        uint64_t r2 = jdx;
                        for (int i = 0; i < dd; ++i) {
                            g[i] = r2 % q;
                            r2 /= q;
                        }
                        g[dd] = 1;
                        if (poly_divmod(f, Poly(F, g)).second.is_zero()) has_factor = true;
                    }
                }
                CHECK(is_irreducible(f) == !has_factor);
            }
        }
    }
}

TEST_CASE("irreducibility examples") {
    const Field& F2 = Field::get(2);
    CHECK(is_irreducible(Poly(F2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible(Poly(F2, {1, 0, 1})));  // (t+1)^2
    const Field& F3 = Field::get(3);
    CHECK(is_irreducible(Poly(F3, {1, 0, 1})));
}

TEST_CASE("m-th roots") {
    const Field& F3 = Field::get(3);
    // (t+1)^2 = t^2 + 2t + 1
    auto r = poly_mth_root(Poly(F3, {1, 2, 1}), 2);
    REQUIRE(r.has_value());
    CHECK(*r == Poly(F3, {1, 1}));

    const Field& F2 = Field::get(2);
    auto r2 = poly_mth_root(Poly(F2, {0, 0, 1}), 2);  // t^2, char-2 Frobenius
    REQUIRE(r2.has_value());
    CHECK(*r2 == Poly::t(F2));

    CHECK_FALSE(poly_mth_root(Poly(F2, {0, 0, 0, 1}), 2).has_value());  // t^3 odd degree

    // round trip f^m -> f for random f, m in {2, 3}
    for (uint64_t q : {2ull, 3ull, 5ull}) {
        const Field& F = Field::get(q);
        Rng rng(7);
        for (int t = 0; t < 60; ++t) {
            Poly f = rng.nonzero_poly(F, 3).monic();
            for (uint64_t m : {2ull, 3ull}) {
                Poly fm = Poly::one(F);
                for (uint64_t i = 0; i < m; ++i) fm = fm * f;
                auto root = poly_mth_root(fm, m);
                REQUIRE(root.has_value());
                CHECK(*root == f);
            }
        }
    }
}

TEST_CASE("polynomial text grammar round trip") {
    const Field& F5 = Field::get(5);
    Poly p(F5, {1, 2, 0, 1});
    CHECK(p.str() == "t^3 + 2*t + 1");
    CHECK(Poly::parse(F5, p.str()) == p);
    CHECK(Poly::parse(F5, "0").is_zero());
    CHECK(Poly(F5).str() == "0");
    CHECK(Poly::parse(F5, "t").str() == "t");
    CHECK_THROWS_AS(Poly::parse(F5, "t^+garbage"), DomainError);

    const Field& F4 = Field::get(4);
    Poly px(F4, {2, 3});
    Poly back = Poly::parse(F4, px.str());
    CHECK(back == px);

    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        Poly f = rng.poly(F5, 6);
        CHECK(Poly::parse(F5, f.str()) == f);
    }
}

TEST_CASE("graded lex enumeration is injective and ordered") {
    const Field& F3 = Field::get(3);
    std::vector<Poly> seen;
    int last_deg = Poly::kZeroDeg;
    for (uint64_t i = 0; i < 100; ++i) {
        Poly p = graded_lex_poly(F3, i);
        for (const auto& old : seen) CHECK_FALSE(old == p);
        if (!p.is_zero()) {
            CHECK(p.deg() >= last_deg);
            last_deg = std::max(last_deg, p.deg());
        }
        seen.push_back(p);
    }
}
