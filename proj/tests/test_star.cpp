#include <random>

#include "doctest.h"
#include "ncalc/errors.hpp"
#include "ncalc/star.hpp"

using namespace ncalc;

namespace {

PhasePoly random_phase(int pairs, std::mt19937_64& rng, int max_deg, int terms, bool with_t = true) {
    PhasePoly f(pairs);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
        int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        for (int k = 0; k < deg; ++k) ++e[rng() % e.size()];
        Rational c(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
        c.canonicalize();
        TPoly tc = with_t && rng() % 3 == 0 ? TPoly::t_power(1, c) : TPoly(c);
        f.add_term(e, tc);
    }
    return f;
}

PhasePoly mono(int a, int b) { return PhasePoly::monomial(1, {a, b}); }
WeylElement wmono(int a, int b, const TPoly& c = 1) { return WeylElement::monomial(1, {a, b}, c); }

Rational fact(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
Rational choose(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

}  // namespace

TEST_CASE("moyal examples") {
    PhasePoly x = PhasePoly::x(1, 0), y = PhasePoly::y(1, 0);
    PhasePoly xy = moyal_star(x, y);
    CHECK(xy == x * y + PhasePoly::constant(1, TPoly::t_power(1, Rational(1, 2))));
    CHECK(xy.str() == "x1*y1 + (1/2)*t");
    CHECK(moyal_star(x, y) - moyal_star(y, x) == PhasePoly::constant(1, TPoly::t_power(1)));

    std::mt19937_64 rng(11);
    PhasePoly one = PhasePoly::constant(2, 1);
    for (int i = 0; i < 10; ++i) {
        PhasePoly f = random_phase(2, rng, 4, 5);
        CHECK(moyal_star(f, one) == f);
        CHECK(moyal_star(one, f) == f);
        PhasePoly g = random_phase(2, rng, 4, 5, false);
        PhasePoly h = random_phase(2, rng, 4, 5, false);
        CHECK(moyal_star(g, h).t_coefficient(0) == g * h);
    }
    CHECK_THROWS_AS(moyal_star(PhasePoly::x(1, 0), PhasePoly::x(2, 0)), MathError);
}

TEST_CASE("moyal associativity") {
    std::mt19937_64 rng(5);
    for (int pairs = 1; pairs <= 2; ++pairs)
        for (int i = 0; i < 12; ++i) {
            PhasePoly f = random_phase(pairs, rng, 4, 4), g = random_phase(pairs, rng, 4, 4),
                      h = random_phase(pairs, rng, 4, 4);
            CHECK(moyal_star(moyal_star(f, g), h) == moyal_star(f, moyal_star(g, h)));
        }
}

TEST_CASE("weyl multiplication") {
    WeylElement p = WeylElement::p(1, 0), q = WeylElement::q(1, 0);
    CHECK(weyl_mul(q, p) == wmono(1, 1) - WeylElement::constant(1, TPoly::t_power(1)));
    CHECK(weyl_mul(q, p).str() == "p1*q1 - t");
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            WeylElement expect = wmono(a + 1, b);
            if (b > 0) expect -= wmono(a, b - 1, TPoly::t_power(1, b));
            CHECK(weyl_mul(wmono(a, b), p) == expect);
        }
    // letters from different pairs commute
    WeylElement q2 = WeylElement::q(2, 1), p1 = WeylElement::p(2, 0);
    CHECK(weyl_mul(q2, p1) == weyl_mul(p1, q2));
    CHECK(weyl_mul(WeylElement::q(2, 0), WeylElement::p(2, 0)) ==
          WeylElement::monomial(2, {1, 1, 0, 0}) - WeylElement::constant(2, TPoly::t_power(1)));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        WeylElement u = pbw_symmetrize(random_phase(2, rng, 3, 4));
        WeylElement v = pbw_symmetrize(random_phase(2, rng, 3, 4));
        WeylElement w = pbw_symmetrize(random_phase(2, rng, 3, 4));
        CHECK(weyl_mul(u, WeylElement::constant(2, 1)) == u);
        CHECK(weyl_mul(weyl_mul(u, v), w) == weyl_mul(u, weyl_mul(v, w)));
    }
    CHECK_THROWS_AS(weyl_mul(p, p1), MathError);
}

TEST_CASE("symmetrization") {
    CHECK(pbw_symmetrize(mono(1, 1)) == wmono(1, 1) - WeylElement::constant(1, TPoly::t_power(1, Rational(1, 2))));
    for (int m = 0; m <= 6; ++m) CHECK(pbw_symmetrize(mono(m, 0)) == wmono(m, 0));
    // Weyl ordering: sum_k k! C(a,k) C(b,k) (-t/2)^k p^{a-k} q^{b-k}
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 6; ++b) {
            WeylElement expect(1);
            for (int k = 0; k <= std::min(a, b); ++k) {
                Rational c = fact(k) * choose(a, k) * choose(b, k);
                for (int j = 0; j < k; ++j) c *= Rational(-1, 2);
                expect += wmono(a - k, b - k, TPoly::t_power(static_cast<unsigned>(k), c));
            }
            CHECK(pbw_symmetrize(mono(a, b)) == expect);
        }
    std::mt19937_64 rng(21);
    for (int pairs = 1; pairs <= 2; ++pairs)
        for (int i = 0; i < 15; ++i) {
            PhasePoly f = random_phase(pairs, rng, 5, 6);
            CHECK(pbw_inverse(pbw_symmetrize(f)) == f);
        }
    CHECK(pbw_inverse(wmono(1, 1)) == mono(1, 1) + PhasePoly::constant(1, TPoly::t_power(1, Rational(1, 2))));
}

TEST_CASE("symmetrization intertwines moyal and weyl") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; c <= 5; ++c)
                for (int d = 0; c + d <= 5; ++d) {
                    PhasePoly f = mono(a, b), g = mono(c, d);
                    CHECK(weyl_mul(pbw_symmetrize(f), pbw_symmetrize(g)) == pbw_symmetrize(moyal_star(f, g)));
                }
    std::vector<std::vector<int>> monos;
    for (int e0 = 0; e0 <= 3; ++e0)
        for (int e1 = 0; e0 + e1 <= 3; ++e1)
            for (int e2 = 0; e0 + e1 + e2 <= 3; ++e2)
                for (int e3 = 0; e0 + e1 + e2 + e3 <= 3; ++e3) monos.push_back({e0, e1, e2, e3});
    for (const auto& m1 : monos)
        for (const auto& m2 : monos) {
            PhasePoly f = PhasePoly::monomial(2, m1), g = PhasePoly::monomial(2, m2);
            CHECK(weyl_mul(pbw_symmetrize(f), pbw_symmetrize(g)) == pbw_symmetrize(moyal_star(f, g)));
        }
}

TEST_CASE("poisson leading term") {
    StarProduct moyal = moyal_star;
    PhasePoly x = PhasePoly::x(1, 0), y = PhasePoly::y(1, 0);
    CHECK(poisson_leading_term(moyal, x, y) == PhasePoly::constant(1, 1));
    CHECK(poisson_leading_term(moyal, x * x, y * y) == (x * y).scaled(4));
    CHECK(canonical_poisson(x * x, y * y) == (x * y).scaled(4));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 12; ++i) {
        PhasePoly f = random_phase(2, rng, 4, 4, false), g = random_phase(2, rng, 4, 4, false),
                  h = random_phase(2, rng, 3, 3, false);
        auto br = [&](const PhasePoly& a, const PhasePoly& b) { return poisson_leading_term(moyal, a, b); };
        CHECK(br(f, f).is_zero());
        CHECK(br(f, g) == canonical_poisson(f, g));
        CHECK(br(f, g * h) == br(f, g) * h + g * br(f, h));
        CHECK((br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))).is_zero());
    }
    StarProduct bad = [](const PhasePoly& f, const PhasePoly& g) { return f * f * g; };
    CHECK_THROWS_AS(poisson_leading_term(bad, x, y), MathError);
}

TEST_CASE("heisenberg exponential") {
    PhasePoly x = PhasePoly::x(1, 0), y = PhasePoly::y(1, 0);
    auto r = heisenberg_check(x, y, 4);
    CHECK(r.star_side);
    CHECK(r.weyl_side);
    PhasePoly u = PhasePoly::x(2, 0).scaled(2) + PhasePoly::y(2, 1);
    PhasePoly v = PhasePoly::y(2, 0).scaled(Rational(-1, 3)) + PhasePoly::x(2, 1) + PhasePoly::y(2, 1);
    r = heisenberg_check(u, v, 5);
    CHECK(r.star_side);
    CHECK(r.weyl_side);
    CHECK_THROWS_AS(heisenberg_check(x * x, y, 4), MathError);
}

TEST_CASE("grouped output") {
    PhasePoly x = PhasePoly::x(1, 0), y = PhasePoly::y(1, 0);
    PhasePoly f = moyal_star(x * x, y);
    CHECK(f.str_by_t() == "t^0: x1^2*y1\nt^1: x1\n");
}
