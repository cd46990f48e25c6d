#include <doctest.h>

#include "ncalc/chern_weil.hpp"
#include "ncalc/hochschild.hpp"
#include "ncalc/random.hpp"

using namespace ncalc;

namespace {

SuperPoly random_word_sum(const AlphabetPtr& al, int degree, Rng& rng, int terms = 3) {
    SuperPoly p(al);
    for (int t = 0; t < terms; ++t) {
        Word w;
        int d = 0;
        while (d < degree) {
            int l = static_cast<int>(rng.uniform(0, al->size() - 1));
            if (d + al->degree(l) > degree) continue;
            w.push_back(l);
            d += al->degree(l);
        }
        p.add_term(w, rng.nonzero_rational());
    }
    return p;
}

SuperPoly word(const AlphabetPtr& al, const Word& w, const Rational& c = 1) { return SuperPoly::monomial(al, w, c); }

WeilElement random_weil(int dim, int degree, Rng& rng) {
    auto basis = weil_basis(dim, degree);
    WeilElement w(dim);
    for (int t = 0; t < 3 && !basis.empty(); ++t)
        w.add_term(basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))], rng.nonzero_rational());
    return w;
}

std::vector<Rational> unit_vector(int n, int i) {
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

}  // namespace

TEST_CASE("signed rotation canonical form") {
    auto al = gs_alphabet(1);   // a1 = 0, b1 = 1
    CHECK(super_canonical(*al, {0, 0}).first == 0);
    CHECK(super_canonical(*al, {0, 0, 0}) == std::make_pair(1, Word{0, 0, 0}));
    CHECK(super_canonical(*al, {0, 0, 0, 0}).first == 0);
    CHECK(super_canonical(*al, {1, 1}) == std::make_pair(1, Word{1, 1}));
    CHECK(super_canonical(*al, {1, 0}) == std::make_pair(1, Word{0, 1}));
    CHECK(super_canonical(*al, {0, 1, 0}) == std::make_pair(-1, Word{0, 0, 1}));
    CHECK(super_canonical(*al, {1, 0, 0}) == std::make_pair(1, Word{0, 0, 1}));
    CHECK(super_canonical(*al, {}) == std::make_pair(1, Word{}));
    // supercommutators vanish
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        int p = static_cast<int>(rng.uniform(1, 4)), q = static_cast<int>(rng.uniform(1, 4));
        auto x = random_word_sum(al, p, rng, 1), y = random_word_sum(al, q, rng, 1);
        SuperPoly comm = x * y - (y * x).scaled((p * q) % 2 ? -1 : 1);
        CHECK(supercyclic_project(comm).is_zero());
    }
}

TEST_CASE("cyclic word printing") {
    CHECK(gs_chern(2, 1).str(true) == "cyc(b1 b1) + 2*cyc(a1 a1 b1)");
    CHECK(gs_chern(1, 2).str(true) == "cyc(b1) + cyc(b2)");
    CHECK(gs_transgression_unnormalized(2).str(true) == "(1/2)*cyc(a1 b1) + (1/3)*cyc(a1 a1 a1)");
    CHECK(SuperPoly(gs_alphabet(1)).str() == "0");
    CHECK(word(dga_alphabet(1), {0, 1}, -2).str() == "-2*a*da");
}

TEST_CASE("Chern classes of the Gelfand-Smirnov complex") {
    auto al = gs_alphabet(1);
    auto ch0 = gs_chern(0, 1);
    CHECK(ch0 == SuperPoly::constant(al, 1));
    CHECK(ch0.degree() == 0);
    CHECK(gs_chern(0, 3) == SuperPoly::constant(gs_alphabet(3), 3));
    CHECK(gs_chern(1, 1) == word(al, {1}));
    CHECK(gs_chern(2, 1) == word(al, {1, 1}) + word(al, {0, 0, 1}, 2));
    CHECK(gs_d(gs_chern(2, 1)).is_zero());
    for (int n = 1; n <= 2; ++n) {
        auto r = gs_chern_report(3, n);
        CHECK(r.closed);
        CHECK(r.brackets_vanish);
        CHECK(r.transgression);
    }
    CHECK_THROWS_AS(gs_chern(-1, 1), MathError);
}

TEST_CASE("transgression forms") {
    auto al = gs_alphabet(1);
    CHECK(gs_transgression(1) == word(al, {0}));
    CHECK(gs_d(gs_transgression(1)) == gs_chern(1, 1));
    auto t2 = gs_transgression_unnormalized(2);
    CHECK(t2 == word(al, {0, 1}, Rational(1, 2)) + word(al, {0, 0, 0}, Rational(1, 3)));
    CHECK(gs_d(t2) == gs_chern(2, 1).scaled(Rational(1, 2)));
    CHECK(gs_transgression(2) == word(al, {0, 1}) + word(al, {0, 0, 0}, Rational(2, 3)));
    Rational fact = 1;
    for (int k = 1; k <= 4; ++k) {
        fact *= k;
        CHECK(gs_d(gs_transgression(k)) == gs_chern(k, 1));
        CHECK(gs_d(gs_transgression_unnormalized(k)) == gs_chern(k, 1).scaled(1 / fact));
        CHECK(gs_d(gs_transgression(k, 2)) == gs_chern(k, 2));
    }
    CHECK_THROWS_AS(gs_transgression(0), MathError);
}

TEST_CASE("necklace bracket") {
    auto al = gs_alphabet(1);
    auto ab = gs_class(word(al, {0, 1}));
    auto b = gs_class(word(al, {1}));
    CHECK(gs_cyclic_derivative(ab, 0) == word(al, {1}));
    CHECK(gs_cyclic_derivative(ab, 1) == word(al, {0}));
    CHECK(gs_bracket(ab, b) == -b);
    CHECK(gs_bracket(b, ab) == b);
    CHECK(gs_bracket(word(al, {0}), b) == -SuperPoly::constant(al, 1));
    CHECK_THROWS_AS(gs_bracket(ab, gs_class(word(gs_alphabet(2), {0, 2}))), MathError);
    // the bracket is odd: self-brackets vanish in odd degree only
    auto al2 = gs_alphabet(2);
    auto even = gs_class(word(al2, {2}) + word(al2, {0, 1}));
    CHECK(gs_bracket(even, even) == word(al2, {1}, 2));

    Rng rng(11);
    for (int n = 1; n <= 2; ++n) {
        auto a = gs_alphabet(n);
        auto lap = gs_laplacian(n);
        for (int t = 0; t < 25; ++t) {
            int p = static_cast<int>(rng.uniform(1, 5)), q = static_cast<int>(rng.uniform(1, 5)),
                r = static_cast<int>(rng.uniform(1, 5));
            auto P = gs_class(random_word_sum(a, p, rng));
            auto Q = gs_class(random_word_sum(a, q, rng));
            auto R = gs_class(random_word_sum(a, r, rng));
            int s = ((p + 1) * (q + 1)) % 2 ? -1 : 1;
            auto pq = gs_bracket(P, Q);
            CHECK((pq.is_zero() || pq.degree() == p + q - 3));
            CHECK(pq == gs_bracket(Q, P).scaled(-s));
            CHECK(gs_bracket(P, gs_bracket(Q, R)) ==
                  gs_bracket(gs_bracket(P, Q), R) + gs_bracket(Q, gs_bracket(P, R)).scaled(s));
            CHECK(gs_d(P) == gs_bracket(lap, P).scaled(Rational(1, 2)));
            if (p % 2) CHECK(gs_bracket(P, P).is_zero());
        }
    }
}

TEST_CASE("noncommutative Weil differential") {
    auto k = algebras::ground_field();
    auto al = wnc_alphabet(k);
    CHECK(wnc_d(k, word(al, {0})) == word(al, {1}) + word(al, {0, 0}));
    CHECK(wnc_d(k, word(al, {1})) == word(al, {0, 1}) - word(al, {1, 0}));
    Rng rng(5);
    for (const auto& a : {algebras::ground_field(), algebras::product_of_fields(2), algebras::truncated_polynomial(2),
                          algebras::matrix_algebra(2)}) {
        auto w = wnc_alphabet(a);
        for (int l = 0; l < w->size(); ++l) CHECK(wnc_d(a, wnc_d(a, word(w, {l}))).is_zero());
        for (int t = 0; t < 6; ++t) {
            auto u = random_word_sum(w, static_cast<int>(rng.uniform(1, 4)), rng);
            auto du = wnc_d(a, u);
            CHECK(du.degree() == u.degree() + 1);
            CHECK(wnc_d(a, du).is_zero());
        }
    }
    CHECK_THROWS_AS(wnc_d(algebras::product_of_fields(2), word(al, {0})), MathError);
}

TEST_CASE("noncommutative Weil algebra is acyclic") {
    std::vector<int> point{1, 0, 0, 0, 0};
    CHECK(wnc_cohomology(algebras::ground_field(), 4) == point);
    CHECK(wnc_cohomology(algebras::product_of_fields(2), 4) == point);
    CHECK(wnc_cohomology(algebras::truncated_polynomial(2), 4) == point);
    Caps tiny;
    tiny.max_dim = 10;
    CHECK_THROWS_AS(wnc_cohomology(algebras::product_of_fields(2), 4, tiny), CapExceeded);
}

TEST_CASE("Hodge quotients for the ground field") {
    auto k = algebras::ground_field();
    auto h2 = hodge_quotient(k, 2, 8);
    CHECK(h2.dims == std::vector<int>{1, 1, 1, 2, 1, 2, 1, 2, 1});
    CHECK(h2.cohomology == std::vector<int>{1, 0, 0, 1, 0, 1, 0, 1, 0});
    CHECK(h2.basis[0] == std::vector<Word>{Word{}});
    CHECK(h2.basis[2] == std::vector<Word>{Word{1}});
    for (int d = 1; d <= 7; d += 2) {
        Word odd(static_cast<std::size_t>(d), 0);
        CHECK(std::find(h2.basis[static_cast<std::size_t>(d)].begin(), h2.basis[static_cast<std::size_t>(d)].end(), odd) !=
              h2.basis[static_cast<std::size_t>(d)].end());
    }
    // words a^{2m} b also survive
    CHECK(h2.basis[4] == std::vector<Word>{Word{0, 0, 1}});

    auto h1 = hodge_quotient(k, 1, 8);
    CHECK(h1.dims == std::vector<int>{1, 1, 0, 1, 0, 1, 0, 1, 0});
    CHECK(h1.cohomology == h1.dims);
    for (int d = 1; d <= 7; d += 2) CHECK(h1.basis[static_cast<std::size_t>(d)] == std::vector<Word>{Word(static_cast<std::size_t>(d), 0)});

    auto h3 = hodge_quotient(k, 3, 8);
    CHECK(h3.dims == std::vector<int>{1, 1, 1, 2, 2, 3, 2, 4, 4});
    CHECK(h3.cohomology == std::vector<int>{1, 0, 0, 0, 0, 1, 0, 1, 0});
    CHECK_THROWS_AS(hodge_quotient(k, 0, 3), MathError);
}

TEST_CASE("curvature and Bianchi identity") {
    auto al = dga_alphabet(1);
    auto a = word(al, {0});
    auto toy = dga_curvature(a, true);
    CHECK(toy.curvature == word(al, {0, 0}));
    CHECK(dga_d(toy.curvature, true).is_zero());
    CHECK((a * toy.curvature - toy.curvature * a).is_zero());
    CHECK(toy.bianchi);

    auto gen = dga_curvature(a);
    CHECK(gen.curvature == word(al, {1}) + word(al, {0, 0}));
    CHECK(gen.bianchi);
    auto al2 = dga_alphabet(2);
    Rng rng(9);
    for (int t = 0; t < 5; ++t) {
        auto c = word(al2, {0}, rng.nonzero_rational()) + word(al2, {1}, rng.small_rational());
        auto r = dga_curvature(c);
        CHECK(r.bianchi);
        CHECK(r.bianchi_defect.is_zero());
        for (int n = 1; n <= 3; ++n) CHECK(supercyclic_project(dga_d(power(r.curvature, n))).is_zero());
    }
    CHECK_THROWS_AS(dga_curvature(word(al, {1})), MathError);
}

TEST_CASE("Chern-Simons forms") {
    auto al = dga_alphabet(1);
    auto i2 = chern_simons_integrand(2);
    CHECK(i2.terms().size() == 2);
    CHECK(i2.terms().at(Word{0, 1}) == TPoly::t_power(1));
    CHECK(i2.terms().at(Word{0, 0, 0}) == TPoly::t_power(2));
    CHECK(integrate_t(i2) == word(al, {0, 1}, Rational(1, 2)) + word(al, {0, 0, 0}, Rational(1, 3)));

    auto c1 = chern_simons_class(1);
    CHECK(c1.cs == word(al, {0}));
    CHECK(c1.d_cs == word(al, {1}));
    CHECK(c1.ok);
    auto c2 = chern_simons_class(2);
    CHECK(c2.cs == word(al, {0, 1}, Rational(1, 2)) + word(al, {0, 0, 0}, Rational(1, 3)));
    CHECK(c2.ok);
    for (int n = 3; n <= 5; ++n) CHECK(chern_simons_class(n).ok);
    CHECK_THROWS_AS(chern_simons_integrand(0), MathError);
}

TEST_CASE("commutative Weil algebra") {
    auto ab = lie::abelian(1);
    auto xi = WeilElement::xi(1, 0), u = WeilElement::u(1, 0);
    CHECK(weil_d(ab, xi) == u);
    CHECK(weil_d(ab, u).is_zero());
    CHECK(weil_cohomology(ab, 5) == std::vector<int>{1, 0, 0, 0, 0, 0});

    auto g = lie::sl2();
    CHECK(weil_cohomology(g, 4) == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(weil_cohomology(lie::heisenberg(), 4) == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(weil_cohomology(lie::so3(), 3) == std::vector<int>{1, 0, 0, 0});
    for (int k = 0; k < 3; ++k) {
        CHECK(weil_d(g, weil_d(g, WeilElement::xi(3, k))).is_zero());
        CHECK(weil_d(g, weil_d(g, WeilElement::u(3, k))).is_zero());
    }
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        auto w = random_weil(3, static_cast<int>(rng.uniform(1, 4)), rng);
        CHECK(weil_d(g, weil_d(g, w)).is_zero());
    }
    CHECK(weil_basis(2, 2).size() == 3);
    CHECK((WeilElement::xi(2, 1) * WeilElement::xi(2, 0)) == (WeilElement::xi(2, 0) * WeilElement::xi(2, 1)).scaled(-1));
    CHECK((WeilElement::xi(2, 0) * WeilElement::xi(2, 0)).is_zero());
    CHECK_THROWS_AS(weil_d(g, xi), MathError);
}

TEST_CASE("invariant polynomials are closed") {
    auto g = lie::sl2();   // e, f, h
    auto ue = WeilElement::u(3, 0), uf = WeilElement::u(3, 1), uh = WeilElement::u(3, 2);
    auto casimir = uh * uh + ue * uf;
    for (int a = 0; a < 3; ++a) CHECK(weil_coadjoint(g, unit_vector(3, a), casimir).is_zero());
    CHECK(weil_d(g, casimir).is_zero());
    CHECK(!weil_d(g, uh * uh).is_zero());
    auto cubic = casimir * casimir;
    CHECK(weil_d(g, cubic).is_zero());
}

TEST_CASE("Cartan formula") {
    auto heis = lie::heisenberg();
    auto z = unit_vector(3, 2);
    Rng rng(17);
    for (int t = 0; t < 5; ++t) {
        auto w = random_weil(3, static_cast<int>(rng.uniform(1, 4)), rng);
        auto r = weil_cartan(heis, z, w);
        CHECK(r.equal);
        CHECK(r.lie_side.is_zero());
    }
    auto g = lie::sl2();
    auto h = unit_vector(3, 2);
    auto r = weil_cartan(g, h, WeilElement::xi(3, 0));
    CHECK(r.equal);
    CHECK(r.lie_side == WeilElement::xi(3, 0).scaled(-2));
    CHECK(weil_contraction(g, h, WeilElement::xi(3, 2)) == WeilElement::constant(3, 1));
    CHECK(weil_contraction(g, h, WeilElement::u(3, 2)).is_zero());
    for (int t = 0; t < 15; ++t) {
        std::vector<Rational> x{rng.small_rational(), rng.small_rational(), rng.small_rational()};
        auto w = random_weil(3, static_cast<int>(rng.uniform(1, 4)), rng);
        CHECK(weil_cartan(g, x, w).equal);
    }
}

TEST_CASE("calculus identities on Hochschild chains") {
    Rng rng(21);
    for (const auto& a : {algebras::truncated_polynomial(3), algebras::upper_triangular(2)}) {
        auto ders = derivation_space(a).derivations;
        REQUIRE(ders.size() >= 1);
        auto mod = Bimodule::regular(a);
        for (int t = 0; t < 6; ++t) {
            const auto& d = ders[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ders.size()) - 1))];
            const auto& e = ders[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ders.size()) - 1))];
            int p = static_cast<int>(rng.uniform(1, 2));
            Cochain f = Cochain::zero(mod, p);
            for (std::size_t i = 0; i < f.tuple_count(); ++i)
                for (int k = 0; k < a.dim(); ++k)
                    if (rng.coin()) f.set(f.tuple(i), k, rng.small_rational());
            Chain c(3, false);
            for (int s = 0; s < 4; ++s) {
                std::vector<int> key;
                for (int j = 0; j < 4; ++j) key.push_back(static_cast<int>(rng.uniform(0, a.dim() - 1)));
                c.add(key, rng.nonzero_rational());
            }
            // [L_D, i_f] = i_{[D,f]}
            CHECK(chain_lie(a, d, chain_contraction(a, f, c)) - chain_contraction(a, f, chain_lie(a, d, c)) ==
                  chain_contraction(a, gerstenhaber_bracket(d, f), c));
            // [L_D, L_E] = L_{[D,E]}
            CHECK(chain_lie(a, d, chain_lie(a, e, c)) - chain_lie(a, e, chain_lie(a, d, c)) ==
                  chain_lie(a, gerstenhaber_bracket(d, e), c));
        }
    }
}
