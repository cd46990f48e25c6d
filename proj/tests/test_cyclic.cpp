#include <doctest.h>

#include "ncalc/cyclic.hpp"
#include "test_util.hpp"

using namespace ncalc;

namespace {

NecklaceElement cyc(int gens, Word w, Rational c = 1) { return NecklaceElement::word(gens, w, c); }

FreePoly word_poly(int gens, Word w, Rational c = 1) {
    FreePoly p(gens);
    p.add_term(w, c);
    return p;
}

NecklaceElement random_necklace(Rng& rng, int gens, int max_weight, int terms) {
    return project_cyclic(testutil::random_free(gens, rng, 1, max_weight, terms));
}

SymPoly random_sym(Rng& rng, int vars, int max_deg) {
    SymPoly p(vars);
    for (int t = 0; t < 3; ++t) {
        SymPoly m = SymPoly::constant(vars, rng.nonzero_rational());
        for (long d = rng.uniform(0, max_deg); d > 0; --d) m = m * SymPoly::variable(vars, static_cast<int>(rng.uniform(0, vars - 1)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("cyclic projection") {
    FreePoly xy = word_poly(2, {0, 1}), yx = word_poly(2, {1, 0});
    CHECK(project_cyclic(xy - yx).is_zero());
    CHECK(project_cyclic(xy) == project_cyclic(yx));
    CHECK(project_cyclic(word_poly(2, {0, 1, 0})) == cyc(2, {0, 0, 1}));
    CHECK(project_cyclic(word_poly(2, {0, 1, 0})).terms().begin()->first == Word{0, 0, 1});
    CHECK(cyc(2, {0, 1, 0, 1}).str() == "cyc(x*y*x*y)");
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        FreePoly a = testutil::random_free(3, rng, 0, 3, 3), b = testutil::random_free(3, rng, 0, 3, 3);
        CHECK(project_cyclic(a * b) == project_cyclic(b * a));
    }
}

TEST_CASE("cyclic derivatives") {
    CHECK(cyclic_derivative(cyc(2, {0, 0}), 0) == word_poly(2, {0}, 2));
    CHECK(cyclic_derivative(cyc(2, {0, 1}), 0) == word_poly(2, {1}));
    CHECK(cyclic_derivative(cyc(2, {1, 1, 1}), 0).is_zero());
    CHECK(cyclic_derivative(cyc(2, {}), 0).is_zero());
    CHECK_THROWS(cyclic_derivative(cyc(2, {0}), 2));
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        int gens = static_cast<int>(rng.uniform(1, 3));
        auto f = random_necklace(rng, gens, 5, 3);
        FreePoly sum(gens);
        for (int i = 0; i < gens; ++i) {
            FreePoly xi = word_poly(gens, {i});
            FreePoly di = cyclic_derivative(f, i);
            sum += di * xi - xi * di;
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("necklace bracket examples") {
    SymplecticLayout lay{1};
    CHECK(necklace_bracket(cyc(2, {0}), cyc(2, {1}), lay) == cyc(2, {}));
    CHECK(necklace_bracket(cyc(2, {0, 0}), cyc(2, {1, 1}), lay) == cyc(2, {0, 1}, 4));
    auto f = cyc(2, {0, 1, 1, 0, 1});
    CHECK(necklace_bracket(f, f, lay).is_zero());
}

TEST_CASE("necklace bracket is a Lie bracket") {
    Rng rng(6);
    for (int n : {1, 2}) {
        SymplecticLayout lay{n};
        int g = lay.generator_count();
        for (int t = 0; t < 30; ++t) {
            auto f = random_necklace(rng, g, 4, 2), h = random_necklace(rng, g, 4, 2), k = random_necklace(rng, g, 3, 2);
            CHECK(necklace_bracket(f, h, lay) == necklace_bracket(h, f, lay).scaled(-1));
            auto jac = necklace_bracket(f, necklace_bracket(h, k, lay), lay) + necklace_bracket(h, necklace_bracket(k, f, lay), lay) +
                       necklace_bracket(k, necklace_bracket(f, h, lay), lay);
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("Hamiltonian vector fields") {
    SymplecticLayout lay{1};
    auto a = BasedAlgebra::free(2);
    auto th = hamiltonian_field(cyc(2, {0, 1}), lay);
    CHECK(th.images()[0] == a.from_free(word_poly(2, {0}, -1)));
    CHECK(th.images()[1] == a.from_free(word_poly(2, {1})));
    auto zero = hamiltonian_field(cyc(2, {}), lay);
    CHECK(zero.images()[0].empty());
    CHECK(zero.images()[1].empty());
    auto sq = hamiltonian_field(cyc(2, {0, 0}), lay);
    CHECK(sq.images()[0].empty());
    CHECK(sq.images()[1] == a.from_free(word_poly(2, {0}, 2)));

    Rng rng(8);
    for (int n : {1, 2}) {
        SymplecticLayout l{n};
        int g = l.generator_count();
        auto alg = BasedAlgebra::free(g);
        for (int t = 0; t < 20; ++t) {
            auto f = random_necklace(rng, g, 4, 2), h = random_necklace(rng, g, 4, 2);
            auto tf = hamiltonian_field(f, l), th2 = hamiltonian_field(h, l);
            CHECK(apply_derivation(tf, h) == necklace_bracket(f, h, l));
            CHECK(derivation_commutator(alg, tf, th2) == hamiltonian_field(necklace_bracket(f, h, l), l));
        }
    }
}

TEST_CASE("Kirillov-Kostant bracket") {
    auto g = lie::sl2();
    auto e = SymPoly::variable(3, 0), f = SymPoly::variable(3, 1), h = SymPoly::variable(3, 2);
    CHECK(kirillov_kostant(e, f, g) == h);
    CHECK(kirillov_kostant(f, f, g).is_zero());
    CHECK(kirillov_kostant(e * f, h, g).is_zero());
    Rng rng(10);
    for (const auto& lie : {lie::sl2(), lie::heisenberg()})
        for (int t = 0; t < 20; ++t) {
            auto p = random_sym(rng, 3, 3), q = random_sym(rng, 3, 3), r = random_sym(rng, 3, 3);
            CHECK(kirillov_kostant(p, q * r, lie) == kirillov_kostant(p, q, lie) * r + q * kirillov_kostant(p, r, lie));
            CHECK(kirillov_kostant(p, q, lie) == kirillov_kostant(q, p, lie).scaled(-1));
            auto jac = kirillov_kostant(p, kirillov_kostant(q, r, lie), lie) + kirillov_kostant(q, kirillov_kostant(r, p, lie), lie) +
                       kirillov_kostant(r, kirillov_kostant(p, q, lie), lie);
            CHECK(jac.is_zero());
        }
    CHECK_THROWS(kirillov_kostant(SymPoly::variable(2, 0), e, g));
}
