#include <doctest.h>

#include "ncalc/cyclic.hpp"
#include "ncalc/forms.hpp"
#include "test_util.hpp"

using namespace ncalc;
using testutil::gen;

namespace {

const Word X{0}, Y{1}, E{};

NCForm T(FormKey k, Rational c = 1) { return NCForm::term(k, c); }

NCForm compose_power(const BasedAlgebra& a, NCForm f, int n) {
    for (int i = 0; i < n; ++i) f = karoubi(a, f);
    return f;
}

std::vector<BasedAlgebra> sample_algebras() {
    return {BasedAlgebra::free(2), BasedAlgebra::findim(algebras::idempotent()),
            BasedAlgebra::findim(algebras::truncated_polynomial(3)), BasedAlgebra::commutative(2)};
}

}  // namespace

TEST_CASE("form product normalizes by Leibniz") {
    auto a = BasedAlgebra::free(2);
    CHECK(form_mul(a, NCForm::d_of(gen(0)), NCForm::from_elem(gen(1))) ==
          NCForm::d_of(a.mul(gen(0), gen(1))) - T({X, Y}));
    // a.(b dc) = (ab) dc
    CHECK(left_mul(a, gen(0), T({Y, X})) == T({Word{0, 1}, X}));
    NCForm dxdy = T({E, X, Y});
    NCForm expect = T({E, X, Word{1, 0}}) - T({E, Word{0, 1}, X}) + T({X, Y, X});
    CHECK(form_mul(a, dxdy, NCForm::from_elem(gen(0))) == expect);
    CHECK(form_mul(a, T({X, Y}), T({E, X})) == T({X, Y, X}));
}

TEST_CASE("d and b on examples") {
    auto a = BasedAlgebra::free(2);
    CHECK(de_rham_d(a, T({X, Y})) == T({E, X, Y}));
    CHECK(de_rham_d(a, NCForm::from_elem(elem_unit())).is_zero());
    CHECK(hochschild_b(a, T({X, Y})) == T({Word{0, 1}}) - T({Word{1, 0}}));
    CHECK(hochschild_b(a, T({E, X, Y})) == T({E, Word{0, 1}}, -1) + T({X, Y}) + T({Y, X}));
    CHECK_THROWS(hochschild_b(a, T({X})));
}

TEST_CASE("Karoubi operator examples") {
    auto a = BasedAlgebra::free(2);
    CHECK(karoubi(a, T({Word{0, 1}})) == T({Word{0, 1}}));
    CHECK(karoubi(a, T({X, Y})) == T({E, Word{1, 0}}) - T({Y, X}));
}

TEST_CASE("contraction and Lie derivative examples") {
    auto a = BasedAlgebra::free(2);
    auto eu = DerivationSpec::euler(a);
    CHECK(contraction_i(a, eu, T({E, X})) == T({X}));
    CHECK(contraction_i(a, eu, T({E, X, Y})) == T({X, Y}, 2) - T({E, Word{0, 1}}));
    CHECK(contraction_i(a, eu, T({Word{0, 1}})).is_zero());
    CHECK(lie_derivative(a, eu, NCForm::from_elem(elem_unit())).is_zero());
    Rng rng(7);
    for (int w = 1; w <= 4; ++w)
        for (int n = 0; n <= 2; ++n) {
            NCForm f = random_form(a, rng, n, w, 4);
            CHECK(lie_derivative(a, eu, f) == f.scaled(w));
            CHECK(lie_derivative_cartan(a, eu, f) == f.scaled(w));
        }
}

TEST_CASE("d squared, b squared, d is an odd derivation") {
    Rng rng(11);
    for (const auto& a : sample_algebras())
        for (int trial = 0; trial < 6; ++trial) {
            int w = static_cast<int>(rng.uniform(1, 4));
            for (int n = 0; n <= 3; ++n) {
                NCForm f = random_form(a, rng, n, w, 3);
                CHECK(de_rham_d(a, de_rham_d(a, f)).is_zero());
                if (n >= 2) CHECK(hochschild_b(a, hochschild_b(a, f)).is_zero());
                NCForm g = random_form(a, rng, static_cast<int>(rng.uniform(0, 2)), 2, 2);
                NCForm lhs = de_rham_d(a, form_mul(a, f, g));
                NCForm rhs = form_mul(a, de_rham_d(a, f), g) + form_mul(a, f, de_rham_d(a, g)).scaled(n % 2 ? -1 : 1);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("form product is associative") {
    Rng rng(5);
    for (const auto& a : sample_algebras())
        for (int trial = 0; trial < 5; ++trial) {
            NCForm f = random_form(a, rng, static_cast<int>(rng.uniform(0, 2)), 2, 2);
            NCForm g = random_form(a, rng, static_cast<int>(rng.uniform(0, 2)), 1, 2);
            NCForm h = random_form(a, rng, static_cast<int>(rng.uniform(0, 2)), 2, 2);
            CHECK(form_mul(a, form_mul(a, f, g), h) == form_mul(a, f, form_mul(a, g, h)));
        }
}

TEST_CASE("Karoubi identities") {
    Rng rng(13);
    for (const auto& a : sample_algebras())
        for (int n = 0; n <= 3; ++n)
            for (int trial = 0; trial < 4; ++trial) {
                int w = static_cast<int>(rng.uniform(n, 4));
                NCForm f = random_form(a, rng, n, w, 3);
                NCForm db_bd = hochschild_b(a, de_rham_d(a, f));
                if (n >= 1) db_bd += de_rham_d(a, hochschild_b(a, f));
                CHECK(db_bd == f - karoubi(a, f));
                CHECK(compose_power(a, de_rham_d(a, f), n + 1) == de_rham_d(a, f));
                CHECK(compose_power(a, f, n) == f + hochschild_b(a, compose_power(a, de_rham_d(a, f), n)));
                NCForm db = n >= 1 ? de_rham_d(a, hochschild_b(a, f)) : NCForm();
                CHECK(compose_power(a, f, n + 1) == f - db);
                NCForm u = compose_power(a, f, n + 1) - f;
                CHECK((compose_power(a, u, n) - u).is_zero());
            }
}

TEST_CASE("Cartan calculus") {
    Rng rng(17);
    for (const auto& a : sample_algebras())
        for (int trial = 0; trial < 4; ++trial) {
            auto th = testutil::random_derivation(a, rng);
            auto ga = testutil::random_derivation(a, rng);
            auto br = derivation_commutator(a, th, ga);
            for (int n = 0; n <= 2; ++n) {
                NCForm f = random_form(a, rng, n, 2, 3);
                CHECK(lie_derivative(a, th, f) == lie_derivative_cartan(a, th, f));
                CHECK(contraction_i(a, th, contraction_i(a, th, f)).is_zero());
                NCForm li = lie_derivative(a, th, contraction_i(a, ga, f)) - contraction_i(a, ga, lie_derivative(a, th, f));
                CHECK(li == contraction_i(a, br, f));
                NCForm ll = lie_derivative(a, th, lie_derivative(a, ga, f)) - lie_derivative(a, ga, lie_derivative(a, th, f));
                CHECK(ll == lie_derivative(a, br, f));
            }
        }
}

TEST_CASE("DR projection examples") {
    DRContext ctx(BasedAlgebra::free(2));
    const auto& a = ctx.algebra();
    CHECK(ctx.project(T({X, Y}) - form_mul(a, T({E, Y}), T({X}))).is_zero());
    CHECK(ctx.project(T({E, X, Y}) + T({E, Y, X})).is_zero());
    CHECK(ctx.project(T({X, Y})).representative == T({X, Y}));
    CHECK(dr_string(a, ctx.project(T({X, Y}))) == "x*d(y) [DR]");
    CHECK_THROWS(ctx.project(T({X}) + T({X, Y})));
}

TEST_CASE("DR zero forms are necklaces") {
    DRContext ctx(BasedAlgebra::free(2));
    const int necklaces[] = {1, 2, 3, 4, 6, 8};
    for (int w = 0; w <= 5; ++w) CHECK(ctx.piece(0, w).quotient_dimension() == static_cast<std::size_t>(necklaces[w]));
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Word w;
        for (long i = rng.uniform(1, 5); i > 0; --i) w.push_back(static_cast<int>(rng.uniform(0, 1)));
        CHECK(ctx.project(T({w})) == ctx.project(T({least_rotation(w)})));
    }
}

TEST_CASE("DR cohomology") {
    {
        DRContext ctx(BasedAlgebra::findim(algebras::idempotent()));
        auto h = dr_cohomology(ctx, 4, 0);
        CHECK(h.totals == std::vector<int>{2, 0, 1, 0, 1});
        CHECK(h.reduced_totals == std::vector<int>{1, 0, 1, 0, 1});
    }
    {
        DRContext ctx(BasedAlgebra::free(2));
        auto h = dr_cohomology(ctx, 3, 4);
        CHECK(h.totals == std::vector<int>{1, 0, 0, 0});
    }
    {
        DRContext ctx(BasedAlgebra::findim(algebras::ground_field()));
        auto h = dr_cohomology(ctx, 3, 0);
        CHECK(h.totals == std::vector<int>{1, 0, 0, 0});
    }
}

TEST_CASE("Poincare homotopy") {
    DRContext ctx(BasedAlgebra::free(2));
    const auto& a = ctx.algebra();
    DRClass xdy = ctx.project(T({X, Y}));
    DRClass omega = ctx.d(xdy);
    DRClass eta = poincare_primitive(ctx, omega);
    CHECK(eta.degree == 1);
    CHECK(ctx.d(eta) == omega);
    // primitive differs from x dy by an exact class
    CHECK(ctx.project(eta.representative - xdy.representative) == ctx.project(NCForm::d_of(a.mul(gen(0), gen(1))).scaled(Rational(-1, 2))));

    DRClass sym = ctx.project(T({E, X, Y}) - T({E, Y, X}));
    CHECK(sym == ctx.project(T({E, X, Y}, 2)));
    CHECK(ctx.d(poincare_primitive(ctx, sym)) == sym);

    Rng rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        DRClass w = ctx.d(ctx.project(random_form(a, rng, 1, 3, 4)));
        DRClass e = poincare_primitive(ctx, w);
        CHECK(ctx.d(e) == w);
    }
    CHECK_THROWS(poincare_primitive(ctx, ctx.project(T({X, Y}))));
    CHECK_THROWS(poincare_primitive(ctx, DRClass{0, T({E})}));
}

TEST_CASE("Quillen sequence") {
    for (int gens : {1, 2}) {
        DRContext ctx(BasedAlgebra::free(gens));
        auto rep = quillen_maps(ctx, gens == 1 ? 4 : 5);
        for (const auto& q : rep) {
            CHECK(q.exact());
            CHECK(q.image_b_is_commutators);
        }
        CHECK(rep[0].dim_dr0 == 0);
    }
}

TEST_CASE("closed DR2 classes match commutators") {
    DRContext ctx(BasedAlgebra::free(2));
    const auto& a = ctx.algebra();
    const int necklaces[] = {1, 2, 3, 4, 6, 8};
    for (int w = 1; w <= 5; ++w) {
        const auto& p3 = ctx.piece(3, w);
        Echelon img;
        auto q2 = ctx.quotient_basis(2, w);
        for (const auto& k : q2) img.insert(p3.commutators.reduce(ctx.vectorize(p3, de_rham_d(a, T(k)))));
        int closed = static_cast<int>(q2.size() - img.rank());
        CHECK(closed == (1 << w) - necklaces[w]);
    }
}

TEST_CASE("square-zero extension") {
    auto a = BasedAlgebra::free(2);
    SquareZeroElement one{elem_unit(), NCForm()};
    SquareZeroElement p{gen(0), T({Y, X, Y})};
    CHECK(square_zero_product(a, one, p) == p);
    SquareZeroElement x{gen(0), NCForm()}, y{gen(1), NCForm()};
    auto xy = square_zero_product(a, x, y);
    CHECK(xy.a == a.mul(gen(0), gen(1)));
    CHECK(xy.omega == T({E, X, Y}));
    Rng rng(23);
    for (const auto& alg : sample_algebras())
        for (int trial = 0; trial < 5; ++trial) {
            auto rnd = [&] { return SquareZeroElement{testutil::random_elem(alg, rng, 2, 2), random_form(alg, rng, 2, 3, 2)}; };
            auto u = rnd(), v = rnd(), w = rnd();
            CHECK(square_zero_product(alg, square_zero_product(alg, u, v), w) ==
                  square_zero_product(alg, u, square_zero_product(alg, v, w)));
        }
    CHECK_THROWS(square_zero_product(a, SquareZeroElement{gen(0), T({X, Y})}, x));
}

TEST_CASE("Hamiltonian contraction of the symplectic form") {
    Rng rng(29);
    for (int n : {1, 2}) {
        SymplecticLayout lay{n};
        DRContext ctx(BasedAlgebra::free(lay.generator_count()));
        const auto& a = ctx.algebra();
        NCForm omega;
        for (int i = 0; i < n; ++i) omega += T({E, Word{lay.x(i)}, Word{lay.y(i)}});
        for (int trial = 0; trial < 6; ++trial) {
            auto f = project_cyclic(testutil::random_free(lay.generator_count(), rng, 1, 4, 3));
            auto theta = hamiltonian_field(f, lay);
            NCForm lhs = contraction_i(a, theta, omega);
            NCForm df = NCForm::d_of(a.from_free(f.representative()));
            if (lhs.is_zero() && df.is_zero()) continue;
            CHECK(ctx.project(lhs) == ctx.project(df.scaled(-1)));
        }
    }
}
