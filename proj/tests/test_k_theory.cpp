#include <doctest.h>

#include "ncalc/k_theory.hpp"

using namespace ncalc;

namespace {

Elem basis_elem(int i, const Rational& c = 1) {
    Elem e;
    elem_add(e, i == 0 ? Word{} : Word{i}, c);
    return e;
}

Elem zero() { return Elem{}; }

IdempotentMatrix diag10(const BasedAlgebra& a) { return IdempotentMatrix(a, {{elem_unit(), zero()}, {zero(), zero()}}); }

std::vector<BasedAlgebra> test_algebras() {
    return {BasedAlgebra::findim(algebras::idempotent()), BasedAlgebra::findim(algebras::truncated_polynomial(2)),
            BasedAlgebra::findim(algebras::upper_triangular(2))};
}

// a handful of idempotents of size 2 over a, including non-scalar ones when available
std::vector<IdempotentMatrix> sample_idempotents(const BasedAlgebra& a) {
    std::vector<IdempotentMatrix> out{diag10(a)};
    for (int i = 1; i < a.structure().dim(); ++i) {
        Elem x = basis_elem(i);
        if (a.mul(x, x) == x) out.emplace_back(a, std::vector<std::vector<Elem>>{{x, zero()}, {zero(), elem_unit()}});
    }
    return out;
}

}  // namespace

TEST_CASE("idempotent and invertible validation") {
    auto a = BasedAlgebra::findim(algebras::idempotent());
    CHECK_NOTHROW(IdempotentMatrix(a, {{basis_elem(1)}}));
    CHECK_THROWS_AS(IdempotentMatrix(a, {{basis_elem(1, 2)}}), MathError);
    CHECK_THROWS_AS(IdempotentMatrix(a, {{basis_elem(1), zero()}}), MathError);
    CHECK_THROWS_AS(IdempotentMatrix(BasedAlgebra::free(1), {{elem_unit()}}), MathError);
    FormMatrix two = FormMatrix::from_elems({{basis_elem(0, 2)}});
    FormMatrix half = FormMatrix::from_elems({{basis_elem(0, Rational(1, 2))}});
    CHECK_NOTHROW(InvertibleMatrix(a, two, half));
    CHECK_THROWS_AS(InvertibleMatrix(a, two, two), MathError);
    CHECK_THROWS_AS(elementary_matrix(a, 2, 1, 1, elem_unit()), MathError);
}

TEST_CASE("idempotent calculus identities") {
    Rng rng(2);
    for (const auto& a : test_algebras())
        for (const auto& e : sample_idempotents(a)) {
            CHECK(idempotent_identities(e));
            for (int t = 0; t < 3; ++t) CHECK(idempotent_identities(conjugate(e, random_invertible(a, 2, rng))));
        }
    auto k2 = BasedAlgebra::findim(algebras::idempotent());
    CHECK(idempotent_identities(IdempotentMatrix(k2, {{basis_elem(1)}})));
}

TEST_CASE("zeroth Chern character") {
    auto a = BasedAlgebra::findim(algebras::idempotent());
    DRContext ctx(a);
    IdempotentMatrix e(a, {{basis_elem(1)}});
    auto r = chern_c0(ctx, e);
    CHECK(r.c0.representative == NCForm::from_elem(basis_elem(1)));
    CHECK(r.closed);
    CHECK(!NCForm::d_of(basis_elem(1)).is_zero());   // closed only modulo commutators

    Rng rng(5);
    for (const auto& alg : test_algebras()) {
        DRContext c(alg);
        auto d = chern_c0(c, diag10(alg));
        CHECK(d.c0.representative == NCForm::from_elem(elem_unit()));
        CHECK(d.closed);
        for (const auto& idem : sample_idempotents(alg)) {
            auto base = chern_c0(c, idem);
            CHECK(base.closed);
            for (int t = 0; t < 3; ++t) {
                auto conj = chern_c0(c, conjugate(idem, random_invertible(alg, 2, rng)));
                CHECK(conj.c0 == base.c0);
                CHECK(conj.closed);
            }
            auto sum = chern_c0(c, direct_sum(idem, diag10(alg)));
            CHECK(sum.c0.representative == base.c0.representative + d.c0.representative);
        }
    }
    DRContext other(BasedAlgebra::findim(algebras::truncated_polynomial(2)));
    CHECK_THROWS_AS(chern_c0(other, e), MathError);
}

TEST_CASE("first Chern character of invertibles") {
    auto a = BasedAlgebra::findim(algebras::cyclic_group_algebra(3));
    DRContext ctx(a);
    FormMatrix g = FormMatrix::from_elems({{basis_elem(1)}});
    FormMatrix ginv = FormMatrix::from_elems({{basis_elem(2)}});
    InvertibleMatrix gm(a, g, ginv);
    auto r = chern_c1(ctx, gm);
    NCForm expect = NCForm::term(FormKey{Word{2}, Word{1}});
    CHECK(r.form == expect);
    CHECK(r.c1 == ctx.project(expect));
    CHECK(r.b_cycle);
    CHECK(r.b.empty());

    InvertibleMatrix one(a, FormMatrix::identity(1), FormMatrix::identity(1));
    CHECK(chern_c1(ctx, one).form.is_zero());
    CHECK(chern_c1(ctx, one).c1.is_zero());

    Rng rng(7);
    for (const auto& alg : test_algebras()) {
        DRContext c(alg);
        for (int t = 0; t < 5; ++t) {
            auto g1 = random_invertible(alg, 2, rng), g2 = random_invertible(alg, 2, rng);
            auto c12 = chern_c1(c, g1 * g2), c1 = chern_c1(c, g1), c2 = chern_c1(c, g2);
            CHECK(c12.b_cycle);
            CHECK(c12.c1 == c.project(c1.form + c2.form));
            auto h = random_invertible(alg, 2, rng);
            InvertibleMatrix hinv(alg, h.inverse(), h.matrix());
            CHECK(chern_c1(c, h * g1 * hinv).c1 == c1.c1);
        }
    }
}

TEST_CASE("higher Chern characters") {
    auto a = BasedAlgebra::findim(algebras::idempotent());
    DRContext ctx(a);
    IdempotentMatrix e(a, {{basis_elem(1)}});
    auto ch1 = chern_ch_k(ctx, e, 1);
    NCForm omega = NCForm::term(FormKey{Word{1}, Word{1}, Word{1}});
    CHECK(ch1.form == omega);
    CHECK(ch1.ch == ctx.project(omega));
    CHECK(!ch1.ch.is_zero());
    CHECK(ch1.closed);
    DRClass zero2;
    zero2.degree = 2;
    CHECK(!dr_cohomologous(ctx, ch1.ch, zero2));
    CHECK(dr_cohomologous(ctx, ctx.d(DRClass{1, NCForm::term(FormKey{Word{1}, Word{1}})}), zero2));
    auto ch2 = chern_ch_k(ctx, e, 2);
    CHECK(ch2.form == NCForm::term(FormKey{Word{1}, Word{1}, Word{1}, Word{1}, Word{1}}).scaled(Rational(1, 2)));
    CHECK(ch2.closed);
    CHECK(chern_ch_k(ctx, e, 0).ch == chern_c0(ctx, e).c0);

    Rng rng(9);
    for (const auto& alg : test_algebras()) {
        DRContext c(alg);
        for (int k = 1; k <= 2; ++k) CHECK(chern_ch_k(c, diag10(alg), k).form.is_zero());
        for (const auto& idem : sample_idempotents(alg))
            for (int k = 1; k <= 2; ++k) {
                auto base = chern_ch_k(c, idem, k);
                CHECK(base.closed);
                auto conj = chern_ch_k(c, conjugate(idem, random_invertible(alg, 2, rng)), k);
                CHECK(conj.closed);
                CHECK(dr_cohomologous(c, conj.ch, base.ch));
                auto sum = chern_ch_k(c, direct_sum(idem, idem), k);
                CHECK(sum.ch == c.project(base.form.scaled(2)));
            }
    }
}

TEST_CASE("Grassmannian connection") {
    Rng rng(11);
    auto a = BasedAlgebra::findim(algebras::idempotent());
    auto id = grassmann_connection(IdempotentMatrix(a, FormMatrix::identity(2)));
    std::vector<NCForm> v{NCForm::from_elem(basis_elem(1)), NCForm::from_elem(basis_elem(0, 3))};
    auto dv = id.apply(v);
    CHECK(dv[0] == NCForm::d_of(basis_elem(1)));
    CHECK(dv[1].is_zero());

    auto block = grassmann_connection(diag10(a));
    auto bv = block.apply({NCForm::from_elem(basis_elem(1)), NCForm::from_elem(basis_elem(1))});
    CHECK(bv[0] == NCForm::d_of(basis_elem(1)));
    CHECK(bv[1].is_zero());

    for (const auto& alg : test_algebras())
        for (const auto& idem : sample_idempotents(alg)) {
            auto c = grassmann_connection(conjugate(idem, random_invertible(alg, 2, rng)));
            CHECK(leibniz_check(c, rng));
            CHECK(curvature_linearity_check(c, rng));
        }
    auto single = grassmann_connection(IdempotentMatrix(a, {{basis_elem(1)}}));
    CHECK(leibniz_check(single, rng));
    CHECK(curvature_linearity_check(single, rng));
}

TEST_CASE("curvature and Chern character") {
    auto a = BasedAlgebra::findim(algebras::idempotent());
    DRContext ctx(a);
    auto flat = connection_curvature(ctx, grassmann_connection(diag10(a)), 1);
    CHECK(flat.curvature.is_zero());
    CHECK(flat.agrees);

    IdempotentMatrix e(a, {{basis_elem(1)}});
    auto r1 = connection_curvature(ctx, grassmann_connection(e), 1);
    CHECK(r1.trace_class == chern_ch_k(ctx, e, 1).ch);
    CHECK(r1.agrees);
    auto r2 = connection_curvature(ctx, grassmann_connection(e), 2);
    CHECK(r2.agrees);
    CHECK_THROWS_AS(connection_curvature(ctx, grassmann_connection(e), 0), MathError);

    Rng rng(13);
    for (const auto& alg : test_algebras()) {
        DRContext c(alg);
        for (const auto& idem : sample_idempotents(alg)) {
            auto conj = conjugate(idem, random_invertible(alg, 2, rng));
            for (int k = 1; k <= 2; ++k) CHECK(connection_curvature(c, grassmann_connection(conj), k).agrees);
        }
    }
}
