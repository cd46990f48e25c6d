#include <doctest.h>

#include "ncalc/forms.hpp"
#include "ncalc/hochschild.hpp"
#include "test_util.hpp"

using namespace ncalc;

namespace {

Cochain random_cochain(const Bimodule& m, int p, Rng& rng, bool normalized = false) {
    Cochain c = Cochain::zero(m, p);
    for (std::size_t t = 0; t < c.tuple_count(); ++t) {
        auto tup = c.tuple(t);
        if (normalized && std::find(tup.begin(), tup.end(), 0) != tup.end()) continue;
        for (int k = 0; k < m.dim(); ++k)
            if (rng.coin()) c.set(tup, k, rng.small_rational());
    }
    return c;
}

Rational sgn(int e) { return e % 2 ? Rational(-1) : Rational(1); }

std::vector<int> dims_prefix(const std::vector<int>& v, std::size_t n) { return std::vector<int>(v.begin(), v.begin() + static_cast<long>(n)); }

NCForm elem_form(const BasedAlgebra& b, int i) { return NCForm::term(FormKey{b.basis(0)[static_cast<std::size_t>(i)]}); }

}  // namespace

TEST_CASE("Hochschild homology dimensions") {
    auto idem = Bimodule::regular(algebras::idempotent());
    CHECK(hh_homology(idem, 4).dims == std::vector<int>{2, 0, 0, 0, 0});
    auto dual = Bimodule::regular(algebras::truncated_polynomial(2));
    auto h = hh_homology(dual, 4);
    CHECK(h.dims == std::vector<int>{2, 1, 1, 1, 1});
    for (int p = 0; p <= 4; ++p)
        for (const auto& z : h.cycles[static_cast<std::size_t>(p)]) CHECK(chain_differential(dual, z).is_zero());
    CHECK(hh_homology(Bimodule::regular(algebras::matrix_algebra(2)), 3).dims == std::vector<int>{1, 0, 0, 0});
    // reduced and unreduced complexes agree
    CHECK(hh_homology(dual, 3, false).dims == dims_prefix(h.dims, 4));
    CHECK(hh_homology(idem, 2, false).dims == std::vector<int>{2, 0, 0});
}

TEST_CASE("Hochschild cohomology dimensions") {
    auto mat = algebras::matrix_algebra(2);
    CHECK(hh_cohomology(Bimodule::regular(mat), 3).dims == std::vector<int>{1, 0, 0, 0});
    auto dual = algebras::truncated_polynomial(2);
    auto c = hh_cohomology(Bimodule::regular(dual), 4);
    CHECK(dims_prefix(c.dims, 2) == std::vector<int>{2, 1});
    CHECK(hh_cohomology(Bimodule::regular(dual), 2, false).dims == dims_prefix(c.dims, 3));
    CHECK(hh_cohomology(Bimodule::regular(algebras::product_of_fields(2)), 4).dims == std::vector<int>{2, 0, 0, 0, 0});
    for (const auto& a : {mat, dual, algebras::upper_triangular(2), algebras::product_of_fields(3)}) {
        auto r = hh_cohomology(Bimodule::regular(a), 1);
        CHECK(r.dims[0] == static_cast<int>(center(a).size()));
        CHECK(r.dims[1] == derivation_space(a).dim_outer);
        for (const auto& z : r.cocycles[1]) CHECK(cochain_differential(Bimodule::regular(a), z).is_zero());
    }
}

TEST_CASE("derivation spaces") {
    auto m = derivation_space(algebras::matrix_algebra(2));
    CHECK(m.dim_der == 3);
    CHECK(m.dim_inner == 3);
    auto d = derivation_space(algebras::truncated_polynomial(2));
    CHECK(d.dim_der == 1);
    CHECK(d.dim_inner == 0);
    auto p = derivation_space(algebras::product_of_fields(2));
    CHECK(p.dim_der == 0);
}

TEST_CASE("bimodule validation") {
    auto a = algebras::truncated_polynomial(2);
    Bimodule::Tensor left(2, std::vector<std::vector<Rational>>(1, std::vector<Rational>(1, Rational(1))));
    Bimodule::Tensor right = left;
    // x acting by 1 on a one-dimensional module violates x^2 = 0
    CHECK_THROWS_AS(Bimodule(a, 1, left, right), MathError);
    left[1][0][0] = 0;
    right[1][0][0] = 0;
    CHECK_NOTHROW(Bimodule(a, 1, left, right));
    auto env = Bimodule::enveloping(a);
    CHECK(env.dim() == 4);
}

TEST_CASE("cup product") {
    auto a = algebras::idempotent();
    auto mod = Bimodule::regular(a);
    auto z1 = Cochain::element(mod, {Rational(2), Rational(3)});
    auto z2 = Cochain::element(mod, {Rational(1), Rational(-1)});
    CHECK(cup(a, z1, z2).value({}) == a.mul(z1.value({}), z2.value({})));
    Rng rng(1);
    auto f = random_cochain(mod, 1, rng), g = random_cochain(mod, 1, rng);
    auto fg = cup(a, f, g);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(fg.value({i, j}) == a.mul(f.value({i}), g.value({j})));
    for (const auto& alg : {algebras::idempotent(), algebras::truncated_polynomial(2), algebras::upper_triangular(2)}) {
        auto md = Bimodule::regular(alg);
        for (int t = 0; t < 10; ++t) {
            int p = static_cast<int>(rng.uniform(0, 2)), q = static_cast<int>(rng.uniform(0, 2));
            auto x = random_cochain(md, p, rng), y = random_cochain(md, q, rng);
            CHECK(cochain_differential(md, cup(alg, x, y)) ==
                  cup(alg, cochain_differential(md, x), y) + cup(alg, x, cochain_differential(md, y)).scaled(sgn(p)));
        }
    }
    CHECK_THROWS(cup(a, Cochain::zero(Bimodule::enveloping(a), 1), f));
}

TEST_CASE("circle product and bracket basics") {
    auto a = algebras::upper_triangular(2);
    auto mod = Bimodule::regular(a);
    auto m = Cochain::multiplication(a);
    CHECK(circle_product(m, m).is_zero());
    CHECK(gerstenhaber_bracket(m, m).is_zero());
    Rng rng(2);
    auto f = random_cochain(mod, 1, rng);
    CHECK(circle_product(f, Cochain::identity(a)) == f);
    auto z = Cochain::element(mod, {Rational(1), Rational(2), Rational(-1)});
    auto f2 = random_cochain(mod, 2, rng);
    auto sub = circle_product(f2, z);
    for (int i = 0; i < a.dim(); ++i) {
        auto lhs = f2.eval({z.value({}), a.basis_vector(i)});
        auto rhs = f2.eval({a.basis_vector(i), z.value({})});
        for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
        CHECK(sub.value({i}) == lhs);
    }
    // even degree: odd shifted degree
    CHECK(gerstenhaber_bracket(f2, f2) == circle_product(f2, f2).scaled(2));
    for (int p = 0; p <= 3; ++p) {
        auto x = random_cochain(mod, p, rng);
        CHECK(gerstenhaber_bracket(m, x) == cochain_differential(mod, x).scaled(sgn(p + 1)));
    }
    CHECK_THROWS(circle_product(z, z));
}

TEST_CASE("Gerstenhaber identities") {
    Rng rng(3);
    for (const auto& a : {algebras::idempotent(), algebras::truncated_polynomial(2), algebras::upper_triangular(2)}) {
        auto mod = Bimodule::regular(a);
        auto d = [&](const Cochain& c) { return cochain_differential(mod, c); };
        for (int t = 0; t < 25; ++t) {
            int p = static_cast<int>(rng.uniform(0, 2)), q = static_cast<int>(rng.uniform(0, 2));
            if (p + q == 0) continue;
            auto f = random_cochain(mod, p, rng), g = random_cochain(mod, q, rng);
            // commutator of cup products in terms of the circle product
            auto lhs = cup(a, g, f) - cup(a, f, g).scaled(sgn(p * q));
            auto rhs = (d(circle_product(f, g)) - circle_product(f, d(g))).scaled(sgn(q)) + circle_product(d(f), g);
            CHECK(lhs == rhs);
            CHECK(d(gerstenhaber_bracket(f, g)) == gerstenhaber_bracket(d(f), g).scaled(sgn(q + 1)) + gerstenhaber_bracket(f, d(g)));
            CHECK(gerstenhaber_bracket(f, g) == gerstenhaber_bracket(g, f).scaled(-sgn((p - 1) * (q - 1))));
            int r = static_cast<int>(rng.uniform(1, 2));
            if (p + q + r > 5) continue;
            auto h = random_cochain(mod, r, rng);
            CHECK(gerstenhaber_bracket(f, gerstenhaber_bracket(g, h)) ==
                  gerstenhaber_bracket(gerstenhaber_bracket(f, g), h) +
                      gerstenhaber_bracket(g, gerstenhaber_bracket(f, h)).scaled(sgn((p - 1) * (q - 1))));
        }
    }
}

TEST_CASE("cup product is graded commutative in cohomology") {
    auto a = algebras::truncated_polynomial(2);
    auto mod = Bimodule::regular(a);
    auto c = hh_cohomology(mod, 2);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (const auto& f : c.cocycles[static_cast<std::size_t>(p)])
                for (const auto& g : c.cocycles[static_cast<std::size_t>(q)]) {
                    if (p + q == 0) continue;
                    auto comm = cup(a, g, f) - cup(a, f, g).scaled(sgn(p * q));
                    CHECK(comm == cochain_differential(mod, circle_product(f, g)).scaled(sgn(q)));
                }
}

TEST_CASE("chain contraction") {
    auto a = algebras::upper_triangular(2);
    Chain ch(2, false);
    ch.add({1, 2, 1}, 1);
    Chain expect(1, false);
    for (const auto& [k, v] : a.basis_product(1, 2)) expect.add({k, 1}, v);
    CHECK(chain_contraction(a, Cochain::identity(a), ch) == expect);
    auto mod = Bimodule::regular(a);
    auto z = Cochain::element(mod, {Rational(0), Rational(1), Rational(0)});
    Chain ez(2, false);
    for (const auto& [k, v] : a.basis_product(1, 1)) ez.add({k, 2, 1}, v);
    CHECK(chain_contraction(a, z, ch) == ez);
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        int p = static_cast<int>(rng.uniform(0, 2)), q = static_cast<int>(rng.uniform(0, 1));
        auto c1 = random_cochain(mod, p, rng), c2 = random_cochain(mod, q, rng);
        Chain x(3, false);
        for (int s = 0; s < 4; ++s)
            x.add({static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)),
                   static_cast<int>(rng.uniform(0, 2))},
                  rng.nonzero_rational());
        CHECK(chain_contraction(a, c2, chain_contraction(a, c1, x)) == chain_contraction(a, cup(a, c1, c2), x));
    }
    CHECK_THROWS(chain_contraction(a, random_cochain(mod, 3, rng), ch));
}

TEST_CASE("chain Lie derivative") {
    for (const auto& a : {algebras::truncated_polynomial(2), algebras::upper_triangular(2), algebras::matrix_algebra(2)}) {
        auto mod = Bimodule::regular(a);
        auto m = Cochain::multiplication(a);
        for (bool reduced : {false, true})
            for (int k = 1; k <= 3; ++k) {
                int lo = reduced ? 1 : 0;
                std::vector<int> key(static_cast<std::size_t>(k + 1), lo);
                key[0] = 0;
                // every basis chain
                std::function<void(std::size_t)> rec = [&](std::size_t slot) {
                    if (slot == key.size()) {
                        Chain c(k, reduced);
                        c.add(key, 1);
                        CHECK(chain_lie(a, m, c) == chain_differential(mod, c));
                        return;
                    }
                    for (int v = slot == 0 ? 0 : lo; v < a.dim(); ++v) {
                        key[slot] = v;
                        rec(slot + 1);
                    }
                };
                if (a.dim() <= 3 || k <= 2) rec(0);
            }
    }
    auto a = algebras::truncated_polynomial(2);
    auto der = derivation_space(a).derivations.at(0);
    Chain c(2, false);
    c.add({1, 1, 0}, 1);
    c.add({0, 1, 1}, 3);
    Chain expect(2, false);
    for (const auto& [key, v] : c.terms)
        for (std::size_t s = 0; s < key.size(); ++s) {
            auto img = der.value({key[s]});
            for (int r = 0; r < a.dim(); ++r) {
                auto nk = key;
                nk[s] = r;
                expect.add(nk, v * img[static_cast<std::size_t>(r)]);
            }
        }
    CHECK(chain_lie(a, der, c) == expect);
    Chain low(0, false);
    low.add({1}, 1);
    CHECK_THROWS(chain_lie(a, Cochain::zero(Bimodule::regular(a), 3), low));
}

TEST_CASE("alternating map comparison") {
    auto r1 = alt_comparison(algebras::truncated_polynomial(3), 1);
    CHECK(r1.scalar);
    CHECK(r1.factor == 1);
    auto r2 = alt_comparison(algebras::truncated_polynomial(3), 2);
    CHECK(r2.scalar);
    CHECK(r2.factor == 2);
    CHECK(r2.lands_in_cycles);
    auto r3 = alt_comparison(algebras::truncated_polynomial(4), 3);
    CHECK(r3.scalar);
    CHECK(r3.factor == 6);
    CHECK(r3.lands_in_cycles);
    CHECK_THROWS(alt_comparison(algebras::matrix_algebra(2), 2));
}

TEST_CASE("graded Hochschild homology") {
    auto poly = BasedAlgebra::commutative(2);
    for (int w = 1; w <= 3; ++w) {
        auto dims = graded_hh(poly, w, 3);
        CHECK(dims[0] == w + 1);
        CHECK(dims[1] == 2 * w);         // 2 dim k[x,y]_{w-1}
        CHECK(dims[2] == w - 1);         // dx^dy times k[x,y]_{w-2}
        CHECK(dims[3] == 0);
    }
    auto line = BasedAlgebra::commutative(1);
    for (int w = 1; w <= 4; ++w) {
        auto dims = graded_hh(line, w, 3);
        CHECK(dims == std::vector<int>{1, 1, 0, 0});
    }
    auto fr = BasedAlgebra::free(2);
    for (int w = 1; w <= 4; ++w) {
        auto dims = graded_hh(fr, w, 3);
        CHECK(dims[2] == 0);
        CHECK(dims[3] == 0);
    }
}

TEST_CASE("formal smoothness") {
    for (const auto& a : {algebras::product_of_fields(2), algebras::matrix_algebra(2), algebras::upper_triangular(2)}) {
        auto rep = formal_smoothness_check(a);
        CHECK(rep.smooth);
        CHECK(rep.hh2_self == 0);
        CHECK(rep.hh2_enveloping == 0);
        // independent check of the splitting with the form calculus
        auto b = BasedAlgebra::findim(a);
        auto s_of = [&](const NCForm& w) {
            // s is left A-linear: s(a0 d e_x) = a0 . s(d e_x); values as forms phi(s(.)) in Omega^1
            NCForm out;
            for (const auto& [key, c] : w.terms()) {
                int x = key[1][0];
                for (const auto& [t, v] : rep.splitting[static_cast<std::size_t>(x - 1)]) {
                    NCForm piece = form_mul(b, elem_form(b, t[0]), form_mul(b, NCForm::d_of(b.from_vector(a.basis_vector(t[1]))), elem_form(b, t[2])));
                    out += left_mul(b, Elem{{key[0], Rational(1)}}, piece).scaled(c * v);
                }
            }
            return out;
        };
        for (int x = 1; x < a.dim(); ++x) {
            NCForm dx = NCForm::d_of(b.from_vector(a.basis_vector(x)));
            CHECK(s_of(dx) == dx);
        }
        REQUIRE(static_cast<int>(rep.splitting.size()) == a.dim() - 1);
    }
    auto dual = formal_smoothness_check(algebras::truncated_polynomial(2));
    CHECK_FALSE(dual.smooth);
    CHECK(dual.hh2_self == 1);
    REQUIRE(dual.witness.has_value());
    auto mod = Bimodule::regular(algebras::truncated_polynomial(2));
    CHECK(cochain_differential(mod, *dual.witness).is_zero());
    CHECK_FALSE(dual.witness->is_zero());
}

TEST_CASE("Morita trace") {
    auto r = morita_trace_check(algebras::truncated_polynomial(2), 2);
    CHECK(r.hh0_algebra == 2);
    CHECK(r.hh0_matrices == 2);
    CHECK(r.invertible);
    auto k = morita_trace_check(algebras::ground_field(), 3);
    CHECK(k.hh0_algebra == 1);
    CHECK(k.hh0_matrices == 1);
    CHECK(k.invertible);
    auto p = morita_trace_check(algebras::product_of_fields(2), 2);
    CHECK(p.hh0_algebra == 2);
    CHECK(p.hh0_matrices == 2);
    CHECK(p.invertible);
    CHECK(hh_homology(Bimodule::regular(algebras::matrices_over(algebras::truncated_polynomial(2), 2)), 0).dims[0] == 2);
}

TEST_CASE("cocycles give bimodule maps on forms") {
    for (const auto& a : {algebras::idempotent(), algebras::truncated_polynomial(2), algebras::truncated_polynomial(3)}) {
        auto mod = Bimodule::regular(a);
        auto b = BasedAlgebra::findim(a);
        std::vector<Cochain> candidates;
        for (const auto& d : derivation_space(a).derivations) candidates.push_back(d);
        candidates.push_back(cochain_differential(mod, Cochain::element(mod, a.basis_vector(a.dim() - 1))));
        for (const auto& c : candidates) {
            if (!c.normalized()) continue;
            auto res = cocycle_to_polyvector(mod, c);
            REQUIRE(res.ok);
            auto phi = [&](const NCForm& w) {
                CoeffVector out(static_cast<std::size_t>(a.dim()), Rational(0));
                for (const auto& [key, v] : w.terms()) {
                    auto img = res.map.at({key[0].empty() ? 0 : key[0][0], key[1][0]});
                    for (int i = 0; i < a.dim(); ++i) out[static_cast<std::size_t>(i)] += v * img[static_cast<std::size_t>(i)];
                }
                return out;
            };
            for (int x = 0; x < a.dim(); ++x)
                for (int y = 1; y < a.dim(); ++y)
                    for (int z = 0; z < a.dim(); ++z) {
                        NCForm w = form_mul(b, elem_form(b, x), NCForm::d_of(b.from_vector(a.basis_vector(y))));
                        CHECK(phi(right_mul(b, w, b.from_vector(a.basis_vector(z)))) == a.mul(phi(w), a.basis_vector(z)));
                        CHECK(phi(left_mul(b, b.from_vector(a.basis_vector(z)), w)) == a.mul(a.basis_vector(z), phi(w)));
                    }
        }
    }
    auto a = algebras::truncated_polynomial(3);
    auto mod = Bimodule::regular(a);
    Cochain bad = Cochain::zero(mod, 1);
    bad.set({1}, 0, 1);   // x -> 1 is not a derivation of k[x]/(x^3)
    auto res = cocycle_to_polyvector(mod, bad);
    CHECK_FALSE(res.ok);
    CHECK(res.defect_inputs.size() == 2);
    CHECK_THROWS(cocycle_to_polyvector(mod, Cochain::identity(a)));
}
