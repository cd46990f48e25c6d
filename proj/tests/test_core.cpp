#include "doctest.h"

#include "ncalc/based_algebra.hpp"
#include "ncalc/free_poly.hpp"
#include "ncalc/linalg.hpp"
#include "ncalc/random.hpp"
#include "ncalc/structure_algebra.hpp"

using namespace ncalc;

namespace {

FreePoly X() { return FreePoly::generator(2, 0); }
FreePoly Y() { return FreePoly::generator(2, 1); }

FreePoly random_poly(Rng& rng, int gens, int max_len, int terms) {
    FreePoly p(gens);
    for (int t = 0; t < terms; ++t) {
        Word w;
        auto len = rng.uniform(0, max_len);
        for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(rng.uniform(0, gens - 1)));
        p.add_term(w, rng.small_rational());
    }
    return p;
}

}  // namespace

TEST_CASE("rationals are canonical and print as p/q") {
    Rational q = parse_rational("-6/4");
    CHECK(q == Rational(-3, 2));
    CHECK(to_string(q) == "-3/2");
    CHECK(to_pq(Rational(2)) == "2/1");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("a/2"));
}

TEST_CASE("TPoly ring and substitution t = 0") {
    TPoly t = TPoly::t_power(1);
    TPoly a = TPoly(2) + t;
    TPoly b = TPoly(Rational(1, 2)) - t * t;
    CHECK((a * b).at_zero() == a.at_zero() * b.at_zero());
    CHECK(a * b == b * a);
    CHECK((a + b) * t == a * t + b * t);
    CHECK(t.div_t() == TPoly(1));
    CHECK_THROWS(a.div_t());
    CHECK(t.str() == "t");
}

TEST_CASE("dual numbers square to zero in the eps part") {
    DualScalar e(0, 1);
    CHECK(e * e == DualScalar(0, 0));
    DualScalar a(Rational(2), Rational(3)), b(Rational(5), Rational(-1));
    CHECK(a * b == DualScalar(10, Rational(2 * -1 + 3 * 5)));
}

TEST_CASE("free_mul and free_commutator examples") {
    CHECK((X() * Y()).str() == "x*y");
    FreePoly lhs = (X() + Y()) * (X() - Y());
    FreePoly rhs = X() * X() - X() * Y() + Y() * X() - Y() * Y();
    CHECK(lhs == rhs);
    FreePoly one = FreePoly::constant(2, 1);
    FreePoly w = FreePoly::monomial(2, {0, 1, 1, 0});
    CHECK(one * w == w);
    CHECK(free_commutator(X(), Y()) == X() * Y() - Y() * X());
    CHECK(free_commutator(X(), X()).is_zero());
    // [xy, x] = xyx - x^2 y, expanded by hand
    FreePoly expect(2);
    expect.add_term({0, 1, 0}, 1);
    expect.add_term({0, 0, 1}, -1);
    CHECK(free_commutator(X() * Y(), X()) == expect);
    CHECK_THROWS(FreePoly::generator(3, 0) * X());
}

TEST_CASE("FreePoly ring axioms on random triples") {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        FreePoly a = random_poly(rng, 2, 3, 4), b = random_poly(rng, 2, 3, 4), c = random_poly(rng, 2, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("FreePoly over TPoly coefficients") {
    using TP = FreePolyT<TPoly>;
    TP x = TP::generator(1, 0);
    TP tx = x.scaled(TPoly::t_power(1));
    CHECK((tx * x).coeff({0, 0}) == TPoly::t_power(1));
}

TEST_CASE("structure_validate examples") {
    CHECK_FALSE(structure_validate(algebras::matrix_algebra(2)).has_value());
    CHECK_FALSE(structure_validate(algebras::idempotent()).has_value());
    // basis {1, e, f}: e e = 1 + e + f, e f = f, f e = 0, f f = 0; (ee)e and e(ee) differ by ef - fe
    std::vector<std::vector<std::vector<Rational>>> t(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    for (int i = 0; i < 3; ++i) {
        t[0][i][i] = 1;
        t[i][0][i] = 1;
    }
    t[1][1] = {1, 1, 1};
    t[1][2][2] = 1;
    StructureAlgebra broken({"1", "e", "f"}, t, {1, 0, 0});
    auto v = structure_validate(broken);
    REQUIRE(v.has_value());
    CHECK(v->kind == "associativity");
    CHECK(v->where == std::array<int, 3>{1, 1, 1});
}

TEST_CASE("structure_mul examples") {
    StructureAlgebra a = algebras::idempotent();
    CHECK(a.mul(a.basis_vector(1), a.basis_vector(1)) == a.basis_vector(1));
    CoeffVector v{Rational(3), Rational(-2)};
    CHECK(a.mul(a.unit_vector(), v) == v);
    StructureAlgebra m = algebras::matrix_algebra(2);
    // after re-basing: slot 0 = 1 = E11 + E22, then E12, E21, E22
    auto idx = [&](const std::string& n) {
        for (int i = 0; i < m.dim(); ++i)
            if (m.basis_names()[static_cast<std::size_t>(i)] == n) return i;
        return -1;
    };
    CoeffVector prod = m.mul(m.basis_vector(idx("E12")), m.basis_vector(idx("E21")));
    // E11 = 1 - E22
    CoeffVector e11 = m.unit_vector();
    e11[static_cast<std::size_t>(idx("E22"))] = -1;
    CHECK(prod == e11);
}

TEST_CASE("re-basing puts the unit in slot 0") {
    for (const auto& a : {algebras::matrix_algebra(2), algebras::product_of_fields(3), algebras::upper_triangular(2),
                          algebras::matrices_over(algebras::truncated_polynomial(2), 2)}) {
        CHECK_FALSE(structure_validate(a).has_value());
        for (int i = 0; i < a.dim(); ++i) CHECK(a.mul(a.unit_vector(), a.basis_vector(i)) == a.basis_vector(i));
    }
}

TEST_CASE("structure_mul associative on random triples") {
    Rng rng(5);
    StructureAlgebra a = algebras::matrices_over(algebras::truncated_polynomial(2), 2);
    auto rv = [&] {
        CoeffVector v(static_cast<std::size_t>(a.dim()));
        for (auto& c : v) c = rng.small_rational();
        return v;
    };
    for (int i = 0; i < 20; ++i) {
        CoeffVector u = rv(), v = rv(), w = rv();
        CHECK(a.mul(a.mul(u, v), w) == a.mul(u, a.mul(v, w)));
    }
}

TEST_CASE("lie_validate examples") {
    CHECK_FALSE(lie_validate(lie::sl2()).has_value());
    CHECK_FALSE(lie_validate(lie::abelian(3)).has_value());
    CHECK_FALSE(lie_validate(lie::heisenberg()).has_value());
    LieAlgebraData broken(3, {"x", "y", "z"});
    broken.set_bracket(0, 1, {0, 0, 1});
    broken.set_bracket(1, 2, {1, 0, 0});
    broken.set_bracket(2, 0, {1, 0, 0});
    // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 + [y,x] + [z,z] = -z
    auto v = lie_validate(broken);
    REQUIRE(v.has_value());
    CHECK(v->kind == "jacobi");
}

TEST_CASE("sparse elimination") {
    SparseMatrix m(2, 3);
    m.add(0, 0, 1);
    m.add(0, 1, 2);
    m.add(1, 1, 1);
    m.add(1, 2, -1);
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    // x = (-2 s, s, s)
    CHECK(entry(ns[0], 0) == -2 * entry(ns[0], 2));
    auto x = solve(m, {{0, Rational(1)}, {1, Rational(1)}});
    REQUIRE(x.has_value());
    CHECK(entry(*x, 0) + 2 * entry(*x, 1) == 1);
    SparseMatrix bad(2, 1);
    bad.add(0, 0, 1);
    bad.add(1, 0, 1);
    CHECK_FALSE(solve(bad, {{0, Rational(1)}, {1, Rational(2)}}).has_value());
    Echelon e;
    e.insert({{0, Rational(1)}, {1, Rational(1)}});
    SparseVec r1 = e.reduce({{0, Rational(2)}});
    SparseVec r2 = e.reduce({{1, Rational(-2)}});
    CHECK(r1 == r2);
}

TEST_CASE("based algebras multiply basis keys") {
    BasedAlgebra f = BasedAlgebra::free(2);
    CHECK(f.mul_basis({0}, {1}) == Elem{{Word{0, 1}, Rational(1)}});
    BasedAlgebra c = BasedAlgebra::commutative(2);
    CHECK(c.mul_basis({1}, {0}) == Elem{{Word{0, 1}, Rational(1)}});
    BasedAlgebra k = BasedAlgebra::findim(algebras::idempotent());
    CHECK(k.mul_basis({1}, {1}) == Elem{{Word{1}, Rational(1)}});
    CHECK(k.mul_basis({}, {1}) == Elem{{Word{1}, Rational(1)}});
    CHECK(all_words(2, 3).size() == 8);
    CHECK(sorted_words(2, 3).size() == 4);
}
