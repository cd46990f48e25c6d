#include <doctest.h>

#include "ncalc/io.hpp"
#include "ncalc/parser.hpp"
#include "ncalc/suites.hpp"
#include "test_util.hpp"

using namespace ncalc;

namespace {

Elem free_elem(const BasedAlgebra& a, const FreePoly& p) { return a.from_free(p); }

int error_column(const std::string& text, const Env& env) {
    try {
        parse(text, env);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}

}  // namespace

TEST_CASE("form expression parses to the expected form") {
    auto a = BasedAlgebra::free(2);
    Env env = free_env(2);
    Expr e = parse("x*d(y) + 2*d(x)*d(y)", env);
    CHECK(e.kind == Expr::Kind::Sum);
    auto x = free_elem(a, FreePoly::generator(2, 0)), y = free_elem(a, FreePoly::generator(2, 1));
    NCForm want = form_mul(a, NCForm::from_elem(x), NCForm::d_of(y)) + form_mul(a, NCForm::d_of(x), NCForm::d_of(y)).scaled(2);
    CHECK(to_form(e, a) == want);
}

TEST_CASE("bracket and cyclic nodes") {
    Env env = free_env(2);
    Expr c = parse("[x,y]", env);
    CHECK(c.kind == Expr::Kind::Commutator);
    CHECK(to_free(c, 2) == free_commutator(FreePoly::generator(2, 0), FreePoly::generator(2, 1)));

    Expr n = parse("cyc(x*y*x*y)", env);
    CHECK(n.kind == Expr::Kind::Cyc);
    auto f = to_necklace(parse("cyc(x*y*x*y) - 2*cyc(x*x*y*y)", env), 2);
    auto g = to_necklace(parse("cyc(y*x*y*x) - 2*cyc(y*y*x*x)", env), 2);
    CHECK(f == g);
    CHECK(f.str() == "-2*cyc(x*x*y*y) + cyc(x*y*x*y)");
}

TEST_CASE("print of parse is the identity on canonical text") {
    Env env = free_env(3);
    for (const char* s : {"x*d(y) + 2*d(x)*d(y)", "[x, y]", "cyc(x*y*x*y)", "-x + 1/2*y*z", "x*(y + z)", "d([x, y*z]) - tr(x)",
                          "(x*y)*z", "x - (y - z)"}) {
        CAPTURE(s);
        CHECK(print(parse(s, env)) == s);
    }
}

TEST_CASE("print then parse is idempotent") {
    Env env = free_env(3);
    for (const char* s : {"  x*  d( y )+2 *d(x)*d(y)", "[x,[y,z]]", "((x))", "-(x+y)*z", "3/6*x", "x\n + y"}) {
        CAPTURE(s);
        Expr e = parse(s, env);
        std::string once = print(e);
        CHECK(parse(once, env) == e);
        CHECK(print(parse(once, env)) == once);
    }
}

TEST_CASE("parse errors report line and column") {
    Env env = free_env(2);
    CHECK(error_column("x y", env) == 3);
    CHECK(error_column("x*w", env) == 3);
    CHECK(error_column("foo(x)", env) == 1);
    CHECK(error_column("(x + y", env) == 7);
    CHECK(error_column("x + #", env) == 5);
    try {
        parse("x +\n  y y", env);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
        CHECK(std::string(e.what()).rfind("2:5:", 0) == 0);
    }
}

TEST_CASE("phase space expressions") {
    auto p = to_phase(parse("star(x1, y1)", phase_env(1)), 1);
    CHECK(p.str() == "x1*y1 + (1/2)*t");
    auto c = to_phase(parse("[x1, y1]", phase_env(1)), 1);
    CHECK(c == PhasePoly::constant(1, TPoly::t_power(1)));
}

TEST_CASE("finite-dimensional algebra elements by basis name") {
    auto a = BasedAlgebra::findim(algebras::idempotent());
    Elem e = to_elem(parse("e*e - e", algebra_env(a)), a);
    CHECK(e.empty());
}

TEST_CASE("algebra JSON round trip and rebasing") {
    auto a = load_algebra("upper2");
    auto b = algebra_from_json(algebra_to_json(a));
    CHECK(algebra_to_json(b) == algebra_to_json(a));

    // k x k on orthogonal idempotents; the unit is not a basis vector
    Json j = Json::parse(R"({"dim": 2, "basis": ["p", "q"], "unit": ["1", "1"],
                            "table": [[["1","0"],["0","0"]], [["0","0"],["0","1"]]]})");
    auto kk = algebra_from_json(j);
    CHECK(kk.basis_names() == std::vector<std::string>{"1", "q"});
    DRContext ctx(BasedAlgebra::findim(kk));
    CHECK(dr_cohomology(ctx, 4, 0).reduced_totals == std::vector<int>{1, 0, 1, 0, 1});
}

TEST_CASE("malformed algebra input") {
    Json bad = Json::parse(R"({"dim": 2, "basis": ["1", "x"], "unit": ["1", "0"],
                              "table": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]]})");
    bad["table"][1][1] = Json::parse(R"(["0","2"])");
    CHECK_NOTHROW(algebra_from_json(bad));   // x^2 = 2x is still associative
    Json nonassoc = Json::parse(R"({"dim": 2, "basis": ["1", "x"], "unit": ["1", "0"],
                                   "table": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]})");
    nonassoc["table"][0][1] = Json::parse(R"(["1","0"])");
    CHECK_THROWS_AS(algebra_from_json(nonassoc), MathError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 2})")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
    CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
    CHECK(rational_json(Rational(2)) == "2/1");
}

TEST_CASE("matrix entries as expressions or coefficient vectors") {
    auto a = BasedAlgebra::findim(algebras::idempotent());
    auto m = form_matrix_from_json(Json::parse(R"({"size": 2, "entries": [["e", "0"], [["0","0"], "1"]]})"), a);
    CHECK(m.size == 2);
    CHECK_NOTHROW(IdempotentMatrix(a, m));
    CHECK(m.at(1, 0).is_zero());
}

TEST_CASE("chains and cochains serialize with basis names") {
    auto a = algebras::truncated_polynomial(2);
    auto mod = Bimodule::regular(a);
    auto h = hh_homology(mod, 1);
    Json c = chain_json(mod, h.cycles[1][0]);
    CHECK(c[0]["tensor"].size() == 2);
    auto co = hh_cohomology(mod, 1);
    Json cj = cochain_json(mod, co.cocycles[1][0]);
    CHECK(cj[0]["inputs"][0] == "x");
}

TEST_CASE("suite runner") {
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    auto names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "karoubi") != names.end());

    SuiteOptions opt{7, true};
    auto r1 = run_suite("karoubi", opt), r2 = run_suite("karoubi", opt);
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) CHECK(r1.checks[i].name == r2.checks[i].name);
    CHECK(r1.passed());
    CHECK(std::is_sorted(r1.checks.begin(), r1.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));

    auto all = run_suite("all", opt);
    CHECK(all.passed());
    for (const auto& c : all.checks) {
        CAPTURE(c.name);
        CHECK(c.passed);
    }
    Json j = report_json(all);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == all.checks.size());
}
