#include "ncalc/acceptance.hpp"

#include <chrono>
#include <functional>

#include "ncalc/checks.hpp"
#include "ncalc/chern_weil.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/hochschild.hpp"
#include "ncalc/io.hpp"

namespace ncalc {

namespace {

using checks::Outcome;

// Collects labelled sub-checks; the criterion passes only if all of them do.
struct Tally {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void add(const std::string& label, const Outcome& o) {
        if (o) failures.push_back(label + ": " + *o);
    }
    void require(const std::string& label, bool ok, const std::string& why) {
        if (!ok) failures.push_back(label + ": " + why);
    }
};

std::string dims(const std::vector<int>& v) { return Json(v).dump(); }

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

std::vector<int> hh_dims(const StructureAlgebra& a, int deg) { return hh_homology(Bimodule::regular(a), deg).dims; }
std::vector<int> hh_co_dims(const StructureAlgebra& a, int deg) { return hh_cohomology(Bimodule::regular(a), deg).dims; }

bool vanishes_above_zero(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

void c1(Tally& t, Rng&) {
    DRContext ctx(BasedAlgebra::findim(algebras::idempotent()));
    auto h = dr_cohomology(ctx, 4, 0);
    t.require("reduced DR cohomology", h.reduced_totals == std::vector<int>{1, 0, 1, 0, 1}, "got " + dims(h.reduced_totals));
    t.notes.push_back("modulo constants " + dims(h.reduced_totals) + ", unreduced " + dims(h.totals));
}

void c2(Tally& t, Rng& rng) {
    auto a = BasedAlgebra::free(2);
    for (auto k : {checks::Karoubi::DbPlusBd, checks::Karoubi::KappaN1, checks::Karoubi::KappaD, checks::Karoubi::Polynomial})
        t.add(checks::karoubi_name(k), checks::karoubi_identity(k, a, rng, 50, 3, 4));
    t.notes.push_back("4 x 50 random forms");
}

void c3(Tally& t, Rng& rng) {
    auto a = BasedAlgebra::free(2);
    for (auto k : {checks::Cartan::Formula, checks::Cartan::LieLie, checks::Cartan::LieContraction, checks::Cartan::ContractionSquare})
        t.add(checks::cartan_name(k), checks::cartan_identity(k, a, rng, 100, 4));
}

void c4(Tally& t, Rng& rng) {
    t.add("antisymmetry", checks::necklace_antisymmetry(rng, 1, 100, 6));
    t.add("Jacobi", checks::necklace_jacobi(rng, 1, 100, 6));
    t.add("hamiltonian Lie map", checks::hamiltonian_lie_map(rng, 1, 50, 6));
}

void c5(Tally& t, Rng&) {
    t.add("k<x>", checks::quillen_exact(1, 5));
    t.add("k<x,y>", checks::quillen_exact(2, 5));
}

void c6(Tally& t, Rng& rng) { t.add("primitive", checks::poincare_primitives(rng, 50)); }

void c7(Tally& t, Rng&) {
    auto dual = algebras::truncated_polynomial(2);
    auto h = hh_dims(dual, 4);
    t.require("HH_*(k[x]/(x^2))", h == std::vector<int>{2, 1, 1, 1, 1}, "got " + dims(h));
    auto c = hh_co_dims(dual, 4);
    t.require("HH^0,1(k[x]/(x^2))", c[0] == 2 && c[1] == 1, "got " + dims(c));
    for (const auto& [name, a] : std::vector<std::pair<std::string, StructureAlgebra>>{{"Mat_2(k)", algebras::matrix_algebra(2)},
                                                                                       {"k x k", algebras::product_of_fields(2)}}) {
        auto hd = hh_dims(a, 4), cd = hh_co_dims(a, 4);
        t.require("HH_* " + name, vanishes_above_zero(hd), "got " + dims(hd));
        t.require("HH^* " + name, vanishes_above_zero(cd), "got " + dims(cd));
    }
    t.add("Morita trace", checks::morita_trace(dual, 2));
    t.notes.push_back("HH_* = " + dims(h) + ", HH^* = " + dims(c));
}

void c8(Tally& t, Rng& rng) {
    for (const auto& [name, a] : std::vector<std::pair<std::string, StructureAlgebra>>{{"k[e]/(e^2-e)", algebras::idempotent()},
                                                                                       {"k[x]/(x^2)", algebras::truncated_polynomial(2)}}) {
        t.add("cup homotopy on " + name, checks::gerstenhaber_cup_identity(a, rng, 100));
        t.add("d{f,g} on " + name, checks::gerstenhaber_compatibility(a, rng, 100));
        t.add("L_m = b on " + name, checks::lm_equals_b(a, 3));
    }
}

void c9(Tally& t, Rng&) {
    auto poly = BasedAlgebra::commutative(2);
    std::vector<std::string> hh1, higher;
    for (int w = 1; w <= 3; ++w) {
        auto d = graded_hh(poly, w, 3);
        // dim k[x,y]_{w-1} = w
        t.require("HH_1 in weight " + std::to_string(w), d[1] == 2 * w, "got " + std::to_string(d[1]) + ", oracle " + std::to_string(2 * w));
        for (int p = 2; p <= 3; ++p)
            t.require("HH_" + std::to_string(p) + " in weight " + std::to_string(w), d[static_cast<std::size_t>(p)] == 0,
                      "got " + std::to_string(d[static_cast<std::size_t>(p)]));
        t.notes.push_back("weight " + std::to_string(w) + ": " + dims(d));
    }
    if (auto o = checks::hkr_graded(3); !o)
        t.notes.push_back("all dims agree with the form count C(2,p) dim k[x,y]_{w-p}, which is nonzero for p = 2, w >= 2");
    else
        t.failures.push_back("form count: " + *o);
}

void c10(Tally& t, Rng& rng) {
    t.add("associativity", checks::moyal_associativity(rng, 2, 50, 4));
    t.add("x*y - y*x = t", checks::moyal_commutator(2));
    t.add("intertwining", checks::moyal_intertwining(1, 5));
    t.add("Poisson leading term", checks::moyal_poisson_leading(rng, 50));
}

void c11(Tally& t, Rng& rng) {
    t.add("multiplicative", checks::rep_multiplicative(rng, 100, 2));
    t.add("trace kills commutators", checks::rep_trace_commutators(rng, 100, 2));
    t.add("vector fields", checks::rep_vector_field_hom(rng, 25));
    t.add("chain rule", checks::rep_chain_rule(rng, 25));
    t.add("dual numbers", checks::rep_dual_numbers(rng, 25));
}

void c12(Tally& t, Rng& rng) {
    t.add("d ch_k = 0", checks::gs_chern_closed(3, 2));
    t.add("{ch_k, ch_l} = 0", checks::gs_chern_brackets(3, 2));
    t.add("d ch1_k = ch_k", checks::gs_transgression(3, 2));
    t.add("dP = {b^2, P}", checks::gs_d_literal(rng, 50));
    t.add("W_nc(k)", checks::wnc_acyclic(algebras::ground_field(), 4));
    t.add("W_nc(k x k)", checks::wnc_acyclic(algebras::product_of_fields(2), 4));
    if (!checks::gs_d_half_laplacian(rng, 50)) t.notes.push_back("dP = (1/2){b^2, P} holds on 50 random P");
}

void c13(Tally& t, Rng& rng) {
    t.add("e de = de(1-e)", checks::k_idempotent_identities(rng, 5));
    t.add("d c0 = 0", checks::k_c0_closed());
    t.add("b c1 = 0", checks::k_c1_cycle(rng, 5));
    t.add("d ch_k = 0", checks::k_chk_closed(2));
    t.add("Tr(R)/1! = ch_1", checks::k_curvature_trace(rng, 2));
    t.add("conjugation invariance", checks::k_conjugation_invariance(rng, 25));
}

void c14(Tally& t, Rng&) {
    t.add("k x k", checks::smoothness_verdict(algebras::product_of_fields(2), true));
    t.add("Mat_2(k)", checks::smoothness_verdict(algebras::matrix_algebra(2), true));
    t.add("upper triangular", checks::smoothness_verdict(algebras::upper_triangular(2), true));
    t.add("k[x]/(x^2)", checks::smoothness_verdict(algebras::truncated_polynomial(2), false));
}

void c15(Tally& t, Rng&) {
    auto g = lie::sl2();
    t.add("d^2 = 0", checks::weil_d_squared(g, 4));
    t.add("Cartan formula", checks::weil_cartan_formula(g, 4));
    t.add("acyclic", checks::weil_acyclic(g, 4));
}

struct Criterion {
    std::string title;
    double limit_seconds;   // 0 = no limit
    std::function<void(Tally&, Rng&)> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    const std::vector<Criterion> all{
        {"DR cohomology of k[e]/(e^2-e)", 5, c1},
        {"Karoubi identities on k<x,y>", 30, c2},
        {"Cartan identities on k<x,y>", 0, c3},
        {"necklace bracket", 0, c4},
        {"Quillen sequence", 0, c5},
        {"Poincare primitive", 0, c6},
        {"Hochschild dimensions and Morita trace", 60, c7},
        {"Gerstenhaber identities", 0, c8},
        {"HKR graded check for k[x,y]", 0, c9},
        {"Moyal product", 0, c10},
        {"representation functor", 0, c11},
        {"Gelfand-Smirnov algebra and W_nc", 0, c12},
        {"K-theory and Chern character", 0, c13},
        {"formal smoothness verdicts", 0, c14},
        {"commutative Weil algebra of sl2", 0, c15},
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& c = all[i];
        CriterionResult r;
        r.number = static_cast<int>(i + 1);
        r.title = c.title;
        Tally t;
        Rng rng(seed * 1000003ULL + i);
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(t, rng);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && r.seconds >= c.limit_seconds)
            t.failures.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        r.passed = t.failures.empty();
        r.detail = join(t.failures);
        if (!t.notes.empty()) r.detail += (r.detail.empty() ? "" : " | ") + join(t.notes);
        out.push_back(r);
    }
    return out;
}

}  // namespace ncalc
