#include "ncalc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "ncalc/acceptance.hpp"
#include "ncalc/checks.hpp"
#include "ncalc/chern_weil.hpp"

namespace ncalc {

namespace {

using checks::Outcome;
using Body = std::function<Outcome(Rng&, bool)>;

struct Def {
    std::string name;
    Body body;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int n(bool small, int full, int reduced) { return small ? reduced : full; }

std::vector<std::pair<std::string, BasedAlgebra>> form_algebras() {
    return {{"k<x,y>", BasedAlgebra::free(2)},
            {"k[e]/(e^2-e)", BasedAlgebra::findim(algebras::idempotent())},
            {"k[x]/(x^3)", BasedAlgebra::findim(algebras::truncated_polynomial(3))},
            {"k[x,y]", BasedAlgebra::commutative(2)}};
}

std::vector<Def> core_suite() {
    return {{"free ring axioms", [](Rng& r, bool s) { return checks::free_ring_axioms(r, n(s, 40, 10)); }},
            {"structure constants associative and unital", [](Rng& r, bool s) { return checks::structure_associativity(r, n(s, 10, 3)); }},
            {"dual numbers", [](Rng& r, bool s) { return checks::dual_numbers(r, n(s, 40, 10)); }},
            {"k[t] ring and evaluation at t = 0", [](Rng& r, bool s) { return checks::tpoly_ring(r, n(s, 40, 10)); }}};
}

std::vector<Def> cyclic_suite() {
    return {{"cyclic projection kills commutators", [](Rng& r, bool s) { return checks::cyclic_trace_property(r, n(s, 50, 10)); }},
            {"sum [D_i f, x_i] = 0", [](Rng& r, bool s) { return checks::cyclic_poincare_identity(r, n(s, 50, 10)); }},
            {"necklace bracket antisymmetric (1 pair)", [](Rng& r, bool s) { return checks::necklace_antisymmetry(r, 1, n(s, 100, 20), 6); }},
            {"necklace bracket antisymmetric (2 pairs)", [](Rng& r, bool s) { return checks::necklace_antisymmetry(r, 2, n(s, 50, 10), 4); }},
            {"hamiltonian field is a Lie map", [](Rng& r, bool s) { return checks::hamiltonian_lie_map(r, 1, n(s, 50, 10), 6); }},
            {"Kirillov-Kostant bracket is Poisson", [](Rng& r, bool s) { return checks::kirillov_kostant_identities(r, n(s, 20, 5)); }}};
}

std::vector<Def> necklace_jacobi_suite() {
    return {{"necklace Jacobi (1 pair, weight 6)", [](Rng& r, bool s) { return checks::necklace_jacobi(r, 1, n(s, 100, 20), 6); }},
            {"necklace Jacobi (2 pairs, weight 4)", [](Rng& r, bool s) { return checks::necklace_jacobi(r, 2, n(s, 50, 10), 4); }}};
}

std::vector<Def> karoubi_suite() {
    std::vector<Def> out;
    for (auto which : {checks::Karoubi::DbPlusBd, checks::Karoubi::KappaD, checks::Karoubi::KappaN, checks::Karoubi::KappaN1,
                       checks::Karoubi::Polynomial})
        for (const auto& [name, a] : form_algebras())
            out.push_back({std::string(checks::karoubi_name(which)) + " on " + name, [which, a](Rng& r, bool s) {
                               return checks::karoubi_identity(which, a, r, n(s, 50, 10), 3, 4);
                           }});
    return out;
}

std::vector<Def> cartan_suite() {
    std::vector<Def> out;
    for (auto which : {checks::Cartan::Formula, checks::Cartan::LieLie, checks::Cartan::LieContraction, checks::Cartan::ContractionSquare})
        for (const auto& [name, a] : form_algebras())
            out.push_back({std::string(checks::cartan_name(which)) + " on " + name,
                           [which, a](Rng& r, bool s) { return checks::cartan_identity(which, a, r, n(s, 50, 10), 4); }});
    return out;
}

std::vector<Def> forms_suite() {
    std::vector<Def> out;
    for (const auto& [name, a] : form_algebras()) {
        out.push_back({"d^2 = 0 on " + name, [a](Rng& r, bool s) { return checks::forms_d_squared(a, r, n(s, 40, 10)); }});
        out.push_back({"b^2 = 0 on " + name, [a](Rng& r, bool s) { return checks::forms_b_squared(a, r, n(s, 40, 10)); }});
        out.push_back({"d is an odd derivation on " + name, [a](Rng& r, bool s) { return checks::forms_d_odd_derivation(a, r, n(s, 40, 10)); }});
    }
    out.push_back({"DR^0 of k<x,y> is spanned by necklaces", [](Rng& r, bool s) { return checks::dr0_necklaces(r, n(s, 6, 4)); }});
    out.push_back({"closed DR^2 matches [A,A] per weight", [](Rng&, bool s) { return checks::closed_dr2_commutators(n(s, 5, 3)); }});
    out.push_back({"Poincare primitive", [](Rng& r, bool s) { return checks::poincare_primitives(r, n(s, 50, 10)); }});
    out.push_back({"Quillen sequence exact for k<x>", [](Rng&, bool s) { return checks::quillen_exact(1, n(s, 5, 3)); }});
    out.push_back({"Quillen sequence exact for k<x,y>", [](Rng&, bool s) { return checks::quillen_exact(2, n(s, 5, 3)); }});
    out.push_back({"DR cohomology of k[e]/(e^2-e) modulo constants", [](Rng&, bool) { return checks::dr_idempotent(); }});
    return out;
}

std::vector<Def> hochschild_suite() {
    std::vector<Def> out{
        {"chain differential squares to zero", [](Rng& r, bool s) { return checks::hh_chain_d_squared(r, n(s, 20, 5)); }},
        {"cochain differential squares to zero", [](Rng& r, bool s) { return checks::hh_cochain_d_squared(r, n(s, 20, 5)); }},
        {"representatives are closed and count the dims", [](Rng&, bool) { return checks::hh_representatives(); }},
        {"HH^0 is the center, HH^1 is Der/Inn", [](Rng&, bool) { return checks::hh_center_and_derivations(); }},
        {"HKR for k[x,y] per weight", [](Rng&, bool s) { return checks::hkr_graded(n(s, 3, 2)); }},
        {"Morita trace for Mat_2(k[x]/(x^2))", [](Rng&, bool) { return checks::morita_trace(algebras::truncated_polynomial(2), 2); }},
    };
    const std::vector<std::pair<std::string, StructureAlgebra>> algs{{"k[e]/(e^2-e)", algebras::idempotent()},
                                                                     {"k[x]/(x^2)", algebras::truncated_polynomial(2)}};
    for (const auto& [name, a] : algs) {
        out.push_back({"cup product homotopy on " + name, [a](Rng& r, bool s) { return checks::gerstenhaber_cup_identity(a, r, n(s, 100, 20)); }});
        out.push_back({"bracket compatible with d on " + name, [a](Rng& r, bool s) { return checks::gerstenhaber_compatibility(a, r, n(s, 100, 20)); }});
        out.push_back({"Gerstenhaber bracket is graded Lie on " + name, [a](Rng& r, bool s) { return checks::gerstenhaber_lie(a, r, n(s, 30, 10)); }});
        out.push_back({"cup commutative in cohomology on " + name, [a](Rng&, bool) { return checks::cup_commutative_in_cohomology(a, 2); }});
        out.push_back({"L_m equals the chain differential on " + name, [a](Rng&, bool s) { return checks::lm_equals_b(a, n(s, 3, 2)); }});
    }
    const std::vector<std::tuple<std::string, StructureAlgebra, bool>> smooth{{"k x k", algebras::product_of_fields(2), true},
                                                                              {"Mat_2(k)", algebras::matrix_algebra(2), true},
                                                                              {"upper triangular 2x2", algebras::upper_triangular(2), true},
                                                                              {"k[x]/(x^2)", algebras::truncated_polynomial(2), false}};
    for (const auto& [name, a, expect] : smooth)
        out.push_back({"smoothness verdict for " + name, [a, expect](Rng&, bool) { return checks::smoothness_verdict(a, expect); }});
    return out;
}

std::vector<Def> moyal_suite() {
    return {{"Moyal associative (1 pair)", [](Rng& r, bool s) { return checks::moyal_associativity(r, 1, n(s, 50, 10), 4); }},
            {"Moyal associative (2 pairs)", [](Rng& r, bool s) { return checks::moyal_associativity(r, 2, n(s, 20, 5), 3); }},
            {"x*y - y*x = t", [](Rng&, bool) { return checks::moyal_commutator(2); }},
            {"symmetrization intertwines star and Weyl product (1 pair)", [](Rng&, bool s) { return checks::moyal_intertwining(1, n(s, 5, 4)); }},
            {"symmetrization intertwines star and Weyl product (2 pairs)", [](Rng&, bool s) { return checks::moyal_intertwining(2, n(s, 4, 3)); }},
            {"leading term of the star commutator is the Poisson bracket", [](Rng& r, bool s) { return checks::moyal_poisson_leading(r, n(s, 50, 10)); }},
            {"Poisson bracket is Leibniz and Jacobi", [](Rng& r, bool s) { return checks::poisson_leibniz_jacobi(r, n(s, 30, 10)); }},
            {"Heisenberg exponential", [](Rng&, bool) { return checks::heisenberg_exponential(); }}};
}

std::vector<Def> rep_suite() {
    return {{"rep_evaluate multiplicative (n = 2)", [](Rng& r, bool s) { return checks::rep_multiplicative(r, n(s, 100, 20), 2); }},
            {"rep_evaluate multiplicative (n = 3)", [](Rng& r, bool s) { return checks::rep_multiplicative(r, n(s, 20, 5), 3); }},
            {"rep_evaluate unital", [](Rng&, bool) { return checks::rep_unital(3); }},
            {"trace kills commutators", [](Rng& r, bool s) { return checks::rep_trace_commutators(r, n(s, 50, 10), 2); }},
            {"trace is invariant under rotation", [](Rng& r, bool s) { return checks::rep_trace_cyclic(r, n(s, 50, 10), 2); }},
            {"forms map commutes with d", [](Rng& r, bool s) { return checks::rep_forms_d(r, n(s, 25, 5)); }},
            {"forms map kills supercommutators", [](Rng& r, bool s) { return checks::rep_forms_supercommutators(r, n(s, 25, 5)); }},
            {"derivations to vector fields is a Lie map", [](Rng& r, bool s) { return checks::rep_vector_field_hom(r, n(s, 25, 5)); }},
            {"chain rule for the Jacobi matrix", [](Rng& r, bool s) { return checks::rep_chain_rule(r, n(s, 25, 5)); }},
            {"Jacobi matrix via dual numbers", [](Rng& r, bool s) { return checks::rep_dual_numbers(r, n(s, 25, 5)); }},
            {"Schouten bracket antisymmetry and Jacobi", [](Rng& r, bool s) { return checks::schouten_identities(r, n(s, 30, 10)); }}};
}

std::vector<Def> chern_weil_suite() {
    return {{"W_nc differential squares to zero", [](Rng& r, bool s) { return checks::wnc_d_squared(r, n(s, 20, 5)); }},
            {"W_nc(k) acyclic", [](Rng&, bool s) { return checks::wnc_acyclic(algebras::ground_field(), n(s, 4, 3)); }},
            {"W_nc(k x k) acyclic", [](Rng&, bool s) { return checks::wnc_acyclic(algebras::product_of_fields(2), n(s, 4, 3)); }},
            {"necklace super bracket antisymmetric", [](Rng& r, bool s) { return checks::gs_antisymmetry(r, n(s, 30, 10)); }},
            {"necklace super bracket Jacobi", [](Rng& r, bool s) { return checks::gs_jacobi(r, n(s, 30, 10)); }},
            {"d = (1/2){sum b^2, -}", [](Rng& r, bool s) { return checks::gs_d_half_laplacian(r, n(s, 50, 10)); }},
            {"Chern classes closed", [](Rng&, bool s) { return checks::gs_chern_closed(3, n(s, 2, 1)); }},
            {"Chern classes commute", [](Rng&, bool s) { return checks::gs_chern_brackets(3, n(s, 2, 1)); }},
            {"transgression", [](Rng&, bool s) { return checks::gs_transgression(3, n(s, 2, 1)); }},
            {"Bianchi identity and closed traces", [](Rng& r, bool s) { return checks::dga_bianchi(r, n(s, 10, 3)); }},
            {"Chern-Simons forms", [](Rng&, bool s) { return checks::chern_simons(n(s, 3, 2)); }},
            {"Weil differential squares to zero (sl2)", [](Rng&, bool s) { return checks::weil_d_squared(lie::sl2(), n(s, 4, 3)); }},
            {"Weil algebra acyclic (sl2)", [](Rng&, bool s) { return checks::weil_acyclic(lie::sl2(), n(s, 4, 3)); }},
            {"Weil Cartan formula (sl2)", [](Rng&, bool s) { return checks::weil_cartan_formula(lie::sl2(), n(s, 4, 2)); }},
            {"Weil Cartan formula (heisenberg)", [](Rng&, bool s) { return checks::weil_cartan_formula(lie::heisenberg(), n(s, 3, 2)); }},
            {"invariant polynomials are closed", [](Rng&, bool) { return checks::weil_invariants_closed(); }}};
}

std::vector<Def> k_theory_suite() {
    return {{"e de = de (1 - e)", [](Rng& r, bool s) { return checks::k_idempotent_identities(r, n(s, 10, 3)); }},
            {"d c0 = 0", [](Rng&, bool) { return checks::k_c0_closed(); }},
            {"b c1 = 0", [](Rng& r, bool s) { return checks::k_c1_cycle(r, n(s, 10, 3)); }},
            {"d ch_k = 0", [](Rng&, bool) { return checks::k_chk_closed(2); }},
            {"conjugation invariance", [](Rng& r, bool s) { return checks::k_conjugation_invariance(r, n(s, 25, 6)); }},
            {"direct sums", [](Rng&, bool) { return checks::k_direct_sum(); }},
            {"Tr(R^k)/k! = ch_k", [](Rng& r, bool s) { return checks::k_curvature_trace(r, n(s, 5, 1)); }}};
}

const std::vector<std::pair<std::string, std::function<std::vector<Def>()>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<std::vector<Def>()>>> r{
        {"core", core_suite},     {"cyclic", cyclic_suite},         {"necklace-jacobi", necklace_jacobi_suite},
        {"karoubi", karoubi_suite}, {"forms", forms_suite},         {"cartan", cartan_suite},
        {"hochschild", hochschild_suite}, {"moyal", moyal_suite}, {"rep", rep_suite},
        {"chern-weil", chern_weil_suite}, {"k-theory", k_theory_suite}};
    return r;
}

CheckResult run_one(const Def& d, const std::string& prefix, const SuiteOptions& opt) {
    CheckResult r;
    r.name = prefix + d.name;
    Rng rng(opt.seed ^ fnv1a(r.name));
    auto start = std::chrono::steady_clock::now();
    try {
        auto out = d.body(rng, opt.small);
        r.passed = !out;
        if (out) r.counterexample = *out;
    } catch (const std::exception& e) {
        r.counterexample = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    out.push_back("acceptance");
    out.push_back("all");
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteReport rep{name, opt.seed, {}};
    if (name == "acceptance") {
        for (const auto& c : run_acceptance(opt.seed)) {
            char num[8];
            std::snprintf(num, sizeof num, "%02d", c.number);
            rep.checks.push_back({std::string("criterion ") + num + " " + c.title, c.passed, c.passed ? "" : c.detail, c.seconds * 1000});
        }
        return rep;
    }
    bool found = false;
    for (const auto& [suite, make] : registry()) {
        if (name != "all" && name != suite) continue;
        found = true;
        std::string prefix = name == "all" ? suite + ": " : "";
        for (const auto& d : make()) rep.checks.push_back(run_one(d, prefix, opt));
    }
    if (!found) throw std::invalid_argument("unknown suite " + name);
    std::sort(rep.checks.begin(), rep.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return rep;
}

Json report_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"passed", c.passed}, {"millis", static_cast<long>(c.millis)}};
        if (!c.passed) j["counterexample"] = c.counterexample;
        checks.push_back(j);
    }
    return Json{{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace ncalc
