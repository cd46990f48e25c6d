#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncalc/chern_weil.hpp"
#include "ncalc/cyclic.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/hochschild.hpp"
#include "ncalc/io.hpp"
#include "ncalc/k_theory.hpp"
#include "ncalc/parser.hpp"
#include "ncalc/rep.hpp"
#include "ncalc/star.hpp"
#include "ncalc/suites.hpp"

using namespace ncalc;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::size_t max_dim = 0;
    int max_weight = 0;
    bool json = false;
};

void emit(const Globals& g, const Json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string dims_line(const std::vector<int>& v) {
    std::string s;
    for (int d : v) s += (s.empty() ? "" : " ") + std::to_string(d);
    return s;
}

BasedAlgebra based(const std::string& name) {
    if (name.rfind("free:", 0) == 0) return BasedAlgebra::free(std::stoi(name.substr(5)));
    if (name.rfind("poly:", 0) == 0) return BasedAlgebra::commutative(std::stoi(name.substr(5)));
    return BasedAlgebra::findim(load_algebra(name));
}

Expr strip_trace(Expr e) {
    while (e.kind == Expr::Kind::Trace) e = e.args[0];
    return e;
}

// ---- hochschild

struct HochschildArgs {
    std::string algebra, module = "regular";
    int max_degree = 4;
    bool cohomology = false, unreduced = false;
};

int run_hochschild(const Globals&, const HochschildArgs& a) {
    auto alg = load_algebra(a.algebra);
    Json mspec = a.module == "regular" || a.module == "enveloping" ? Json(a.module) : read_json_file(a.module);
    auto mod = bimodule_from_json(mspec, alg);
    Json out = Json::object();
    if (a.cohomology) {
        auto r = hh_cohomology(mod, a.max_degree, !a.unreduced);
        for (int p = 0; p <= a.max_degree; ++p) {
            Json reps = Json::array();
            for (const auto& c : r.cocycles[static_cast<std::size_t>(p)]) reps.push_back(cochain_json(mod, c));
            out[std::to_string(p)] = Json{{"dim", r.dims[static_cast<std::size_t>(p)]}, {"representatives", reps}};
        }
    } else {
        auto r = hh_homology(mod, a.max_degree, !a.unreduced);
        for (int p = 0; p <= a.max_degree; ++p) {
            Json reps = Json::array();
            for (const auto& c : r.cycles[static_cast<std::size_t>(p)]) reps.push_back(chain_json(mod, c));
            out[std::to_string(p)] = Json{{"dim", r.dims[static_cast<std::size_t>(p)]}, {"representatives", reps}};
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- drham

struct DrhamArgs {
    std::string algebra;
    int free_gens = 0, max_degree = 4, weights = 4;
};

int run_drham(const Globals& g, const DrhamArgs& a) {
    if (a.algebra.empty() == (a.free_gens == 0)) throw std::invalid_argument("give exactly one of --algebra and --free");
    DRContext ctx(a.free_gens ? BasedAlgebra::free(a.free_gens) : based(a.algebra));
    auto h = dr_cohomology(ctx, a.max_degree, a.weights);
    Json j{{"reduced", h.reduced_totals}, {"unreduced", h.totals}};
    if (ctx.algebra().graded()) j["max_weight"] = a.weights;
    emit(g, j, "reduced: " + dims_line(h.reduced_totals) + "\nunreduced: " + dims_line(h.totals) + "\n");
    return 0;
}

// ---- necklace

struct NecklaceArgs {
    int pairs = 1;
    std::string f, g;
    bool field = false;
};

int run_necklace(const Globals& gl, const NecklaceArgs& a) {
    SymplecticLayout lay{a.pairs};
    int gens = lay.generator_count();
    Env env = free_env(gens);
    auto f = to_necklace(parse(a.f, env), gens);
    Json j{{"f", f.str()}};
    std::string text;
    if (!a.g.empty()) {
        auto g = to_necklace(parse(a.g, env), gens);
        auto b = necklace_bracket(f, g, lay);
        j["bracket"] = b.str();
        text += b.str() + "\n";
    }
    if (a.field) {
        auto th = hamiltonian_field(f, lay);
        Json field = Json::object();
        for (int i = 0; i < gens; ++i) {
            std::string img = BasedAlgebra::free(gens).elem_string(th.images()[static_cast<std::size_t>(i)]);
            field[env.symbols[static_cast<std::size_t>(i)]] = img;
            text += env.symbols[static_cast<std::size_t>(i)] + " -> " + img + "\n";
        }
        j["field"] = field;
    }
    if (a.g.empty() && !a.field) text = f.str() + "\n";
    emit(gl, j, text);
    return 0;
}

// ---- moyal

int run_moyal(const Globals& g, int pairs, const std::string& expr) {
    auto p = to_phase(parse(expr, phase_env(pairs)), pairs);
    emit(g, Json{{"result", p.str()}}, p.str() + "\n");
    return 0;
}

// ---- rep

struct RepArgs {
    int gens = 2, n = 2;
    std::string trace, eval;
};

int run_rep(const Globals& g, const RepArgs& a) {
    if (a.trace.empty() == a.eval.empty()) throw std::invalid_argument("give exactly one of --trace and --eval");
    Env env = free_env(a.gens);
    if (!a.trace.empty()) {
        auto f = trace_function(to_free(strip_trace(parse(a.trace, env)), a.gens), a.n);
        emit(g, Json{{"trace", to_string(f)}}, to_string(f) + "\n");
        return 0;
    }
    auto m = rep_evaluate(to_free(parse(a.eval, env), a.gens), a.n);
    Json rows = Json::array();
    std::string text;
    for (int i = 0; i < a.n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < a.n; ++k) {
            row.push_back(to_string(m.at(i, k)));
            text += (k ? "  |  " : "") + to_string(m.at(i, k));
        }
        rows.push_back(row);
        text += "\n";
    }
    emit(g, Json{{"matrix", rows}}, text);
    return 0;
}

// ---- weil

struct WeilArgs {
    std::string mode = "commutative", algebra = "k", lie = "sl2", expr;
    int max_degree = 4, n = 1, k = 2;
};

LieAlgebraData lie_by_name(const std::string& s) {
    if (s == "sl2") return lie::sl2();
    if (s == "heisenberg") return lie::heisenberg();
    if (s == "so3") return lie::so3();
    if (s.rfind("abelian:", 0) == 0) return lie::abelian(std::stoi(s.substr(8)));
    throw std::invalid_argument("unknown Lie algebra " + s);
}

int run_weil(const Globals& g, const WeilArgs& a) {
    if (a.mode == "nc") {
        auto alg = load_algebra(a.algebra);
        auto al = wnc_alphabet(alg);
        Json j{{"cohomology", wnc_cohomology(alg, a.max_degree)}};
        std::string text = "cohomology: " + dims_line(j["cohomology"].get<std::vector<int>>()) + "\n";
        if (!a.expr.empty()) {
            auto dfun = [&](const SuperPoly& p) { return wnc_d(alg, p); };
            auto p = to_super(parse(a.expr, alphabet_env(*al)), al, dfun);
            j["d"] = wnc_d(alg, p).str();
            text += "d(" + p.str() + ") = " + wnc_d(alg, p).str() + "\n";
        }
        emit(g, j, text);
        return 0;
    }
    if (a.mode == "gs") {
        auto al = gs_alphabet(a.n);
        Json j{{"ch", gs_chern(a.k, a.n).str(true)}, {"transgression", gs_transgression(a.k, a.n).str(true)}};
        std::string text = "ch_" + std::to_string(a.k) + " = " + j["ch"].get<std::string>() + "\nch1_" + std::to_string(a.k) + " = " +
                           j["transgression"].get<std::string>() + "\n";
        if (!a.expr.empty()) {
            auto p = gs_class(to_super(parse(a.expr, alphabet_env(*al)), al, gs_d));
            j["expr"] = p.str(true);
            j["d"] = gs_d(p).str(true);
            text += "d(" + p.str(true) + ") = " + gs_d(p).str(true) + "\n";
        }
        emit(g, j, text);
        return 0;
    }
    if (a.mode == "commutative") {
        auto lie = lie_by_name(a.lie);
        auto h = weil_cohomology(lie, a.max_degree);
        emit(g, Json{{"lie", a.lie}, {"cohomology", h}}, "cohomology: " + dims_line(h) + "\n");
        return 0;
    }
    throw std::invalid_argument("unknown mode " + a.mode + " (nc, gs, commutative)");
}

// ---- chern

struct ChernArgs {
    std::string algebra, idempotent;
    int k = 1;
};

int run_chern(const Globals& g, const ChernArgs& a) {
    auto alg = based(a.algebra);
    IdempotentMatrix e(alg, form_matrix_from_json(read_json_file(a.idempotent), alg));
    DRContext ctx(alg);
    auto c0 = chern_c0(ctx, e);
    auto ch = chern_ch_k(ctx, e, a.k);
    auto curv = connection_curvature(ctx, grassmann_connection(e), a.k);
    bool ids = idempotent_identities(e);
    Json j{{"c0", dr_string(alg, c0.c0)},
           {"ch", dr_string(alg, ch.ch)},
           {"k", a.k},
           {"certificates",
            {{"e de = de (1-e)", ids}, {"d c0 = 0", c0.closed}, {"d ch_k = 0", ch.closed}, {"Tr(R^k)/k! = ch_k", curv.agrees}}}};
    std::string text = "c0 = " + dr_string(alg, c0.c0) + "\nch_" + std::to_string(a.k) + " = " + dr_string(alg, ch.ch) + "\n";
    for (const auto& [name, ok] : j["certificates"].items()) text += name + ": " + (ok.get<bool>() ? "yes" : "no") + "\n";
    emit(g, j, text);
    return 0;
}

// ---- verify

int run_verify(const Globals& g, const std::string& suite, const std::string& caps) {
    if (caps != "small" && caps != "default") throw std::invalid_argument("--caps must be small or default");
    auto rep = run_suite(suite, {g.seed, caps == "small"});
    std::string text;
    int failed = 0;
    for (const auto& c : rep.checks) {
        text += std::string(c.passed ? "PASS " : "FAIL ") + c.name;
        if (!c.passed) {
            text += "\n     counterexample: " + c.counterexample;
            ++failed;
        }
        text += "\n";
    }
    text += std::to_string(rep.checks.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(rep.checks.size()) +
            " checks passed (suite " + suite + ", seed " + std::to_string(g.seed) + ")\n";
    emit(g, report_json(rep), text);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact noncommutative calculus"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--max-dim", g.max_dim, "dimension cap for graded pieces and matrices");
    app.add_option("--max-weight", g.max_weight, "weight cap");
    app.add_flag("--json", g.json, "machine-readable output");

    std::function<int()> action;

    HochschildArgs ha;
    auto* hoch = app.add_subcommand("hochschild", "Hochschild (co)homology of a finite-dimensional algebra");
    hoch->add_option("--algebra", ha.algebra, "built-in name or JSON file")->required();
    hoch->add_option("--module", ha.module, "regular, enveloping, or a JSON file");
    hoch->add_option("--max-degree", ha.max_degree);
    hoch->add_flag("--cohomology", ha.cohomology);
    hoch->add_flag("--unreduced", ha.unreduced, "use the full bar complex");
    hoch->callback([&] { action = [&] { return run_hochschild(g, ha); }; });

    DrhamArgs da;
    auto* dr = app.add_subcommand("drham", "Karoubi-de Rham cohomology dimensions");
    dr->add_option("--algebra", da.algebra, "built-in name, JSON file, free:N or poly:N");
    dr->add_option("--free", da.free_gens, "free algebra on N generators");
    dr->add_option("--max-degree", da.max_degree);
    dr->add_option("--weights", da.weights, "weights 0..W for graded algebras");
    dr->callback([&] { action = [&] { return run_drham(g, da); }; });

    NecklaceArgs na;
    auto* neck = app.add_subcommand("necklace", "necklace Lie bracket on cyclic words");
    neck->add_option("--pairs", na.pairs);
    neck->add_option("--f", na.f)->required();
    neck->add_option("--g", na.g);
    neck->add_flag("--field", na.field, "print the hamiltonian derivation of f");
    neck->callback([&] { action = [&] { return run_necklace(g, na); }; });

    int moyal_pairs = 1;
    std::string moyal_expr;
    auto* moy = app.add_subcommand("moyal", "Moyal star products");
    moy->add_option("--pairs", moyal_pairs);
    moy->add_option("--expr", moyal_expr)->required();
    moy->callback([&] { action = [&] { return run_moyal(g, moyal_pairs, moyal_expr); }; });

    RepArgs ra;
    auto* rep = app.add_subcommand("rep", "representation functor");
    rep->add_option("--gens", ra.gens);
    rep->add_option("--n", ra.n);
    rep->add_option("--trace", ra.trace, "trace function of an element");
    rep->add_option("--eval", ra.eval, "matrix-valued image of an element");
    rep->callback([&] { action = [&] { return run_rep(g, ra); }; });

    WeilArgs wa;
    auto* weil = app.add_subcommand("weil", "Weil algebras");
    weil->add_option("--mode", wa.mode, "nc, gs or commutative");
    weil->add_option("--algebra", wa.algebra, "algebra for --mode nc");
    weil->add_option("--lie", wa.lie, "sl2, heisenberg, so3 or abelian:N for --mode commutative");
    weil->add_option("--n", wa.n, "number of pairs for --mode gs");
    weil->add_option("--k", wa.k, "Chern class index for --mode gs");
    weil->add_option("--max-degree", wa.max_degree);
    weil->add_option("--expr", wa.expr, "element whose differential is printed");
    weil->callback([&] { action = [&] { return run_weil(g, wa); }; });

    ChernArgs ca;
    auto* ch = app.add_subcommand("chern", "Chern character of an idempotent matrix");
    ch->add_option("--algebra", ca.algebra)->required();
    ch->add_option("--idempotent", ca.idempotent, "JSON matrix file")->required();
    ch->add_option("--k", ca.k);
    ch->callback([&] { action = [&] { return run_chern(g, ca); }; });

    std::string suite, caps = "default";
    auto* ver = app.add_subcommand("verify", "run an identity suite");
    ver->add_option("suite", suite, "suite name or all")->required();
    ver->add_option("--caps", caps, "small or default");
    ver->callback([&] { action = [&] { return run_verify(g, suite, caps); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (g.max_dim) default_caps().max_dim = g.max_dim;
    if (g.max_weight) default_caps().max_weight = g.max_weight;
    try {
        return action();
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
