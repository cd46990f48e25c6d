#include "ncalc/checks.hpp"

#include <algorithm>
#include <set>

#include "ncalc/chern_weil.hpp"
#include "ncalc/cyclic.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/hochschild.hpp"
#include "ncalc/io.hpp"
#include "ncalc/k_theory.hpp"
#include "ncalc/rep.hpp"
#include "ncalc/sampling.hpp"
#include "ncalc/star.hpp"

namespace ncalc::checks {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)); }
int pick_int(Rng& rng, int lo, int hi) { return static_cast<int>(rng.uniform(lo, hi)); }
Rational sign(int e) { return e % 2 ? Rational(-1) : Rational(1); }

std::string derivation_string(const BasedAlgebra& a, const DerivationSpec& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.images().size(); ++i) s += (i ? ", " : "") + a.elem_string(d.images()[i]);
    return s + ")";
}

std::string free_list(const std::vector<FreePoly>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string coeffs(const std::vector<Rational>& v) { return vector_json(v).dump(); }

FreePoly random_poly(Rng& rng, int gens, int max_len, int terms) {
    FreePoly p(gens);
    for (int t = 0; t < terms; ++t) {
        Word w;
        for (long i = rng.uniform(0, max_len); i > 0; --i) w.push_back(pick_int(rng, 0, gens - 1));
        p.add_term(w, rng.small_rational());
    }
    return p;
}

NecklaceElement random_necklace(Rng& rng, int gens, int max_weight, int terms) {
    return project_cyclic(random_free(gens, rng, 1, max_weight, terms));
}

SymPoly random_sym(Rng& rng, int vars, int max_deg) {
    SymPoly p(vars);
    for (int t = 0; t < 3; ++t) {
        SymPoly m = SymPoly::constant(vars, rng.nonzero_rational());
        for (long d = rng.uniform(0, max_deg); d > 0; --d) m = m * SymPoly::variable(vars, pick_int(rng, 0, vars - 1));
        p += m;
    }
    return p;
}

NCForm power_kappa(const BasedAlgebra& a, NCForm f, int n) {
    for (int i = 0; i < n; ++i) f = karoubi(a, f);
    return f;
}

// degree n, weight in [max(n,1), max_weight] for graded algebras
NCForm sample_form(const BasedAlgebra& a, Rng& rng, int n, int max_weight, int terms) {
    int w = a.graded() ? pick_int(rng, std::max(n, 1), std::max(max_weight, n)) : 0;
    return random_form(a, rng, n, w, terms);
}

Chain random_chain(const StructureAlgebra& a, Rng& rng, int p, bool reduced, int terms) {
    Chain c(p, reduced);
    int lo = reduced ? 1 : 0;
    if (reduced && a.dim() == 1 && p > 0) return c;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> key{pick_int(rng, 0, a.dim() - 1)};
        for (int i = 0; i < p; ++i) key.push_back(pick_int(rng, lo, a.dim() - 1));
        c.add(key, rng.nonzero_rational());
    }
    return c;
}

Cochain random_cochain(const Bimodule& m, int p, Rng& rng) {
    Cochain c = Cochain::zero(m, p);
    for (std::size_t t = 0; t < c.tuple_count(); ++t) {
        auto tup = c.tuple(t);
        for (int k = 0; k < m.dim(); ++k)
            if (rng.coin()) c.set(tup, k, rng.small_rational());
    }
    return c;
}

std::string cochain_string(const Bimodule& m, const Cochain& c) {
    return "degree " + std::to_string(c.degree()) + " " + cochain_json(m, c).dump();
}

PhasePoly random_phase(Rng& rng, int pairs, int max_deg, int terms, bool with_t) {
    PhasePoly f(pairs);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
        for (int k = pick_int(rng, 0, max_deg); k > 0; --k) ++e[pick(rng, e.size())];
        Rational c = rng.small_rational();
        f.add_term(e, with_t && pick_int(rng, 0, 2) == 0 ? TPoly::t_power(1, c) : TPoly(c));
    }
    return f;
}

void exponent_vectors(int vars, int max_total, std::vector<std::vector<int>>& out) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == vars) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(i)] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, max_total);
}

ComPoly random_com(Rng& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
    ComPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (long d = rng.uniform(0, max_deg); d > 0; --d) m[vars[pick(rng, vars.size())]] += 1;
        p.add_term(m, rng.nonzero_rational());
    }
    return p;
}

PolyVector random_polyvector(Rng& rng, const std::vector<std::string>& vars, int degree, int terms) {
    PolyVector p;
    for (int t = 0; t < terms; ++t) {
        std::vector<std::string> syms;
        for (int k = 0; k < degree; ++k) syms.push_back(vars[pick(rng, vars.size())]);
        p += PolyVector::term(random_com(rng, vars, 2, 2), syms);
    }
    return p;
}

NCForm supercommutator(const BasedAlgebra& a, const NCForm& x, const NCForm& y) {
    NCForm r = form_mul(a, x, y), s = form_mul(a, y, x);
    return (x.degree() * y.degree()) % 2 == 0 ? r - s : r + s;
}

SuperPoly random_word_sum(const AlphabetPtr& al, int degree, Rng& rng, int terms = 3) {
    SuperPoly p(al);
    for (int t = 0; t < terms; ++t) {
        Word w;
        int d = 0;
        while (d < degree) {
            int l = pick_int(rng, 0, al->size() - 1);
            if (d + al->degree(l) > degree) continue;
            w.push_back(l);
            d += al->degree(l);
        }
        p.add_term(w, rng.nonzero_rational());
    }
    return p;
}

std::vector<BasedAlgebra> k_algebras() {
    return {BasedAlgebra::findim(algebras::idempotent()), BasedAlgebra::findim(algebras::truncated_polynomial(2)),
            BasedAlgebra::findim(algebras::upper_triangular(2))};
}

Elem basis_elem(int i, const Rational& c = 1) {
    Elem e;
    elem_add(e, i == 0 ? Word{} : Word{i}, c);
    return e;
}

IdempotentMatrix diag10(const BasedAlgebra& a) { return IdempotentMatrix(a, {{elem_unit(), Elem{}}, {Elem{}, Elem{}}}); }

std::vector<IdempotentMatrix> sample_idempotents(const BasedAlgebra& a) {
    std::vector<IdempotentMatrix> out{diag10(a)};
    for (int i = 1; i < a.structure().dim(); ++i) {
        Elem x = basis_elem(i);
        if (a.mul(x, x) == x) out.emplace_back(a, std::vector<std::vector<Elem>>{{x, Elem{}}, {Elem{}, elem_unit()}});
    }
    return out;
}

std::string matrix_string(const IdempotentMatrix& e) {
    const auto& a = e.algebra();
    std::string s = "[";
    for (int i = 0; i < e.size(); ++i) {
        s += i ? "; " : "";
        for (int j = 0; j < e.size(); ++j) s += (j ? ", " : "") + e.matrix().at(i, j).str(a);
    }
    return s + "]";
}

std::vector<std::pair<std::string, StructureAlgebra>> hh_algebras() {
    return {{"idempotent", algebras::idempotent()},
            {"dual", algebras::truncated_polynomial(2)},
            {"upper2", algebras::upper_triangular(2)},
            {"mat2", algebras::matrix_algebra(2)}};
}

}  // namespace

// ---- core

Outcome free_ring_axioms(Rng& rng, int samples) {
    for (int i = 0; i < samples; ++i) {
        FreePoly a = random_poly(rng, 2, 3, 4), b = random_poly(rng, 2, 3, 4), c = random_poly(rng, 2, 3, 4);
        FreePoly one = FreePoly::constant(2, 1);
        std::string in = "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
        if ((a * b) * c != a * (b * c)) return "associativity fails: " + in;
        if (a * (b + c) != a * b + a * c || (a + b) * c != a * c + b * c) return "distributivity fails: " + in;
        if (one * a != a || a * one != a) return "unit fails: " + in;
    }
    return std::nullopt;
}

Outcome structure_associativity(Rng& rng, int samples) {
    for (const auto& name : builtin_algebra_names()) {
        StructureAlgebra a = load_algebra(name);
        if (auto v = structure_validate(a)) return name + ": " + v->kind + " " + v->detail;
        for (int i = 0; i < samples; ++i) {
            auto u = random_vector(a.dim(), rng), v = random_vector(a.dim(), rng), w = random_vector(a.dim(), rng);
            if (a.mul(a.mul(u, v), w) != a.mul(u, a.mul(v, w)))
                return name + ": u = " + coeffs(u) + ", v = " + coeffs(v) + ", w = " + coeffs(w);
        }
    }
    return std::nullopt;
}

Outcome dual_numbers(Rng& rng, int samples) {
    DualScalar eps(0, 1);
    if (eps * eps != DualScalar(0, 0)) return "eps^2 != 0";
    for (int i = 0; i < samples; ++i) {
        Rational a = rng.small_rational(), b = rng.small_rational(), c = rng.small_rational(), d = rng.small_rational();
        if (DualScalar(a, b) * DualScalar(c, d) != DualScalar(a * c, a * d + b * c))
            return "(" + to_string(a) + " + eps " + to_string(b) + ")(" + to_string(c) + " + eps " + to_string(d) + ")";
    }
    return std::nullopt;
}

Outcome tpoly_ring(Rng& rng, int samples) {
    auto rnd = [&] {
        TPoly p;
        for (unsigned e = 0; e <= 3; ++e) p += TPoly::t_power(e, rng.small_rational());
        return p;
    };
    for (int i = 0; i < samples; ++i) {
        TPoly a = rnd(), b = rnd(), c = rnd();
        std::string in = "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
        if (a * b != b * a || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) return "ring axiom fails: " + in;
        if ((a * b).at_zero() != a.at_zero() * b.at_zero() || (a + b).at_zero() != a.at_zero() + b.at_zero())
            return "t = 0 is not a ring map: " + in;
    }
    return std::nullopt;
}

// ---- cyclic words

Outcome cyclic_trace_property(Rng& rng, int samples) {
    for (int t = 0; t < samples; ++t) {
        FreePoly a = random_free(3, rng, 0, 3, 3), b = random_free(3, rng, 0, 3, 3);
        if (project_cyclic(a * b) != project_cyclic(b * a)) return "a = " + a.str() + ", b = " + b.str();
    }
    return std::nullopt;
}

Outcome cyclic_poincare_identity(Rng& rng, int samples) {
    for (int t = 0; t < samples; ++t) {
        int gens = pick_int(rng, 1, 3);
        auto f = random_necklace(rng, gens, 5, 3);
        FreePoly sum(gens);
        for (int i = 0; i < gens; ++i) sum += free_commutator(cyclic_derivative(f, i), FreePoly::generator(gens, i));
        if (!sum.is_zero()) return "f = " + f.str();
    }
    return std::nullopt;
}

Outcome necklace_antisymmetry(Rng& rng, int pairs, int samples, int max_weight) {
    SymplecticLayout lay{pairs};
    int g = lay.generator_count();
    for (int t = 0; t < samples; ++t) {
        auto f = random_necklace(rng, g, max_weight, 2), h = random_necklace(rng, g, max_weight, 2);
        if (necklace_bracket(f, h, lay) != necklace_bracket(h, f, lay).scaled(-1)) return "f = " + f.str() + ", g = " + h.str();
    }
    return std::nullopt;
}

Outcome necklace_jacobi(Rng& rng, int pairs, int samples, int max_weight) {
    SymplecticLayout lay{pairs};
    int g = lay.generator_count();
    auto br = [&](const NecklaceElement& a, const NecklaceElement& b) { return necklace_bracket(a, b, lay); };
    for (int t = 0; t < samples; ++t) {
        auto f = random_necklace(rng, g, max_weight, 2), h = random_necklace(rng, g, max_weight, 2),
             k = random_necklace(rng, g, max_weight, 2);
        if (!(br(f, br(h, k)) + br(h, br(k, f)) + br(k, br(f, h))).is_zero())
            return "f = " + f.str() + ", g = " + h.str() + ", h = " + k.str();
    }
    return std::nullopt;
}

Outcome hamiltonian_lie_map(Rng& rng, int pairs, int samples, int max_weight) {
    SymplecticLayout lay{pairs};
    int g = lay.generator_count();
    auto alg = BasedAlgebra::free(g);
    for (int t = 0; t < samples; ++t) {
        auto f = random_necklace(rng, g, max_weight, 2), h = random_necklace(rng, g, max_weight, 2);
        auto tf = hamiltonian_field(f, lay), th = hamiltonian_field(h, lay);
        if (apply_derivation(tf, h) != necklace_bracket(f, h, lay)) return "theta_f(g) != {f,g}: f = " + f.str() + ", g = " + h.str();
        if (derivation_commutator(alg, tf, th) != hamiltonian_field(necklace_bracket(f, h, lay), lay))
            return "[theta_f, theta_g] != theta_{f,g}: f = " + f.str() + ", g = " + h.str();
    }
    return std::nullopt;
}

Outcome kirillov_kostant_identities(Rng& rng, int samples) {
    const std::vector<std::pair<std::string, LieAlgebraData>> lies{{"sl2", lie::sl2()}, {"heisenberg", lie::heisenberg()}};
    for (const auto& [name, g] : lies)
        for (int t = 0; t < samples; ++t) {
            auto p = random_sym(rng, 3, 3), q = random_sym(rng, 3, 3), r = random_sym(rng, 3, 3);
            auto kk = [&](const SymPoly& a, const SymPoly& b) { return kirillov_kostant(a, b, g); };
            std::string in = name + ": p = " + p.str(g.names) + ", q = " + q.str(g.names) + ", r = " + r.str(g.names);
            if (kk(p, q * r) != kk(p, q) * r + q * kk(p, r)) return "Leibniz fails, " + in;
            if (kk(p * q, r) != p * kk(q, r) + kk(p, r) * q) return "Leibniz (left) fails, " + in;
            if (kk(p, q) != kk(q, p).scaled(-1)) return "antisymmetry fails, " + in;
            if (!(kk(p, kk(q, r)) + kk(q, kk(r, p)) + kk(r, kk(p, q))).is_zero()) return "Jacobi fails, " + in;
        }
    return std::nullopt;
}

// ---- forms

const char* karoubi_name(Karoubi k) {
    switch (k) {
        case Karoubi::DbPlusBd: return "db+bd = id-kappa";
        case Karoubi::KappaD: return "kappa^{n+1} d = d";
        case Karoubi::KappaN: return "kappa^n = id + b kappa^n d";
        case Karoubi::KappaN1: return "kappa^{n+1} = id - db";
        case Karoubi::Polynomial: return "(kappa^n - 1)(kappa^{n+1} - 1) = 0";
    }
    return "";
}

Outcome karoubi_identity(Karoubi which, const BasedAlgebra& a, Rng& rng, int samples, int max_degree, int max_weight) {
    for (int t = 0; t < samples; ++t) {
        int n = pick_int(rng, 0, max_degree);
        NCForm f = sample_form(a, rng, n, max_weight, 3);
        NCForm lhs, rhs;
        switch (which) {
            case Karoubi::DbPlusBd:
                lhs = hochschild_b(a, de_rham_d(a, f));
                if (n >= 1) lhs += de_rham_d(a, hochschild_b(a, f));
                rhs = f - karoubi(a, f);
                break;
            case Karoubi::KappaD:
                lhs = power_kappa(a, de_rham_d(a, f), n + 1);
                rhs = de_rham_d(a, f);
                break;
            case Karoubi::KappaN:
                lhs = power_kappa(a, f, n);
                rhs = f + hochschild_b(a, power_kappa(a, de_rham_d(a, f), n));
                break;
            case Karoubi::KappaN1:
                lhs = power_kappa(a, f, n + 1);
                rhs = f - (n >= 1 ? de_rham_d(a, hochschild_b(a, f)) : NCForm());
                break;
            case Karoubi::Polynomial: {
                NCForm u = power_kappa(a, f, n + 1) - f;
                lhs = power_kappa(a, u, n) - u;
                break;
            }
        }
        if (lhs != rhs) return std::string(karoubi_name(which)) + " fails on " + f.str(a) + " (degree " + std::to_string(n) + ")";
    }
    return std::nullopt;
}

const char* cartan_name(Cartan c) {
    switch (c) {
        case Cartan::Formula: return "L = d i + i d";
        case Cartan::LieLie: return "[L_a, L_b] = L_[a,b]";
        case Cartan::LieContraction: return "[L_a, i_b] = i_[a,b]";
        case Cartan::ContractionSquare: return "i_a^2 = 0";
    }
    return "";
}

Outcome cartan_identity(Cartan which, const BasedAlgebra& a, Rng& rng, int samples, int max_weight) {
    for (int t = 0; t < samples; ++t) {
        auto th = random_derivation(a, rng), ga = random_derivation(a, rng);
        NCForm f = sample_form(a, rng, pick_int(rng, 0, 2), max_weight, 3);
        NCForm lhs, rhs;
        switch (which) {
            case Cartan::Formula:
                lhs = lie_derivative(a, th, f);
                rhs = lie_derivative_cartan(a, th, f);
                break;
            case Cartan::LieLie:
                lhs = lie_derivative(a, th, lie_derivative(a, ga, f)) - lie_derivative(a, ga, lie_derivative(a, th, f));
                rhs = lie_derivative(a, derivation_commutator(a, th, ga), f);
                break;
            case Cartan::LieContraction:
                lhs = lie_derivative(a, th, contraction_i(a, ga, f)) - contraction_i(a, ga, lie_derivative(a, th, f));
                rhs = contraction_i(a, derivation_commutator(a, th, ga), f);
                break;
            case Cartan::ContractionSquare:
                lhs = contraction_i(a, th, contraction_i(a, th, f));
                break;
        }
        if (lhs != rhs)
            return std::string(cartan_name(which)) + " fails: theta = " + derivation_string(a, th) + ", gamma = " +
                   derivation_string(a, ga) + ", form = " + f.str(a);
    }
    return std::nullopt;
}

Outcome forms_d_squared(const BasedAlgebra& a, Rng& rng, int samples) {
    for (int t = 0; t < samples; ++t) {
        NCForm f = sample_form(a, rng, pick_int(rng, 0, 3), 4, 3);
        if (!de_rham_d(a, de_rham_d(a, f)).is_zero()) return "d^2 != 0 on " + f.str(a);
    }
    return std::nullopt;
}

Outcome forms_b_squared(const BasedAlgebra& a, Rng& rng, int samples) {
    for (int t = 0; t < samples; ++t) {
        NCForm f = sample_form(a, rng, pick_int(rng, 2, 3), 4, 3);
        if (!hochschild_b(a, hochschild_b(a, f)).is_zero()) return "b^2 != 0 on " + f.str(a);
    }
    return std::nullopt;
}

Outcome forms_d_odd_derivation(const BasedAlgebra& a, Rng& rng, int samples) {
    for (int t = 0; t < samples; ++t) {
        int n = pick_int(rng, 0, 2);
        NCForm f = sample_form(a, rng, n, 3, 3), g = sample_form(a, rng, pick_int(rng, 0, 2), 2, 2);
        NCForm rhs = form_mul(a, de_rham_d(a, f), g) + form_mul(a, f, de_rham_d(a, g)).scaled(sign(n));
        if (de_rham_d(a, form_mul(a, f, g)) != rhs) return "alpha = " + f.str(a) + ", beta = " + g.str(a);
    }
    return std::nullopt;
}

Outcome dr0_necklaces(Rng& rng, int max_weight) {
    DRContext ctx(BasedAlgebra::free(2));
    for (int w = 0; w <= max_weight; ++w) {
        std::set<Word> classes;
        for (const auto& word : all_words(2, w)) classes.insert(least_rotation(word));
        if (ctx.piece(0, w).quotient_dimension() != classes.size())
            return "weight " + std::to_string(w) + ": DR^0 dimension " + std::to_string(ctx.piece(0, w).quotient_dimension()) +
                   " vs " + std::to_string(classes.size()) + " necklaces";
    }
    for (int t = 0; t < 20; ++t) {
        FreePoly p = random_free(2, rng, 1, max_weight, 3);
        NCForm f = NCForm::from_elem(ctx.algebra().from_free(p));
        NCForm g = NCForm::from_elem(ctx.algebra().from_free(project_cyclic(p).representative()));
        if (ctx.project(f) != ctx.project(g)) return "projection does not factor through cyclic words: " + p.str();
    }
    return std::nullopt;
}

Outcome closed_dr2_commutators(int max_weight) {
    DRContext ctx(BasedAlgebra::free(2));
    const auto& a = ctx.algebra();
    for (int w = 1; w <= max_weight; ++w) {
        const auto& p3 = ctx.piece(3, w);
        Echelon img;
        auto q2 = ctx.quotient_basis(2, w);
        for (const auto& k : q2) img.insert(p3.commutators.reduce(ctx.vectorize(p3, de_rham_d(a, NCForm::term(k)))));
        int closed = static_cast<int>(q2.size() - img.rank());
        // [A,A]_w: words minus rotation classes
        std::set<Word> classes;
        for (const auto& word : all_words(2, w)) classes.insert(least_rotation(word));
        int commutators = (1 << w) - static_cast<int>(classes.size());
        if (closed != commutators)
            return "weight " + std::to_string(w) + ": " + std::to_string(closed) + " closed classes vs dim [A,A] = " +
                   std::to_string(commutators);
    }
    return std::nullopt;
}

Outcome poincare_primitives(Rng& rng, int samples) {
    DRContext one(BasedAlgebra::free(1)), two(BasedAlgebra::free(2));
    int tested = 0;
    for (int attempt = 0; tested < samples; ++attempt) {
        if (attempt > 20 * samples) return "only " + std::to_string(tested) + " nonzero exact classes drawn";
        DRContext& ctx = attempt % 2 ? two : one;
        const auto& a = ctx.algebra();
        DRClass w = ctx.d(ctx.project(sample_form(a, rng, pick_int(rng, 0, 2), 4, 4)));
        if (w.is_zero()) continue;
        ++tested;
        if (ctx.d(poincare_primitive(ctx, w)) != w) return "omega = " + dr_string(a, w);
    }
    return std::nullopt;
}

Outcome quillen_exact(int gens, int max_weight) {
    DRContext ctx(BasedAlgebra::free(gens));
    for (const auto& q : quillen_maps(ctx, max_weight)) {
        if (!q.exact() || !q.image_b_is_commutators)
            return "k<" + std::to_string(gens) + " generators> weight " + std::to_string(q.weight) + ": ranks d " +
                   std::to_string(q.rank_d) + ", b " + std::to_string(q.rank_b) + ", pr " + std::to_string(q.rank_pr);
    }
    return std::nullopt;
}

Outcome dr_idempotent() {
    DRContext ctx(BasedAlgebra::findim(algebras::idempotent()));
    auto h = dr_cohomology(ctx, 4, 0);
    if (h.reduced_totals != std::vector<int>{1, 0, 1, 0, 1}) return "reduced dims " + Json(h.reduced_totals).dump();
    return std::nullopt;
}

// ---- Hochschild

Outcome hh_chain_d_squared(Rng& rng, int samples) {
    for (const auto& [name, a] : hh_algebras()) {
        auto m = Bimodule::regular(a);
        for (int t = 0; t < samples; ++t) {
            bool reduced = rng.coin();
            Chain c = random_chain(a, rng, pick_int(rng, 2, 4), reduced, 3);
            if (!chain_differential(m, chain_differential(m, c)).is_zero()) return name + ": chain " + chain_json(m, c).dump();
        }
    }
    return std::nullopt;
}

Outcome hh_cochain_d_squared(Rng& rng, int samples) {
    for (const auto& [name, a] : hh_algebras()) {
        auto m = Bimodule::regular(a);
        for (int t = 0; t < samples; ++t) {
            Cochain c = random_cochain(m, pick_int(rng, 0, 2), rng);
            if (!cochain_differential(m, cochain_differential(m, c)).is_zero()) return name + ": " + cochain_string(m, c);
        }
    }
    return std::nullopt;
}

Outcome hh_representatives() {
    for (const auto& [name, a] : hh_algebras()) {
        auto m = Bimodule::regular(a);
        auto h = hh_homology(m, 3);
        for (std::size_t p = 0; p < h.dims.size(); ++p) {
            if (static_cast<int>(h.cycles[p].size()) != h.dims[p]) return name + ": HH_" + std::to_string(p) + " representative count";
            for (const auto& z : h.cycles[p])
                if (!chain_differential(m, z).is_zero()) return name + ": non-closed cycle " + chain_json(m, z).dump();
        }
        auto c = hh_cohomology(m, 2);
        for (std::size_t p = 0; p < c.dims.size(); ++p) {
            if (static_cast<int>(c.cocycles[p].size()) != c.dims[p]) return name + ": HH^" + std::to_string(p) + " representative count";
            for (const auto& z : c.cocycles[p])
                if (!cochain_differential(m, z).is_zero()) return name + ": non-closed " + cochain_string(m, z);
        }
    }
    return std::nullopt;
}

Outcome hh_center_and_derivations() {
    for (const auto& [name, a] : hh_algebras()) {
        auto r = hh_cohomology(Bimodule::regular(a), 1);
        int z = static_cast<int>(center(a).size());
        if (r.dims[0] != z) return name + ": HH^0 = " + std::to_string(r.dims[0]) + ", center " + std::to_string(z);
        auto ds = derivation_space(a);
        if (r.dims[1] != ds.dim_der - ds.dim_inner)
            return name + ": HH^1 = " + std::to_string(r.dims[1]) + ", Der/Inn = " + std::to_string(ds.dim_der - ds.dim_inner);
    }
    return std::nullopt;
}

Outcome gerstenhaber_cup_identity(const StructureAlgebra& a, Rng& rng, int samples) {
    auto mod = Bimodule::regular(a);
    auto d = [&](const Cochain& c) { return cochain_differential(mod, c); };
    for (int t = 0; t < samples; ++t) {
        int p = pick_int(rng, 0, 2), q = pick_int(rng, 0, 2);
        if (p + q == 0) p = 1;
        auto f = random_cochain(mod, p, rng), g = random_cochain(mod, q, rng);
        auto lhs = cup(a, g, f) - cup(a, f, g).scaled(sign(p * q));
        auto rhs = (d(circle_product(f, g)) - circle_product(f, d(g))).scaled(sign(q)) + circle_product(d(f), g);
        if (lhs != rhs) return "f = " + cochain_string(mod, f) + ", g = " + cochain_string(mod, g);
    }
    return std::nullopt;
}

Outcome gerstenhaber_compatibility(const StructureAlgebra& a, Rng& rng, int samples) {
    auto mod = Bimodule::regular(a);
    auto d = [&](const Cochain& c) { return cochain_differential(mod, c); };
    for (int t = 0; t < samples; ++t) {
        int p = pick_int(rng, 0, 2), q = pick_int(rng, 0, 2);
        if (p + q == 0) q = 1;
        auto f = random_cochain(mod, p, rng), g = random_cochain(mod, q, rng);
        if (d(gerstenhaber_bracket(f, g)) != gerstenhaber_bracket(d(f), g).scaled(sign(q + 1)) + gerstenhaber_bracket(f, d(g)))
            return "f = " + cochain_string(mod, f) + ", g = " + cochain_string(mod, g);
    }
    return std::nullopt;
}

Outcome gerstenhaber_lie(const StructureAlgebra& a, Rng& rng, int samples) {
    auto mod = Bimodule::regular(a);
    for (int t = 0; t < samples; ++t) {
        int p = pick_int(rng, 1, 2), q = pick_int(rng, 1, 2), r = pick_int(rng, 1, 2);
        auto f = random_cochain(mod, p, rng), g = random_cochain(mod, q, rng), h = random_cochain(mod, r, rng);
        std::string in = "f = " + cochain_string(mod, f) + ", g = " + cochain_string(mod, g);
        if (gerstenhaber_bracket(f, g) != gerstenhaber_bracket(g, f).scaled(-sign((p - 1) * (q - 1)))) return "antisymmetry: " + in;
        if (p + q + r > 5) continue;
        if (gerstenhaber_bracket(f, gerstenhaber_bracket(g, h)) !=
            gerstenhaber_bracket(gerstenhaber_bracket(f, g), h) +
                gerstenhaber_bracket(g, gerstenhaber_bracket(f, h)).scaled(sign((p - 1) * (q - 1))))
            return "Jacobi: " + in + ", h = " + cochain_string(mod, h);
    }
    return std::nullopt;
}

Outcome cup_commutative_in_cohomology(const StructureAlgebra& a, int max_degree) {
    auto mod = Bimodule::regular(a);
    auto c = hh_cohomology(mod, max_degree);
    for (int p = 0; p <= max_degree; ++p)
        for (int q = 0; q <= max_degree; ++q)
            for (const auto& f : c.cocycles[static_cast<std::size_t>(p)])
                for (const auto& g : c.cocycles[static_cast<std::size_t>(q)]) {
                    if (p + q == 0) continue;
                    auto comm = cup(a, g, f) - cup(a, f, g).scaled(sign(p * q));
                    if (comm != cochain_differential(mod, circle_product(f, g)).scaled(sign(q)))
                        return "f = " + cochain_string(mod, f) + ", g = " + cochain_string(mod, g);
                }
    return std::nullopt;
}

Outcome lm_equals_b(const StructureAlgebra& a, int max_degree) {
    auto mod = Bimodule::regular(a);
    auto m = Cochain::multiplication(a);
    for (bool reduced : {false, true})
        for (int k = 1; k <= max_degree; ++k) {
            int lo = reduced ? 1 : 0;
            std::vector<int> key(static_cast<std::size_t>(k + 1), lo);
            key[0] = 0;
            Outcome bad;
            std::function<void(std::size_t)> rec = [&](std::size_t slot) {
                if (bad) return;
                if (slot == key.size()) {
                    Chain c(k, reduced);
                    c.add(key, 1);
                    if (chain_lie(a, m, c) != chain_differential(mod, c)) bad = "basis chain " + chain_json(mod, c).dump();
                    return;
                }
                for (int v = slot == 0 ? 0 : lo; v < a.dim(); ++v) {
                    key[slot] = v;
                    rec(slot + 1);
                }
            };
            rec(0);
            if (bad) return bad;
        }
    return std::nullopt;
}

Outcome hkr_graded(int max_weight) {
    auto poly = BasedAlgebra::commutative(2);
    auto binom2 = [](int p) { return p == 1 ? 2 : (p == 0 || p == 2 ? 1 : 0); };
    for (int w = 1; w <= max_weight; ++w) {
        auto dims = graded_hh(poly, w, 3);
        for (int p = 0; p <= 3; ++p) {
            int oracle = w - p >= 0 ? binom2(p) * (w - p + 1) : 0;
            if (dims[static_cast<std::size_t>(p)] != oracle)
                return "weight " + std::to_string(w) + ", HH_" + std::to_string(p) + " = " +
                       std::to_string(dims[static_cast<std::size_t>(p)]) + ", form count " + std::to_string(oracle);
        }
    }
    return std::nullopt;
}

Outcome smoothness_verdict(const StructureAlgebra& a, bool expect_smooth) {
    auto rep = formal_smoothness_check(a);
    if (rep.smooth != expect_smooth) return std::string("verdict ") + (rep.smooth ? "smooth" : "not smooth");
    if (expect_smooth) {
        if (static_cast<int>(rep.splitting.size()) != a.dim() - 1) return "splitting has wrong size";
        auto b = BasedAlgebra::findim(a);
        auto elem_form = [&](int i) { return NCForm::from_elem(b.from_vector(a.basis_vector(i))); };
        for (int x = 1; x < a.dim(); ++x) {
            NCForm dx = NCForm::d_of(b.from_vector(a.basis_vector(x)));
            NCForm image;
            for (const auto& [t, v] : rep.splitting[static_cast<std::size_t>(x - 1)])
                image += form_mul(b, elem_form(t[0]), form_mul(b, NCForm::d_of(b.from_vector(a.basis_vector(t[1]))), elem_form(t[2])))
                             .scaled(v);
            if (image != dx) return "splitting maps d" + a.basis_names()[static_cast<std::size_t>(x)] + " to " + image.str(b);
        }
        return std::nullopt;
    }
    if (!rep.witness) return "no witness";
    auto mod = Bimodule::regular(a);
    if (rep.witness->is_zero() || !cochain_differential(mod, *rep.witness).is_zero()) return "witness is not a nonzero cocycle";
    // not a coboundary: d C^1 does not reach it
    auto c = hh_cohomology(mod, 2);
    if (c.dims[2] == 0) return "HH^2(A,A) vanishes";
    return std::nullopt;
}

Outcome morita_trace(const StructureAlgebra& a, int r) {
    auto rep = morita_trace_check(a, r);
    if (!rep.invertible || rep.hh0_algebra != rep.hh0_matrices)
        return "HH_0 dims " + std::to_string(rep.hh0_algebra) + " vs " + std::to_string(rep.hh0_matrices);
    return std::nullopt;
}

// ---- star products

Outcome moyal_associativity(Rng& rng, int pairs, int samples, int max_degree) {
    for (int i = 0; i < samples; ++i) {
        PhasePoly f = random_phase(rng, pairs, max_degree, 4, true), g = random_phase(rng, pairs, max_degree, 4, true),
                  h = random_phase(rng, pairs, max_degree, 4, true);
        if (moyal_star(moyal_star(f, g), h) != moyal_star(f, moyal_star(g, h)))
            return "f = " + f.str() + ", g = " + g.str() + ", h = " + h.str();
    }
    return std::nullopt;
}

Outcome moyal_commutator(int pairs) {
    PhasePoly t = PhasePoly::constant(pairs, TPoly::t_power(1));
    for (int i = 0; i < pairs; ++i)
        for (int j = 0; j < pairs; ++j) {
            PhasePoly x = PhasePoly::x(pairs, i), y = PhasePoly::y(pairs, j);
            PhasePoly c = moyal_star(x, y) - moyal_star(y, x);
            if (c != (i == j ? t : PhasePoly(pairs))) return "[x" + std::to_string(i + 1) + ", y" + std::to_string(j + 1) + "] = " + c.str();
        }
    return std::nullopt;
}

Outcome moyal_intertwining(int pairs, int max_total_degree) {
    std::vector<std::vector<int>> monos;
    exponent_vectors(2 * pairs, max_total_degree, monos);
    for (const auto& m1 : monos)
        for (const auto& m2 : monos) {
            PhasePoly f = PhasePoly::monomial(pairs, m1), g = PhasePoly::monomial(pairs, m2);
            if (weyl_mul(pbw_symmetrize(f), pbw_symmetrize(g)) != pbw_symmetrize(moyal_star(f, g)))
                return "f = " + f.str() + ", g = " + g.str();
        }
    return std::nullopt;
}

Outcome moyal_poisson_leading(Rng& rng, int samples) {
    StarProduct moyal = moyal_star;
    for (int i = 0; i < samples; ++i) {
        PhasePoly f = random_phase(rng, 2, 4, 4, false), g = random_phase(rng, 2, 4, 4, false);
        if (poisson_leading_term(moyal, f, g) != canonical_poisson(f, g)) return "f = " + f.str() + ", g = " + g.str();
    }
    return std::nullopt;
}

Outcome poisson_leibniz_jacobi(Rng& rng, int samples) {
    StarProduct moyal = moyal_star;
    auto br = [&](const PhasePoly& a, const PhasePoly& b) { return poisson_leading_term(moyal, a, b); };
    for (int i = 0; i < samples; ++i) {
        PhasePoly f = random_phase(rng, 2, 3, 3, false), g = random_phase(rng, 2, 3, 3, false), h = random_phase(rng, 2, 3, 3, false);
        std::string in = "f = " + f.str() + ", g = " + g.str() + ", h = " + h.str();
        if (br(f, g * h) != br(f, g) * h + g * br(f, h)) return "Leibniz: " + in;
        if (!(br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))).is_zero()) return "Jacobi: " + in;
    }
    return std::nullopt;
}

Outcome heisenberg_exponential() {
    PhasePoly x = PhasePoly::x(1, 0), y = PhasePoly::y(1, 0);
    auto r = heisenberg_check(x, y, 4);
    if (!r.star_side || !r.weyl_side) return "u = x1, v = y1";
    PhasePoly u = PhasePoly::x(2, 0).scaled(2) + PhasePoly::y(2, 1);
    PhasePoly v = PhasePoly::y(2, 0).scaled(Rational(-1, 3)) + PhasePoly::x(2, 1) + PhasePoly::y(2, 1);
    r = heisenberg_check(u, v, 4);
    if (!r.star_side || !r.weyl_side) return "u = " + u.str() + ", v = " + v.str();
    return std::nullopt;
}

// ---- representation functor

Outcome rep_multiplicative(Rng& rng, int samples, int n) {
    for (int i = 0; i < samples; ++i) {
        FreePoly a = random_free(2, rng, 0, 3, 3), b = random_free(2, rng, 0, 3, 3);
        if (rep_evaluate(a * b, n) != rep_evaluate(a, n) * rep_evaluate(b, n)) return "a = " + a.str() + ", b = " + b.str();
        if (rep_evaluate(a + b, n) != rep_evaluate(a, n) + rep_evaluate(b, n)) return "additivity: a = " + a.str() + ", b = " + b.str();
    }
    return std::nullopt;
}

Outcome rep_unital(int n) {
    if (rep_evaluate(FreePoly::constant(2, 1), n) != SymbolicMatrix::identity(n)) return "rho(1) != 1";
    return std::nullopt;
}

Outcome rep_trace_commutators(Rng& rng, int samples, int n) {
    for (int i = 0; i < samples; ++i) {
        FreePoly a = random_free(2, rng, 0, 3, 3), b = random_free(2, rng, 0, 3, 3);
        if (!trace_function(free_commutator(a, b), n).is_zero()) return "a = " + a.str() + ", b = " + b.str();
    }
    return std::nullopt;
}

Outcome rep_trace_cyclic(Rng& rng, int samples, int n) {
    for (int i = 0; i < samples; ++i) {
        FreePoly a = random_free(2, rng, 1, 4, 3);
        if (trace_function(a, n) != trace_function(project_cyclic(a).representative(), n)) return "a = " + a.str();
    }
    return std::nullopt;
}

Outcome rep_forms_d(Rng& rng, int samples) {
    BasedAlgebra a = BasedAlgebra::free(2);
    DRContext ctx(a);
    for (int i = 0; i < samples; ++i) {
        int w = pick_int(rng, 1, 3), deg = std::min(w, pick_int(rng, 0, 2));
        NCForm om = random_form(a, rng, deg, w, 3);
        if (form_to_rep(a, de_rham_d(a, om), 2) != exterior_d(form_to_rep(a, om, 2))) return "omega = " + om.str(a);
        DRClass c = dr_project(ctx, om);
        if (form_to_rep(a, c, 2) != form_to_rep(a, om, 2)) return "class representative changes the image: " + om.str(a);
    }
    return std::nullopt;
}

Outcome rep_forms_supercommutators(Rng& rng, int samples) {
    BasedAlgebra a = BasedAlgebra::free(2);
    for (int i = 0; i < samples; ++i) {
        NCForm x = random_form(a, rng, pick_int(rng, 0, 1), pick_int(rng, 1, 2), 2);
        NCForm y = random_form(a, rng, pick_int(rng, 0, 1), 1, 2);
        if (x.is_zero() || y.is_zero()) continue;
        NCForm sc = supercommutator(a, x, y);
        if (!form_to_rep(a, sc, 2).is_zero()) return "alpha = " + x.str(a) + ", beta = " + y.str(a);
    }
    return std::nullopt;
}

Outcome rep_vector_field_hom(Rng& rng, int samples) {
    BasedAlgebra a = BasedAlgebra::free(2);
    for (int i = 0; i < samples; ++i) {
        auto th = random_derivation(a, rng, 2), de = random_derivation(a, rng, 2);
        auto ft = derivation_to_vector_field(a, th, 2), fd = derivation_to_vector_field(a, de, 2);
        if (schouten_bracket(ft, fd) != derivation_to_vector_field(a, derivation_commutator(a, th, de), 2))
            return "theta = " + derivation_string(a, th) + ", delta = " + derivation_string(a, de);
    }
    return std::nullopt;
}

Outcome rep_chain_rule(Rng& rng, int samples) {
    for (int i = 0; i < samples; ++i) {
        std::vector<FreePoly> F{random_free(2, rng, 0, 3, 3), random_free(2, rng, 0, 3, 3)};
        std::vector<FreePoly> G{random_free(2, rng, 0, 3, 3), random_free(2, rng, 0, 3, 3)};
        if (jacobi_matrix(compose_endomorphisms(G, F)) != jacobi_compose(G, jacobi_matrix(G), jacobi_matrix(F)))
            return "F = " + free_list(F) + ", G = " + free_list(G);
    }
    return std::nullopt;
}

Outcome rep_dual_numbers(Rng& rng, int samples) {
    for (int i = 0; i < samples; ++i) {
        std::vector<FreePoly> F{random_free(2, rng, 0, 3, 3), random_free(2, rng, 0, 3, 3)};
        if (i % 2 == 0) {
            if (!jacobi_differential_check(F, {generic_matrix(0, 2), generic_matrix(1, 2)}).equal) return "generic point, F = " + free_list(F);
        } else {
            SymbolicMatrix n1(2), n2(2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    n1.at(r, c) = rng.small_rational();
                    n2.at(r, c) = rng.small_rational();
                }
            if (!jacobi_differential_check(F, {n1, n2}).equal) return "numeric point, F = " + free_list(F);
        }
    }
    return std::nullopt;
}

Outcome schouten_identities(Rng& rng, int samples) {
    std::vector<std::string> vars{"x", "y", "z"};
    auto s = [](int p, int q) { return ((p - 1) * (q - 1)) % 2 == 0 ? Rational(1) : Rational(-1); };
    for (int i = 0; i < samples; ++i) {
        int p = pick_int(rng, 0, 2), q = pick_int(rng, 0, 2), r = pick_int(rng, 0, 2);
        PolyVector P = random_polyvector(rng, vars, p, 2), Q = random_polyvector(rng, vars, q, 2), R = random_polyvector(rng, vars, r, 2);
        std::string in = "P = " + P.str() + ", Q = " + Q.str();
        if (schouten_bracket(P, Q) != schouten_bracket(Q, P).scaled(-s(p, q))) return "antisymmetry: " + in;
        PolyVector rhs = schouten_bracket(schouten_bracket(P, Q), R) + schouten_bracket(Q, schouten_bracket(P, R)).scaled(s(p, q));
        if (schouten_bracket(P, schouten_bracket(Q, R)) != rhs) return "Jacobi: " + in + ", R = " + R.str();
    }
    return std::nullopt;
}

// ---- Chern-Weil

Outcome wnc_d_squared(Rng& rng, int samples) {
    for (const auto& name : {"k", "kxk", "dual", "mat2"}) {
        auto a = load_algebra(name);
        auto w = wnc_alphabet(a);
        for (int l = 0; l < w->size(); ++l)
            if (!wnc_d(a, wnc_d(a, SuperPoly::letter(w, l))).is_zero()) return std::string(name) + ": generator " + w->names[static_cast<std::size_t>(l)];
        for (int t = 0; t < samples; ++t) {
            auto u = random_word_sum(w, pick_int(rng, 1, 4), rng);
            if (!wnc_d(a, wnc_d(a, u)).is_zero()) return std::string(name) + ": " + u.str();
        }
    }
    return std::nullopt;
}

Outcome wnc_acyclic(const StructureAlgebra& a, int max_degree) {
    auto h = wnc_cohomology(a, max_degree);
    std::vector<int> point(static_cast<std::size_t>(max_degree + 1), 0);
    point[0] = 1;
    if (h != point) return "dims " + Json(h).dump();
    return std::nullopt;
}

Outcome gs_antisymmetry(Rng& rng, int samples) {
    for (int n = 1; n <= 2; ++n) {
        auto al = gs_alphabet(n);
        for (int t = 0; t < samples; ++t) {
            int p = pick_int(rng, 1, 5), q = pick_int(rng, 1, 5);
            auto P = gs_class(random_word_sum(al, p, rng)), Q = gs_class(random_word_sum(al, q, rng));
            Rational s = sign((p + 1) * (q + 1));
            if (gs_bracket(P, Q) != gs_bracket(Q, P).scaled(-s)) return "P = " + P.str(true) + ", Q = " + Q.str(true);
        }
    }
    return std::nullopt;
}

Outcome gs_jacobi(Rng& rng, int samples) {
    for (int n = 1; n <= 2; ++n) {
        auto al = gs_alphabet(n);
        for (int t = 0; t < samples; ++t) {
            int p = pick_int(rng, 1, 5), q = pick_int(rng, 1, 5), r = pick_int(rng, 1, 5);
            auto P = gs_class(random_word_sum(al, p, rng)), Q = gs_class(random_word_sum(al, q, rng)),
                 R = gs_class(random_word_sum(al, r, rng));
            Rational s = sign((p + 1) * (q + 1));
            if (gs_bracket(P, gs_bracket(Q, R)) != gs_bracket(gs_bracket(P, Q), R) + gs_bracket(Q, gs_bracket(P, R)).scaled(s))
                return "P = " + P.str(true) + ", Q = " + Q.str(true) + ", R = " + R.str(true);
        }
    }
    return std::nullopt;
}

namespace {

Outcome gs_d_scaled(Rng& rng, int samples, const Rational& scale) {
    for (int n = 1; n <= 2; ++n) {
        auto al = gs_alphabet(n);
        auto lap = gs_laplacian(n);
        for (int t = 0; t < samples; ++t) {
            auto P = gs_class(random_word_sum(al, pick_int(rng, 1, 5), rng));
            auto rhs = gs_bracket(lap, P).scaled(scale);
            if (gs_d(P) != rhs) return "P = " + P.str(true) + ": dP = " + gs_d(P).str(true) + ", bracket side = " + rhs.str(true);
        }
    }
    return std::nullopt;
}

}  // namespace

Outcome gs_d_half_laplacian(Rng& rng, int samples) { return gs_d_scaled(rng, samples, Rational(1, 2)); }
Outcome gs_d_literal(Rng& rng, int samples) { return gs_d_scaled(rng, samples, Rational(1)); }

Outcome gs_chern_closed(int k_max, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k)
            if (!gs_d(gs_chern(k, n)).is_zero()) return "ch_" + std::to_string(k) + ", n = " + std::to_string(n);
    return std::nullopt;
}

Outcome gs_chern_brackets(int k_max, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k)
            for (int l = 0; l <= k_max; ++l)
                if (!gs_bracket(gs_chern(k, n), gs_chern(l, n)).is_zero())
                    return "{ch_" + std::to_string(k) + ", ch_" + std::to_string(l) + "}, n = " + std::to_string(n);
    return std::nullopt;
}

Outcome gs_transgression(int k_max, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            if (gs_d(ncalc::gs_transgression(k, n)) != gs_chern(k, n)) return "k = " + std::to_string(k) + ", n = " + std::to_string(n);
    return std::nullopt;
}

Outcome dga_bianchi(Rng& rng, int samples) {
    auto al2 = dga_alphabet(2);
    for (int t = 0; t < samples; ++t) {
        auto c = SuperPoly::monomial(al2, {0}, rng.nonzero_rational()) + SuperPoly::monomial(al2, {1}, rng.small_rational());
        auto r = dga_curvature(c);
        if (!r.bianchi || !r.bianchi_defect.is_zero()) return "connection " + c.str();
        for (int n = 1; n <= 3; ++n)
            if (!supercyclic_project(dga_d(power(r.curvature, n))).is_zero()) return "d(F^" + std::to_string(n) + ") for " + c.str();
    }
    return std::nullopt;
}

Outcome chern_simons(int n_max) {
    for (int n = 1; n <= n_max; ++n)
        if (!chern_simons_class(n).ok) return "n = " + std::to_string(n);
    return std::nullopt;
}

Outcome weil_d_squared(const LieAlgebraData& g, int max_degree) {
    for (int deg = 0; deg <= max_degree; ++deg)
        for (const auto& k : weil_basis(g.dim, deg)) {
            WeilElement w(g.dim);
            w.add_term(k, 1);
            if (!weil_d(g, weil_d(g, w)).is_zero()) return "basis element " + w.str(g.names);
        }
    return std::nullopt;
}

Outcome weil_acyclic(const LieAlgebraData& g, int max_degree) {
    auto h = weil_cohomology(g, max_degree);
    std::vector<int> point(static_cast<std::size_t>(max_degree + 1), 0);
    point[0] = 1;
    if (h != point) return "dims " + Json(h).dump();
    return std::nullopt;
}

Outcome weil_cartan_formula(const LieAlgebraData& g, int max_degree) {
    for (int i = 0; i < g.dim; ++i) {
        std::vector<Rational> x(static_cast<std::size_t>(g.dim), Rational(0));
        x[static_cast<std::size_t>(i)] = 1;
        for (int deg = 0; deg <= max_degree; ++deg)
            for (const auto& k : weil_basis(g.dim, deg)) {
                WeilElement w(g.dim);
                w.add_term(k, 1);
                if (!weil_cartan(g, x, w).equal) return "x = " + g.names[static_cast<std::size_t>(i)] + ", element " + w.str(g.names);
            }
    }
    return std::nullopt;
}

Outcome weil_invariants_closed() {
    auto g = lie::sl2();
    auto ue = WeilElement::u(3, 0), uf = WeilElement::u(3, 1), uh = WeilElement::u(3, 2);
    auto casimir = uh * uh + ue * uf;
    for (const auto& p : {casimir, casimir * casimir}) {
        for (int a = 0; a < 3; ++a) {
            std::vector<Rational> x(3, Rational(0));
            x[static_cast<std::size_t>(a)] = 1;
            if (!weil_coadjoint(g, x, p).is_zero()) return "not invariant: " + p.str(g.names);
        }
        if (!weil_d(g, p).is_zero()) return "not closed: " + p.str(g.names);
    }
    return std::nullopt;
}

// ---- K-theory

Outcome k_idempotent_identities(Rng& rng, int conjugations) {
    for (const auto& a : k_algebras())
        for (const auto& e : sample_idempotents(a)) {
            if (!idempotent_identities(e)) return "e = " + matrix_string(e);
            for (int t = 0; t < conjugations; ++t) {
                auto c = conjugate(e, random_invertible(a, 2, rng));
                if (!idempotent_identities(c)) return "e = " + matrix_string(c);
            }
        }
    auto k2 = BasedAlgebra::findim(algebras::idempotent());
    if (!idempotent_identities(IdempotentMatrix(k2, {{basis_elem(1)}}))) return "e = (e)";
    return std::nullopt;
}

Outcome k_c0_closed() {
    for (const auto& a : k_algebras()) {
        DRContext ctx(a);
        for (const auto& e : sample_idempotents(a))
            if (!chern_c0(ctx, e).closed) return "e = " + matrix_string(e);
    }
    auto k2 = BasedAlgebra::findim(algebras::idempotent());
    DRContext ctx(k2);
    if (!chern_c0(ctx, IdempotentMatrix(k2, {{basis_elem(1)}})).closed) return "e = (e)";
    return std::nullopt;
}

Outcome k_c1_cycle(Rng& rng, int samples) {
    auto z3 = BasedAlgebra::findim(algebras::cyclic_group_algebra(3));
    DRContext c3(z3);
    InvertibleMatrix g(z3, FormMatrix::from_elems({{basis_elem(1)}}), FormMatrix::from_elems({{basis_elem(2)}}));
    if (!chern_c1(c3, g).b_cycle) return "g in k[Z/3]";
    for (const auto& a : k_algebras()) {
        DRContext ctx(a);
        for (int t = 0; t < samples; ++t) {
            auto h = random_invertible(a, 2, rng);
            if (!chern_c1(ctx, h).b_cycle) return "b c1 != 0 for a random invertible";
        }
    }
    return std::nullopt;
}

Outcome k_chk_closed(int k_max) {
    for (const auto& a : k_algebras()) {
        DRContext ctx(a);
        for (const auto& e : sample_idempotents(a))
            for (int k = 0; k <= k_max; ++k)
                if (!chern_ch_k(ctx, e, k).closed) return "ch_" + std::to_string(k) + " of " + matrix_string(e);
    }
    auto k2 = BasedAlgebra::findim(algebras::idempotent());
    DRContext ctx(k2);
    for (int k = 0; k <= k_max; ++k)
        if (!chern_ch_k(ctx, IdempotentMatrix(k2, {{basis_elem(1)}}), k).closed) return "ch_" + std::to_string(k) + " of (e)";
    return std::nullopt;
}

Outcome k_conjugation_invariance(Rng& rng, int samples) {
    std::vector<BasedAlgebra> algs = k_algebras();
    for (int t = 0; t < samples; ++t) {
        const auto& a = algs[static_cast<std::size_t>(t) % algs.size()];
        DRContext ctx(a);
        auto idems = sample_idempotents(a);
        const auto& e = idems[pick(rng, idems.size())];
        auto g = random_invertible(a, 2, rng);
        auto c = conjugate(e, g);
        if (chern_c0(ctx, c).c0 != chern_c0(ctx, e).c0) return "c0 changes: e = " + matrix_string(e) + ", conjugate " + matrix_string(c);
        for (int k = 1; k <= 2; ++k)
            if (!dr_cohomologous(ctx, chern_ch_k(ctx, c, k).ch, chern_ch_k(ctx, e, k).ch))
                return "ch_" + std::to_string(k) + " class changes: e = " + matrix_string(e) + ", conjugate " + matrix_string(c);
        auto h = random_invertible(a, 2, rng);
        InvertibleMatrix hinv(a, h.inverse(), h.matrix());
        if (chern_c1(ctx, h * g * hinv).c1 != chern_c1(ctx, g).c1) return "c1 changes under conjugation";
    }
    return std::nullopt;
}

Outcome k_direct_sum() {
    for (const auto& a : k_algebras()) {
        DRContext ctx(a);
        auto z = diag10(a);
        for (const auto& e : sample_idempotents(a)) {
            if (chern_c0(ctx, direct_sum(e, z)).c0.representative != chern_c0(ctx, e).c0.representative + chern_c0(ctx, z).c0.representative)
                return "c0 of " + matrix_string(e) + " (+) diag(1,0)";
            for (int k = 1; k <= 2; ++k)
                if (chern_ch_k(ctx, direct_sum(e, e), k).ch != ctx.project(chern_ch_k(ctx, e, k).form.scaled(2)))
                    return "ch_" + std::to_string(k) + " of " + matrix_string(e) + " (+) itself";
        }
    }
    return std::nullopt;
}

Outcome k_curvature_trace(Rng& rng, int samples) {
    for (const auto& a : k_algebras()) {
        DRContext ctx(a);
        for (const auto& e : sample_idempotents(a))
            for (int t = 0; t <= samples; ++t) {
                auto c = t == 0 ? e : conjugate(e, random_invertible(a, 2, rng));
                for (int k = 1; k <= 2; ++k)
                    if (!connection_curvature(ctx, grassmann_connection(c), k).agrees)
                        return "Tr(R^" + std::to_string(k) + ") for " + matrix_string(c);
            }
    }
    return std::nullopt;
}

}  // namespace ncalc::checks
