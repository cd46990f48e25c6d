#include "ncalc/forms.hpp"

#include <functional>
#include <stdexcept>

namespace ncalc {

bool FormKeyLess::operator()(const FormKey& a, const FormKey& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    LenLex ll;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ll(a[i], b[i])) return true;
        if (ll(b[i], a[i])) return false;
    }
    return false;
}

NCForm NCForm::from_elem(const Elem& a) {
    NCForm f;
    for (const auto& [w, c] : a) f.add_term(FormKey{w}, c);
    return f;
}

NCForm NCForm::term(const FormKey& k, const Rational& c) {
    NCForm f;
    f.add_term(k, c);
    return f;
}

NCForm NCForm::d_of(const Elem& a) {
    NCForm f;
    for (const auto& [w, c] : a)
        if (!w.empty()) f.add_term(FormKey{Word{}, w}, c);
    return f;
}

int NCForm::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()) - 1;
}

bool NCForm::homogeneous() const {
    int d = degree();
    for (const auto& [k, c] : terms_)
        if (static_cast<int>(k.size()) - 1 != d) return false;
    return true;
}

void NCForm::add_term(const FormKey& k, const Rational& c) {
    if (k.empty()) throw std::invalid_argument("form key without a0 slot");
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i].empty()) return;   // d(1) = 0
    if (ncalc::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

NCForm& NCForm::operator+=(const NCForm& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

NCForm& NCForm::operator-=(const NCForm& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

NCForm NCForm::scaled(const Rational& s) const {
    NCForm r;
    if (ncalc::is_zero(s)) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

std::string NCForm::str(const BasedAlgebra& a) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        bool neg = sgn(c) < 0;
        Rational m = abs(c);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        std::string body;
        if (!k[0].empty()) body = a.basis_name(k[0]);
        for (std::size_t i = 1; i < k.size(); ++i) body += (body.empty() ? "" : "*") + ("d(" + a.basis_name(k[i]) + ")");
        std::string cs = m.get_den() == 1 ? to_string(m) : "(" + to_string(m) + ")";
        if (body.empty()) s += m.get_den() == 1 ? to_string(m) : cs;
        else if (m == 1) s += body;
        else s += cs + "*" + body;
    }
    return s;
}

int form_key_weight(const BasedAlgebra& a, const FormKey& k) {
    int w = 0;
    for (const auto& slot : k) w += a.weight(slot);
    return w;
}

NCForm weight_component(const BasedAlgebra& a, const NCForm& f, int w) {
    NCForm r;
    for (const auto& [k, c] : f.terms())
        if (form_key_weight(a, k) == w) r.add_term(k, c);
    return r;
}

std::vector<int> weights_present(const BasedAlgebra& a, const NCForm& f) {
    std::vector<int> ws;
    for (const auto& [k, c] : f.terms()) {
        int w = form_key_weight(a, k);
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

namespace {

// appends d(x) to every term
NCForm append_d(const NCForm& f, const Elem& x) {
    NCForm r;
    for (const auto& [k, c] : f.terms())
        for (const auto& [w, e] : x) {
            if (w.empty()) continue;
            FormKey nk = k;
            nk.push_back(w);
            r.add_term(nk, c * e);
        }
    return r;
}

NCForm append_slots(const NCForm& f, const FormKey& slots, std::size_t from) {
    NCForm r;
    for (const auto& [k, c] : f.terms()) {
        FormKey nk = k;
        nk.insert(nk.end(), slots.begin() + static_cast<long>(from), slots.end());
        r.add_term(nk, c);
    }
    return r;
}

// (a0 da1 ... dan) * b
NCForm right_mul_key(const BasedAlgebra& a, const FormKey& k, const Word& b) {
    if (k.size() == 1) return NCForm::from_elem(a.mul_basis(k[0], b));
    if (b.empty()) return NCForm::term(k);
    FormKey omega(k.begin(), k.end() - 1);
    const Word& an = k.back();
    // omega d(an b) - (omega an) db
    NCForm r = append_d(NCForm::term(omega), a.mul_basis(an, b));
    NCForm oa = right_mul_key(a, omega, an);
    r -= append_d(oa, Elem{{b, Rational(1)}});
    return r;
}

}  // namespace

NCForm left_mul(const BasedAlgebra& a, const Elem& x, const NCForm& f) {
    NCForm r;
    for (const auto& [k, c] : f.terms())
        for (const auto& [w, e] : x)
            for (const auto& [p, pc] : a.mul_basis(w, k[0])) {
                FormKey nk = k;
                nk[0] = p;
                r.add_term(nk, c * e * pc);
            }
    return r;
}

NCForm right_mul(const BasedAlgebra& a, const NCForm& f, const Elem& x) {
    NCForm r;
    for (const auto& [k, c] : f.terms())
        for (const auto& [w, e] : x) r += right_mul_key(a, k, w).scaled(c * e);
    return r;
}

NCForm form_mul(const BasedAlgebra& a, const NCForm& f, const NCForm& g) {
    NCForm r;
    for (const auto& [k2, c2] : g.terms()) {
        NCForm head = right_mul(a, f, Elem{{k2[0], Rational(1)}});
        r += append_slots(head, k2, 1).scaled(c2);
    }
    return r;
}

NCForm de_rham_d(const BasedAlgebra&, const NCForm& f) {
    NCForm r;
    for (const auto& [k, c] : f.terms()) {
        if (k[0].empty()) continue;
        FormKey nk;
        nk.reserve(k.size() + 1);
        nk.push_back(Word{});
        nk.insert(nk.end(), k.begin(), k.end());
        r.add_term(nk, c);
    }
    return r;
}

NCForm hochschild_b(const BasedAlgebra& a, const NCForm& f) {
    NCForm r;
    for (const auto& [k, c] : f.terms()) {
        if (k.size() < 2) throw std::invalid_argument("hochschild_b on a degree-0 form");
        FormKey omega(k.begin(), k.end() - 1);
        int deg = static_cast<int>(omega.size()) - 1;
        Elem an{{k.back(), Rational(1)}};
        NCForm w = NCForm::term(omega);
        NCForm t = right_mul(a, w, an) - left_mul(a, an, w);
        r += t.scaled(deg % 2 ? -c : c);
    }
    return r;
}

NCForm karoubi(const BasedAlgebra& a, const NCForm& f) {
    NCForm r;
    for (const auto& [k, c] : f.terms()) {
        if (k.size() == 1) {
            r.add_term(k, c);
            continue;
        }
        FormKey omega(k.begin(), k.end() - 1);
        int deg = static_cast<int>(omega.size()) - 1;
        NCForm da = NCForm::term(FormKey{Word{}, k.back()});
        r += form_mul(a, da, NCForm::term(omega)).scaled(deg % 2 ? -c : c);
    }
    return r;
}

NCForm contraction_i(const BasedAlgebra& a, const DerivationSpec& theta, const NCForm& f) {
    NCForm r;
    for (const auto& [k, c] : f.terms()) {
        for (std::size_t j = 1; j < k.size(); ++j) {
            FormKey prefix(k.begin(), k.begin() + static_cast<long>(j));
            NCForm head = right_mul(a, NCForm::term(prefix), theta.apply_basis(a, k[j]));
            Rational s = (j - 1) % 2 ? -c : c;
            r += append_slots(head, k, j + 1).scaled(s);
        }
    }
    return r;
}

NCForm lie_derivative(const BasedAlgebra& a, const DerivationSpec& theta, const NCForm& f) {
    NCForm r;
    for (const auto& [k, c] : f.terms()) {
        for (const auto& [w, e] : theta.apply_basis(a, k[0])) {
            FormKey nk = k;
            nk[0] = w;
            r.add_term(nk, c * e);
        }
        for (std::size_t j = 1; j < k.size(); ++j)
            for (const auto& [w, e] : theta.apply_basis(a, k[j])) {
                FormKey nk = k;
                nk[j] = w;
                r.add_term(nk, c * e);
            }
    }
    return r;
}

NCForm lie_derivative_cartan(const BasedAlgebra& a, const DerivationSpec& theta, const NCForm& f) {
    return de_rham_d(a, contraction_i(a, theta, f)) + contraction_i(a, theta, de_rham_d(a, f));
}

std::vector<FormKey> form_basis(const BasedAlgebra& a, int degree, int weight, const Caps& caps) {
    std::vector<FormKey> out;
    if (!a.graded()) {
        std::vector<Word> full = a.basis(0), comp = a.complement_basis(0);
        std::size_t total = full.size();
        for (int i = 0; i < degree; ++i) total *= comp.size();
        caps.check(total, "form piece");
        std::function<void(FormKey&)> rec = [&](FormKey& k) {
            if (static_cast<int>(k.size()) == degree + 1) {
                out.push_back(k);
                return;
            }
            for (const auto& w : comp) {
                k.push_back(w);
                rec(k);
                k.pop_back();
            }
        };
        for (const auto& w0 : full) {
            FormKey k{w0};
            rec(k);
        }
        return out;
    }
    std::function<void(FormKey&, int)> rec = [&](FormKey& k, int left) {
        int slots_left = degree + 1 - static_cast<int>(k.size());
        if (slots_left == 0) {
            if (left == 0) out.push_back(k);
            return;
        }
        for (int w = 1; w <= left - (slots_left - 1); ++w)
            for (const auto& word : a.basis(w)) {
                k.push_back(word);
                rec(k, left - w);
                k.pop_back();
                if (out.size() > caps.max_dim) throw CapExceeded("form piece exceeds dimension cap");
            }
    };
    for (int w0 = 0; w0 <= weight; ++w0)
        for (const auto& word : a.basis(w0)) {
            FormKey k{word};
            rec(k, weight - w0);
        }
    caps.check(out.size(), "form piece");
    return out;
}

NCForm random_form(const BasedAlgebra& a, Rng& rng, int degree, int weight, int terms) {
    NCForm f;
    auto basis = form_basis(a, degree, weight);
    if (basis.empty()) return f;
    for (int t = 0; t < terms; ++t)
        f.add_term(basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))], rng.nonzero_rational());
    return f;
}

const GradedPiece& DRContext::piece(int degree, int weight) {
    if (!alg_.graded()) weight = 0;
    auto key = std::make_pair(degree, weight);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return *it->second;
    auto p = std::make_unique<GradedPiece>();
    p->degree = degree;
    p->weight = weight;
    if (degree >= 0 && weight >= 0) p->basis = form_basis(alg_, degree, weight, caps_);
    for (std::size_t i = 0; i < p->basis.size(); ++i) p->index.emplace(p->basis[i], static_cast<int>(i));

    auto add_commutator = [&](const NCForm& omega, int omega_deg, const NCForm& g, int g_deg) {
        NCForm c = form_mul(alg_, omega, g);
        NCForm rev = form_mul(alg_, g, omega);
        c -= (omega_deg * g_deg) % 2 ? rev.scaled(-1) : rev;
        p->commutators.insert(vectorize(*p, c));
    };
    int sub = alg_.graded() ? weight - 1 : 0;
    if (degree >= 0 && sub >= 0) {
        for (const auto& g : alg_.generators()) {
            NCForm gen0 = NCForm::term(FormKey{g});
            NCForm gen1 = NCForm::term(FormKey{Word{}, g});
            for (const auto& k : form_basis(alg_, degree, sub, caps_)) add_commutator(NCForm::term(k), degree, gen0, 0);
            if (degree >= 1)
                for (const auto& k : form_basis(alg_, degree - 1, sub, caps_)) add_commutator(NCForm::term(k), degree - 1, gen1, 1);
        }
    }
    auto& ref = *p;
    pieces_.emplace(key, std::move(p));
    return ref;
}

SparseVec DRContext::vectorize(const GradedPiece& p, const NCForm& f) const {
    std::map<int, Rational> e;
    for (const auto& [k, c] : f.terms()) {
        auto it = p.index.find(k);
        if (it == p.index.end()) throw std::invalid_argument("form term outside the graded piece");
        e[it->second] += c;
    }
    return make_sparse(std::move(e));
}

NCForm DRContext::unvectorize(const GradedPiece& p, const SparseVec& v) const {
    NCForm f;
    for (const auto& [i, c] : v) f.add_term(p.basis[static_cast<std::size_t>(i)], c);
    return f;
}

DRClass DRContext::project(const NCForm& f) {
    DRClass cls;
    cls.degree = f.degree();
    if (!f.homogeneous()) throw std::invalid_argument("DR projection of an inhomogeneous form");
    if (f.is_zero()) return cls;
    for (int w : weights_present(alg_, f)) {
        NCForm part = alg_.graded() ? weight_component(alg_, f, w) : f;
        const GradedPiece& p = piece(cls.degree, w);
        cls.representative += unvectorize(p, p.commutators.reduce(vectorize(p, part)));
        if (!alg_.graded()) break;
    }
    return cls;
}

DRClass DRContext::d(const DRClass& c) {
    DRClass r = project(de_rham_d(alg_, c.representative));
    r.degree = c.degree + 1;
    return r;
}

std::vector<FormKey> DRContext::quotient_basis(int degree, int weight) {
    const GradedPiece& p = piece(degree, weight);
    std::vector<FormKey> out;
    for (std::size_t i = 0; i < p.basis.size(); ++i)
        if (!p.commutators.is_pivot(static_cast<int>(i))) out.push_back(p.basis[i]);
    return out;
}

DRClass dr_project(DRContext& ctx, const NCForm& f) { return ctx.project(f); }

std::string dr_string(const BasedAlgebra& a, const DRClass& c) { return c.representative.str(a) + " [DR]"; }

DRCohomology dr_cohomology(DRContext& ctx, int max_degree, int max_weight) {
    DRCohomology out;
    const BasedAlgebra& a = ctx.algebra();
    int wmax = a.graded() ? max_weight : 0;
    out.totals.assign(static_cast<std::size_t>(max_degree + 1), 0);
    for (int w = 0; w <= wmax; ++w) {
        std::vector<int> q(static_cast<std::size_t>(max_degree + 2)), r(static_cast<std::size_t>(max_degree + 2));
        for (int n = 0; n <= max_degree + 1; ++n) {
            const GradedPiece& p = ctx.piece(n, w);
            q[static_cast<std::size_t>(n)] = static_cast<int>(p.quotient_dimension());
        }
        for (int n = 0; n <= max_degree; ++n) {
            const GradedPiece& target = ctx.piece(n + 1, w);
            Echelon img;
            for (const auto& k : ctx.quotient_basis(n, w)) {
                NCForm dk = de_rham_d(a, NCForm::term(k));
                img.insert(target.commutators.reduce(ctx.vectorize(target, dk)));
            }
            r[static_cast<std::size_t>(n)] = static_cast<int>(img.rank());
        }
        for (int n = 0; n <= max_degree; ++n) {
            int h = q[static_cast<std::size_t>(n)] - r[static_cast<std::size_t>(n)] - (n ? r[static_cast<std::size_t>(n - 1)] : 0);
            out.dims[{n, w}] = h;
            out.quotient_dims[{n, w}] = q[static_cast<std::size_t>(n)];
            out.totals[static_cast<std::size_t>(n)] += h;
        }
    }
    out.reduced_totals = out.totals;
    if (!out.reduced_totals.empty()) out.reduced_totals[0] -= 1;
    return out;
}

DRClass poincare_primitive(DRContext& ctx, const DRClass& omega) {
    const BasedAlgebra& a = ctx.algebra();
    if (!a.graded()) throw std::invalid_argument("Poincare homotopy needs a graded free algebra");
    if (omega.is_zero()) return DRClass{omega.degree - 1, NCForm()};
    auto ws = weights_present(a, omega.representative);
    if (ws.size() != 1) throw std::invalid_argument("class is not weight-homogeneous");
    int w = ws[0];
    if (w == 0) throw std::invalid_argument("weight-0 class has no Euler primitive");
    if (!ctx.d(omega).is_zero()) throw std::invalid_argument("class is not closed");
    NCForm eta = contraction_i(a, DerivationSpec::euler(a), omega.representative).scaled(Rational(1, w));
    DRClass out = ctx.project(eta);
    out.degree = omega.degree - 1;
    return out;
}

std::vector<QuillenWeight> quillen_maps(DRContext& ctx, int max_weight) {
    const BasedAlgebra& a = ctx.algebra();
    if (a.kind() != BasedAlgebra::Kind::Free) throw std::invalid_argument("Quillen sequence check needs a free algebra");
    std::vector<QuillenWeight> out;
    for (int w = 0; w <= max_weight; ++w) {
        QuillenWeight q;
        q.weight = w;
        if (w == 0) {
            q.exact_at_dr0 = q.exact_at_dr1 = q.exact_at_abar = q.exact_at_end = q.image_b_is_commutators = true;
            out.push_back(q);
            continue;
        }
        auto dr0 = ctx.quotient_basis(0, w);
        auto dr1 = ctx.quotient_basis(1, w);
        const GradedPiece& p1 = ctx.piece(1, w);
        auto words = a.basis(w);
        std::map<Word, int> widx;
        for (std::size_t i = 0; i < words.size(); ++i) widx.emplace(words[i], static_cast<int>(i));
        q.dim_dr0 = static_cast<int>(dr0.size());
        q.dim_dr1 = static_cast<int>(dr1.size());
        q.dim_abar = static_cast<int>(words.size());

        Echelon im_d;
        for (const auto& k : dr0) im_d.insert(p1.commutators.reduce(ctx.vectorize(p1, de_rham_d(a, NCForm::term(k)))));
        q.rank_d = static_cast<int>(im_d.rank());

        auto to_vec = [&](const NCForm& f) {
            std::map<int, Rational> e;
            for (const auto& [k, c] : f.terms()) e[widx.at(k[0])] += c;
            return make_sparse(std::move(e));
        };
        Echelon im_b;
        for (const auto& k : dr1) im_b.insert(to_vec(hochschild_b(a, NCForm::term(k))));
        q.rank_b = static_cast<int>(im_b.rank());

        Echelon comm;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(w); ++j) {
                Word u = slice(words[i], 0, j), v = slice(words[i], j, words[i].size());
                std::map<int, Rational> e;
                e[widx.at(concat(u, v))] += 1;
                e[widx.at(concat(v, u))] -= 1;
                comm.insert(make_sparse(std::move(e)));
            }
        bool same = comm.rank() == im_b.rank();
        for (const auto& [piv, row] : im_b.rows()) same = same && comm.contains(row);
        q.image_b_is_commutators = same;

        const GradedPiece& p0 = ctx.piece(0, w);
        Echelon im_pr;
        for (const auto& word : words)
            im_pr.insert(p0.commutators.reduce(ctx.vectorize(p0, NCForm::term(FormKey{word}))));
        q.rank_pr = static_cast<int>(im_pr.rank());

        q.exact_at_dr0 = q.rank_d == q.dim_dr0;
        q.exact_at_dr1 = q.dim_dr1 - q.rank_b == q.rank_d;
        q.exact_at_abar = q.dim_abar - q.rank_pr == q.rank_b;
        q.exact_at_end = q.rank_pr == q.dim_dr0;
        out.push_back(q);
    }
    return out;
}

SquareZeroElement square_zero_product(const BasedAlgebra& a, const SquareZeroElement& p, const SquareZeroElement& q) {
    for (const auto* f : {&p.omega, &q.omega})
        if (!f->is_zero() && f->degree() != 2) throw std::invalid_argument("square-zero component must be a 2-form");
    SquareZeroElement r;
    r.a = a.mul(p.a, q.a);
    r.omega = left_mul(a, p.a, q.omega) + right_mul(a, p.omega, q.a) +
              form_mul(a, NCForm::d_of(p.a), NCForm::d_of(q.a));
    return r;
}

}  // namespace ncalc
