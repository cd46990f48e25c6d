#include "ncalc/rep.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ncalc {

namespace {

std::string join_signed(const std::vector<std::pair<Rational, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [c, body] : parts) {
        if (!first) {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        if (body.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += body;
        } else if (c == -1) {
            out += "-" + body;
        } else if (c.get_den() == 1) {
            out += to_string(c) + "*" + body;
        } else {
            out += "(" + to_string(c) + ")*" + body;
        }
    }
    return out;
}

bool is_sorted_strict(const std::vector<std::string>& v) {
    VarLess lt;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!lt(v[i - 1], v[i])) return false;
    return true;
}

// sorts in place; returns 0 on a repeated symbol, else the permutation sign
int sort_with_sign(std::vector<std::string>& v) {
    VarLess lt;
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && lt(v[j], v[j - 1]); --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!lt(v[i - 1], v[i])) return 0;
    return sign;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) r[v] += e;
    return r;
}

FreePoly word_poly(int gens, const Word& w) { return FreePoly::monomial(gens, w); }

std::string tensor_slot(const Word& w, int gens) { return w.empty() ? "1" : word_string(w, gens); }

}  // namespace

bool VarLess::operator()(const std::string& a, const std::string& b) const {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string ra = a.substr(i, i2 - i), rb = b.substr(j, j2 - j);
            ra.erase(0, std::min(ra.find_first_not_of('0'), ra.size() - 1));
            rb.erase(0, std::min(rb.find_first_not_of('0'), rb.size() - 1));
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
    return a < b;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin(), ib = b.begin();
    VarLess lt;
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) return lt(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.end() && ib == b.end();
}

std::string monomial_string(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += e == 1 ? v : v + "^" + std::to_string(e);
    }
    return s;
}

ComPoly::ComPoly(const Rational& c) { add_term({}, c); }

ComPoly ComPoly::var(const std::string& name) { return monomial(Monomial{{name, 1}}); }

ComPoly ComPoly::monomial(const Monomial& m, const Rational& c) {
    ComPoly p;
    p.add_term(m, c);
    return p;
}

int ComPoly::degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first); }

void ComPoly::add_term(const Monomial& m, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    Monomial clean;
    for (const auto& [v, e] : m) {
        if (e < 0) throw MathError("negative exponent");
        if (e > 0) clean[v] = e;
    }
    auto [it, inserted] = terms_.try_emplace(clean, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

std::vector<std::string> ComPoly::variables() const {
    std::set<std::string, VarLess> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) s.insert(v);
    return {s.begin(), s.end()};
}

ComPoly ComPoly::derivative(const std::string& v) const {
    ComPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it == m.end()) continue;
        Monomial m2 = m;
        m2[v] -= 1;
        r.add_term(m2, c * it->second);
    }
    return r;
}

Rational ComPoly::eval(const std::map<std::string, Rational>& point) const {
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw MathError("no value for variable " + v);
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        s += t;
    }
    return s;
}

ComPoly& ComPoly::operator+=(const ComPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ComPoly& ComPoly::operator-=(const ComPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ComPoly& ComPoly::operator*=(const ComPoly& o) {
    ComPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return *this = std::move(r);
}

ComPoly ComPoly::scaled(const Rational& s) const {
    ComPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

std::string ComPoly::str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [m, c] : terms_) parts.emplace_back(c, monomial_string(m));
    return join_signed(parts);
}

std::string to_string(const ComPoly& p) { return p.str(); }

bool ExtKeyLess::operator()(const ExtKey& a, const ExtKey& b) const {
    if (a.syms.size() != b.syms.size()) return a.syms.size() < b.syms.size();
    VarLess lt;
    for (std::size_t i = 0; i < a.syms.size(); ++i) {
        if (lt(a.syms[i], b.syms[i])) return true;
        if (lt(b.syms[i], a.syms[i])) return false;
    }
    MonomialOrder mo;
    return mo(a.mono, b.mono);
}

template <char Tag>
Exterior<Tag>::Exterior(const ComPoly& f) {
    for (const auto& [m, c] : f.terms()) add_term({m, {}}, c);
}

template <char Tag>
Exterior<Tag> Exterior<Tag>::symbol(const std::string& v) {
    Exterior e;
    e.add_term({{}, {v}}, 1);
    return e;
}

template <char Tag>
Exterior<Tag> Exterior<Tag>::term(const ComPoly& f, const std::vector<std::string>& syms) {
    std::vector<std::string> s = syms;
    int sign = sort_with_sign(s);
    Exterior e;
    if (sign == 0) return e;
    for (const auto& [m, c] : f.terms()) e.add_term({m, s}, c * sign);
    return e;
}

template <char Tag>
int Exterior<Tag>::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.syms.size());
}

template <char Tag>
bool Exterior<Tag>::homogeneous() const {
    for (const auto& [k, c] : terms_)
        if (static_cast<int>(k.syms.size()) != degree()) return false;
    return true;
}

template <char Tag>
ComPoly Exterior<Tag>::coefficient(const std::vector<std::string>& syms) const {
    ComPoly r;
    for (const auto& [k, c] : terms_)
        if (k.syms == syms) r.add_term(k.mono, c);
    return r;
}

template <char Tag>
std::map<std::vector<std::string>, ComPoly> Exterior<Tag>::by_symbols() const {
    std::map<std::vector<std::string>, ComPoly> r;
    for (const auto& [k, c] : terms_) r[k.syms].add_term(k.mono, c);
    return r;
}

template <char Tag>
void Exterior<Tag>::add_term(const ExtKey& k, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    if (!is_sorted_strict(k.syms)) throw MathError("exterior symbols must be strictly increasing");
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

template <char Tag>
Exterior<Tag>& Exterior<Tag>::operator+=(const Exterior& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

template <char Tag>
Exterior<Tag>& Exterior<Tag>::operator-=(const Exterior& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

template <char Tag>
Exterior<Tag> Exterior<Tag>::scaled(const Rational& s) const {
    Exterior r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
}

template <char Tag>
Exterior<Tag>& Exterior<Tag>::operator*=(const Exterior& o) {
    Exterior r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            std::vector<std::string> s = k1.syms;
            s.insert(s.end(), k2.syms.begin(), k2.syms.end());
            int sign = sort_with_sign(s);
            if (sign == 0) continue;
            r.add_term({mono_mul(k1.mono, k2.mono), s}, c1 * c2 * sign);
        }
    return *this = std::move(r);
}

template <char Tag>
std::string Exterior<Tag>::str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [k, c] : terms_) {
        std::string body = monomial_string(k.mono);
        std::string syms;
        for (const auto& v : k.syms) syms += (syms.empty() ? "" : "^") + std::string(1, Tag) + v;
        if (!syms.empty()) body += (body.empty() ? "" : "*") + syms;
        parts.emplace_back(c, body);
    }
    return join_signed(parts);
}

template class Exterior<'d'>;
template class Exterior<'D'>;

ComForm exterior_d(const ComForm& w) {
    ComForm r;
    for (const auto& [k, c] : w.terms()) {
        ComPoly f = ComPoly::monomial(k.mono, c);
        for (const auto& [v, e] : k.mono) {
            std::vector<std::string> s{v};
            s.insert(s.end(), k.syms.begin(), k.syms.end());
            r += ComForm::term(f.derivative(v), s);
        }
    }
    return r;
}

std::string rep_var(int g, int i, int j) {
    return "x_" + std::to_string(g + 1) + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

SymbolicMatrix generic_matrix(int g, int n, const std::string& prefix) {
    SymbolicMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = ComPoly::var(prefix + "_" + std::to_string(g + 1) + "_" + std::to_string(i + 1) + "_" +
                                      std::to_string(j + 1));
    return m;
}

namespace {

std::vector<SymbolicMatrix> generic_point(int gens, int n, const std::string& prefix = "x") {
    std::vector<SymbolicMatrix> pt;
    for (int g = 0; g < gens; ++g) pt.push_back(generic_matrix(g, n, prefix));
    return pt;
}

}  // namespace

SymbolicMatrix rep_evaluate(const FreePoly& a, int n) {
    if (n <= 0) throw MathError("matrix size must be positive");
    return eval_free(a, generic_point(a.generator_count(), n), n);
}

ComPoly trace_function(const FreePoly& a, int n) { return rep_evaluate(a, n).trace(); }

bool rep_point_satisfies(const std::vector<FreePoly>& relations, const std::vector<SymbolicMatrix>& point) {
    if (point.empty()) throw MathError("empty point");
    int n = point[0].size();
    for (const auto& r : relations) {
        auto m = eval_free(r, point, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!m.at(i, j).is_zero()) return false;
    }
    return true;
}

ComForm form_to_rep(const BasedAlgebra& a, const NCForm& w, int n) {
    if (a.kind() != BasedAlgebra::Kind::Free) throw MathError("representation forms need a free source algebra");
    if (n <= 0) throw MathError("matrix size must be positive");
    int gens = a.generator_count();
    auto pt = generic_point(gens, n);
    auto to_form = [](const ComPoly& p) { return ComForm(p); };
    ComForm total;
    for (const auto& [key, c] : w.terms()) {
        Matrix<ComForm> m = eval_free(word_poly(gens, key[0]), pt, n).map(to_form);
        for (std::size_t s = 1; s < key.size(); ++s) {
            Matrix<ComForm> dm = eval_free(word_poly(gens, key[s]), pt, n).map([](const ComPoly& p) {
                return exterior_d(ComForm(p));
            });
            m = m * dm;
        }
        total += m.trace().scaled(c);
    }
    return total;
}

ComForm form_to_rep(const BasedAlgebra& a, const DRClass& w, int n) { return form_to_rep(a, w.representative, n); }

PolyVector derivation_to_vector_field(const BasedAlgebra& a, const DerivationSpec& theta, int n) {
    if (a.kind() != BasedAlgebra::Kind::Free) throw MathError("vector fields need a free source algebra");
    int gens = a.generator_count();
    if (static_cast<int>(theta.images().size()) != gens) throw MathError("derivation has wrong number of images");
    PolyVector v;
    for (int g = 0; g < gens; ++g) {
        SymbolicMatrix m = rep_evaluate(a.to_free(theta.images()[static_cast<std::size_t>(g)]), n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v += PolyVector::term(m.at(i, j), {rep_var(g, i, j)});
    }
    return v;
}

ComPoly apply_vector_field(const PolyVector& v, const ComPoly& f) {
    if (!v.is_zero() && (v.degree() != 1 || !v.homogeneous())) throw MathError("not a vector field");
    ComPoly r;
    for (const auto& [syms, coef] : v.by_symbols()) r += coef * f.derivative(syms[0]);
    return r;
}

namespace {

using VectorField = std::map<std::string, ComPoly, VarLess>;

ComPoly vf_apply(const VectorField& x, const ComPoly& f) {
    ComPoly r;
    for (const auto& [v, c] : x) r += c * f.derivative(v);
    return r;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
    VectorField r;
    for (const auto& [v, c] : y) r[v] += vf_apply(x, c);
    for (const auto& [v, c] : x) r[v] -= vf_apply(y, c);
    return r;
}

PolyVector vf_to_poly(const VectorField& x) {
    PolyVector p;
    for (const auto& [v, c] : x) p += PolyVector::term(c, {v});
    return p;
}

PolyVector wedge_all(const std::vector<VectorField>& fs, std::size_t skip) {
    PolyVector r = 1;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (i != skip) r *= vf_to_poly(fs[i]);
    return r;
}

// f D_{a1} ^ ... ^ D_{ap}  ->  (f D_{a1}), D_{a2}, ..., D_{ap}
std::vector<VectorField> decompose(const ComPoly& f, const std::vector<std::string>& syms) {
    std::vector<VectorField> out;
    for (std::size_t i = 0; i < syms.size(); ++i) out.push_back(VectorField{{syms[i], i == 0 ? f : ComPoly(1)}});
    return out;
}

// {xi_1 ^ ... ^ xi_p, f} = sum_i (-1)^{p-i} xi_i(f) xi_1 ^ .. ^ (no xi_i) ^ .. ^ xi_p
PolyVector bracket_with_function(const std::vector<VectorField>& xs, const ComPoly& f) {
    PolyVector r;
    int p = static_cast<int>(xs.size());
    for (int i = 1; i <= p; ++i) {
        PolyVector t = PolyVector(vf_apply(xs[static_cast<std::size_t>(i - 1)], f)) * wedge_all(xs, static_cast<std::size_t>(i - 1));
        r += (p - i) % 2 == 0 ? t : -t;
    }
    return r;
}

}  // namespace

PolyVector schouten_bracket(const PolyVector& p, const PolyVector& q) {
    PolyVector r;
    for (const auto& [sp, fp] : p.by_symbols())
        for (const auto& [sq, fq] : q.by_symbols()) {
            auto xs = decompose(fp, sp), ys = decompose(fq, sq);
            int pd = static_cast<int>(sp.size()), qd = static_cast<int>(sq.size());
            if (pd == 0 && qd == 0) continue;
            if (qd == 0) {
                r += bracket_with_function(xs, fq);
                continue;
            }
            if (pd == 0) {
                PolyVector t = bracket_with_function(ys, fp);
                r += (qd - 1) % 2 == 0 ? -t : t;
                continue;
            }
            for (int i = 1; i <= pd; ++i)
                for (int j = 1; j <= qd; ++j) {
                    PolyVector t = vf_to_poly(vf_bracket(xs[static_cast<std::size_t>(i - 1)], ys[static_cast<std::size_t>(j - 1)])) *
                                   wedge_all(xs, static_cast<std::size_t>(i - 1)) * wedge_all(ys, static_cast<std::size_t>(j - 1));
                    r += (i + j) % 2 == 0 ? t : -t;
                }
        }
    return r;
}

ComPoly poisson_from_bivector(const PolyVector& pi, const ComPoly& f, const ComPoly& g) {
    if (!pi.is_zero() && (pi.degree() != 2 || !pi.homogeneous())) throw MathError("not a bivector");
    ComPoly r;
    for (const auto& [s, c] : pi.by_symbols())
        r += c * (f.derivative(s[0]) * g.derivative(s[1]) - f.derivative(s[1]) * g.derivative(s[0]));
    return r;
}

BivectorJacobiReport bivector_jacobi(const PolyVector& pi, const ComPoly& f, const ComPoly& g, const ComPoly& h) {
    auto br = [&pi](const ComPoly& u, const ComPoly& v) { return poisson_from_bivector(pi, u, v); };
    BivectorJacobiReport rep;
    rep.jacobi_defect = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g));
    PolyVector t = schouten_bracket(pi, pi);
    const ComPoly* fs[3] = {&f, &g, &h};
    for (const auto& [s, c] : t.by_symbols()) {
        // 3x3 determinant of partials, rows s[0..2], columns f, g, h
        ComPoly det;
        static const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
        for (const auto& pm : perms) {
            ComPoly term = fs[pm[0]]->derivative(s[0]) * fs[pm[1]]->derivative(s[1]) * fs[pm[2]]->derivative(s[2]);
            det += pm[3] > 0 ? term : -term;
        }
        rep.schouten_pairing += c * det;
    }
    rep.consistent = rep.jacobi_defect == rep.schouten_pairing.scaled(jacobi_constant);
    return rep;
}

TensorElem TensorElem::pure(const FreePoly& a, const FreePoly& b) {
    if (a.generator_count() != b.generator_count()) throw MathError("generator counts differ");
    TensorElem t(a.generator_count());
    for (const auto& [u, c1] : a.terms())
        for (const auto& [v, c2] : b.terms()) t.add_term(u, v, c1 * c2);
    return t;
}

void TensorElem::add_term(const Word& l, const Word& r, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    for (const Word* w : {&l, &r})
        for (int g : *w)
            if (g < 0 || g >= gens_) throw MathError("generator index out of range");
    auto [it, inserted] = terms_.try_emplace({l, r}, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

TensorElem TensorElem::outer(const FreePoly& u, const FreePoly& v) const {
    TensorElem r(gens_);
    for (const auto& [lr, c] : terms_)
        for (const auto& [uw, cu] : u.terms())
            for (const auto& [vw, cv] : v.terms()) r.add_term(concat(uw, lr.first), concat(lr.second, vw), c * cu * cv);
    return r;
}

TensorElem TensorElem::substitute(const std::vector<FreePoly>& images) const {
    TensorElem r(gens_);
    for (const auto& [lr, c] : terms_)
        r += pure(ncalc::substitute(word_poly(gens_, lr.first), images), ncalc::substitute(word_poly(gens_, lr.second), images))
                 .scaled(c);
    return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (o.gens_ != gens_) throw MathError("generator counts differ");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (o.gens_ != gens_) throw MathError("generator counts differ");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElem TensorElem::scaled(const Rational& s) const {
    TensorElem r(gens_);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

std::string TensorElem::str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [k, c] : terms_) parts.emplace_back(c, tensor_slot(k.first, gens_) + "⊗" + tensor_slot(k.second, gens_));
    return join_signed(parts);
}

DoubleDerivationValue double_derivation(int i, const FreePoly& a) {
    int gens = a.generator_count();
    if (i < 0 || i >= gens) throw MathError("generator index out of range");
    TensorElem r(gens);
    for (const auto& [w, c] : a.terms())
        for (std::size_t s = 0; s < w.size(); ++s)
            if (w[s] == i) r.add_term(slice(w, 0, s), slice(w, s + 1, w.size()), c);
    return r;
}

JacobiMatrix jacobi_matrix(const std::vector<FreePoly>& f) {
    int r = static_cast<int>(f.size());
    for (const auto& p : f)
        if (p.generator_count() != r) throw MathError("endomorphism images must use exactly r generators");
    JacobiMatrix m(f.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[static_cast<std::size_t>(i)].push_back(double_derivation(i, f[static_cast<std::size_t>(j)]));
    return m;
}

FreePoly substitute(const FreePoly& a, const std::vector<FreePoly>& images) {
    if (static_cast<int>(images.size()) != a.generator_count()) throw MathError("wrong number of images");
    int gens = images.empty() ? a.generator_count() : images[0].generator_count();
    FreePoly r(gens);
    for (const auto& [w, c] : a.terms()) {
        FreePoly m = FreePoly::constant(gens, c);
        for (int g : w) m = m * images[static_cast<std::size_t>(g)];
        r += m;
    }
    return r;
}

std::vector<FreePoly> compose_endomorphisms(const std::vector<FreePoly>& g, const std::vector<FreePoly>& f) {
    std::vector<FreePoly> h;
    for (const auto& fl : f) h.push_back(substitute(fl, g));
    return h;
}

JacobiMatrix jacobi_compose(const std::vector<FreePoly>& g, const JacobiMatrix& dg, const JacobiMatrix& df) {
    std::size_t r = g.size();
    if (dg.size() != r || df.size() != r) throw MathError("jacobi matrices have wrong size");
    int gens = static_cast<int>(r);
    JacobiMatrix out(r, std::vector<TensorElem>(r, TensorElem(gens)));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t i = 0; i < r; ++i)
                for (const auto& [uv, c] : df[i][l].terms())
                    out[k][l] += dg[k][i]
                                     .outer(substitute(word_poly(gens, uv.first), g), substitute(word_poly(gens, uv.second), g))
                                     .scaled(c);
    return out;
}

JacobiDifferentialReport jacobi_differential_check(const std::vector<FreePoly>& f, const std::vector<SymbolicMatrix>& point,
                                                   const Caps& caps) {
    int r = static_cast<int>(f.size());
    if (static_cast<int>(point.size()) != r) throw MathError("point has wrong generator count");
    if (r == 0) return {true, {}, {}};
    int n = point[0].size();
    caps.check(static_cast<std::size_t>(2 * r * n * n), "jacobi differential variables");
    for (const auto& p : f)
        if (p.generator_count() != r) throw MathError("endomorphism images must use exactly r generators");

    using D = DualT<ComPoly>;
    auto z = generic_point(r, n, "z");
    std::vector<Matrix<D>> dual_pt;
    for (int g = 0; g < r; ++g) {
        Matrix<D> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = D(point[static_cast<std::size_t>(g)].at(i, j), z[static_cast<std::size_t>(g)].at(i, j));
        dual_pt.push_back(std::move(m));
    }

    JacobiDifferentialReport rep;
    JacobiMatrix jac = jacobi_matrix(f);
    for (int j = 0; j < r; ++j) {
        rep.dual_side.push_back(eval_free(f[static_cast<std::size_t>(j)], dual_pt, n).map([](const D& d) { return d.eps; }));
        SymbolicMatrix s(n);
        for (int i = 0; i < r; ++i)
            for (const auto& [uv, c] : jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms()) {
                SymbolicMatrix u = eval_free(word_poly(r, uv.first), point, n);
                SymbolicMatrix v = eval_free(word_poly(r, uv.second), point, n);
                s += (u * z[static_cast<std::size_t>(i)] * v).scaled(ComPoly(c));
            }
        rep.jacobi_side.push_back(std::move(s));
    }
    rep.equal = rep.dual_side == rep.jacobi_side;
    return rep;
}

}  // namespace ncalc
