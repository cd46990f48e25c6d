#include "ncalc/chern_weil.hpp"

#include <algorithm>
#include <functional>

#include "ncalc/linalg.hpp"

namespace ncalc {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string coeff_str(const Rational& c, bool& negative) {
    negative = sgn(c) < 0;
    Rational m = abs(c);
    if (m == 1) return "";
    return (m.get_den() == 1 ? to_string(m) : "(" + to_string(m) + ")") + "*";
}

std::string coeff_str(const TPoly& c, bool& negative) {
    negative = false;
    if (c == TPoly(1)) return "";
    if (c.coeffs().size() == 1 && c.coeffs().begin()->first == 0) {
        const Rational& r = c.coeffs().begin()->second;
        negative = sgn(r) < 0;
        Rational m = abs(r);
        if (m == 1) return "";
        return (m.get_den() == 1 ? to_string(m) : "(" + to_string(m) + ")") + "*";
    }
    return "(" + c.str() + ")*";
}

template <class C>
std::string render(const SuperAlphabet& a, const std::map<Word, C, LenLex>& terms, bool cyclic) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        bool neg = false;
        std::string cs = coeff_str(c, neg);
        std::string body;
        if (w.empty()) {
            body = cs.empty() ? "1" : cs.substr(0, cs.size() - 1);
            cs.clear();
        } else {
            body = cyclic ? "cyc(" + a.word_string(w, " ") + ")" : a.word_string(w, "*");
        }
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += cs + body;
        first = false;
    }
    return out;
}

// all words of total degree d
void words_of_degree(const SuperAlphabet& a, int d, std::vector<Word>& out, Word& cur) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int l = 0; l < a.size(); ++l) {
        int e = a.degree(l);
        if (e > d || e <= 0) continue;
        cur.push_back(l);
        words_of_degree(a, d - e, out, cur);
        cur.pop_back();
    }
}

std::vector<Word> words_of_degree(const SuperAlphabet& a, int d) {
    std::vector<Word> out;
    Word cur;
    words_of_degree(a, d, out, cur);
    return out;
}

struct GradedRanks {
    std::vector<int> dims, ranks, cohomology;
};

// ranks of a degree +1 map between indexed graded bases
template <class Basis, class Apply>
GradedRanks graded_ranks(const std::vector<Basis>& bases, Apply&& apply) {
    GradedRanks r;
    std::size_t top = bases.size();
    for (std::size_t d = 0; d < top; ++d) r.dims.push_back(static_cast<int>(bases[d].size()));
    for (std::size_t d = 0; d + 1 < top; ++d) {
        std::vector<SparseVec> cols;
        for (std::size_t i = 0; i < bases[d].size(); ++i) cols.push_back(apply(d, i));
        r.ranks.push_back(static_cast<int>(rank_of_vectors(cols)));
    }
    for (std::size_t d = 0; d + 1 < top; ++d) {
        int in = d == 0 ? 0 : r.ranks[d - 1];
        r.cohomology.push_back(r.dims[d] - r.ranks[d] - in);
    }
    r.dims.pop_back();
    return r;
}

void check_same_alphabet(const SuperPoly& p, const SuperPoly& q) {
    if (p.alphabet() && q.alphabet() && p.alphabet()->size() != q.alphabet()->size())
        throw MathError("elements live over different numbers of generators");
}

}  // namespace

template <>
std::string SuperPolyT<Rational>::str(bool cyclic) const {
    return alph_ ? render(*alph_, terms_, cyclic) : "0";
}

template <>
std::string SuperPolyT<TPoly>::str(bool cyclic) const {
    return alph_ ? render(*alph_, terms_, cyclic) : "0";
}

int SuperAlphabet::degree(const Word& w) const {
    int d = 0;
    for (int l : w) d += degree(l);
    return d;
}

std::string SuperAlphabet::word_string(const Word& w, const std::string& sep) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += names.at(static_cast<std::size_t>(w[i]));
    }
    return s;
}

std::pair<int, Word> super_canonical(const SuperAlphabet& a, const Word& w) {
    if (w.empty()) return {1, w};
    int total = a.degree(w);
    std::map<Word, int> seen;
    Word cur = w;
    int s = 1;
    for (std::size_t r = 0; r < w.size(); ++r) {
        auto [it, inserted] = seen.emplace(cur, s);
        if (!inserted && it->second != s) return {0, {}};
        int x = a.degree(cur.front());
        s *= parity_sign(static_cast<long>(x) * (total - x));
        cur = rotate(cur, 1);
    }
    const auto& best = *seen.begin();   // map order is lexicographic, all equal length
    return {best.second, best.first};
}

SuperPoly supercyclic_project(const SuperPoly& p) {
    SuperPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        auto [s, rep] = super_canonical(*p.alphabet(), w);
        if (s != 0) out.add_term(rep, s > 0 ? c : Rational(-c));
    }
    return out;
}

SuperPoly odd_derivation(const SuperPoly& p, const std::vector<SuperPoly>& images) {
    const auto& a = *p.alphabet();
    if (images.size() != static_cast<std::size_t>(a.size())) throw MathError("derivation needs one image per letter");
    SuperPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const SuperPoly& img = images[static_cast<std::size_t>(w[i])];
            Rational sc = parity_sign(before) > 0 ? c : Rational(-c);
            Word pre = slice(w, 0, i), post = slice(w, i + 1, w.size());
            for (const auto& [v, e] : img.terms()) out.add_term(concat(concat(pre, v), post), sc * e);
            before += a.degree(w[i]);
        }
    }
    return out;
}

SuperPoly power(const SuperPoly& p, int k) {
    if (k < 0) throw MathError("negative power");
    SuperPoly r = SuperPoly::constant(p.alphabet(), 1);
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

// ---- W_nc ----

AlphabetPtr wnc_alphabet(const StructureAlgebra& a) {
    auto al = std::make_shared<SuperAlphabet>();
    int m = a.dim();
    for (int sign = 0; sign < 2; ++sign)
        for (int k = 0; k < m; ++k) {
            al->degrees.push_back(sign == 0 ? 1 : 2);
            al->names.push_back(std::string(sign == 0 ? "a" : "b") + std::to_string(k + 1));
        }
    return al;
}

namespace {

std::vector<SuperPoly> wnc_images(const StructureAlgebra& a, const AlphabetPtr& al) {
    int m = a.dim();
    std::vector<SuperPoly> img(static_cast<std::size_t>(2 * m), SuperPoly(al));
    for (int k = 0; k < m; ++k) {
        SuperPoly& minus = img[static_cast<std::size_t>(k)];
        SuperPoly& plus = img[static_cast<std::size_t>(m + k)];
        minus.add_term({m + k}, 1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Rational& c = a.c(i, j, k);
                if (is_zero(c)) continue;
                minus.add_term({i, j}, c);
                plus.add_term({i, m + j}, c);
                plus.add_term({m + i, j}, -c);
            }
    }
    return img;
}

int plus_count(const Word& w, int m) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [m](int l) { return l >= m; }));
}

}  // namespace

WncElement wnc_d(const StructureAlgebra& a, const WncElement& u) {
    if (!u.alphabet() || u.alphabet()->size() != 2 * a.dim()) throw MathError("element is not over this algebra");
    return odd_derivation(u, wnc_images(a, u.alphabet()));
}

std::vector<int> wnc_cohomology(const StructureAlgebra& a, int max_degree, const Caps& caps) {
    AlphabetPtr al = wnc_alphabet(a);
    auto img = wnc_images(a, al);
    std::vector<std::vector<Word>> bases;
    std::vector<std::map<Word, int>> index(static_cast<std::size_t>(max_degree + 2));
    for (int d = 0; d <= max_degree + 1; ++d) {
        bases.push_back(words_of_degree(*al, d));
        caps.check(bases.back().size(), "W_nc graded piece");
        for (std::size_t i = 0; i < bases.back().size(); ++i)
            index[static_cast<std::size_t>(d)][bases.back()[i]] = static_cast<int>(i);
    }
    auto r = graded_ranks(bases, [&](std::size_t d, std::size_t i) {
        SuperPoly x = odd_derivation(SuperPoly::monomial(al, bases[d][i]), img);
        std::map<int, Rational> col;
        for (const auto& [w, c] : x.terms()) col[index[d + 1].at(w)] += c;
        return make_sparse(col);
    });
    return r.cohomology;
}

HodgeQuotient hodge_quotient(const StructureAlgebra& a, int p, int max_degree, const Caps& caps) {
    if (p < 1) throw MathError("filtration index must be positive");
    AlphabetPtr al = wnc_alphabet(a);
    auto img = wnc_images(a, al);
    int m = a.dim();
    HodgeQuotient h;
    h.p = p;
    h.alphabet = al;
    std::vector<std::map<Word, int>> index;
    for (int d = 0; d <= max_degree + 1; ++d) {
        std::vector<Word> reps;
        for (const Word& w : words_of_degree(*al, d)) {
            if (plus_count(w, m) >= p) continue;
            auto [s, rep] = super_canonical(*al, w);
            if (s != 0 && rep == w) reps.push_back(w);
        }
        caps.check(reps.size(), "Hodge quotient graded piece");
        std::map<Word, int> idx;
        for (std::size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
        index.push_back(std::move(idx));
        h.basis.push_back(std::move(reps));
    }
    auto r = graded_ranks(h.basis, [&](std::size_t d, std::size_t i) {
        SuperPoly x = supercyclic_project(odd_derivation(SuperPoly::monomial(al, h.basis[d][i]), img));
        std::map<int, Rational> col;
        for (const auto& [w, c] : x.terms())
            if (plus_count(w, m) < p) col[index[d + 1].at(w)] += c;
        return make_sparse(col);
    });
    h.basis.pop_back();
    h.dims = r.dims;
    h.ranks = r.ranks;
    h.cohomology = r.cohomology;
    return h;
}

// ---- Gelfand-Smirnov ----

AlphabetPtr gs_alphabet(int n) {
    if (n < 1) throw MathError("need at least one pair");
    auto al = std::make_shared<SuperAlphabet>();
    for (int j = 0; j < n; ++j) {
        al->degrees.push_back(1);
        al->names.push_back("a" + std::to_string(j + 1));
    }
    for (int j = 0; j < n; ++j) {
        al->degrees.push_back(2);
        al->names.push_back("b" + std::to_string(j + 1));
    }
    return al;
}

int gs_pairs(const GSElement& p) { return p.alphabet() ? p.alphabet()->size() / 2 : 0; }

GSElement gs_class(const SuperPoly& p) { return supercyclic_project(p); }

GSElement gs_d(const GSElement& p) {
    int n = gs_pairs(p);
    std::vector<SuperPoly> img(static_cast<std::size_t>(2 * n), SuperPoly(p.alphabet()));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)].add_term({n + j}, 1);
    return supercyclic_project(odd_derivation(p, img));
}

GSElement gs_cyclic_derivative(const GSElement& p, int letter) {
    const auto& a = *p.alphabet();
    SuperPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        int total = a.degree(w);
        Word cur = w;
        int s = 1;
        for (std::size_t r = 0; r < w.size(); ++r) {
            if (cur.front() == letter) out.add_term(slice(cur, 1, cur.size()), s > 0 ? c : Rational(-c));
            int x = a.degree(cur.front());
            s *= parity_sign(static_cast<long>(x) * (total - x));
            cur = rotate(cur, 1);
        }
    }
    return out;
}

GSElement gs_bracket(const GSElement& p, const GSElement& q) {
    check_same_alphabet(p, q);
    AlphabetPtr al = p.alphabet() ? p.alphabet() : q.alphabet();
    SuperPoly out(al);
    if (!al) return out;
    int n = al->size() / 2;
    for (const auto& [dp, P] : p.homogeneous_parts())
        for (const auto& [dq, Q] : q.homogeneous_parts()) {
            SuperPoly acc(al);
            for (int j = 0; j < n; ++j) {
                acc += gs_cyclic_derivative(P, j) * gs_cyclic_derivative(Q, n + j);
                SuperPoly swap = gs_cyclic_derivative(Q, j) * gs_cyclic_derivative(P, n + j);
                acc += parity_sign(static_cast<long>(dp) * dq) > 0 ? swap : -swap;
            }
            out += parity_sign(dp) > 0 ? acc : -acc;
        }
    return supercyclic_project(out);
}

GSElement gs_laplacian(int n) {
    AlphabetPtr al = gs_alphabet(n);
    SuperPoly out(al);
    for (int j = 0; j < n; ++j) out.add_term({n + j, n + j}, 1);
    return supercyclic_project(out);
}

GSElement gs_chern(int k, int n) {
    if (k < 0) throw MathError("negative Chern index");
    AlphabetPtr al = gs_alphabet(n);
    SuperPoly out(al);
    for (int j = 0; j < n; ++j) {
        SuperPoly x(al);
        x.add_term({j, j}, 1);
        x.add_term({n + j}, 1);
        out += power(x, k);
    }
    return supercyclic_project(out);
}

namespace {

// sum of all words with i copies of x and l copies of y
SuperPoly sigma_words(const SuperPoly& x, const SuperPoly& y, int i, int l) {
    if (i == 0 && l == 0) return SuperPoly::constant(x.alphabet(), 1);
    SuperPoly out(x.alphabet());
    if (i > 0) out += x * sigma_words(x, y, i - 1, l);
    if (l > 0) out += y * sigma_words(x, y, i, l - 1);
    return out;
}

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

GSElement gs_transgression_unnormalized(int k, int n) {
    if (k < 1) throw MathError("transgression needs k >= 1");
    AlphabetPtr al = gs_alphabet(n);
    SuperPoly out(al);
    for (int p = 0; p < n; ++p) {
        SuperPoly a2(al), b(al), s(al);
        a2.add_term({p, p}, 1);
        b.add_term({n + p}, 1);
        for (int j = 0; j < k; ++j) s += sigma_words(a2, b, j, k - 1 - j).scaled(Rational(1, k + j));
        out += SuperPoly::letter(al, p) * s;
    }
    return supercyclic_project(out.scaled(1 / factorial(k - 1)));
}

GSElement gs_transgression(int k, int n) { return gs_transgression_unnormalized(k, n).scaled(factorial(k)); }

GSChernReport gs_chern_report(int k_max, int n) {
    GSChernReport r;
    r.k_max = k_max;
    r.n = n;
    r.closed = r.brackets_vanish = r.transgression = true;
    std::vector<GSElement> ch;
    for (int k = 0; k <= k_max; ++k) ch.push_back(gs_chern(k, n));
    for (int k = 0; k <= k_max; ++k) {
        if (!gs_d(ch[static_cast<std::size_t>(k)]).is_zero()) r.closed = false;
        for (int l = 0; l <= k_max; ++l)
            if (!gs_bracket(ch[static_cast<std::size_t>(k)], ch[static_cast<std::size_t>(l)]).is_zero())
                r.brackets_vanish = false;
        if (k >= 1 && gs_d(gs_transgression(k, n)) != ch[static_cast<std::size_t>(k)]) r.transgression = false;
    }
    return r;
}

// ---- free DGA ----

AlphabetPtr dga_alphabet(int r) {
    if (r < 1) throw MathError("need at least one generator");
    auto al = std::make_shared<SuperAlphabet>();
    for (int j = 0; j < r; ++j) {
        al->degrees.push_back(1);
        al->names.push_back(r == 1 ? "a" : "a" + std::to_string(j + 1));
    }
    for (int j = 0; j < r; ++j) {
        al->degrees.push_back(2);
        al->names.push_back(r == 1 ? "da" : "da" + std::to_string(j + 1));
    }
    return al;
}

DGAElement dga_d(const DGAElement& u, bool closed) {
    if (!u.alphabet()) return u;
    int r = u.alphabet()->size() / 2;
    std::vector<SuperPoly> img(static_cast<std::size_t>(2 * r), SuperPoly(u.alphabet()));
    if (!closed)
        for (int j = 0; j < r; ++j) img[static_cast<std::size_t>(j)].add_term({r + j}, 1);
    return odd_derivation(u, img);
}

CurvatureReport dga_curvature(const DGAElement& a, bool closed) {
    if (a.degree() != 1) throw MathError("connection must have degree 1");
    CurvatureReport r;
    r.curvature = dga_d(a, closed) + a * a;
    r.bianchi_defect = dga_d(r.curvature, closed) + a * r.curvature - r.curvature * a;
    r.bianchi = r.bianchi_defect.is_zero();
    return r;
}

SuperPolyT<TPoly> chern_simons_integrand(int n) {
    if (n < 1) throw MathError("Chern-Simons index must be positive");
    AlphabetPtr al = dga_alphabet(1);
    using TP = SuperPolyT<TPoly>;
    TP ft(al);
    ft.add_term({1}, TPoly::t_power(1));
    ft.add_term({0, 0}, TPoly::t_power(2));
    TP acc = TP::letter(al, 0);
    for (int i = 0; i < n - 1; ++i) acc = acc * ft;
    return acc.scaled(TPoly(Rational(1 / factorial(n - 1))));
}

SuperPoly integrate_t(const SuperPolyT<TPoly>& p) {
    SuperPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        Rational s = 0;
        for (const auto& [e, v] : c.coeffs()) s += v / (e + 1);
        out.add_term(w, s);
    }
    return out;
}

ChernSimonsReport chern_simons_class(int n) {
    ChernSimonsReport r;
    r.cs = supercyclic_project(integrate_t(chern_simons_integrand(n)));
    r.d_cs = supercyclic_project(dga_d(r.cs));
    AlphabetPtr al = r.cs.alphabet();
    auto curv = dga_curvature(SuperPoly::letter(al, 0));
    r.target = supercyclic_project(power(curv.curvature, n)).scaled(1 / factorial(n));
    r.ok = r.d_cs == r.target;
    return r;
}

// ---- commutative Weil algebra ----

namespace {

WeilKey empty_key(int n) { return WeilKey{std::vector<int>(static_cast<std::size_t>(n), 0), {}}; }

// product of exterior monomials with sign; 0 if they overlap
int merge_ext(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
    out.clear();
    long inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        } else {
            return 0;
        }
    }
    return parity_sign(inversions);
}

std::vector<int> key_letters(const WeilKey& k) {
    std::vector<int> gens;   // u^i as i, xi^i as n+i, u's first
    int n = static_cast<int>(k.sym.size());
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < k.sym[static_cast<std::size_t>(i)]; ++e) gens.push_back(i);
    for (int i : k.ext) gens.push_back(n + i);
    return gens;
}

WeilElement generator(int n, int g) { return g < n ? WeilElement::u(n, g) : WeilElement::xi(n, g - n); }

// derivation from images of u^0..u^{n-1}, xi^0..xi^{n-1}; odd when the parity flag is set
WeilElement weil_derivation(const WeilElement& w, const std::vector<WeilElement>& img, bool odd) {
    int n = w.dim();
    WeilElement out(n);
    for (const auto& [k, c] : w.terms()) {
        std::vector<int> gens = key_letters(k);
        int odd_before = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            WeilElement term = WeilElement::constant(n, (odd && odd_before % 2) ? Rational(-c) : c);
            for (std::size_t j = 0; j < gens.size(); ++j)
                term = term * (j == i ? img[static_cast<std::size_t>(gens[j])] : generator(n, gens[j]));
            out += term;
            if (gens[i] >= n) ++odd_before;
        }
    }
    return out;
}

void check_lie(const LieAlgebraData& g, const WeilElement& w) {
    if (w.dim() != g.dim) throw MathError("Weil element has the wrong dimension");
}

std::vector<WeilElement> coadjoint_images(const LieAlgebraData& g, const std::vector<Rational>& x) {
    int n = g.dim;
    if (x.size() != static_cast<std::size_t>(n)) throw MathError("Lie element has the wrong dimension");
    std::vector<WeilElement> img(static_cast<std::size_t>(2 * n), WeilElement(n));
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j) {
                Rational c = x[static_cast<std::size_t>(a)] * g.at(a, j, k);
                if (is_zero(c)) continue;
                img[static_cast<std::size_t>(k)] -= WeilElement::u(n, j).scaled(c);
                img[static_cast<std::size_t>(n + k)] -= WeilElement::xi(n, j).scaled(c);
            }
    return img;
}

}  // namespace

WeilElement WeilElement::constant(int dim, const Rational& c) {
    WeilElement w(dim);
    w.add_term(empty_key(dim), c);
    return w;
}

WeilElement WeilElement::u(int dim, int k) {
    if (k < 0 || k >= dim) throw MathError("generator index out of range");
    WeilKey key = empty_key(dim);
    key.sym[static_cast<std::size_t>(k)] = 1;
    WeilElement w(dim);
    w.add_term(key, 1);
    return w;
}

WeilElement WeilElement::xi(int dim, int k) {
    if (k < 0 || k >= dim) throw MathError("generator index out of range");
    WeilKey key = empty_key(dim);
    key.ext = {k};
    WeilElement w(dim);
    w.add_term(key, 1);
    return w;
}

void WeilElement::add_term(const WeilKey& k, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    if (k.sym.size() != static_cast<std::size_t>(n_)) throw MathError("Weil key has the wrong dimension");
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

int WeilElement::degree() const {
    if (terms_.empty()) return -1;
    const WeilKey& k = terms_.begin()->first;
    int d = static_cast<int>(k.ext.size());
    for (int e : k.sym) d += 2 * e;
    return d;
}

WeilElement& WeilElement::operator+=(const WeilElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

WeilElement& WeilElement::operator-=(const WeilElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

WeilElement WeilElement::scaled(const Rational& s) const {
    WeilElement r(n_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
}

WeilElement operator*(const WeilElement& a, const WeilElement& b) {
    if (a.n_ != b.n_) throw MathError("Weil elements of different dimensions");
    WeilElement r(a.n_);
    std::vector<int> ext;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            int s = merge_ext(ka.ext, kb.ext, ext);
            if (s == 0) continue;
            WeilKey k{ka.sym, ext};
            for (std::size_t i = 0; i < k.sym.size(); ++i) k.sym[i] += kb.sym[i];
            r.add_term(k, s > 0 ? ca * cb : Rational(-(ca * cb)));
        }
    return r;
}

std::string WeilElement::str(const std::vector<std::string>& names) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string body;
        auto nm = [&](int i) { return names.empty() ? std::to_string(i + 1) : names[static_cast<std::size_t>(i)]; };
        for (std::size_t i = 0; i < k.sym.size(); ++i) {
            if (!k.sym[i]) continue;
            if (!body.empty()) body += "*";
            body += "u_" + nm(static_cast<int>(i));
            if (k.sym[i] > 1) body += "^" + std::to_string(k.sym[i]);
        }
        for (int i : k.ext) {
            if (!body.empty()) body += "*";
            body += "xi_" + nm(i);
        }
        parts.emplace_back(c, body);
    }
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto [c, body] = parts[i];
        if (i) {
            out += sgn(c) < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (body.empty()) out += to_string(c);
        else if (c == 1) out += body;
        else if (c == -1) out += "-" + body;
        else out += (c.get_den() == 1 ? to_string(c) : "(" + to_string(c) + ")") + "*" + body;
    }
    return out;
}

WeilElement weil_d(const LieAlgebraData& g, const WeilElement& w) {
    check_lie(g, w);
    int n = g.dim;
    std::vector<WeilElement> img(static_cast<std::size_t>(2 * n), WeilElement(n));
    for (int k = 0; k < n; ++k) {
        WeilElement& du = img[static_cast<std::size_t>(k)];
        WeilElement& dxi = img[static_cast<std::size_t>(n + k)];
        dxi += WeilElement::u(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rational& c = g.at(i, j, k);
                if (is_zero(c)) continue;
                du += (WeilElement::u(n, i) * WeilElement::xi(n, j)).scaled(c);
                if (i < j) dxi -= (WeilElement::xi(n, i) * WeilElement::xi(n, j)).scaled(c);
            }
    }
    return weil_derivation(w, img, true);
}

WeilElement weil_contraction(const LieAlgebraData& g, const std::vector<Rational>& x, const WeilElement& w) {
    check_lie(g, w);
    int n = g.dim;
    if (x.size() != static_cast<std::size_t>(n)) throw MathError("Lie element has the wrong dimension");
    std::vector<WeilElement> img(static_cast<std::size_t>(2 * n), WeilElement(n));
    for (int k = 0; k < n; ++k) img[static_cast<std::size_t>(n + k)] = WeilElement::constant(n, x[static_cast<std::size_t>(k)]);
    return weil_derivation(w, img, true);
}

WeilElement weil_coadjoint(const LieAlgebraData& g, const std::vector<Rational>& x, const WeilElement& w) {
    check_lie(g, w);
    return weil_derivation(w, coadjoint_images(g, x), false);
}

std::vector<WeilKey> weil_basis(int dim, int degree) {
    std::vector<WeilKey> out;
    for (int q = degree % 2; q <= std::min(degree, dim); q += 2) {
        int p = (degree - q) / 2;
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        std::function<void(int)> subs = [&](int from) {
            if (static_cast<int>(cur.size()) == q) {
                subsets.push_back(cur);
                return;
            }
            for (int i = from; i < dim; ++i) {
                cur.push_back(i);
                subs(i + 1);
                cur.pop_back();
            }
        };
        subs(0);
        std::vector<std::vector<int>> exps;
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        std::function<void(int, int)> comps = [&](int i, int left) {
            if (i == dim - 1 || dim == 0) {
                if (dim == 0) {
                    if (left == 0) exps.push_back(e);
                    return;
                }
                e[static_cast<std::size_t>(i)] = left;
                exps.push_back(e);
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[static_cast<std::size_t>(i)] = v;
                comps(i + 1, left - v);
            }
        };
        comps(0, p);
        for (const auto& s : subsets)
            for (const auto& x : exps) out.push_back(WeilKey{x, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> weil_cohomology(const LieAlgebraData& g, int max_degree, const Caps& caps) {
    std::vector<std::vector<WeilKey>> bases;
    std::vector<std::map<WeilKey, int>> index;
    for (int d = 0; d <= max_degree + 1; ++d) {
        bases.push_back(weil_basis(g.dim, d));
        caps.check(bases.back().size(), "Weil algebra graded piece");
        std::map<WeilKey, int> idx;
        for (std::size_t i = 0; i < bases.back().size(); ++i) idx[bases.back()[i]] = static_cast<int>(i);
        index.push_back(std::move(idx));
    }
    auto r = graded_ranks(bases, [&](std::size_t d, std::size_t i) {
        WeilElement x(g.dim);
        x.add_term(bases[d][i], 1);
        WeilElement dx = weil_d(g, x);
        std::map<int, Rational> col;
        for (const auto& [k, c] : dx.terms()) col[index[d + 1].at(k)] += c;
        return make_sparse(col);
    });
    return r.cohomology;
}

CartanReport weil_cartan(const LieAlgebraData& g, const std::vector<Rational>& x, const WeilElement& w) {
    CartanReport r;
    r.lie_side = weil_coadjoint(g, x, w);
    r.cartan_side = weil_d(g, weil_contraction(g, x, w)) + weil_contraction(g, x, weil_d(g, w));
    r.equal = r.lie_side == r.cartan_side;
    return r;
}

}  // namespace ncalc
