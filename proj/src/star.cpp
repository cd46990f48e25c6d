#include "ncalc/star.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncalc/errors.hpp"

namespace ncalc {

namespace {

Rational factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

Rational binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// n (n-1) ... (n-k+1)
Rational falling(int n, int k) {
    if (k > n) return 0;
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return Rational(r);
}

template <class Map>
void add_into(Map& m, const typename Map::key_type& k, const TPoly& c) {
    if (c.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

void check_exps(const std::vector<int>& e, int pairs) {
    if (e.size() != static_cast<std::size_t>(2 * pairs)) throw MathError("exponent vector has wrong length");
    for (int v : e)
        if (v < 0) throw MathError("negative exponent");
}

std::string coeff_prefix(const Rational& r, bool has_factors) {
    if (!has_factors) return to_string(r);
    if (r == 1) return "";
    if (r == -1) return "-";
    if (r.get_den() == 1) return to_string(r) + "*";
    return "(" + to_string(r) + ")*";
}

std::string t_factor(unsigned k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

std::string letter_power(const std::string& name, int e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

struct PrintTerm {
    unsigned tpow;
    int degree;
    std::vector<int> exps;
    Rational coeff;
    std::string mono;
};

std::string join_terms(std::vector<PrintTerm> ts) {
    if (ts.empty()) return "0";
    std::sort(ts.begin(), ts.end(), [](const PrintTerm& a, const PrintTerm& b) {
        if (a.tpow != b.tpow) return a.tpow < b.tpow;
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.exps > b.exps;
    });
    std::string out;
    bool first = true;
    for (const auto& t : ts) {
        std::string factors = t_factor(t.tpow);
        if (!t.mono.empty()) factors += (factors.empty() ? "" : "*") + t.mono;
        Rational c = t.coeff;
        if (!first) {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        out += coeff_prefix(c, !factors.empty()) + factors;
        first = false;
    }
    return out;
}

std::string phase_mono(const std::vector<int>& e, int n) {
    std::string s;
    for (int i = 0; i < 2 * n; ++i) {
        if (e[static_cast<std::size_t>(i)] == 0) continue;
        std::string name = (i < n ? "x" : "y") + std::to_string(i % n + 1);
        if (!s.empty()) s += "*";
        s += letter_power(name, e[static_cast<std::size_t>(i)]);
    }
    return s;
}

std::string weyl_mono(const std::vector<int>& e, int n) {
    std::string s;
    for (int i = 0; i < n; ++i)
        for (int side = 0; side < 2; ++side) {
            int ex = e[static_cast<std::size_t>(2 * i + side)];
            if (ex == 0) continue;
            if (!s.empty()) s += "*";
            s += letter_power((side == 0 ? "p" : "q") + std::to_string(i + 1), ex);
        }
    return s;
}

template <class Terms, class MonoFn>
std::vector<PrintTerm> print_terms(const Terms& terms, MonoFn mono) {
    std::vector<PrintTerm> out;
    for (const auto& [e, c] : terms) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        for (const auto& [k, r] : c.coeffs()) out.push_back({k, deg, e, r, mono(e)});
    }
    return out;
}

// one pair: x^a y^b * x^c y^d as map (i, j) -> TPoly for x^i y^j
using PairProduct = std::map<std::pair<int, int>, TPoly>;

PairProduct moyal_pair(int a, int b, int c, int d) {
    PairProduct out;
    int nmax = std::min(a + b, c + d);
    Rational half_pow = 1;
    for (int n = 0; n <= nmax; ++n) {
        Rational pref = half_pow / factorial(n);
        for (int k = 0; k <= n; ++k) {
            // d_x^{n-k} d_y^k on the left, d_y^{n-k} d_x^k on the right
            int lx = n - k, ly = k, rx = k, ry = n - k;
            Rational coef = falling(a, lx) * falling(b, ly) * falling(c, rx) * falling(d, ry);
            if (ncalc::is_zero(coef)) continue;
            coef *= pref * binom(n, k);
            if (k % 2 == 1) coef = -coef;
            add_into(out, {a - lx + c - rx, b - ly + d - ry}, TPoly::t_power(static_cast<unsigned>(n), coef));
        }
        half_pow /= 2;
    }
    return out;
}

// p^a q^b . p^c q^d
PairProduct weyl_pair(int a, int b, int c, int d) {
    PairProduct out;
    for (int k = 0; k <= std::min(b, c); ++k) {
        Rational coef = factorial(k) * binom(b, k) * binom(c, k);
        if (k % 2 == 1) coef = -coef;
        add_into(out, {a + c - k, b + d - k}, TPoly::t_power(static_cast<unsigned>(k), coef));
    }
    return out;
}

// combine per-pair products into full terms; slot(i, side) gives the exponent index
template <class Terms, class Slot>
void expand_pairs(const std::vector<PairProduct>& per_pair, const TPoly& scale, int n, Slot slot, Terms& out) {
    std::vector<std::pair<std::vector<int>, TPoly>> acc{{std::vector<int>(static_cast<std::size_t>(2 * n), 0), scale}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<std::vector<int>, TPoly>> next;
        for (const auto& [e, c] : acc)
            for (const auto& [ij, pc] : per_pair[static_cast<std::size_t>(i)]) {
                auto e2 = e;
                e2[static_cast<std::size_t>(slot(i, 0))] = ij.first;
                e2[static_cast<std::size_t>(slot(i, 1))] = ij.second;
                next.emplace_back(std::move(e2), c * pc);
            }
        acc = std::move(next);
    }
    for (const auto& [e, c] : acc) add_into(out, e, c);
}

// sum over all words in a p's and b q's, normal ordered
const PairProduct& word_sum(int a, int b) {
    static std::map<std::pair<int, int>, PairProduct> cache;
    auto key = std::make_pair(a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    PairProduct out;
    if (a == 0 && b == 0) {
        out[{0, 0}] = 1;
    } else {
        auto prepend = [&out](int la, int lb, const PairProduct& rest) {
            for (const auto& [ij, c] : rest)
                for (const auto& [kl, c2] : weyl_pair(la, lb, ij.first, ij.second)) add_into(out, kl, c * c2);
        };
        if (a > 0) prepend(1, 0, word_sum(a - 1, b));
        if (b > 0) prepend(0, 1, word_sum(a, b - 1));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

PhasePoly PhasePoly::x(int pairs, int i) {
    std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(pairs, e);
}

PhasePoly PhasePoly::y(int pairs, int i) {
    std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
    e.at(static_cast<std::size_t>(pairs + i)) = 1;
    return monomial(pairs, e);
}

PhasePoly PhasePoly::constant(int pairs, const TPoly& c) {
    return monomial(pairs, std::vector<int>(static_cast<std::size_t>(2 * pairs), 0), c);
}

PhasePoly PhasePoly::monomial(int pairs, const Exponents& e, const TPoly& c) {
    PhasePoly p(pairs);
    p.add_term(e, c);
    return p;
}

void PhasePoly::add_term(const Exponents& e, const TPoly& c) {
    check_exps(e, n_);
    add_into(terms_, e, c);
}

int PhasePoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

PhasePoly PhasePoly::derivative(int var) const {
    if (var < 0 || var >= 2 * n_) throw MathError("variable index out of range");
    PhasePoly r(n_);
    for (const auto& [e, c] : terms_) {
        int ex = e[static_cast<std::size_t>(var)];
        if (ex == 0) continue;
        auto e2 = e;
        --e2[static_cast<std::size_t>(var)];
        add_into(r.terms_, e2, c * TPoly(Rational(ex)));
    }
    return r;
}

PhasePoly PhasePoly::t_coefficient(unsigned k) const {
    PhasePoly r(n_);
    for (const auto& [e, c] : terms_) add_into(r.terms_, e, TPoly(c.coeff(k)));
    return r;
}

PhasePoly PhasePoly::truncate_weight(int w) const {
    PhasePoly r(n_);
    for (const auto& [e, c] : terms_) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        for (const auto& [k, q] : c.coeffs())
            if (deg + 2 * static_cast<int>(k) <= w) add_into(r.terms_, e, TPoly::t_power(k, q));
    }
    return r;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
    if (o.n_ != n_) throw MathError("phase space layouts differ");
    for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
    return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
    if (o.n_ != n_) throw MathError("phase space layouts differ");
    for (const auto& [e, c] : o.terms_) add_into(terms_, e, -c);
    return *this;
}

PhasePoly PhasePoly::scaled(const TPoly& s) const {
    PhasePoly r(n_);
    for (const auto& [e, c] : terms_) add_into(r.terms_, e, c * s);
    return r;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    if (a.n_ != b.n_) throw MathError("phase space layouts differ");
    PhasePoly r(a.n_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) {
            auto e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            add_into(r.terms_, e, c1 * c2);
        }
    return r;
}

std::string PhasePoly::str() const {
    int n = n_;
    return join_terms(print_terms(terms_, [n](const std::vector<int>& e) { return phase_mono(e, n); }));
}

std::string PhasePoly::str_by_t() const {
    unsigned top = 0;
    for (const auto& [e, c] : terms_) top = std::max(top, static_cast<unsigned>(std::max(c.degree(), 0)));
    std::ostringstream os;
    for (unsigned k = 0; k <= top; ++k) {
        PhasePoly slice = t_coefficient(k);
        if (slice.is_zero() && k > 0) continue;
        os << "t^" << k << ": " << slice.str() << "\n";
    }
    return os.str();
}

WeylElement WeylElement::p(int pairs, int i) {
    std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
    e.at(static_cast<std::size_t>(2 * i)) = 1;
    return monomial(pairs, e);
}

WeylElement WeylElement::q(int pairs, int i) {
    std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
    e.at(static_cast<std::size_t>(2 * i + 1)) = 1;
    return monomial(pairs, e);
}

WeylElement WeylElement::constant(int pairs, const TPoly& c) {
    return monomial(pairs, std::vector<int>(static_cast<std::size_t>(2 * pairs), 0), c);
}

WeylElement WeylElement::monomial(int pairs, const Exponents& e, const TPoly& c) {
    WeylElement w(pairs);
    w.add_term(e, c);
    return w;
}

void WeylElement::add_term(const Exponents& e, const TPoly& c) {
    check_exps(e, n_);
    add_into(terms_, e, c);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (o.n_ != n_) throw MathError("pair counts differ");
    for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    if (o.n_ != n_) throw MathError("pair counts differ");
    for (const auto& [e, c] : o.terms_) add_into(terms_, e, -c);
    return *this;
}

WeylElement WeylElement::scaled(const TPoly& s) const {
    WeylElement r(n_);
    for (const auto& [e, c] : terms_) add_into(r.terms_, e, c * s);
    return r;
}

std::string WeylElement::str() const {
    int n = n_;
    return join_terms(print_terms(terms_, [n](const std::vector<int>& e) { return weyl_mono(e, n); }));
}

PhasePoly moyal_star(const PhasePoly& f, const PhasePoly& g) {
    if (f.pairs() != g.pairs()) throw MathError("phase space layouts differ");
    int n = f.pairs();
    PhasePoly r(n);
    PhasePoly::Terms out;
    auto slot = [n](int i, int side) { return side == 0 ? i : n + i; };
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) {
            std::vector<PairProduct> pp;
            for (int i = 0; i < n; ++i) {
                auto xi = static_cast<std::size_t>(i), yi = static_cast<std::size_t>(n + i);
                pp.push_back(moyal_pair(e1[xi], e1[yi], e2[xi], e2[yi]));
            }
            expand_pairs(pp, c1 * c2, n, slot, out);
        }
    for (const auto& [e, c] : out) r.add_term(e, c);
    return r;
}

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
    if (u.pairs() != v.pairs()) throw MathError("pair counts differ");
    int n = u.pairs();
    WeylElement::Terms out;
    auto slot = [](int i, int side) { return 2 * i + side; };
    for (const auto& [e1, c1] : u.terms())
        for (const auto& [e2, c2] : v.terms()) {
            std::vector<PairProduct> pp;
            for (int i = 0; i < n; ++i) {
                auto a = static_cast<std::size_t>(2 * i), b = a + 1;
                pp.push_back(weyl_pair(e1[a], e1[b], e2[a], e2[b]));
            }
            expand_pairs(pp, c1 * c2, n, slot, out);
        }
    WeylElement r(n);
    for (const auto& [e, c] : out) r.add_term(e, c);
    return r;
}

WeylElement pbw_symmetrize(const PhasePoly& f) {
    int n = f.pairs();
    WeylElement::Terms out;
    auto slot = [](int i, int side) { return 2 * i + side; };
    for (const auto& [e, c] : f.terms()) {
        std::vector<PairProduct> pp;
        for (int i = 0; i < n; ++i) {
            int a = e[static_cast<std::size_t>(i)], b = e[static_cast<std::size_t>(n + i)];
            PairProduct avg = word_sum(a, b);
            Rational inv = 1 / binom(a + b, a);
            for (auto& [k, v] : avg) v *= TPoly(inv);
            pp.push_back(std::move(avg));
        }
        expand_pairs(pp, c, n, slot, out);
    }
    WeylElement r(n);
    for (const auto& [e, c] : out) r.add_term(e, c);
    return r;
}

PhasePoly pbw_inverse(const WeylElement& w) {
    int n = w.pairs();
    PhasePoly f(n);
    WeylElement rest = w;
    while (!rest.is_zero()) {
        const WeylElement::Exponents* top = nullptr;
        int best = -1;
        for (const auto& [e, c] : rest.terms()) {
            int d = std::accumulate(e.begin(), e.end(), 0);
            if (d > best) best = d, top = &e;
        }
        std::vector<int> pe(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            pe[static_cast<std::size_t>(i)] = (*top)[static_cast<std::size_t>(2 * i)];
            pe[static_cast<std::size_t>(n + i)] = (*top)[static_cast<std::size_t>(2 * i + 1)];
        }
        TPoly c = rest.terms().at(*top);
        PhasePoly m = PhasePoly::monomial(n, pe, c);
        f += m;
        rest -= pbw_symmetrize(m);
    }
    return f;
}

PhasePoly poisson_leading_term(const StarProduct& star, const PhasePoly& f, const PhasePoly& g) {
    PhasePoly comm = star(f, g) - star(g, f);
    PhasePoly r(f.pairs());
    for (const auto& [e, c] : comm.terms()) {
        if (!ncalc::is_zero(c.at_zero())) throw MathError("commutator is not divisible by t");
        r.add_term(e, TPoly(c.coeff(1)));
    }
    return r;
}

PhasePoly canonical_poisson(const PhasePoly& f, const PhasePoly& g) {
    if (f.pairs() != g.pairs()) throw MathError("phase space layouts differ");
    int n = f.pairs();
    PhasePoly r(n);
    for (int i = 0; i < n; ++i) {
        r += f.derivative(i) * g.derivative(n + i);
        r -= f.derivative(n + i) * g.derivative(i);
    }
    return r;
}

namespace {

PhasePoly exp_truncated(const PhasePoly& u, int w) {
    PhasePoly sum = PhasePoly::constant(u.pairs(), 1);
    PhasePoly power = sum;
    for (int k = 1; k <= w; ++k) {
        power = (power * u).truncate_weight(w);
        sum += power.scaled(TPoly(1 / factorial(k)));
    }
    return sum.truncate_weight(w);
}

WeylElement truncate_weyl(const WeylElement& w, int cap) {
    WeylElement r(w.pairs());
    for (const auto& [e, c] : w.terms()) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        for (const auto& [k, q] : c.coeffs())
            if (deg + 2 * static_cast<int>(k) <= cap) r.add_term(e, TPoly::t_power(k, q));
    }
    return r;
}

}  // namespace

HeisenbergReport heisenberg_check(const PhasePoly& u, const PhasePoly& v, int max_weight) {
    for (const PhasePoly* p : {&u, &v})
        for (const auto& [e, c] : p->terms())
            if (std::accumulate(e.begin(), e.end(), 0) != 1 || c.degree() != 0)
                throw MathError("heisenberg check needs linear elements without t");
    PhasePoly eu = exp_truncated(u, max_weight), ev = exp_truncated(v, max_weight);
    PhasePoly bracket = canonical_poisson(u, v);
    PhasePoly exponent = u + v + bracket.scaled(TPoly::t_power(1, Rational(1, 2)));
    PhasePoly rhs = exp_truncated(exponent, max_weight);

    HeisenbergReport rep;
    rep.star_side = moyal_star(eu, ev).truncate_weight(max_weight) == rhs;
    WeylElement lhs_w = truncate_weyl(weyl_mul(pbw_symmetrize(eu), pbw_symmetrize(ev)), max_weight);
    rep.weyl_side = lhs_w == truncate_weyl(pbw_symmetrize(rhs), max_weight);
    return rep;
}

}  // namespace ncalc
