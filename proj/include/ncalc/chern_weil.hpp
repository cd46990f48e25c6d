#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ncalc/errors.hpp"
#include "ncalc/rational.hpp"
#include "ncalc/structure_algebra.hpp"
#include "ncalc/word.hpp"

namespace ncalc {

// Letters with integer degrees; words multiply by concatenation with Koszul signs.
struct SuperAlphabet {
    std::vector<int> degrees;
    std::vector<std::string> names;

    int size() const { return static_cast<int>(degrees.size()); }
    int degree(int letter) const { return degrees.at(static_cast<std::size_t>(letter)); }
    int degree(const Word& w) const;
    std::string word_string(const Word& w, const std::string& sep = " ") const;
};
using AlphabetPtr = std::shared_ptr<const SuperAlphabet>;

// Rotation sign convention: x.u == (-1)^{|x||u|} u.x. Returns (0, {}) when the word equals
// minus itself, else (sign, least rotation) with w == sign * rep.
std::pair<int, Word> super_canonical(const SuperAlphabet& a, const Word& w);

template <class C>
class SuperPolyT {
public:
    using Terms = std::map<Word, C, LenLex>;

    SuperPolyT() = default;
    explicit SuperPolyT(AlphabetPtr a) : alph_(std::move(a)) {}
    static SuperPolyT constant(AlphabetPtr a, const C& c) { return monomial(std::move(a), {}, c); }
    static SuperPolyT letter(AlphabetPtr a, int l) { return monomial(std::move(a), Word{l}, C(1)); }
    static SuperPolyT monomial(AlphabetPtr a, const Word& w, const C& c = C(1)) {
        SuperPolyT p(std::move(a));
        p.add_term(w, c);
        return p;
    }

    const AlphabetPtr& alphabet() const { return alph_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const C& c) {
        if (ncalc::is_zero(c)) return;
        for (int l : w)
            if (l < 0 || l >= alph_->size()) throw MathError("letter out of range");
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (ncalc::is_zero(it->second)) terms_.erase(it);
        }
    }
    // degree of the homogeneous element, -1 for zero; throws if mixed
    int degree() const {
        int d = -1;
        for (const auto& [w, c] : terms_) {
            int e = alph_->degree(w);
            if (d >= 0 && e != d) throw MathError("element is not homogeneous");
            d = e;
        }
        return d;
    }
    std::map<int, SuperPolyT> homogeneous_parts() const {
        std::map<int, SuperPolyT> out;
        for (const auto& [w, c] : terms_) {
            auto it = out.try_emplace(alph_->degree(w), SuperPolyT(alph_)).first;
            it->second.add_term(w, c);
        }
        return out;
    }

    SuperPolyT& operator+=(const SuperPolyT& o) {
        adopt(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    SuperPolyT& operator-=(const SuperPolyT& o) {
        adopt(o);
        for (const auto& [w, c] : o.terms_) add_term(w, C() - c);
        return *this;
    }
    SuperPolyT scaled(const C& s) const {
        SuperPolyT r(alph_);
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }
    friend SuperPolyT operator+(SuperPolyT a, const SuperPolyT& b) { return a += b; }
    friend SuperPolyT operator-(SuperPolyT a, const SuperPolyT& b) { return a -= b; }
    friend SuperPolyT operator-(const SuperPolyT& a) { return a.scaled(C() - C(1)); }
    friend SuperPolyT operator*(const SuperPolyT& a, const SuperPolyT& b) {
        SuperPolyT r(a.alph_ ? a.alph_ : b.alph_);
        for (const auto& [u, c1] : a.terms_)
            for (const auto& [v, c2] : b.terms_) r.add_term(concat(u, v), c1 * c2);
        return r;
    }
    friend bool operator==(const SuperPolyT& a, const SuperPolyT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SuperPolyT& a, const SuperPolyT& b) { return !(a == b); }

    // plain words "a1*b1"; cyclic = true prints each word as cyc(a1 b1)
    std::string str(bool cyclic = false) const;

private:
    void adopt(const SuperPolyT& o) {
        if (!alph_) alph_ = o.alph_;
    }

    AlphabetPtr alph_;
    Terms terms_;
};

using SuperPoly = SuperPolyT<Rational>;

// Image in the quotient by graded commutators, written on canonical words.
SuperPoly supercyclic_project(const SuperPoly& p);
// Odd derivation given by letter images (each of degree |letter| + 1), with Koszul signs.
SuperPoly odd_derivation(const SuperPoly& p, const std::vector<SuperPoly>& images);
SuperPoly power(const SuperPoly& p, int k);

// ---- Noncommutative Weil algebra of a finite-dimensional algebra ----
// Letters 0..m-1 are lambda_-^k (degree 1, printed a<k>), m..2m-1 are lambda_+^k (degree 2, b<k>),
// lambda^k the dual basis of the (unit-first) basis of A.
AlphabetPtr wnc_alphabet(const StructureAlgebra& a);
using WncElement = SuperPoly;
WncElement wnc_d(const StructureAlgebra& a, const WncElement& u);
// cohomology dims of (W_nc(A), d) in degrees 0..max_degree
std::vector<int> wnc_cohomology(const StructureAlgebra& a, int max_degree, const Caps& caps = default_caps());

struct HodgeQuotient {
    int p = 0;
    std::vector<std::vector<Word>> basis;   // per degree, canonical words with < p plus-letters
    std::vector<int> dims, ranks, cohomology;
    AlphabetPtr alphabet;
};
// supercommutator quotient of W_nc(A) / F^p, F^p the words with at least p plus-letters
HodgeQuotient hodge_quotient(const StructureAlgebra& a, int p, int max_degree, const Caps& caps = default_caps());

// ---- Gelfand-Smirnov calculus on cyclic words in a_j (degree 1), b_j (degree 2) ----
AlphabetPtr gs_alphabet(int n);
using GSElement = SuperPoly;   // always kept projected
int gs_pairs(const GSElement& p);
GSElement gs_class(const SuperPoly& p);
GSElement gs_d(const GSElement& p);   // a_j -> b_j, b_j -> 0
// sum over occurrences: rotate the letter to the front, keep the rest with the rotation sign
GSElement gs_cyclic_derivative(const GSElement& p, int letter);
// (-1)^{|P|} sum_j dP/da_j dQ/db_j + (-1)^{|P||Q|} dQ/da_j dP/db_j, extended bilinearly
GSElement gs_bracket(const GSElement& p, const GSElement& q);
// sum_j b_j^2
GSElement gs_laplacian(int n);
GSElement gs_chern(int k, int n);
// k! times the displayed transgression a * sum_j sigma_{j,k-1-j}(a^2, b) / (k + j) / (k-1)!, so d ch1_k = ch_k
GSElement gs_transgression(int k, int n = 1);
// same without the k! factor; its differential is ch_k / k!
GSElement gs_transgression_unnormalized(int k, int n = 1);

struct GSChernReport {
    int k_max = 0, n = 0;
    bool closed = false;              // d ch_k = 0 for all k
    bool brackets_vanish = false;     // {ch_k, ch_l} = 0
    bool transgression = false;       // d ch1_k = ch_k
};
GSChernReport gs_chern_report(int k_max, int n);

// ---- Free DGA k<a_j, da_j> and Chern-Simons forms ----
// letters a<j> (degree 1) and da<j> (degree 2); closed = true makes d a_j = 0
AlphabetPtr dga_alphabet(int r);
using DGAElement = SuperPoly;
DGAElement dga_d(const DGAElement& u, bool closed = false);

struct CurvatureReport {
    DGAElement curvature;        // F = d a + a^2
    DGAElement bianchi_defect;   // dF + aF - Fa
    bool bianchi = false;
};
CurvatureReport dga_curvature(const DGAElement& a, bool closed = false);

// a F_t^{n-1} / (n-1)! with a_t = t a, F_t = t da + t^2 a^2, one pair
SuperPolyT<TPoly> chern_simons_integrand(int n);
SuperPoly integrate_t(const SuperPolyT<TPoly>& p);   // t^m -> 1/(m+1)
struct ChernSimonsReport {
    DGAElement cs;                // class of the integral in the supercommutator quotient
    DGAElement d_cs;
    DGAElement target;            // class of F^n / n!
    bool ok = false;
};
ChernSimonsReport chern_simons_class(int n);

// ---- Commutative Weil algebra Sym(g*) (x) Lambda(g*) ----
// u^k = lambda_+ (degree 2), xi^k = lambda_- (degree 1)
struct WeilKey {
    std::vector<int> sym;   // exponents of u^0..u^{n-1}
    std::vector<int> ext;   // strictly increasing xi indices
    friend bool operator<(const WeilKey& a, const WeilKey& b) {
        int da = 0, db = 0;
        for (int e : a.sym) da += 2 * e;
        for (int e : b.sym) db += 2 * e;
        da += static_cast<int>(a.ext.size());
        db += static_cast<int>(b.ext.size());
        if (da != db) return da < db;
        if (a.ext != b.ext) return a.ext < b.ext;
        return a.sym > b.sym;
    }
    friend bool operator==(const WeilKey& a, const WeilKey& b) { return a.sym == b.sym && a.ext == b.ext; }
};

class WeilElement {
public:
    using Terms = std::map<WeilKey, Rational>;

    explicit WeilElement(int dim = 0) : n_(dim) {}
    static WeilElement constant(int dim, const Rational& c);
    static WeilElement u(int dim, int k);
    static WeilElement xi(int dim, int k);

    int dim() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const WeilKey& k, const Rational& c);
    int degree() const;   // of the first term

    WeilElement& operator+=(const WeilElement& o);
    WeilElement& operator-=(const WeilElement& o);
    WeilElement scaled(const Rational& s) const;
    friend WeilElement operator+(WeilElement a, const WeilElement& b) { return a += b; }
    friend WeilElement operator-(WeilElement a, const WeilElement& b) { return a -= b; }
    friend WeilElement operator*(const WeilElement& a, const WeilElement& b);
    friend bool operator==(const WeilElement& a, const WeilElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const WeilElement& a, const WeilElement& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int n_;
    Terms terms_;
};

// d xi^k = u^k - sum_{i<j} c_ij^k xi^i xi^j,  d u^k = sum_{i,j} c_ij^k u^i xi^j
WeilElement weil_d(const LieAlgebraData& g, const WeilElement& w);
// contraction by x in g: xi^k -> x^k, u -> 0, odd derivation
WeilElement weil_contraction(const LieAlgebraData& g, const std::vector<Rational>& x, const WeilElement& w);
// coadjoint action: lambda -> -lambda o ad x on both kinds of generators, even derivation
WeilElement weil_coadjoint(const LieAlgebraData& g, const std::vector<Rational>& x, const WeilElement& w);
std::vector<WeilKey> weil_basis(int dim, int degree);
std::vector<int> weil_cohomology(const LieAlgebraData& g, int max_degree, const Caps& caps = default_caps());

struct CartanReport {
    WeilElement lie_side;      // coadjoint action
    WeilElement cartan_side;   // d i_x + i_x d
    bool equal = false;
};
CartanReport weil_cartan(const LieAlgebraData& g, const std::vector<Rational>& x, const WeilElement& w);

}  // namespace ncalc
