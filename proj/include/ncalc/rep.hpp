#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncalc/based_algebra.hpp"
#include "ncalc/derivation.hpp"
#include "ncalc/errors.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/free_poly.hpp"
#include "ncalc/rational.hpp"

namespace ncalc {

// Variable names compare with digit runs read as numbers, so x_2 < x_10.
struct VarLess {
    bool operator()(const std::string& a, const std::string& b) const;
};

using Monomial = std::map<std::string, int, VarLess>;

// Graded lex: higher degree first, then larger exponent on the earliest variable first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const Monomial& m);
std::string monomial_string(const Monomial& m);

class ComPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    ComPoly() = default;
    ComPoly(const Rational& c);   // NOLINT(implicit)
    ComPoly(int c) : ComPoly(Rational(c)) {}
    static ComPoly var(const std::string& name);
    static ComPoly monomial(const Monomial& m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    void add_term(const Monomial& m, const Rational& c);
    std::vector<std::string> variables() const;

    ComPoly derivative(const std::string& v) const;
    Rational eval(const std::map<std::string, Rational>& point) const;

    ComPoly& operator+=(const ComPoly& o);
    ComPoly& operator-=(const ComPoly& o);
    ComPoly& operator*=(const ComPoly& o);
    ComPoly scaled(const Rational& s) const;
    friend ComPoly operator+(ComPoly a, const ComPoly& b) { return a += b; }
    friend ComPoly operator-(ComPoly a, const ComPoly& b) { return a -= b; }
    friend ComPoly operator*(ComPoly a, const ComPoly& b) { return a *= b; }
    friend ComPoly operator-(const ComPoly& a) { return a.scaled(-1); }
    friend bool operator==(const ComPoly& a, const ComPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ComPoly& a, const ComPoly& b) { return !(a == b); }

    std::string str() const;

private:
    Terms terms_;
};

inline bool is_zero(const ComPoly& p) { return p.is_zero(); }
std::string to_string(const ComPoly& p);

// Exterior algebra over ComPoly on one odd symbol per variable. The tag fixes how the
// symbol prints: "d" for forms, "D" (partial derivative) for polyvectors.
struct ExtKey {
    Monomial mono;
    std::vector<std::string> syms;   // strictly increasing under VarLess
    friend bool operator==(const ExtKey& a, const ExtKey& b) { return a.mono == b.mono && a.syms == b.syms; }
};
struct ExtKeyLess {
    bool operator()(const ExtKey& a, const ExtKey& b) const;
};

template <char Tag>
class Exterior {
public:
    using Terms = std::map<ExtKey, Rational, ExtKeyLess>;

    Exterior() = default;
    Exterior(const ComPoly& f);   // NOLINT(implicit)
    Exterior(int c) : Exterior(ComPoly(c)) {}
    static Exterior symbol(const std::string& v);
    // f * sym_1 ^ ... ^ sym_k in the given order
    static Exterior term(const ComPoly& f, const std::vector<std::string>& syms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;   // of the first term, -1 for zero
    bool homogeneous() const;
    // coefficient of the sorted symbol set
    ComPoly coefficient(const std::vector<std::string>& syms) const;
    std::map<std::vector<std::string>, ComPoly> by_symbols() const;
    void add_term(const ExtKey& k, const Rational& c);

    Exterior& operator+=(const Exterior& o);
    Exterior& operator-=(const Exterior& o);
    Exterior scaled(const Rational& s) const;
    friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
    friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
    friend Exterior operator-(const Exterior& a) { return a.scaled(-1); }
    Exterior& operator*=(const Exterior& o);   // wedge
    friend Exterior operator*(Exterior a, const Exterior& b) { return a *= b; }
    friend bool operator==(const Exterior& a, const Exterior& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Exterior& a, const Exterior& b) { return !(a == b); }

    std::string str() const;

private:
    Terms terms_;
};

using ComForm = Exterior<'d'>;
using PolyVector = Exterior<'D'>;

template <char Tag>
bool is_zero(const Exterior<Tag>& e) { return e.is_zero(); }
template <char Tag>
std::string to_string(const Exterior<Tag>& e) { return e.str(); }

ComForm exterior_d(const ComForm& w);

// n x n matrix over a commutative (or super-commutative) coefficient ring
template <class C>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}
    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = C(1);
        return m;
    }

    int size() const { return n_; }
    C& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const C& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    C trace() const {
        C t{};
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }
    template <class F>
    auto map(F f) const {
        Matrix<decltype(f(std::declval<C>()))> r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check(b);
        Matrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (is_zero(a.at(i, k))) continue;
                for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    Matrix scaled(const C& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = s * x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check(const Matrix& o) const {
        if (o.n_ != n_) throw MathError("matrix sizes differ");
    }
    int n_ = 0;
    std::vector<C> e_;
};

using SymbolicMatrix = Matrix<ComPoly>;

// x_{g,i,j}, all indices 1-based in the name: generator 0, row 0, column 1 -> "x_1_1_2"
std::string rep_var(int g, int i, int j);
SymbolicMatrix generic_matrix(int g, int n, const std::string& prefix = "x");

template <class C>
Matrix<C> eval_free(const FreePoly& a, const std::vector<Matrix<C>>& point, int n) {
    if (static_cast<int>(point.size()) != a.generator_count()) throw MathError("point has wrong generator count");
    for (const auto& m : point)
        if (m.size() != n) throw MathError("point matrices have wrong size");
    Matrix<C> r(n);
    for (const auto& [w, c] : a.terms()) {
        Matrix<C> m = Matrix<C>::identity(n);
        for (int g : w) m = m * point[static_cast<std::size_t>(g)];
        r += m.scaled(C(c));
    }
    return r;
}

SymbolicMatrix rep_evaluate(const FreePoly& a, int n);
ComPoly trace_function(const FreePoly& a, int n);
// relations evaluated at the point all vanish
bool rep_point_satisfies(const std::vector<FreePoly>& relations, const std::vector<SymbolicMatrix>& point);

// tr(a0^ da1^ ... dak^) summed over the terms; free source only
ComForm form_to_rep(const BasedAlgebra& a, const NCForm& w, int n);
ComForm form_to_rep(const BasedAlgebra& a, const DRClass& w, int n);

// sum_{g,i,j} theta(x_g)^_{ij} D/Dx_{g,i,j}
PolyVector derivation_to_vector_field(const BasedAlgebra& a, const DerivationSpec& theta, int n);
// vector field (degree-1 polyvector) applied to a function
ComPoly apply_vector_field(const PolyVector& v, const ComPoly& f);

PolyVector schouten_bracket(const PolyVector& p, const PolyVector& q);
// <df ^ dg, pi>, with <Da ^ Db, df ^ dg> = f_a g_b - f_b g_a
ComPoly poisson_from_bivector(const PolyVector& pi, const ComPoly& f, const ComPoly& g);

struct BivectorJacobiReport {
    ComPoly jacobi_defect;       // {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
    ComPoly schouten_pairing;    // <[pi,pi], df ^ dg ^ dh>
    bool consistent = false;     // defect == jacobi_constant * pairing
};
inline const Rational jacobi_constant = Rational(1, 2);
BivectorJacobiReport bivector_jacobi(const PolyVector& pi, const ComPoly& f, const ComPoly& g, const ComPoly& h);

// Element of A (x) A for free A; left slot, right slot
class TensorElem {
public:
    using Terms = std::map<std::pair<Word, Word>, Rational>;

    explicit TensorElem(int gens = 0) : gens_(gens) {}
    static TensorElem pure(const FreePoly& a, const FreePoly& b);

    int generator_count() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& l, const Word& r, const Rational& c);

    // u (a (x) b) v = ua (x) bv
    TensorElem outer(const FreePoly& u, const FreePoly& v) const;
    // apply an endomorphism (generator images) to both slots
    TensorElem substitute(const std::vector<FreePoly>& images) const;

    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem scaled(const Rational& s) const;
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.gens_ == b.gens_ && a.terms_ == b.terms_; }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

    std::string str() const;

private:
    int gens_;
    Terms terms_;
};

using DoubleDerivationValue = TensorElem;
using JacobiMatrix = std::vector<std::vector<TensorElem>>;   // [i][j] = D_i(F_j)

DoubleDerivationValue double_derivation(int i, const FreePoly& a);
JacobiMatrix jacobi_matrix(const std::vector<FreePoly>& f);
// the endomorphism x_l -> F_l(G_1..G_r), i.e. apply F first, then G
std::vector<FreePoly> compose_endomorphisms(const std::vector<FreePoly>& g, const std::vector<FreePoly>& f);
FreePoly substitute(const FreePoly& a, const std::vector<FreePoly>& images);
// (DG o DF)_{kl} = sum_i sum_{u (x) v in D_i F_l} G(u) D_k(G_i) G(v)
JacobiMatrix jacobi_compose(const std::vector<FreePoly>& g, const JacobiMatrix& dg, const JacobiMatrix& df);

struct JacobiDifferentialReport {
    bool equal = false;
    std::vector<SymbolicMatrix> dual_side;     // eps-part of F(X + eps Z)
    std::vector<SymbolicMatrix> jacobi_side;   // sum_i rho(D'_i F_j) Z_i rho(D''_i F_j)
};
// Z is the generic symbolic tangent vector with entries z_{g,i,j}
JacobiDifferentialReport jacobi_differential_check(const std::vector<FreePoly>& f, const std::vector<SymbolicMatrix>& point,
                                                   const Caps& caps = default_caps());

}  // namespace ncalc
