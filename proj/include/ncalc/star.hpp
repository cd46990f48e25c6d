#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncalc/rational.hpp"

namespace ncalc {

// Commutative polynomial in x_1..x_n, y_1..y_n with coefficients in Q[t].
// Exponent vectors are laid out (x_1..x_n, y_1..y_n).
class PhasePoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, TPoly>;

    explicit PhasePoly(int pairs = 1) : n_(pairs) {}
    static PhasePoly x(int pairs, int i);
    static PhasePoly y(int pairs, int i);
    static PhasePoly constant(int pairs, const TPoly& c);
    static PhasePoly monomial(int pairs, const Exponents& e, const TPoly& c = 1);

    int pairs() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const TPoly& c);
    int degree() const;   // polynomial degree, t not counted

    PhasePoly derivative(int var) const;
    PhasePoly t_coefficient(unsigned k) const;
    // keeps terms with polynomial degree + 2 * (t-degree) <= w
    PhasePoly truncate_weight(int w) const;

    PhasePoly& operator+=(const PhasePoly& o);
    PhasePoly& operator-=(const PhasePoly& o);
    PhasePoly scaled(const TPoly& s) const;
    friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
    friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
    friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
    friend bool operator==(const PhasePoly& a, const PhasePoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const PhasePoly& a, const PhasePoly& b) { return !(a == b); }

    std::string str() const;          // x1*y1 + (1/2)*t
    std::string str_by_t() const;     // one line per power of t

private:
    int n_;
    Terms terms_;
};

// Element of the Weyl algebra p_i q_i - q_i p_i = t in normal form: per pair p^a q^b,
// pairs in index order. Exponents are laid out (a_1, b_1, a_2, b_2, ...).
class WeylElement {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, TPoly>;

    explicit WeylElement(int pairs = 1) : n_(pairs) {}
    static WeylElement p(int pairs, int i);
    static WeylElement q(int pairs, int i);
    static WeylElement constant(int pairs, const TPoly& c);
    static WeylElement monomial(int pairs, const Exponents& e, const TPoly& c = 1);

    int pairs() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const TPoly& c);

    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    WeylElement scaled(const TPoly& s) const;
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    std::string str() const;   // p1*q1 - t

private:
    int n_;
    Terms terms_;
};

PhasePoly moyal_star(const PhasePoly& f, const PhasePoly& g);
WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);

// x_i -> p_i, y_i -> q_i, monomials sent to the average over all orderings of their letters
WeylElement pbw_symmetrize(const PhasePoly& f);
PhasePoly pbw_inverse(const WeylElement& w);

using StarProduct = std::function<PhasePoly(const PhasePoly&, const PhasePoly&)>;
// (f*g - g*f)/t at t = 0; throws MathError if the commutator is not divisible by t
PhasePoly poisson_leading_term(const StarProduct& star, const PhasePoly& f, const PhasePoly& g);
// sum_i df/dx_i dg/dy_i - df/dy_i dg/dx_i
PhasePoly canonical_poisson(const PhasePoly& f, const PhasePoly& g);

struct HeisenbergReport {
    bool star_side = false;    // e^u * e^v against e^{u+v+(t/2){u,v}} with Moyal
    bool weyl_side = false;    // same after symmetrization, in the Weyl algebra
};
// u, v linear; compares all terms of weight <= max_weight, t counted with weight 2
HeisenbergReport heisenberg_check(const PhasePoly& u, const PhasePoly& v, int max_weight);

}  // namespace ncalc
