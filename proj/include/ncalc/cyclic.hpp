#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncalc/derivation.hpp"
#include "ncalc/free_poly.hpp"
#include "ncalc/structure_algebra.hpp"

namespace ncalc {

// Element of R(A) = A/[A,A] for a free algebra; keys are least rotations.
class NecklaceElement {
public:
    explicit NecklaceElement(int generator_count = 0) : gens_(generator_count) {}
    static NecklaceElement word(int gens, const Word& w, const Rational& c = 1);

    int generator_count() const { return gens_; }
    const std::map<Word, Rational, LenLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_word(const Word& w, const Rational& c);   // canonicalizes w

    NecklaceElement& operator+=(const NecklaceElement& o);
    NecklaceElement& operator-=(const NecklaceElement& o);
    NecklaceElement scaled(const Rational& s) const;
    friend NecklaceElement operator+(NecklaceElement a, const NecklaceElement& b) { return a += b; }
    friend NecklaceElement operator-(NecklaceElement a, const NecklaceElement& b) { return a -= b; }
    friend bool operator==(const NecklaceElement& a, const NecklaceElement& b) {
        return a.gens_ == b.gens_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NecklaceElement& a, const NecklaceElement& b) { return !(a == b); }

    // any representative in A (the stored least rotations)
    FreePoly representative() const;
    std::string str() const;   // cyc(x*y) - 2*cyc(x*x*y*y)

private:
    int gens_;
    std::map<Word, Rational, LenLex> terms_;
};

NecklaceElement project_cyclic(const FreePoly& f);
FreePoly cyclic_derivative(const NecklaceElement& f, int i);
// Applies a derivation of the free algebra to a necklace.
NecklaceElement apply_derivation(const DerivationSpec& theta, const NecklaceElement& f);

// Generators 0..n-1 are x_1..x_n, generators n..2n-1 are y_1..y_n.
struct SymplecticLayout {
    int n = 1;
    int x(int i) const { return i; }
    int y(int i) const { return n + i; }
    int generator_count() const { return 2 * n; }
};

NecklaceElement necklace_bracket(const NecklaceElement& f, const NecklaceElement& g, const SymplecticLayout& layout);
// x_i -> -df/dy_i, y_i -> df/dx_i, so that theta_f(g) = {f, g}
DerivationSpec hamiltonian_field(const NecklaceElement& f, const SymplecticLayout& layout);

// Commutative polynomial on the basis variables of a Lie algebra.
class SymPoly {
public:
    using Exponents = std::vector<int>;

    explicit SymPoly(int vars = 0) : n_(vars) {}
    static SymPoly variable(int vars, int i);
    static SymPoly constant(int vars, const Rational& c);

    int vars() const { return n_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const Rational& c);
    SymPoly derivative(int i) const;
    int degree() const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly scaled(const Rational& s) const;
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }
    std::string str(const std::vector<std::string>& names) const;

private:
    int n_;
    std::map<Exponents, Rational> terms_;
};

SymPoly kirillov_kostant(const SymPoly& f, const SymPoly& g, const LieAlgebraData& glie);

}  // namespace ncalc
