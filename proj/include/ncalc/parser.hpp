#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncalc/based_algebra.hpp"
#include "ncalc/chern_weil.hpp"
#include "ncalc/cyclic.hpp"
#include "ncalc/forms.hpp"
#include "ncalc/rational.hpp"
#include "ncalc/star.hpp"

namespace ncalc {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct Expr {
    enum class Kind { Number, Symbol, Sum, Product, Commutator, D, Cyc, Star, Trace };

    Kind kind = Kind::Number;
    Rational value;              // Number
    std::string name;            // Symbol
    int index = -1;              // Symbol, position in the environment
    std::vector<Expr> args;
    std::vector<int> signs;      // Sum: +1 or -1 per summand
    int line = 0, column = 0;    // source position, not part of equality

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
};

// Symbols an expression may use, resolved to their position in the list.
struct Env {
    std::vector<std::string> symbols;
    int find(const std::string& name) const;
};

Expr parse(const std::string& text, const Env& env);
std::string print(const Expr& e);

// x, y, z for up to three generators, x1..xn beyond
std::vector<std::string> generator_names(int gens);
Env free_env(int gens);
// x1..xn, y1..yn, t
Env phase_env(int pairs);
// FinDim: basis names (slot 0 the unit); graded: generator names
Env algebra_env(const BasedAlgebra& a);
Env alphabet_env(const SuperAlphabet& a);

FreePoly to_free(const Expr& e, int gens);
// cyc(...) projects; a bare polynomial is projected as a whole
NecklaceElement to_necklace(const Expr& e, int gens);
Elem to_elem(const Expr& e, const BasedAlgebra& a);
// [a, b] is the graded commutator
NCForm to_form(const Expr& e, const BasedAlgebra& a);
// products are commutative, star(f, g) is the Moyal product and [f, g] its commutator
PhasePoly to_phase(const Expr& e, int pairs);
// d(.) uses the supplied differential when given; [a, b] is the supercommutator
SuperPoly to_super(const Expr& e, const AlphabetPtr& a, const std::function<SuperPoly(const SuperPoly&)>& d = {});

}  // namespace ncalc
