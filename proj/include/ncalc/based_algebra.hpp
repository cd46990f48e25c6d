#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncalc/free_poly.hpp"
#include "ncalc/structure_algebra.hpp"
#include "ncalc/word.hpp"

namespace ncalc {

// Linear combination of algebra basis elements. Basis elements are keyed by words:
// Free: the word itself; Commutative: sorted word; FinDim: {} is the unit and {i} is e_i.
using Elem = std::map<Word, Rational, LenLex>;

void elem_add(Elem& a, const Word& w, const Rational& c);
void elem_add(Elem& a, const Elem& b, const Rational& scale = 1);
Elem elem_scaled(const Elem& a, const Rational& s);
Elem elem_unit();

class BasedAlgebra {
public:
    enum class Kind { Free, Commutative, FinDim };

    static BasedAlgebra free(int generators);
    static BasedAlgebra commutative(int generators);
    static BasedAlgebra findim(StructureAlgebra a);

    Kind kind() const { return kind_; }
    bool graded() const { return kind_ != Kind::FinDim; }
    int generator_count() const { return gens_; }
    const StructureAlgebra& structure() const { return *alg_; }

    Elem mul_basis(const Word& u, const Word& v) const;
    Elem mul(const Elem& a, const Elem& b) const;
    int weight(const Word& w) const { return graded() ? static_cast<int>(w.size()) : 0; }

    // Basis of A (graded: weight piece w; FinDim: whole algebra, weight ignored).
    std::vector<Word> basis(int weight) const;
    // Basis of the complement of k*1 in the given weight.
    std::vector<Word> complement_basis(int weight) const;
    // Algebra generators (Free/Commutative: letters; FinDim: all non-unit basis elements).
    std::vector<Word> generators() const;

    std::string basis_name(const Word& w) const;
    std::string elem_string(const Elem& e) const;

    Elem from_free(const FreePoly& p) const;
    FreePoly to_free(const Elem& e) const;
    Elem from_vector(const CoeffVector& v) const;
    CoeffVector to_vector(const Elem& e) const;

    bool same_as(const BasedAlgebra& o) const { return alg_ == o.alg_ && kind_ == o.kind_ && gens_ == o.gens_; }

private:
    Kind kind_ = Kind::Free;
    int gens_ = 0;
    std::shared_ptr<const StructureAlgebra> alg_;
};

// All words of a given length over r letters, in length-lex order.
std::vector<Word> all_words(int letters, int length);
// Sorted words (commutative monomials) of a given length.
std::vector<Word> sorted_words(int letters, int length);

}  // namespace ncalc
