#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ncalc/based_algebra.hpp"
#include "ncalc/derivation.hpp"
#include "ncalc/errors.hpp"
#include "ncalc/linalg.hpp"
#include "ncalc/random.hpp"

namespace ncalc {

// (a0, a1, ..., an) standing for a0 da1 ... dan; slots 1..n never hold the unit.
using FormKey = std::vector<Word>;

struct FormKeyLess {
    bool operator()(const FormKey& a, const FormKey& b) const;
};

class NCForm {
public:
    using Terms = std::map<FormKey, Rational, FormKeyLess>;

    NCForm() = default;
    static NCForm from_elem(const Elem& a);
    static NCForm term(const FormKey& k, const Rational& c = 1);
    // 1 * da
    static NCForm d_of(const Elem& a);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // degree of the first term (-1 for zero); homogeneous() checks all agree
    int degree() const;
    bool homogeneous() const;
    void add_term(const FormKey& k, const Rational& c);

    NCForm& operator+=(const NCForm& o);
    NCForm& operator-=(const NCForm& o);
    NCForm scaled(const Rational& s) const;
    friend NCForm operator+(NCForm a, const NCForm& b) { return a += b; }
    friend NCForm operator-(NCForm a, const NCForm& b) { return a -= b; }
    friend bool operator==(const NCForm& a, const NCForm& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCForm& a, const NCForm& b) { return !(a == b); }

    std::string str(const BasedAlgebra& a) const;

private:
    Terms terms_;
};

int form_key_weight(const BasedAlgebra& a, const FormKey& k);
// weight-w part (graded algebras)
NCForm weight_component(const BasedAlgebra& a, const NCForm& f, int w);
std::vector<int> weights_present(const BasedAlgebra& a, const NCForm& f);

NCForm left_mul(const BasedAlgebra& a, const Elem& x, const NCForm& f);
NCForm right_mul(const BasedAlgebra& a, const NCForm& f, const Elem& x);
NCForm form_mul(const BasedAlgebra& a, const NCForm& f, const NCForm& g);
NCForm de_rham_d(const BasedAlgebra& a, const NCForm& f);
NCForm hochschild_b(const BasedAlgebra& a, const NCForm& f);
NCForm karoubi(const BasedAlgebra& a, const NCForm& f);
NCForm contraction_i(const BasedAlgebra& a, const DerivationSpec& theta, const NCForm& f);
// explicit termwise formula
NCForm lie_derivative(const BasedAlgebra& a, const DerivationSpec& theta, const NCForm& f);
// d i + i d
NCForm lie_derivative_cartan(const BasedAlgebra& a, const DerivationSpec& theta, const NCForm& f);

// Monomial basis of the (degree, weight) piece; FinDim ignores the weight.
std::vector<FormKey> form_basis(const BasedAlgebra& a, int degree, int weight, const Caps& caps = default_caps());
NCForm random_form(const BasedAlgebra& a, Rng& rng, int degree, int weight, int terms);

struct DRClass {
    int degree = 0;
    NCForm representative;   // canonical coset representative
    friend bool operator==(const DRClass& x, const DRClass& y) { return x.representative == y.representative; }
    friend bool operator!=(const DRClass& x, const DRClass& y) { return !(x == y); }
    bool is_zero() const { return representative.is_zero(); }
};

struct GradedPiece {
    int degree = 0;
    int weight = 0;
    std::vector<FormKey> basis;
    std::map<FormKey, int, FormKeyLess> index;
    Echelon commutators;   // supercommutator span
    std::size_t dimension() const { return basis.size(); }
    std::size_t quotient_dimension() const { return basis.size() - commutators.rank(); }
};

// Karoubi-de Rham quotients with cached per-piece echelon bases.
class DRContext {
public:
    explicit DRContext(BasedAlgebra a, Caps caps = default_caps()) : alg_(std::move(a)), caps_(caps) {}

    const BasedAlgebra& algebra() const { return alg_; }
    const GradedPiece& piece(int degree, int weight);
    SparseVec vectorize(const GradedPiece& p, const NCForm& f) const;
    NCForm unvectorize(const GradedPiece& p, const SparseVec& v) const;

    DRClass project(const NCForm& f);
    DRClass d(const DRClass& c);
    // basis of the quotient: the non-pivot monomials
    std::vector<FormKey> quotient_basis(int degree, int weight);

private:
    BasedAlgebra alg_;
    Caps caps_;
    std::map<std::pair<int, int>, std::unique_ptr<GradedPiece>> pieces_;
};

DRClass dr_project(DRContext& ctx, const NCForm& f);
std::string dr_string(const BasedAlgebra& a, const DRClass& c);

struct DRCohomology {
    // (degree, weight) -> dim H; FinDim uses weight 0 only
    std::map<std::pair<int, int>, int> dims;
    std::map<std::pair<int, int>, int> quotient_dims;
    std::vector<int> totals;   // summed over weights, per degree
    // cohomology of DR modulo the constants k.1 (differs from totals only in degree 0)
    std::vector<int> reduced_totals;
};

DRCohomology dr_cohomology(DRContext& ctx, int max_degree, int max_weight);

// eta = i_eu(omega) / w with d eta = omega
DRClass poincare_primitive(DRContext& ctx, const DRClass& omega);

struct QuillenWeight {
    int weight = 0;
    int dim_dr0 = 0, dim_dr1 = 0, dim_abar = 0;
    int rank_d = 0, rank_b = 0, rank_pr = 0;
    bool exact_at_dr0 = false, exact_at_dr1 = false, exact_at_abar = false, exact_at_end = false;
    bool image_b_is_commutators = false;
    bool exact() const { return exact_at_dr0 && exact_at_dr1 && exact_at_abar && exact_at_end; }
};

std::vector<QuillenWeight> quillen_maps(DRContext& ctx, int max_weight);

struct SquareZeroElement {
    Elem a;
    NCForm omega;   // in Omega^2
    friend bool operator==(const SquareZeroElement& x, const SquareZeroElement& y) {
        return x.a == y.a && x.omega == y.omega;
    }
};

SquareZeroElement square_zero_product(const BasedAlgebra& a, const SquareZeroElement& p, const SquareZeroElement& q);

}  // namespace ncalc
