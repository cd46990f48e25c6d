#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncalc/based_algebra.hpp"
#include "ncalc/errors.hpp"
#include "ncalc/structure_algebra.hpp"

namespace ncalc {

// Bimodule over a StructureAlgebra; left[a][j][k] is the e_k coefficient of e_a . m_j,
// right[a][j][k] that of m_j . e_a. Indices refer to the algebra's (unit-first) basis.
class Bimodule {
public:
    using Tensor = std::vector<std::vector<std::vector<Rational>>>;

    Bimodule(StructureAlgebra a, int dim, const Tensor& left, const Tensor& right);
    static Bimodule regular(const StructureAlgebra& a);
    // A (x) A with a.(x (x) y).b = ax (x) yb; basis index i*n + j
    static Bimodule enveloping(const StructureAlgebra& a);

    const StructureAlgebra& algebra() const { return alg_; }
    int dim() const { return dim_; }
    bool regular() const { return regular_; }
    const SparseVec& left(int a, int m) const { return left_[static_cast<std::size_t>(a * dim_ + m)]; }
    const SparseVec& right(int m, int a) const { return right_[static_cast<std::size_t>(a * dim_ + m)]; }
    CoeffVector act_left(int a, const CoeffVector& m) const;
    CoeffVector act_right(const CoeffVector& m, int a) const;

private:
    Bimodule(StructureAlgebra a, int dim) : alg_(std::move(a)), dim_(dim) {}
    void check() const;

    StructureAlgebra alg_;
    int dim_;
    bool regular_ = false;
    std::vector<SparseVec> left_, right_;
};

// m (x) a_1 (x) ... (x) a_p; key[0] indexes M, key[1..p] the algebra basis.
// Reduced chains silently drop terms with a unit in slots 1..p.
struct Chain {
    int degree = 0;
    bool reduced = true;
    std::map<std::vector<int>, Rational> terms;

    Chain() = default;
    Chain(int p, bool red) : degree(p), reduced(red) {}
    void add(const std::vector<int>& key, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain scaled(const Rational& s) const;
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend bool operator==(const Chain& a, const Chain& b) { return a.degree == b.degree && a.terms == b.terms; }
};

// Multilinear map A^{(x) p} -> M stored densely on basis tuples.
class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, int alg_dim, int module_dim, bool algebra_valued);
    static Cochain zero(const Bimodule& m, int degree);
    static Cochain element(const Bimodule& m, const CoeffVector& v);
    static Cochain multiplication(const StructureAlgebra& a);
    static Cochain identity(const StructureAlgebra& a);

    int degree() const { return p_; }
    int alg_dim() const { return n_; }
    int module_dim() const { return m_; }
    bool algebra_valued() const { return alg_valued_; }
    std::size_t tuple_count() const { return data_.size() / static_cast<std::size_t>(m_); }
    std::vector<int> tuple(std::size_t idx) const;

    CoeffVector value(const std::vector<int>& inputs) const;
    const Rational& at(const std::vector<int>& inputs, int k) const { return data_[offset(inputs) + static_cast<std::size_t>(k)]; }
    void set(const std::vector<int>& inputs, int k, const Rational& v) { data_[offset(inputs) + static_cast<std::size_t>(k)] = v; }
    void add_value(const std::vector<int>& inputs, const CoeffVector& v, const Rational& s = 1);
    CoeffVector eval(const std::vector<CoeffVector>& args) const;
    // vanishes whenever some input is the unit
    bool normalized() const;

    bool is_zero() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain scaled(const Rational& s) const;
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.m_ == b.m_ && a.data_ == b.data_;
    }

private:
    std::size_t offset(const std::vector<int>& inputs) const;

    int p_ = 0, n_ = 1, m_ = 1;
    bool alg_valued_ = false;
    std::vector<Rational> data_;
};

Chain chain_differential(const Bimodule& m, const Chain& c);
Cochain cochain_differential(const Bimodule& m, const Cochain& f);

Cochain cup(const StructureAlgebra& a, const Cochain& f, const Cochain& g);
Cochain circle_product(const Cochain& f, const Cochain& g);
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

// a0 (x) ... (x) ak  ->  a0 c(a1..ap) (x) a_{p+1} (x) ... (x) ak
Chain chain_contraction(const StructureAlgebra& a, const Cochain& c, const Chain& ch);
Chain chain_lie(const StructureAlgebra& a, const Cochain& c, const Chain& ch);

struct HomologyResult {
    std::vector<int> dims, complex_dims;
    std::vector<int> ranks;   // rank of d: C_p -> C_{p-1}
    std::vector<std::vector<Chain>> cycles;
};

struct CohomologyResult {
    std::vector<int> dims, complex_dims;
    std::vector<int> ranks;   // rank of d: C^p -> C^{p+1}
    std::vector<std::vector<Cochain>> cocycles;
};

HomologyResult hh_homology(const Bimodule& m, int max_degree, bool reduced = true, const Caps& caps = default_caps());
CohomologyResult hh_cohomology(const Bimodule& m, int max_degree, bool reduced = true, const Caps& caps = default_caps());

std::vector<CoeffVector> center(const StructureAlgebra& a);

struct DerivationSpace {
    std::vector<Cochain> derivations;
    std::vector<Cochain> inner;
    int dim_der = 0, dim_inner = 0, dim_outer = 0;
};
DerivationSpace derivation_space(const StructureAlgebra& a);

struct AltReport {
    int p = 0;
    int source_dim = 0;
    bool scalar = false;          // pi o alt is a scalar multiple of the identity
    Rational factor;
    bool lands_in_cycles = false;
};
// A commutative, M = A; wedge powers taken over the non-unit basis
AltReport alt_comparison(const StructureAlgebra& a, int p);

// Hochschild homology dims of a graded BasedAlgebra in one weight, degrees 0..max_degree
std::vector<int> graded_hh(const BasedAlgebra& a, int weight, int max_degree, const Caps& caps = default_caps());

struct SmoothnessReport {
    bool smooth = false;
    // s(d e_b) as coordinates in A (x) Abar (x) A, keys (i, b, j); one entry per non-unit b
    std::vector<std::map<std::array<int, 3>, Rational>> splitting;
    int hh2_self = 0;
    int hh2_enveloping = 0;
    std::optional<Cochain> witness;   // non-trivial class in HH^2(A, A)
};
SmoothnessReport formal_smoothness_check(const StructureAlgebra& a);

struct MoritaReport {
    int hh0_algebra = 0;
    int hh0_matrices = 0;
    DenseMatrix trace_matrix;   // rows: HH_0(A) quotient basis, columns: HH_0(Mat_r A) quotient basis
    bool invertible = false;
};
MoritaReport morita_trace_check(const StructureAlgebra& a, int r, const Caps& caps = default_caps());

struct PolyvectorResult {
    bool ok = false;
    // (a0, a1..ap) with a_i non-unit for i >= 1  ->  a0 . c(a1..ap)
    std::map<std::vector<int>, CoeffVector> map;
    std::vector<int> defect_inputs;
    CoeffVector defect_value;
};
PolyvectorResult cocycle_to_polyvector(const Bimodule& m, const Cochain& c);

}  // namespace ncalc
