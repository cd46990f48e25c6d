#pragma once

#include <vector>

#include "ncalc/forms.hpp"

namespace ncalc {

// Square matrix of noncommutative forms over a finite-dimensional algebra, row-major.
struct FormMatrix {
    int size = 0;
    std::vector<NCForm> entries;

    FormMatrix() = default;
    explicit FormMatrix(int r) : size(r), entries(static_cast<std::size_t>(r * r)) {}
    static FormMatrix identity(int r);
    static FormMatrix from_elems(const std::vector<std::vector<Elem>>& rows);

    NCForm& at(int i, int j) { return entries[static_cast<std::size_t>(i * size + j)]; }
    const NCForm& at(int i, int j) const { return entries[static_cast<std::size_t>(i * size + j)]; }
    bool is_zero() const;

    FormMatrix& operator+=(const FormMatrix& o);
    FormMatrix& operator-=(const FormMatrix& o);
    friend FormMatrix operator+(FormMatrix a, const FormMatrix& b) { return a += b; }
    friend FormMatrix operator-(FormMatrix a, const FormMatrix& b) { return a -= b; }
    friend bool operator==(const FormMatrix& a, const FormMatrix& b) { return a.size == b.size && a.entries == b.entries; }
    friend bool operator!=(const FormMatrix& a, const FormMatrix& b) { return !(a == b); }
};

FormMatrix matrix_mul(const BasedAlgebra& a, const FormMatrix& x, const FormMatrix& y);
FormMatrix matrix_d(const BasedAlgebra& a, const FormMatrix& x);
FormMatrix matrix_power(const BasedAlgebra& a, const FormMatrix& x, int k);
NCForm matrix_trace(const FormMatrix& x);
FormMatrix direct_sum(const FormMatrix& x, const FormMatrix& y);

class IdempotentMatrix {
public:
    // throws MathError unless the algebra is finite dimensional and e^2 = e
    IdempotentMatrix(BasedAlgebra a, FormMatrix e);
    IdempotentMatrix(BasedAlgebra a, const std::vector<std::vector<Elem>>& rows)
        : IdempotentMatrix(std::move(a), FormMatrix::from_elems(rows)) {}

    const BasedAlgebra& algebra() const { return alg_; }
    const FormMatrix& matrix() const { return e_; }
    int size() const { return e_.size; }

private:
    BasedAlgebra alg_;
    FormMatrix e_;
};

class InvertibleMatrix {
public:
    // throws MathError unless g g^-1 = g^-1 g = 1
    InvertibleMatrix(BasedAlgebra a, FormMatrix g, FormMatrix inverse);

    const BasedAlgebra& algebra() const { return alg_; }
    const FormMatrix& matrix() const { return g_; }
    const FormMatrix& inverse() const { return inv_; }
    int size() const { return g_.size; }

    friend InvertibleMatrix operator*(const InvertibleMatrix& x, const InvertibleMatrix& y);

private:
    BasedAlgebra alg_;
    FormMatrix g_, inv_;
};

// 1 + c E_ij (i != j), inverse 1 - c E_ij
InvertibleMatrix elementary_matrix(const BasedAlgebra& a, int r, int i, int j, const Elem& c);
// product of random elementary matrices with entries drawn from the algebra basis
InvertibleMatrix random_invertible(const BasedAlgebra& a, int r, Rng& rng, int factors = 3);
IdempotentMatrix conjugate(const IdempotentMatrix& e, const InvertibleMatrix& g);
IdempotentMatrix direct_sum(const IdempotentMatrix& e, const IdempotentMatrix& f);

// e de = de (1 - e) and (de) e = (1 - e) de
bool idempotent_identities(const IdempotentMatrix& e);

// x - y lies in d(DR^{n-1}) (classes of equal degree n)
bool dr_cohomologous(DRContext& ctx, const DRClass& x, const DRClass& y);

struct C0Result {
    DRClass c0;        // tr e modulo commutators
    DRClass d_c0;      // its differential in DR^1
    bool closed = false;
};
C0Result chern_c0(DRContext& ctx, const IdempotentMatrix& e);

struct C1Result {
    NCForm form;       // tr(g^-1 dg)
    DRClass c1;
    Elem b;            // Hochschild boundary of the form, an element of A
    bool b_cycle = false;
};
C1Result chern_c1(DRContext& ctx, const InvertibleMatrix& g);

struct ChernResult {
    int k = 0;
    NCForm form;       // tr(e (de)^{2k}) / k!
    DRClass ch;
    DRClass d_ch;
    bool closed = false;
};
ChernResult chern_ch_k(DRContext& ctx, const IdempotentMatrix& e, int k);

// Grassmannian connection on the right module e A^r: columns v = e v, nabla v = e dv.
class ConnectionData {
public:
    explicit ConnectionData(IdempotentMatrix e) : e_(std::move(e)) {}
    const IdempotentMatrix& idempotent() const { return e_; }
    // nabla on a column of forms (entrywise d, then e)
    std::vector<NCForm> apply(const std::vector<NCForm>& column) const;
    // projects a column into the module: e v
    std::vector<NCForm> project(const std::vector<NCForm>& column) const;

private:
    IdempotentMatrix e_;
};

ConnectionData grassmann_connection(const IdempotentMatrix& e);
// nabla(m a) = nabla(m) a + m da on random m in e A^r and a in A
bool leibniz_check(const ConnectionData& c, Rng& rng, int samples = 10);
// nabla^2 (mu alpha) = (nabla^2 mu) alpha and nabla^2 mu = R mu on random Omega-valued columns
bool curvature_linearity_check(const ConnectionData& c, Rng& rng, int samples = 5);

struct CurvatureResult {
    int k = 0;
    FormMatrix curvature;   // R = e de de e
    NCForm trace;           // Tr(R^k)
    DRClass trace_class;
    DRClass ch;             // chern_ch_k
    bool agrees = false;    // Tr(R^k) / k! == ch_k as classes
};
CurvatureResult connection_curvature(DRContext& ctx, const ConnectionData& c, int k);

}  // namespace ncalc
