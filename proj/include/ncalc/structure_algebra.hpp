#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ncalc/linalg.hpp"
#include "ncalc/rational.hpp"

namespace ncalc {

using CoeffVector = std::vector<Rational>;

// Finite-dimensional unital algebra e_i e_j = sum_k c_ij^k e_k. Slot 0 is always the unit.
class StructureAlgebra {
public:
    // table is indexed table[i][j][k] = c_ij^k in the given basis; the constructor re-bases so
    // that the supplied unit vector becomes basis element 0.
    StructureAlgebra(std::vector<std::string> basis_names,
                     const std::vector<std::vector<std::vector<Rational>>>& table,
                     const CoeffVector& unit);

    int dim() const { return m_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Rational& c(int i, int j, int k) const { return table_[idx(i, j, k)]; }
    // sparse product of basis elements
    const SparseVec& basis_product(int i, int j) const { return products_[static_cast<std::size_t>(i * m_ + j)]; }
    CoeffVector unit_vector() const;
    // the change of basis used: column t holds new basis vector t in the original coordinates
    const DenseMatrix& rebase_matrix() const { return rebase_; }

    CoeffVector mul(const CoeffVector& u, const CoeffVector& v) const;
    CoeffVector basis_vector(int i) const;

private:
    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>((i * m_ + j) * m_ + k);
    }

    int m_;
    std::vector<std::string> names_;
    std::vector<Rational> table_;
    std::vector<SparseVec> products_;
    DenseMatrix rebase_;
};

CoeffVector structure_mul(const StructureAlgebra& a, const CoeffVector& u, const CoeffVector& v);

struct Violation {
    std::string kind;          // "associativity", "unit", "antisymmetry", "jacobi"
    std::array<int, 3> where;  // first failing index triple
    std::string detail;
};

std::optional<Violation> structure_validate(const StructureAlgebra& a);

struct LieAlgebraData {
    int dim = 0;
    std::vector<std::string> names;
    std::vector<Rational> c;   // c[(i*dim+j)*dim+k] = c_ij^k

    LieAlgebraData() = default;
    LieAlgebraData(int n, std::vector<std::string> basis_names);
    const Rational& at(int i, int j, int k) const { return c[static_cast<std::size_t>((i * dim + j) * dim + k)]; }
    Rational& at(int i, int j, int k) { return c[static_cast<std::size_t>((i * dim + j) * dim + k)]; }
    // sets [e_i,e_j] = v and [e_j,e_i] = -v
    void set_bracket(int i, int j, const std::vector<Rational>& v);
    std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

std::optional<Violation> lie_validate(const LieAlgebraData& g);

// Standard examples.
namespace algebras {
StructureAlgebra ground_field();
StructureAlgebra product_of_fields(int n);        // k x ... x k
StructureAlgebra truncated_polynomial(int n);     // k[x]/(x^n)
StructureAlgebra idempotent();                    // k[e]/(e^2 - e), basis {1, e}
StructureAlgebra matrix_algebra(int n);           // Mat_n(k), basis E_ij
StructureAlgebra matrices_over(const StructureAlgebra& a, int r);   // basis E_ij (x) e_k, order (i,j,k)
StructureAlgebra cyclic_group_algebra(int n);     // k[Z/n]
StructureAlgebra upper_triangular(int n);
}  // namespace algebras

namespace lie {
LieAlgebraData sl2();          // basis e, f, h
LieAlgebraData heisenberg();   // basis x, y, z with [x,y] = z
LieAlgebraData so3();
LieAlgebraData abelian(int n);
}  // namespace lie

}  // namespace ncalc
