#include "ncalc/structure_algebra.hpp"

#include <stdexcept>

namespace ncalc {

StructureAlgebra::StructureAlgebra(std::vector<std::string> basis_names,
                                   const std::vector<std::vector<std::vector<Rational>>>& table,
                                   const CoeffVector& unit)
    : m_(static_cast<int>(basis_names.size())) {
    const auto m = static_cast<std::size_t>(m_);
    if (m == 0) throw std::invalid_argument("algebra of dimension 0");
    if (table.size() != m || unit.size() != m) throw std::invalid_argument("tensor dimensions inconsistent");
    for (const auto& row : table) {
        if (row.size() != m) throw std::invalid_argument("tensor dimensions inconsistent");
        for (const auto& col : row)
            if (col.size() != m) throw std::invalid_argument("tensor dimensions inconsistent");
    }
    int pivot = -1;
    for (int i = 0; i < m_; ++i)
        if (!is_zero(unit[static_cast<std::size_t>(i)])) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw std::invalid_argument("unit vector is zero");

    rebase_ = DenseMatrix(m, std::vector<Rational>(m, Rational(0)));
    names_.push_back("1");
    for (std::size_t r = 0; r < m; ++r) rebase_[r][0] = unit[r];
    int col = 1;
    for (int i = 0; i < m_; ++i) {
        if (i == pivot) continue;
        rebase_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col++)] = 1;
        names_.push_back(basis_names[static_cast<std::size_t>(i)]);
    }
    DenseMatrix inv = *inverse(rebase_);

    auto old_mul = [&](const CoeffVector& u, const CoeffVector& v) {
        CoeffVector w(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (is_zero(u[i])) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (is_zero(v[j])) continue;
                for (std::size_t k = 0; k < m; ++k) w[k] += u[i] * v[j] * table[i][j][k];
            }
        }
        return w;
    };
    auto column = [&](std::size_t t) {
        CoeffVector v(m);
        for (std::size_t r = 0; r < m; ++r) v[r] = rebase_[r][t];
        return v;
    };
    table_.assign(m * m * m, Rational(0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            CoeffVector prod = old_mul(column(a), column(b));
            for (std::size_t k = 0; k < m; ++k) {
                Rational s = 0;
                for (std::size_t r = 0; r < m; ++r) s += inv[k][r] * prod[r];
                table_[idx(static_cast<int>(a), static_cast<int>(b), static_cast<int>(k))] = s;
            }
        }
    products_.resize(m * m);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            SparseVec v;
            for (int k = 0; k < m_; ++k)
                if (!is_zero(c(i, j, k))) v.emplace_back(k, c(i, j, k));
            products_[static_cast<std::size_t>(i * m_ + j)] = std::move(v);
        }
}

CoeffVector StructureAlgebra::unit_vector() const { return basis_vector(0); }

CoeffVector StructureAlgebra::basis_vector(int i) const {
    CoeffVector v(static_cast<std::size_t>(m_), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

CoeffVector StructureAlgebra::mul(const CoeffVector& u, const CoeffVector& v) const {
    if (u.size() != static_cast<std::size_t>(m_) || v.size() != static_cast<std::size_t>(m_))
        throw std::invalid_argument("coefficient vector length mismatch");
    CoeffVector w(static_cast<std::size_t>(m_), Rational(0));
    for (int i = 0; i < m_; ++i) {
        if (is_zero(u[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j < m_; ++j) {
            if (is_zero(v[static_cast<std::size_t>(j)])) continue;
            Rational f = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
            for (const auto& [k, c] : basis_product(i, j)) w[static_cast<std::size_t>(k)] += f * c;
        }
    }
    return w;
}

CoeffVector structure_mul(const StructureAlgebra& a, const CoeffVector& u, const CoeffVector& v) {
    return a.mul(u, v);
}

std::optional<Violation> structure_validate(const StructureAlgebra& a) {
    const int m = a.dim();
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            Rational want = (i == k) ? 1 : 0;
            if (a.c(0, i, k) != want || a.c(i, 0, k) != want)
                return Violation{"unit", {0, i, k}, "unit law fails for basis element " + a.basis_names()[static_cast<std::size_t>(i)]};
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                CoeffVector lhs = a.mul(a.mul(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(k));
                CoeffVector rhs = a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k)));
                if (lhs != rhs) return Violation{"associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)"};
            }
    return std::nullopt;
}

LieAlgebraData::LieAlgebraData(int n, std::vector<std::string> basis_names)
    : dim(n), names(std::move(basis_names)), c(static_cast<std::size_t>(n * n * n), Rational(0)) {
    if (names.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("name count mismatch");
}

void LieAlgebraData::set_bracket(int i, int j, const std::vector<Rational>& v) {
    for (int k = 0; k < dim; ++k) {
        at(i, j, k) = v[static_cast<std::size_t>(k)];
        at(j, i, k) = -v[static_cast<std::size_t>(k)];
    }
}

std::vector<Rational> LieAlgebraData::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> z(static_cast<std::size_t>(dim), Rational(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rational f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            if (is_zero(f)) continue;
            for (int k = 0; k < dim; ++k) z[static_cast<std::size_t>(k)] += f * at(i, j, k);
        }
    return z;
}

std::optional<Violation> lie_validate(const LieAlgebraData& g) {
    const int n = g.dim;
    if (g.c.size() != static_cast<std::size_t>(n * n * n))
        return Violation{"dimensions", {0, 0, 0}, "structure tensor has wrong size"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.at(i, j, k) != -g.at(j, i, k)) return Violation{"antisymmetry", {i, j, k}, "c_ij^k != -c_ji^k"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int q = 0; q < n; ++q) {
                    Rational s = 0;
                    for (int l = 0; l < n; ++l)
                        s += g.at(i, j, l) * g.at(l, k, q) + g.at(j, k, l) * g.at(l, i, q) + g.at(k, i, l) * g.at(l, j, q);
                    if (!is_zero(s)) return Violation{"jacobi", {i, j, k}, "Jacobi identity fails"};
                }
    return std::nullopt;
}

namespace algebras {

namespace {
using Table = std::vector<std::vector<std::vector<Rational>>>;
Table zero_table(std::size_t m) {
    return Table(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
}
CoeffVector unit_at(std::size_t m, std::size_t i) {
    CoeffVector u(m, Rational(0));
    u[i] = 1;
    return u;
}
}  // namespace

StructureAlgebra ground_field() {
    Table t = zero_table(1);
    t[0][0][0] = 1;
    return StructureAlgebra({"1"}, t, {Rational(1)});
}

StructureAlgebra product_of_fields(int n) {
    auto m = static_cast<std::size_t>(n);
    Table t = zero_table(m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
        t[i][i][i] = 1;
        names.push_back("p" + std::to_string(i + 1));
    }
    return StructureAlgebra(names, t, CoeffVector(m, Rational(1)));
}

StructureAlgebra truncated_polynomial(int n) {
    auto m = static_cast<std::size_t>(n);
    Table t = zero_table(m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
        names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        for (std::size_t j = 0; i + j < m; ++j) t[i][j][i + j] = 1;
    }
    return StructureAlgebra(names, t, unit_at(m, 0));
}

StructureAlgebra idempotent() {
    Table t = zero_table(2);
    t[0][0][0] = 1;
    t[0][1][1] = 1;
    t[1][0][1] = 1;
    t[1][1][1] = 1;
    return StructureAlgebra({"1", "e"}, t, unit_at(2, 0));
}

StructureAlgebra matrix_algebra(int n) {
    auto m = static_cast<std::size_t>(n * n);
    Table t = zero_table(m);
    std::vector<std::string> names;
    CoeffVector unit(m, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            if (i == j) unit[static_cast<std::size_t>(i * n + j)] = 1;
            for (int l = 0; l < n; ++l)
                t[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(j * n + l)][static_cast<std::size_t>(i * n + l)] = 1;
        }
    return StructureAlgebra(names, t, unit);
}

StructureAlgebra matrices_over(const StructureAlgebra& a, int r) {
    const int d = a.dim();
    auto m = static_cast<std::size_t>(r * r * d);
    auto index = [&](int i, int j, int k) { return static_cast<std::size_t>((i * r + j) * d + k); };
    Table t = zero_table(m);
    std::vector<std::string> names;
    CoeffVector unit(m, Rational(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < d; ++k) {
                names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "*" + a.basis_names()[static_cast<std::size_t>(k)]);
                if (i == j && k == 0) unit[index(i, j, k)] = 1;
            }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < r; ++l)
                for (int k1 = 0; k1 < d; ++k1)
                    for (int k2 = 0; k2 < d; ++k2)
                        for (const auto& [k, c] : a.basis_product(k1, k2)) t[index(i, j, k1)][index(j, l, k2)][index(i, l, k)] = c;
    return StructureAlgebra(names, t, unit);
}

StructureAlgebra cyclic_group_algebra(int n) {
    auto m = static_cast<std::size_t>(n);
    Table t = zero_table(m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
        names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
        for (std::size_t j = 0; j < m; ++j) t[i][j][(i + j) % m] = 1;
    }
    return StructureAlgebra(names, t, unit_at(m, 0));
}

StructureAlgebra upper_triangular(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) cells.emplace_back(i, j);
    auto m = cells.size();
    Table t = zero_table(m);
    std::vector<std::string> names;
    CoeffVector unit(m, Rational(0));
    for (std::size_t a = 0; a < m; ++a) {
        auto [i, j] = cells[a];
        names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        if (i == j) unit[a] = 1;
        for (std::size_t b = 0; b < m; ++b) {
            auto [k, l] = cells[b];
            if (j != k) continue;
            for (std::size_t c = 0; c < m; ++c)
                if (cells[c] == std::make_pair(i, l)) t[a][b][c] = 1;
        }
    }
    return StructureAlgebra(names, t, unit);
}

}  // namespace algebras

namespace lie {

LieAlgebraData sl2() {
    LieAlgebraData g(3, {"e", "f", "h"});
    g.set_bracket(0, 1, {0, 0, 1});
    g.set_bracket(2, 0, {2, 0, 0});
    g.set_bracket(2, 1, {0, -2, 0});
    return g;
}

LieAlgebraData heisenberg() {
    LieAlgebraData g(3, {"x", "y", "z"});
    g.set_bracket(0, 1, {0, 0, 1});
    return g;
}

LieAlgebraData so3() {
    LieAlgebraData g(3, {"x", "y", "z"});
    g.set_bracket(0, 1, {0, 0, 1});
    g.set_bracket(1, 2, {1, 0, 0});
    g.set_bracket(2, 0, {0, 1, 0});
    return g;
}

LieAlgebraData abelian(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return LieAlgebraData(n, names);
}

}  // namespace lie

}  // namespace ncalc
