#include "ncalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncalc {

SparseVec make_sparse(std::map<int, Rational> entries) {
    SparseVec v;
    v.reserve(entries.size());
    for (auto& [i, c] : entries)
        if (!is_zero(c)) v.emplace_back(i, std::move(c));
    return v;
}

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x) {
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            Rational c = a * x[j].second;
            out.emplace_back(x[j].first, std::move(c));
            ++j;
        } else {
            Rational c = y[i].second + a * x[j].second;
            if (!is_zero(c)) out.emplace_back(y[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scale(const SparseVec& x, const Rational& a) {
    if (is_zero(a)) return {};
    SparseVec out = x;
    for (auto& e : out) e.second *= a;
    return out;
}

Rational entry(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, int k) { return e.first < k; });
    return (it != v.end() && it->first == idx) ? it->second : Rational(0);
}

SparseVec Echelon::reduce(SparseVec v) const {
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = rows_.find(v[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        Rational c = -v[i].second;
        v = axpy(v, c, it->second);
    }
    return v;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rational lead = r.front().second;
    if (lead != 1) {
        Rational inv = 1 / lead;
        for (auto& e : r) e.second *= inv;
    }
    int p = r.front().first;
    rows_.emplace(p, std::move(r));
    return true;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<SparseVec>& columns) {
    SparseMatrix m(rows, static_cast<int>(columns.size()));
    std::vector<std::map<int, Rational>> acc(static_cast<std::size_t>(rows));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, c] : columns[j]) {
            if (i < 0 || i >= rows) throw std::out_of_range("column entry out of range");
            acc[static_cast<std::size_t>(i)][static_cast<int>(j)] += c;
        }
    for (int i = 0; i < rows; ++i) m.data[static_cast<std::size_t>(i)] = make_sparse(std::move(acc[static_cast<std::size_t>(i)]));
    return m;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    SparseVec unit{{c, v}};
    data[static_cast<std::size_t>(r)] = axpy(data[static_cast<std::size_t>(r)], 1, unit);
}

std::size_t rank_of_vectors(const std::vector<SparseVec>& vs) {
    Echelon e;
    for (const auto& v : vs) e.insert(v);
    return e.rank();
}

std::size_t rank(const SparseMatrix& m) { return rank_of_vectors(m.data); }

namespace {

// Fully reduced row echelon form, keyed by pivot column.
std::map<int, SparseVec> rref(const std::vector<SparseVec>& rows) {
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    std::map<int, SparseVec> red(e.rows().begin(), e.rows().end());
    for (auto it = red.rbegin(); it != red.rend(); ++it) {
        SparseVec& row = it->second;
        std::size_t i = 1;
        while (i < row.size()) {
            auto p = red.find(row[i].first);
            if (p == red.end() || p->first == it->first) {
                ++i;
                continue;
            }
            Rational c = -row[i].second;
            row = axpy(row, c, p->second);
        }
    }
    return red;
}

}  // namespace

std::vector<SparseVec> nullspace(const SparseMatrix& m) {
    auto red = rref(m.data);
    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (red.count(f)) continue;
        std::map<int, Rational> v;
        v[f] = 1;
        for (const auto& [p, row] : red) {
            Rational c = entry(row, f);
            if (!is_zero(c)) v[p] = -c;
        }
        basis.push_back(make_sparse(std::move(v)));
    }
    return basis;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b) {
    std::vector<SparseVec> aug = m.data;
    for (const auto& [i, c] : b) {
        SparseVec unit{{m.cols, c}};
        aug[static_cast<std::size_t>(i)] = axpy(aug[static_cast<std::size_t>(i)], 1, unit);
    }
    auto red = rref(aug);
    if (red.count(m.cols)) return std::nullopt;
    std::map<int, Rational> x;
    for (const auto& [p, row] : red) {
        Rational c = entry(row, m.cols);
        if (!is_zero(c)) x[p] = c;
    }
    return make_sparse(std::move(x));
}

DenseMatrix identity_matrix(std::size_t n) {
    DenseMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    DenseMatrix c(n, std::vector<Rational>(p, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
    std::size_t n = a.size();
    DenseMatrix m = a, inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(m[piv][col])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(m[r][col])) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::size_t dense_rank(const DenseMatrix& a) {
    std::vector<SparseVec> rows;
    for (const auto& r : a) {
        std::map<int, Rational> e;
        for (std::size_t j = 0; j < r.size(); ++j) e[static_cast<int>(j)] = r[j];
        rows.push_back(make_sparse(std::move(e)));
    }
    return rank_of_vectors(rows);
}

}  // namespace ncalc
