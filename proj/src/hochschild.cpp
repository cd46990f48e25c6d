#include "ncalc/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ncalc/forms.hpp"

namespace ncalc {

namespace {

CoeffVector zero_vec(int n) { return CoeffVector(static_cast<std::size_t>(n), Rational(0)); }

bool all_zero(const CoeffVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

void add_sparse(CoeffVector& out, const SparseVec& v, const Rational& s) {
    for (const auto& [i, c] : v) out[static_cast<std::size_t>(i)] += s * c;
}

// mixed-radix enumeration of p-tuples over [lo, n)
struct TupleSpace {
    int n, p, lo;
    std::size_t size() const {
        std::size_t s = 1;
        for (int i = 0; i < p; ++i) s *= static_cast<std::size_t>(n - lo);
        return s;
    }
    std::vector<int> at(std::size_t idx) const {
        std::vector<int> t(static_cast<std::size_t>(p));
        auto b = static_cast<std::size_t>(n - lo);
        for (int i = p - 1; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = lo + static_cast<int>(idx % b);
            idx /= b;
        }
        return t;
    }
    std::optional<std::size_t> index(const std::vector<int>& t, std::size_t from = 0, std::size_t len = std::string::npos) const {
        std::size_t idx = 0;
        std::size_t end = len == std::string::npos ? t.size() : from + len;
        for (std::size_t i = from; i < end; ++i) {
            if (t[i] < lo) return std::nullopt;
            idx = idx * static_cast<std::size_t>(n - lo) + static_cast<std::size_t>(t[i] - lo);
        }
        return idx;
    }
};

std::vector<int> concat3(const std::vector<int>& t, std::size_t a, std::size_t b, const std::vector<int>& mid, std::size_t c) {
    // t[0..a) ++ mid ++ t[b..c)
    std::vector<int> out(t.begin(), t.begin() + static_cast<long>(a));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), t.begin() + static_cast<long>(b), t.begin() + static_cast<long>(c));
    return out;
}

void require_algebra_valued(const Cochain& f) {
    if (!f.algebra_valued()) throw std::invalid_argument("cochain coefficients are not the algebra itself");
}

}  // namespace

// ---- Bimodule

Bimodule::Bimodule(StructureAlgebra a, int dim, const Tensor& left, const Tensor& right) : alg_(std::move(a)), dim_(dim) {
    const int n = alg_.dim();
    auto shape_ok = [&](const Tensor& t) {
        if (static_cast<int>(t.size()) != n) return false;
        for (const auto& mat : t) {
            if (static_cast<int>(mat.size()) != dim) return false;
            for (const auto& row : mat)
                if (static_cast<int>(row.size()) != dim) return false;
        }
        return true;
    };
    if (!shape_ok(left) || !shape_ok(right)) throw std::invalid_argument("bimodule action tensors have the wrong shape");
    left_.resize(static_cast<std::size_t>(n * dim));
    right_.resize(static_cast<std::size_t>(n * dim));
    for (int a2 = 0; a2 < n; ++a2)
        for (int j = 0; j < dim; ++j) {
            std::map<int, Rational> l, r;
            for (int k = 0; k < dim; ++k) {
                l[k] = left[static_cast<std::size_t>(a2)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                r[k] = right[static_cast<std::size_t>(a2)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            }
            left_[static_cast<std::size_t>(a2 * dim + j)] = make_sparse(std::move(l));
            right_[static_cast<std::size_t>(a2 * dim + j)] = make_sparse(std::move(r));
        }
    check();
}

Bimodule Bimodule::regular(const StructureAlgebra& a) {
    Bimodule m(a, a.dim());
    const int n = a.dim();
    m.regular_ = true;
    m.left_.resize(static_cast<std::size_t>(n * n));
    m.right_.resize(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < n; ++j) {
            m.left_[static_cast<std::size_t>(x * n + j)] = a.basis_product(x, j);
            m.right_[static_cast<std::size_t>(x * n + j)] = a.basis_product(j, x);
        }
    return m;
}

Bimodule Bimodule::enveloping(const StructureAlgebra& a) {
    const int n = a.dim();
    Bimodule m(a, n * n);
    m.left_.resize(static_cast<std::size_t>(n * n * n));
    m.right_.resize(static_cast<std::size_t>(n * n * n));
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::map<int, Rational> l, r;
                for (const auto& [k, c] : a.basis_product(x, i)) l[k * n + j] += c;
                for (const auto& [k, c] : a.basis_product(j, x)) r[i * n + k] += c;
                m.left_[static_cast<std::size_t>(x * n * n + i * n + j)] = make_sparse(std::move(l));
                m.right_[static_cast<std::size_t>(x * n * n + i * n + j)] = make_sparse(std::move(r));
            }
    return m;
}

CoeffVector Bimodule::act_left(int a, const CoeffVector& m) const {
    CoeffVector out = zero_vec(dim_);
    for (int j = 0; j < dim_; ++j)
        if (!is_zero(m[static_cast<std::size_t>(j)])) add_sparse(out, left(a, j), m[static_cast<std::size_t>(j)]);
    return out;
}

CoeffVector Bimodule::act_right(const CoeffVector& m, int a) const {
    CoeffVector out = zero_vec(dim_);
    for (int j = 0; j < dim_; ++j)
        if (!is_zero(m[static_cast<std::size_t>(j)])) add_sparse(out, right(j, a), m[static_cast<std::size_t>(j)]);
    return out;
}

void Bimodule::check() const {
    const int n = alg_.dim();
    auto basis_m = [&](int j) {
        CoeffVector v = zero_vec(dim_);
        v[static_cast<std::size_t>(j)] = 1;
        return v;
    };
    auto fail = [](const std::string& what, int a, int b, int j) {
        throw MathError("bimodule " + what + " fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", m" +
                        std::to_string(j) + ")");
    };
    for (int j = 0; j < dim_; ++j) {
        CoeffVector m = basis_m(j);
        if (act_left(0, m) != m || act_right(m, 0) != m) fail("unit action", 0, 0, j);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CoeffVector ab_m = zero_vec(dim_), m_ab = zero_vec(dim_);
                for (const auto& [k, c] : alg_.basis_product(a, b)) {
                    auto lk = act_left(k, m);
                    auto rk = act_right(m, k);
                    for (int t = 0; t < dim_; ++t) {
                        ab_m[static_cast<std::size_t>(t)] += c * lk[static_cast<std::size_t>(t)];
                        m_ab[static_cast<std::size_t>(t)] += c * rk[static_cast<std::size_t>(t)];
                    }
                }
                if (act_left(a, act_left(b, m)) != ab_m) fail("left associativity", a, b, j);
                if (act_right(act_right(m, a), b) != m_ab) fail("right associativity", a, b, j);
                if (act_right(act_left(a, m), b) != act_left(a, act_right(m, b))) fail("left/right compatibility", a, b, j);
            }
    }
}

// ---- Chain

void Chain::add(const std::vector<int>& key, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    if (reduced)
        for (std::size_t i = 1; i < key.size(); ++i)
            if (key[i] == 0) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

Chain Chain::scaled(const Rational& s) const {
    Chain r(degree, reduced);
    for (const auto& [k, c] : terms) r.add(k, c * s);
    return r;
}

// ---- Cochain

Cochain::Cochain(int degree, int alg_dim, int module_dim, bool algebra_valued)
    : p_(degree), n_(alg_dim), m_(module_dim), alg_valued_(algebra_valued) {
    if (degree < 0) throw std::invalid_argument("negative cochain degree");
    std::size_t tuples = 1;
    for (int i = 0; i < degree; ++i) tuples *= static_cast<std::size_t>(alg_dim);
    data_.assign(tuples * static_cast<std::size_t>(module_dim), Rational(0));
}

Cochain Cochain::zero(const Bimodule& m, int degree) { return Cochain(degree, m.algebra().dim(), m.dim(), m.regular()); }

Cochain Cochain::element(const Bimodule& m, const CoeffVector& v) {
    Cochain c = zero(m, 0);
    c.add_value({}, v);
    return c;
}

Cochain Cochain::multiplication(const StructureAlgebra& a) {
    Cochain c(2, a.dim(), a.dim(), true);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& [k, v] : a.basis_product(i, j)) c.set({i, j}, k, v);
    return c;
}

Cochain Cochain::identity(const StructureAlgebra& a) {
    Cochain c(1, a.dim(), a.dim(), true);
    for (int i = 0; i < a.dim(); ++i) c.set({i}, i, 1);
    return c;
}

std::size_t Cochain::offset(const std::vector<int>& inputs) const {
    if (static_cast<int>(inputs.size()) != p_) throw std::invalid_argument("cochain arity mismatch");
    std::size_t idx = 0;
    for (int x : inputs) {
        if (x < 0 || x >= n_) throw std::out_of_range("cochain input out of range");
        idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x);
    }
    return idx * static_cast<std::size_t>(m_);
}

std::vector<int> Cochain::tuple(std::size_t idx) const { return TupleSpace{n_, p_, 0}.at(idx); }

CoeffVector Cochain::value(const std::vector<int>& inputs) const {
    std::size_t o = offset(inputs);
    return CoeffVector(data_.begin() + static_cast<long>(o), data_.begin() + static_cast<long>(o + static_cast<std::size_t>(m_)));
}

void Cochain::add_value(const std::vector<int>& inputs, const CoeffVector& v, const Rational& s) {
    std::size_t o = offset(inputs);
    for (int k = 0; k < m_; ++k) data_[o + static_cast<std::size_t>(k)] += s * v[static_cast<std::size_t>(k)];
}

CoeffVector Cochain::eval(const std::vector<CoeffVector>& args) const {
    if (static_cast<int>(args.size()) != p_) throw std::invalid_argument("cochain arity mismatch");
    CoeffVector out = zero_vec(m_);
    std::vector<int> t(static_cast<std::size_t>(p_), 0);
    std::function<void(int, Rational)> rec = [&](int slot, Rational coef) {
        if (slot == p_) {
            auto v = value(t);
            for (int k = 0; k < m_; ++k) out[static_cast<std::size_t>(k)] += coef * v[static_cast<std::size_t>(k)];
            return;
        }
        for (int i = 0; i < n_; ++i) {
            const Rational& c = args[static_cast<std::size_t>(slot)][static_cast<std::size_t>(i)];
            if (ncalc::is_zero(c)) continue;
            t[static_cast<std::size_t>(slot)] = i;
            rec(slot + 1, coef * c);
        }
    };
    rec(0, Rational(1));
    return out;
}

bool Cochain::normalized() const {
    for (std::size_t t = 0; t < tuple_count(); ++t) {
        auto tup = tuple(t);
        if (std::find(tup.begin(), tup.end(), 0) == tup.end()) continue;
        for (int k = 0; k < m_; ++k)
            if (!ncalc::is_zero(data_[t * static_cast<std::size_t>(m_) + static_cast<std::size_t>(k)])) return false;
    }
    return true;
}

bool Cochain::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return ncalc::is_zero(q); });
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.data_.size() != data_.size() || o.p_ != p_) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (o.data_.size() != data_.size() || o.p_ != p_) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Cochain Cochain::scaled(const Rational& s) const {
    Cochain r = *this;
    for (auto& q : r.data_) q *= s;
    return r;
}

// ---- differentials

Chain chain_differential(const Bimodule& m, const Chain& c) {
    const StructureAlgebra& a = m.algebra();
    const int p = c.degree;
    Chain out(std::max(p - 1, 0), c.reduced);
    if (p == 0) return out;
    for (const auto& [key, coef] : c.terms) {
        const auto sz = key.size();
        for (const auto& [k, v] : m.right(key[0], key[1])) {
            std::vector<int> nk{k};
            nk.insert(nk.end(), key.begin() + 2, key.end());
            out.add(nk, coef * v);
        }
        for (int i = 1; i < p; ++i) {
            Rational s = i % 2 ? -coef : coef;
            for (const auto& [k, v] : a.basis_product(key[static_cast<std::size_t>(i)], key[static_cast<std::size_t>(i + 1)]))
                out.add(concat3(key, static_cast<std::size_t>(i), static_cast<std::size_t>(i + 2), {k}, sz), s * v);
        }
        Rational s = p % 2 ? -coef : coef;
        for (const auto& [k, v] : m.left(key[sz - 1], key[0])) {
            std::vector<int> nk{k};
            nk.insert(nk.end(), key.begin() + 1, key.end() - 1);
            out.add(nk, s * v);
        }
    }
    return out;
}

Cochain cochain_differential(const Bimodule& m, const Cochain& f) {
    const StructureAlgebra& a = m.algebra();
    const int p = f.degree();
    Cochain g = Cochain::zero(m, p + 1);
    TupleSpace ts{a.dim(), p + 1, 0};
    for (std::size_t idx = 0; idx < ts.size(); ++idx) {
        auto t = ts.at(idx);
        std::vector<int> tail(t.begin() + 1, t.end()), head(t.begin(), t.end() - 1);
        g.add_value(t, m.act_left(t[0], f.value(tail)));
        for (int i = 1; i <= p; ++i) {
            Rational s = i % 2 ? -1 : 1;
            for (const auto& [k, v] : a.basis_product(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]))
                g.add_value(t, f.value(concat3(t, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i + 1), {k}, t.size())), s * v);
        }
        g.add_value(t, m.act_right(f.value(head), t.back()), (p + 1) % 2 ? -1 : 1);
    }
    return g;
}

// ---- Gerstenhaber structure

Cochain cup(const StructureAlgebra& a, const Cochain& f, const Cochain& g) {
    require_algebra_valued(f);
    require_algebra_valued(g);
    const int p = f.degree(), q = g.degree();
    Cochain r(p + q, a.dim(), a.dim(), true);
    for (std::size_t idx = 0; idx < r.tuple_count(); ++idx) {
        auto t = r.tuple(idx);
        auto fv = f.value(std::vector<int>(t.begin(), t.begin() + p));
        if (all_zero(fv)) continue;
        r.add_value(t, a.mul(fv, g.value(std::vector<int>(t.begin() + p, t.end()))));
    }
    return r;
}

Cochain circle_product(const Cochain& f, const Cochain& g) {
    require_algebra_valued(f);
    require_algebra_valued(g);
    const int p = f.degree(), q = g.degree();
    if (p + q - 1 < 0) throw std::invalid_argument("circle product of two 0-cochains");
    const int n = f.alg_dim();
    Cochain r(p + q - 1, n, n, true);
    for (std::size_t idx = 0; idx < r.tuple_count(); ++idx) {
        auto t = r.tuple(idx);
        for (int i = 1; i <= p; ++i) {
            Rational s = ((i - 1) * (q - 1)) % 2 ? -1 : 1;
            auto lo = static_cast<std::size_t>(i - 1);
            auto gv = g.value(std::vector<int>(t.begin() + static_cast<long>(lo), t.begin() + static_cast<long>(lo) + q));
            for (int k = 0; k < n; ++k) {
                const Rational& c = gv[static_cast<std::size_t>(k)];
                if (is_zero(c)) continue;
                r.add_value(t, f.value(concat3(t, lo, lo + static_cast<std::size_t>(q), {k}, t.size())), s * c);
            }
        }
    }
    return r;
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
    const int p = f.degree(), q = g.degree();
    Cochain fg = circle_product(f, g), gf = circle_product(g, f);
    return ((p - 1) * (q - 1)) % 2 ? fg + gf : fg - gf;
}

Chain chain_contraction(const StructureAlgebra& a, const Cochain& c, const Chain& ch) {
    require_algebra_valued(c);
    const int p = c.degree(), k = ch.degree;
    if (k < p) throw std::invalid_argument("contraction needs chain degree at least the cochain degree");
    Chain out(k - p, ch.reduced);
    for (const auto& [key, coef] : ch.terms) {
        auto cv = c.value(std::vector<int>(key.begin() + 1, key.begin() + 1 + p));
        auto prod = a.mul(a.basis_vector(key[0]), cv);
        for (int r = 0; r < a.dim(); ++r) {
            const Rational& v = prod[static_cast<std::size_t>(r)];
            if (is_zero(v)) continue;
            std::vector<int> nk{r};
            nk.insert(nk.end(), key.begin() + 1 + p, key.end());
            out.add(nk, coef * v);
        }
    }
    return out;
}

Chain chain_lie(const StructureAlgebra&, const Cochain& c, const Chain& ch) {
    require_algebra_valued(c);
    const int p = c.degree(), k = ch.degree;
    if (k < p - 1) throw std::invalid_argument("Lie derivative needs chain degree at least p - 1");
    const int n = c.alg_dim();
    Chain out(k - p + 1, ch.reduced);
    for (const auto& [key, coef] : ch.terms) {
        for (int i = 0; i <= k - p; ++i) {
            Rational s = ((p - 1) * (i + 1)) % 2 ? -coef : coef;
            auto lo = static_cast<std::size_t>(i + 1);
            auto cv = c.value(std::vector<int>(key.begin() + static_cast<long>(lo), key.begin() + static_cast<long>(lo) + p));
            for (int r = 0; r < n; ++r)
                if (!is_zero(cv[static_cast<std::size_t>(r)]))
                    out.add(concat3(key, lo, lo + static_cast<std::size_t>(p), {r}, key.size()), s * cv[static_cast<std::size_t>(r)]);
        }
        for (int j = std::max(k - p + 1, 0); j <= k; ++j) {
            if (p == 0) break;
            Rational s = (k * (j + 1)) % 2 ? -coef : coef;
            std::vector<int> in(key.begin() + j + 1, key.end());
            in.insert(in.end(), key.begin(), key.begin() + (p + j - k));
            auto cv = c.value(in);
            for (int r = 0; r < n; ++r) {
                if (is_zero(cv[static_cast<std::size_t>(r)])) continue;
                std::vector<int> nk{r};
                nk.insert(nk.end(), key.begin() + (p + j - k), key.begin() + j + 1);
                out.add(nk, s * cv[static_cast<std::size_t>(r)]);
            }
        }
    }
    return out;
}

// ---- homology and cohomology

namespace {

std::vector<SparseVec> columns_of(const SparseMatrix& m) {
    std::vector<std::map<int, Rational>> cols(static_cast<std::size_t>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.data[static_cast<std::size_t>(r)]) cols[static_cast<std::size_t>(c)][r] = v;
    std::vector<SparseVec> out;
    out.reserve(cols.size());
    for (auto& c : cols) out.push_back(make_sparse(std::move(c)));
    return out;
}

// representatives of ker / im, chosen greedily from the kernel basis
std::vector<SparseVec> quotient_reps(const std::vector<SparseVec>& kernel, const std::vector<SparseVec>& image) {
    Echelon e;
    for (const auto& v : image) e.insert(v);
    std::vector<SparseVec> reps;
    for (const auto& v : kernel)
        if (e.insert(v)) reps.push_back(v);
    return reps;
}

struct ChainIndex {
    int m, n, p;
    bool reduced;
    TupleSpace slots() const { return TupleSpace{n, p, reduced ? 1 : 0}; }
    std::size_t size() const { return slots().size() * static_cast<std::size_t>(m); }
    std::vector<int> key(std::size_t idx) const {
        std::vector<int> k{static_cast<int>(idx % static_cast<std::size_t>(m))};
        auto t = slots().at(idx / static_cast<std::size_t>(m));
        k.insert(k.end(), t.begin(), t.end());
        return k;
    }
    std::size_t index(const std::vector<int>& key) const {
        return *slots().index(key, 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(key[0]);
    }
};

SparseVec chain_vector(const ChainIndex& ix, const Chain& c) {
    std::map<int, Rational> e;
    for (const auto& [k, v] : c.terms) e[static_cast<int>(ix.index(k))] += v;
    return make_sparse(std::move(e));
}

// matrix of b: C^p -> C^{p+1} on (normalized) cochain coordinates
SparseMatrix cochain_matrix(const Bimodule& mod, int p, bool reduced) {
    const StructureAlgebra& a = mod.algebra();
    const int n = a.dim(), m = mod.dim();
    TupleSpace src{n, p, reduced ? 1 : 0}, dst{n, p + 1, reduced ? 1 : 0};
    auto col = [&](const std::vector<int>& t, std::size_t from, std::size_t len, int k) -> std::optional<int> {
        auto i = src.index(t, from, len);
        if (!i) return std::nullopt;
        return static_cast<int>(*i * static_cast<std::size_t>(m) + static_cast<std::size_t>(k));
    };
    SparseMatrix mat(static_cast<int>(dst.size() * static_cast<std::size_t>(m)), static_cast<int>(src.size() * static_cast<std::size_t>(m)));
    for (std::size_t ti = 0; ti < dst.size(); ++ti) {
        auto t = dst.at(ti);
        std::vector<std::map<int, Rational>> rows(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            if (auto c = col(t, 1, static_cast<std::size_t>(p), j))
                for (const auto& [k, v] : mod.left(t[0], j)) rows[static_cast<std::size_t>(k)][*c] += v;
            if (auto c = col(t, 0, static_cast<std::size_t>(p), j))
                for (const auto& [k, v] : mod.right(j, t.back())) rows[static_cast<std::size_t>(k)][*c] += (p + 1) % 2 ? -v : v;
        }
        for (int i = 1; i <= p; ++i) {
            Rational s = i % 2 ? -1 : 1;
            for (const auto& [r, v] : a.basis_product(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)])) {
                auto merged = concat3(t, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i + 1), {r}, t.size());
                for (int k = 0; k < m; ++k)
                    if (auto c = col(merged, 0, merged.size(), k)) rows[static_cast<std::size_t>(k)][*c] += s * v;
            }
        }
        for (int k = 0; k < m; ++k)
            mat.data[ti * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)] = make_sparse(std::move(rows[static_cast<std::size_t>(k)]));
    }
    return mat;
}

Cochain cochain_from_vector(const Bimodule& mod, int p, bool reduced, const SparseVec& v) {
    Cochain c = Cochain::zero(mod, p);
    TupleSpace ts{mod.algebra().dim(), p, reduced ? 1 : 0};
    auto m = static_cast<std::size_t>(mod.dim());
    for (const auto& [i, q] : v) c.set(ts.at(static_cast<std::size_t>(i) / m), static_cast<int>(static_cast<std::size_t>(i) % m), q);
    return c;
}

}  // namespace

HomologyResult hh_homology(const Bimodule& mod, int max_degree, bool reduced, const Caps& caps) {
    HomologyResult res;
    const int n = mod.algebra().dim(), m = mod.dim();
    std::vector<SparseMatrix> d;   // d[p]: C_p -> C_{p-1}
    for (int p = 0; p <= max_degree + 1; ++p) {
        ChainIndex src{m, n, p, reduced};
        caps.check(src.size(), "Hochschild chain space");
        res.complex_dims.push_back(static_cast<int>(src.size()));
        if (p == 0) {
            d.emplace_back(0, static_cast<int>(src.size()));
            continue;
        }
        ChainIndex dst{m, n, p - 1, reduced};
        std::vector<SparseVec> cols;
        for (std::size_t i = 0; i < src.size(); ++i) {
            Chain c(p, reduced);
            c.add(src.key(i), 1);
            cols.push_back(chain_vector(dst, chain_differential(mod, c)));
        }
        d.push_back(SparseMatrix::from_columns(static_cast<int>(dst.size()), cols));
    }
    res.complex_dims.pop_back();
    std::vector<int> rk;
    for (const auto& mat : d) rk.push_back(static_cast<int>(rank(mat)));
    for (int p = 0; p <= max_degree; ++p) {
        auto up = static_cast<std::size_t>(p);
        res.ranks.push_back(rk[up]);
        res.dims.push_back(res.complex_dims[up] - rk[up] - rk[up + 1]);
        auto reps = quotient_reps(nullspace(d[up]), columns_of(d[up + 1]));
        ChainIndex ix{m, n, p, reduced};
        std::vector<Chain> cyc;
        for (const auto& v : reps) {
            Chain c(p, reduced);
            for (const auto& [i, q] : v) c.add(ix.key(static_cast<std::size_t>(i)), q);
            cyc.push_back(std::move(c));
        }
        res.cycles.push_back(std::move(cyc));
        if (static_cast<int>(res.cycles.back().size()) != res.dims.back()) throw std::logic_error("homology bookkeeping mismatch");
    }
    return res;
}

CohomologyResult hh_cohomology(const Bimodule& mod, int max_degree, bool reduced, const Caps& caps) {
    CohomologyResult res;
    std::vector<SparseMatrix> d;   // d[p]: C^p -> C^{p+1}
    for (int p = 0; p <= max_degree; ++p) {
        TupleSpace ts{mod.algebra().dim(), p + 1, reduced ? 1 : 0};
        caps.check(ts.size() * static_cast<std::size_t>(mod.dim()), "Hochschild cochain space");
        d.push_back(cochain_matrix(mod, p, reduced));
        res.complex_dims.push_back(d.back().cols);
    }
    std::vector<int> rk;
    for (const auto& mat : d) rk.push_back(static_cast<int>(rank(mat)));
    for (int p = 0; p <= max_degree; ++p) {
        auto up = static_cast<std::size_t>(p);
        int incoming = p ? rk[up - 1] : 0;
        res.ranks.push_back(rk[up]);
        res.dims.push_back(res.complex_dims[up] - rk[up] - incoming);
        std::vector<SparseVec> image = p ? columns_of(d[up - 1]) : std::vector<SparseVec>{};
        std::vector<Cochain> reps;
        for (const auto& v : quotient_reps(nullspace(d[up]), image)) reps.push_back(cochain_from_vector(mod, p, reduced, v));
        res.cocycles.push_back(std::move(reps));
        if (static_cast<int>(res.cocycles.back().size()) != res.dims.back()) throw std::logic_error("cohomology bookkeeping mismatch");
    }
    return res;
}

std::vector<CoeffVector> center(const StructureAlgebra& a) {
    const int n = a.dim();
    SparseMatrix mat(n * n, n);
    std::vector<std::map<int, Rational>> rows(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, v] : a.basis_product(j, i)) rows[static_cast<std::size_t>(i * n + k)][j] += v;
            for (const auto& [k, v] : a.basis_product(i, j)) rows[static_cast<std::size_t>(i * n + k)][j] -= v;
        }
    for (std::size_t r = 0; r < rows.size(); ++r) mat.data[r] = make_sparse(std::move(rows[r]));
    std::vector<CoeffVector> out;
    for (const auto& v : nullspace(mat)) {
        CoeffVector z = zero_vec(n);
        for (const auto& [i, q] : v) z[static_cast<std::size_t>(i)] = q;
        out.push_back(std::move(z));
    }
    return out;
}

DerivationSpace derivation_space(const StructureAlgebra& a) {
    Bimodule mod = Bimodule::regular(a);
    DerivationSpace out;
    for (const auto& v : nullspace(cochain_matrix(mod, 1, false))) out.derivations.push_back(cochain_from_vector(mod, 1, false, v));
    Echelon inner;
    for (const auto& v : columns_of(cochain_matrix(mod, 0, false)))
        if (inner.insert(v)) out.inner.push_back(cochain_from_vector(mod, 1, false, v));
    out.dim_der = static_cast<int>(out.derivations.size());
    out.dim_inner = static_cast<int>(out.inner.size());
    out.dim_outer = out.dim_der - out.dim_inner;
    return out;
}

AltReport alt_comparison(const StructureAlgebra& a, int p) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i)) throw std::invalid_argument("alt comparison needs a commutative algebra");
    Bimodule mod = Bimodule::regular(a);
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == p) {
            subsets.push_back(cur);
            return;
        }
        for (int x = from; x < n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    std::map<std::vector<int>, int> sub_index;
    for (std::size_t i = 0; i < subsets.size(); ++i) sub_index.emplace(subsets[i], static_cast<int>(i));
    AltReport rep;
    rep.p = p;
    rep.source_dim = n * static_cast<int>(subsets.size());
    rep.scalar = true;
    rep.lands_in_cycles = true;
    bool first = true;
    for (int mi = 0; mi < n; ++mi)
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            Chain alt(p, false);
            std::vector<int> perm(static_cast<std::size_t>(p));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                int inv = 0;
                for (int x = 0; x < p; ++x)
                    for (int y = x + 1; y < p; ++y)
                        if (perm[static_cast<std::size_t>(x)] > perm[static_cast<std::size_t>(y)]) ++inv;
                std::vector<int> key{mi};
                for (int x : perm) key.push_back(subsets[s][static_cast<std::size_t>(x)]);
                alt.add(key, inv % 2 ? -1 : 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (p >= 1 && !chain_differential(mod, alt).is_zero()) rep.lands_in_cycles = false;
            // pi: sort the slots with sign, zero on repeats
            std::map<int, Rational> img;
            for (const auto& [key, c] : alt.terms) {
                std::vector<int> slots(key.begin() + 1, key.end());
                int inv = 0;
                for (std::size_t x = 0; x < slots.size(); ++x)
                    for (std::size_t y = x + 1; y < slots.size(); ++y) {
                        if (slots[x] == slots[y]) inv = -1000000;
                        if (slots[x] > slots[y]) ++inv;
                    }
                if (inv < 0) continue;
                std::sort(slots.begin(), slots.end());
                img[key[0] * static_cast<int>(subsets.size()) + sub_index.at(slots)] += inv % 2 ? -c : c;
            }
            SparseVec v = make_sparse(std::move(img));
            int self = mi * static_cast<int>(subsets.size()) + static_cast<int>(s);
            if (v.size() != 1 || v[0].first != self) {
                rep.scalar = false;
                continue;
            }
            if (first) {
                rep.factor = v[0].second;
                first = false;
            } else if (v[0].second != rep.factor) {
                rep.scalar = false;
            }
        }
    if (first) rep.factor = 0;
    return rep;
}

std::vector<int> graded_hh(const BasedAlgebra& a, int weight, int max_degree, const Caps& caps) {
    if (!a.graded()) throw std::invalid_argument("graded Hochschild homology needs a graded algebra");
    std::vector<std::vector<FormKey>> bases;
    std::vector<std::map<FormKey, int, FormKeyLess>> index;
    for (int p = 0; p <= max_degree + 1; ++p) {
        bases.push_back(form_basis(a, p, weight, caps));
        std::map<FormKey, int, FormKeyLess> ix;
        for (std::size_t i = 0; i < bases.back().size(); ++i) ix.emplace(bases.back()[i], static_cast<int>(i));
        index.push_back(std::move(ix));
    }
    std::vector<int> rk{0};
    for (int p = 1; p <= max_degree + 1; ++p) {
        auto up = static_cast<std::size_t>(p);
        std::vector<SparseVec> cols;
        for (const auto& key : bases[up]) {
            std::map<int, Rational> e;
            auto put = [&](FormKey k, const Rational& c) {
                for (std::size_t i = 1; i < k.size(); ++i)
                    if (k[i].empty()) return;
                e[index[up - 1].at(k)] += c;
            };
            for (const auto& [w, c] : a.mul_basis(key[0], key[1])) {
                FormKey k{w};
                k.insert(k.end(), key.begin() + 2, key.end());
                put(k, c);
            }
            for (int i = 1; i < p; ++i)
                for (const auto& [w, c] : a.mul_basis(key[static_cast<std::size_t>(i)], key[static_cast<std::size_t>(i + 1)])) {
                    FormKey k(key.begin(), key.begin() + i);
                    k.push_back(w);
                    k.insert(k.end(), key.begin() + i + 2, key.end());
                    put(k, i % 2 ? -c : c);
                }
            for (const auto& [w, c] : a.mul_basis(key.back(), key[0])) {
                FormKey k{w};
                k.insert(k.end(), key.begin() + 1, key.end() - 1);
                put(k, p % 2 ? -c : c);
            }
            cols.push_back(make_sparse(std::move(e)));
        }
        rk.push_back(static_cast<int>(rank_of_vectors(cols)));
    }
    std::vector<int> dims;
    for (int p = 0; p <= max_degree; ++p) {
        auto up = static_cast<std::size_t>(p);
        dims.push_back(static_cast<int>(bases[up].size()) - rk[up] - rk[up + 1]);
    }
    return dims;
}

SmoothnessReport formal_smoothness_check(const StructureAlgebra& a) {
    const int n = a.dim();
    SmoothnessReport rep;
    if (n == 1) {
        rep.smooth = true;
        return rep;
    }
    const int nb = n - 1;
    const int fdim = n * nb * n;   // A (x) Abar (x) A
    auto fidx = [&](int i, int b, int j) { return (i * nb + (b - 1)) * n + j; };
    auto var = [&](int s, int f) { return (s - 1) * fdim + f; };
    auto odim = n * nb;            // Omega^1 = A (x) Abar
    auto oidx = [&](int a0, int a1) { return a0 * nb + (a1 - 1); };

    // phi(e_i (x) e_b (x) e_j) = e_i d(e_b e_j) - (e_i e_b) d e_j
    std::vector<SparseVec> phi(static_cast<std::size_t>(fdim));
    for (int i = 0; i < n; ++i)
        for (int b = 1; b < n; ++b)
            for (int j = 0; j < n; ++j) {
                std::map<int, Rational> e;
                for (const auto& [r, c] : a.basis_product(b, j))
                    if (r != 0) e[oidx(i, r)] += c;
                if (j != 0)
                    for (const auto& [r, c] : a.basis_product(i, b)) e[oidx(r, j)] -= c;
                phi[static_cast<std::size_t>(fidx(i, b, j))] = make_sparse(std::move(e));
            }

    std::vector<std::map<int, Rational>> rows;
    std::map<int, Rational> rhs;
    for (int s = 1; s < n; ++s) {
        std::vector<std::map<int, Rational>> block(static_cast<std::size_t>(odim));
        for (int f = 0; f < fdim; ++f)
            for (const auto& [o, c] : phi[static_cast<std::size_t>(f)]) block[static_cast<std::size_t>(o)][var(s, f)] += c;
        for (int o = 0; o < odim; ++o) {
            if (o == oidx(0, s)) rhs[static_cast<int>(rows.size())] = 1;
            rows.push_back(std::move(block[static_cast<std::size_t>(o)]));
        }
    }
    // s(d(bc)) - e_b s(dc) - s(db) e_c = 0
    for (int b = 1; b < n; ++b)
        for (int c = 1; c < n; ++c) {
            std::vector<std::map<int, Rational>> block(static_cast<std::size_t>(fdim));
            for (const auto& [r, v] : a.basis_product(b, c)) {
                if (r == 0) continue;
                for (int f = 0; f < fdim; ++f) block[static_cast<std::size_t>(f)][var(r, f)] += v;
            }
            for (int i = 0; i < n; ++i)
                for (int x = 1; x < n; ++x)
                    for (int j = 0; j < n; ++j) {
                        int f = fidx(i, x, j);
                        for (const auto& [r, v] : a.basis_product(b, i)) block[static_cast<std::size_t>(fidx(r, x, j))][var(c, f)] -= v;
                        for (const auto& [r, v] : a.basis_product(j, c)) block[static_cast<std::size_t>(fidx(i, x, r))][var(b, f)] -= v;
                    }
            for (auto& row : block) rows.push_back(std::move(row));
        }
    SparseMatrix mat(static_cast<int>(rows.size()), nb * fdim);
    for (std::size_t r = 0; r < rows.size(); ++r) mat.data[r] = make_sparse(std::move(rows[r]));
    auto sol = solve(mat, make_sparse(std::move(rhs)));
    rep.smooth = sol.has_value();
    if (sol) {
        rep.splitting.resize(static_cast<std::size_t>(nb));
        for (const auto& [v, c] : *sol) {
            int s = v / fdim + 1, f = v % fdim;
            int j = f % n, ib = f / n;
            rep.splitting[static_cast<std::size_t>(s - 1)][{ib / nb, ib % nb + 1, j}] = c;
        }
    }
    auto self = hh_cohomology(Bimodule::regular(a), 2);
    rep.hh2_self = self.dims[2];
    rep.hh2_enveloping = hh_cohomology(Bimodule::enveloping(a), 2).dims[2];
    if (!rep.smooth && !self.cocycles[2].empty()) rep.witness = self.cocycles[2][0];
    return rep;
}

MoritaReport morita_trace_check(const StructureAlgebra& a, int r, const Caps& caps) {
    caps.check(static_cast<std::size_t>(r * r * a.dim()), "matrix algebra");
    StructureAlgebra b = algebras::matrices_over(a, r);
    auto commutators = [](const StructureAlgebra& s) {
        Echelon e;
        for (int i = 0; i < s.dim(); ++i)
            for (int j = i + 1; j < s.dim(); ++j) {
                SparseVec v = axpy(s.basis_product(i, j), -1, s.basis_product(j, i));
                e.insert(v);
            }
        return e;
    };
    Echelon ca = commutators(a), cb = commutators(b);
    std::vector<int> qa, qb;
    for (int i = 0; i < a.dim(); ++i)
        if (!ca.is_pivot(i)) qa.push_back(i);
    for (int i = 0; i < b.dim(); ++i)
        if (!cb.is_pivot(i)) qb.push_back(i);
    MoritaReport rep;
    rep.hh0_algebra = static_cast<int>(qa.size());
    rep.hh0_matrices = static_cast<int>(qb.size());
    const int n = a.dim();
    const DenseMatrix& rb = b.rebase_matrix();
    rep.trace_matrix.assign(qa.size(), std::vector<Rational>(qb.size(), Rational(0)));
    for (std::size_t col = 0; col < qb.size(); ++col) {
        std::map<int, Rational> tr;
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < n; ++k) {
                const Rational& c = rb[static_cast<std::size_t>((i * r + i) * n + k)][static_cast<std::size_t>(qb[col])];
                if (!is_zero(c)) tr[k] += c;
            }
        SparseVec red = ca.reduce(make_sparse(std::move(tr)));
        for (std::size_t row = 0; row < qa.size(); ++row) rep.trace_matrix[row][col] = entry(red, qa[row]);
    }
    rep.invertible = qa.size() == qb.size() && dense_rank(rep.trace_matrix) == qa.size();
    return rep;
}

PolyvectorResult cocycle_to_polyvector(const Bimodule& m, const Cochain& c) {
    if (!c.normalized()) throw std::invalid_argument("cochain does not vanish on unit inputs");
    PolyvectorResult res;
    Cochain dc = cochain_differential(m, c);
    for (std::size_t t = 0; t < dc.tuple_count(); ++t) {
        auto tup = dc.tuple(t);
        auto v = dc.value(tup);
        if (!all_zero(v)) {
            res.defect_inputs = tup;
            res.defect_value = v;
            return res;
        }
    }
    res.ok = true;
    const int n = m.algebra().dim();
    TupleSpace ts{n, c.degree(), 1};
    for (int a0 = 0; a0 < n; ++a0)
        for (std::size_t i = 0; i < ts.size(); ++i) {
            auto t = ts.at(i);
            std::vector<int> key{a0};
            key.insert(key.end(), t.begin(), t.end());
            res.map.emplace(key, m.act_left(a0, c.value(t)));
        }
    return res;
}

}  // namespace ncalc
