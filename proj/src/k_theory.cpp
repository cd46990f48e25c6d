#include "ncalc/k_theory.hpp"

namespace ncalc {

namespace {

void require_findim(const BasedAlgebra& a) {
    if (a.kind() != BasedAlgebra::Kind::FinDim) throw MathError("K-theory characters need a finite-dimensional algebra");
}

void require_same(const DRContext& ctx, const BasedAlgebra& a) {
    if (!ctx.algebra().same_as(a)) throw MathError("DR context belongs to a different algebra");
}

DRClass project_as(DRContext& ctx, const NCForm& f, int degree) {
    DRClass c = ctx.project(f);
    c.degree = degree;
    return c;
}

Elem elem_of(const NCForm& f) {
    Elem e;
    for (const auto& [k, c] : f.terms()) {
        if (k.size() != 1) throw MathError("expected a form of degree 0");
        elem_add(e, k[0], c);
    }
    return e;
}

Elem random_elem(const BasedAlgebra& a, Rng& rng) {
    Elem e;
    for (const Word& w : a.basis(0))
        if (rng.coin()) elem_add(e, w, rng.small_rational());
    return e;
}

std::vector<NCForm> mat_vec(const BasedAlgebra& a, const FormMatrix& m, const std::vector<NCForm>& v) {
    std::vector<NCForm> out(v.size());
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j) out[static_cast<std::size_t>(i)] += form_mul(a, m.at(i, j), v[static_cast<std::size_t>(j)]);
    return out;
}

std::vector<NCForm> column_times(const BasedAlgebra& a, const std::vector<NCForm>& v, const NCForm& f) {
    std::vector<NCForm> out;
    for (const auto& x : v) out.push_back(form_mul(a, x, f));
    return out;
}

std::vector<NCForm> column_add(std::vector<NCForm> x, const std::vector<NCForm>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

FormMatrix FormMatrix::identity(int r) {
    FormMatrix m(r);
    for (int i = 0; i < r; ++i) m.at(i, i) = NCForm::from_elem(elem_unit());
    return m;
}

FormMatrix FormMatrix::from_elems(const std::vector<std::vector<Elem>>& rows) {
    int r = static_cast<int>(rows.size());
    FormMatrix m(r);
    for (int i = 0; i < r; ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != rows.size()) throw MathError("matrix must be square");
        for (int j = 0; j < r; ++j) m.at(i, j) = NCForm::from_elem(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

bool FormMatrix::is_zero() const {
    for (const auto& f : entries)
        if (!f.is_zero()) return false;
    return true;
}

FormMatrix& FormMatrix::operator+=(const FormMatrix& o) {
    if (o.size != size) throw MathError("matrix sizes differ");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
}

FormMatrix& FormMatrix::operator-=(const FormMatrix& o) {
    if (o.size != size) throw MathError("matrix sizes differ");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
    return *this;
}

FormMatrix matrix_mul(const BasedAlgebra& a, const FormMatrix& x, const FormMatrix& y) {
    if (x.size != y.size) throw MathError("matrix sizes differ");
    FormMatrix r(x.size);
    for (int i = 0; i < x.size; ++i)
        for (int k = 0; k < x.size; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.size; ++j) r.at(i, j) += form_mul(a, x.at(i, k), y.at(k, j));
        }
    return r;
}

FormMatrix matrix_d(const BasedAlgebra& a, const FormMatrix& x) {
    FormMatrix r(x.size);
    for (std::size_t i = 0; i < x.entries.size(); ++i) r.entries[i] = de_rham_d(a, x.entries[i]);
    return r;
}

FormMatrix matrix_power(const BasedAlgebra& a, const FormMatrix& x, int k) {
    if (k < 0) throw MathError("negative matrix power");
    FormMatrix r = FormMatrix::identity(x.size);
    for (int i = 0; i < k; ++i) r = matrix_mul(a, r, x);
    return r;
}

NCForm matrix_trace(const FormMatrix& x) {
    NCForm t;
    for (int i = 0; i < x.size; ++i) t += x.at(i, i);
    return t;
}

FormMatrix direct_sum(const FormMatrix& x, const FormMatrix& y) {
    FormMatrix r(x.size + y.size);
    for (int i = 0; i < x.size; ++i)
        for (int j = 0; j < x.size; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.size; ++i)
        for (int j = 0; j < y.size; ++j) r.at(x.size + i, x.size + j) = y.at(i, j);
    return r;
}

IdempotentMatrix::IdempotentMatrix(BasedAlgebra a, FormMatrix e) : alg_(std::move(a)), e_(std::move(e)) {
    require_findim(alg_);
    for (const auto& f : e_.entries)
        if (!f.is_zero() && f.degree() != 0) throw MathError("idempotent entries must lie in the algebra");
    if (matrix_mul(alg_, e_, e_) != e_) throw MathError("matrix is not idempotent");
}

InvertibleMatrix::InvertibleMatrix(BasedAlgebra a, FormMatrix g, FormMatrix inverse)
    : alg_(std::move(a)), g_(std::move(g)), inv_(std::move(inverse)) {
    require_findim(alg_);
    FormMatrix one = FormMatrix::identity(g_.size);
    if (inv_.size != g_.size || matrix_mul(alg_, g_, inv_) != one || matrix_mul(alg_, inv_, g_) != one)
        throw MathError("matrix is not invertible with the given inverse");
}

InvertibleMatrix operator*(const InvertibleMatrix& x, const InvertibleMatrix& y) {
    const auto& a = x.alg_;
    return InvertibleMatrix(a, matrix_mul(a, x.g_, y.g_), matrix_mul(a, y.inv_, x.inv_));
}

InvertibleMatrix elementary_matrix(const BasedAlgebra& a, int r, int i, int j, const Elem& c) {
    if (i == j || i < 0 || j < 0 || i >= r || j >= r) throw MathError("elementary matrix needs distinct indices in range");
    FormMatrix g = FormMatrix::identity(r), inv = FormMatrix::identity(r);
    g.at(i, j) = NCForm::from_elem(c);
    inv.at(i, j) = NCForm::from_elem(elem_scaled(c, -1));
    return InvertibleMatrix(a, g, inv);
}

InvertibleMatrix random_invertible(const BasedAlgebra& a, int r, Rng& rng, int factors) {
    InvertibleMatrix g(a, FormMatrix::identity(r), FormMatrix::identity(r));
    if (r < 2) return g;
    for (int f = 0; f < factors; ++f) {
        int i = static_cast<int>(rng.uniform(0, r - 1));
        int j = static_cast<int>(rng.uniform(0, r - 2));
        if (j >= i) ++j;
        g = g * elementary_matrix(a, r, i, j, random_elem(a, rng));
    }
    return g;
}

IdempotentMatrix conjugate(const IdempotentMatrix& e, const InvertibleMatrix& g) {
    const auto& a = e.algebra();
    return IdempotentMatrix(a, matrix_mul(a, matrix_mul(a, g.matrix(), e.matrix()), g.inverse()));
}

IdempotentMatrix direct_sum(const IdempotentMatrix& e, const IdempotentMatrix& f) {
    return IdempotentMatrix(e.algebra(), direct_sum(e.matrix(), f.matrix()));
}

bool idempotent_identities(const IdempotentMatrix& e) {
    const auto& a = e.algebra();
    const FormMatrix& m = e.matrix();
    FormMatrix de = matrix_d(a, m);
    FormMatrix comp = FormMatrix::identity(m.size) - m;
    return matrix_mul(a, m, de) == matrix_mul(a, de, comp) && matrix_mul(a, de, m) == matrix_mul(a, comp, de);
}

bool dr_cohomologous(DRContext& ctx, const DRClass& x, const DRClass& y) {
    if (x.degree != y.degree) throw MathError("classes of different degrees");
    NCForm diff = x.representative - y.representative;
    if (diff.is_zero()) return true;
    if (x.degree == 0) return false;
    const auto& a = ctx.algebra();
    if (a.graded()) throw MathError("cohomology comparison is implemented for finite-dimensional algebras");
    const GradedPiece& target = ctx.piece(x.degree, 0);
    Echelon exact;
    for (const FormKey& k : ctx.quotient_basis(x.degree - 1, 0))
        exact.insert(ctx.vectorize(target, ctx.project(de_rham_d(a, NCForm::term(k))).representative));
    return exact.reduce(ctx.vectorize(target, ctx.project(diff).representative)).empty();
}

C0Result chern_c0(DRContext& ctx, const IdempotentMatrix& e) {
    require_same(ctx, e.algebra());
    C0Result r;
    r.c0 = project_as(ctx, matrix_trace(e.matrix()), 0);
    r.d_c0 = project_as(ctx, de_rham_d(e.algebra(), r.c0.representative), 1);
    r.closed = r.d_c0.is_zero();
    return r;
}

C1Result chern_c1(DRContext& ctx, const InvertibleMatrix& g) {
    require_same(ctx, g.algebra());
    const auto& a = g.algebra();
    C1Result r;
    r.form = matrix_trace(matrix_mul(a, g.inverse(), matrix_d(a, g.matrix())));
    r.c1 = project_as(ctx, r.form, 1);
    r.b = elem_of(hochschild_b(a, r.form));
    r.b_cycle = r.b.empty();
    return r;
}

ChernResult chern_ch_k(DRContext& ctx, const IdempotentMatrix& e, int k) {
    require_same(ctx, e.algebra());
    if (k < 0) throw MathError("negative Chern index");
    const auto& a = e.algebra();
    FormMatrix de = matrix_d(a, e.matrix());
    ChernResult r;
    r.k = k;
    r.form = matrix_trace(matrix_mul(a, e.matrix(), matrix_power(a, de, 2 * k))).scaled(1 / factorial(k));
    r.ch = project_as(ctx, r.form, 2 * k);
    r.d_ch = project_as(ctx, de_rham_d(a, r.ch.representative), 2 * k + 1);
    r.closed = r.d_ch.is_zero();
    return r;
}

std::vector<NCForm> ConnectionData::project(const std::vector<NCForm>& column) const {
    if (column.size() != static_cast<std::size_t>(e_.size())) throw MathError("column has the wrong length");
    return mat_vec(e_.algebra(), e_.matrix(), column);
}

std::vector<NCForm> ConnectionData::apply(const std::vector<NCForm>& column) const {
    std::vector<NCForm> dv;
    for (const auto& f : column) dv.push_back(de_rham_d(e_.algebra(), f));
    return project(dv);
}

ConnectionData grassmann_connection(const IdempotentMatrix& e) { return ConnectionData(e); }

bool leibniz_check(const ConnectionData& c, Rng& rng, int samples) {
    const auto& a = c.idempotent().algebra();
    int r = c.idempotent().size();
    for (int s = 0; s < samples; ++s) {
        std::vector<NCForm> v;
        for (int i = 0; i < r; ++i) v.push_back(NCForm::from_elem(random_elem(a, rng)));
        auto m = c.project(v);
        NCForm x = NCForm::from_elem(random_elem(a, rng));
        auto lhs = c.apply(column_times(a, m, x));
        auto rhs = column_add(column_times(a, c.apply(m), x), column_times(a, m, de_rham_d(a, x)));
        if (lhs != rhs) return false;
    }
    return true;
}

bool curvature_linearity_check(const ConnectionData& c, Rng& rng, int samples) {
    const auto& e = c.idempotent();
    const auto& a = e.algebra();
    int r = e.size();
    FormMatrix de = matrix_d(a, e.matrix());
    FormMatrix curv = matrix_mul(a, matrix_mul(a, matrix_mul(a, e.matrix(), de), de), e.matrix());
    for (int s = 0; s < samples; ++s) {
        int p = static_cast<int>(rng.uniform(0, 1));
        std::vector<NCForm> v;
        for (int i = 0; i < r; ++i) v.push_back(random_form(a, rng, p, 0, 2));
        auto mu = c.project(v);
        NCForm alpha = random_form(a, rng, static_cast<int>(rng.uniform(0, 1)), 0, 2);
        auto nn = [&](const std::vector<NCForm>& x) { return c.apply(c.apply(x)); };
        if (nn(column_times(a, mu, alpha)) != column_times(a, nn(mu), alpha)) return false;
        if (nn(mu) != mat_vec(a, curv, mu)) return false;
    }
    return true;
}

CurvatureResult connection_curvature(DRContext& ctx, const ConnectionData& c, int k) {
    const auto& e = c.idempotent();
    require_same(ctx, e.algebra());
    if (k < 1) throw MathError("curvature power must be positive");
    const auto& a = e.algebra();
    FormMatrix de = matrix_d(a, e.matrix());
    CurvatureResult r;
    r.k = k;
    r.curvature = matrix_mul(a, matrix_mul(a, matrix_mul(a, e.matrix(), de), de), e.matrix());
    r.trace = matrix_trace(matrix_power(a, r.curvature, k));
    r.trace_class = project_as(ctx, r.trace, 2 * k);
    r.ch = chern_ch_k(ctx, e, k).ch;
    r.agrees = project_as(ctx, r.trace.scaled(1 / factorial(k)), 2 * k) == r.ch;
    return r;
}

}  // namespace ncalc
