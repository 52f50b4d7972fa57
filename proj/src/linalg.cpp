#include "eacode/linalg.hpp"

#include <set>
#include <string>

#include "eacode/error.hpp"

namespace eacode {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, what);
}

void check_points(const Field& f, std::span<const Elem> pts) {
    std::set<Elem> seen;
    for (Elem x : pts) {
        if (!f.contains(x)) throw Error(ErrorCode::BadFormat, "evaluation point outside field");
        if (!seen.insert(x).second)
            throw Error(ErrorCode::DuplicateEvaluationPoint, "point " + std::to_string(x) + " repeated");
    }
}

// In-place Gaussian elimination over the column range [0, ncols). When
// `reduce` is set the result is fully reduced (RREF); otherwise only the
// forward pass runs. Zero elimination factors are skipped, and the pivot row
// is scanned sparsely, which keeps block-diagonal inputs cheap.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t ncols, bool reduce) {
    const Field& f = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r) {
            auto a = m.row(p), b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = m.row(r);
        Elem s = f.inv(prow[c]);
        nz.clear();
        for (std::size_t j = c; j < C; ++j) {
            if (prow[j] == 0) continue;
            prow[j] = f.mul(prow[j], s);
            nz.push_back(j);
        }
        for (std::size_t i = reduce ? 0 : r + 1; i < R; ++i) {
            if (i == r) continue;
            auto row = m.row(i);
            Elem factor = row[c];
            if (factor == 0) continue;
            for (std::size_t j : nz) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows,
                         std::size_t cols_if_empty) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!field.contains(rows[i][j])) throw Error(ErrorCode::BadFormat, "matrix entry outside field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "hconcat");
    if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat row counts differ");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix Matrix::vconcat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "vconcat");
    if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vconcat column counts differ");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
        auto src = row(idx[i]);
        std::copy(src.begin(), src.end(), m.row(i).begin());
    }
    return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    for (std::size_t j : idx)
        if (j >= cols_) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
    Matrix m(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
        throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

bool Matrix::is_zero() const {
    for (Elem e : data_)
        if (e != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "matrix product");
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    const Field& f = a.field();
    Matrix m(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = m.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Elem s = a(i, k);
            if (s == 0) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (brow[j] != 0) out[j] = f.add(out[j], f.mul(s, brow[j]));
        }
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "matrix sum");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a.field().add(a(i, j), b(i, j));
    return m;
}

Vector mul(const Vector& x, const Matrix& m) {
    if (x.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product shapes");
    const Field& f = m.field();
    Vector y(m.cols(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        auto r = m.row(k);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (r[j] != 0) y[j] = f.add(y[j], f.mul(x[k], r[j]));
    }
    return y;
}

Vector add(const Field& f, const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum lengths");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Echelon rref(Matrix m) {
    auto piv = eliminate(m, m.cols(), true);
    return {std::move(m), std::move(piv)};
}

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return eliminate(w, w.cols(), false).size();
}

std::optional<Vector> try_solve(const Matrix& m, const Vector& y) {
    if (y.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "solve: target length");
    const Field& f = m.field();
    // x M = y  <=>  M^T x^T = y^T. Reduce [M^T | y^T] and read off x.
    Matrix aug(f, m.cols(), m.rows() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) aug(j, i) = m(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) aug(j, m.rows()) = y[j];
    auto piv = eliminate(aug, m.rows(), true);
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        if (aug(i, m.rows()) != 0) return std::nullopt;
    Vector x(m.rows(), 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.rows());
    return x;
}

Vector solve(const Matrix& m, const Vector& y) {
    auto x = try_solve(m, y);
    if (!x) throw Error(ErrorCode::NoSolution, "target not in row-space image");
    return *x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::Singular, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug = Matrix::hconcat(m, Matrix::identity(m.field(), n));
    auto piv = eliminate(aug, n, true);
    if (piv.size() != n) throw Error(ErrorCode::Singular, "matrix is rank deficient");
    return aug.block(0, n, n, n);
}

Subspace kernel(const Matrix& m) {
    // Reduce [M | I]; rows whose M-part vanished carry left-kernel vectors.
    const std::size_t r = m.rows(), c = m.cols();
    Matrix aug = Matrix::hconcat(m, Matrix::identity(m.field(), r));
    auto piv = eliminate(aug, c, true);
    Matrix k = aug.block(piv.size(), r - piv.size(), c, r);
    return Subspace::span(k);
}

Subspace row_space(const Matrix& m) { return Subspace::span(m); }

Subspace Subspace::span(const Matrix& generators) {
    auto e = rref(generators);
    return Subspace(e.reduced.block(0, e.rank(), 0, generators.cols()));
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
    return Subspace(Matrix::identity(field, ambient_dim));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector length");
    // Reduce v against the RREF basis.
    const Field& f = field();
    Vector w = v;
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        auto b = basis_.row(i);
        while (b[col] == 0) ++col;
        Elem s = w[col];
        if (s == 0) continue;
        for (std::size_t j = col; j < w.size(); ++j)
            if (b[j] != 0) w[j] = f.sub(w[j], f.mul(s, b[j]));
    }
    for (Elem e : w)
        if (e != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ambient dims");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        auto r = other.basis().row(i);
        if (!contains(Vector(r.begin(), r.end()))) return false;
    }
    return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "sum: ambient dims");
    return Subspace::span(Matrix::vconcat(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "intersection: ambient dims");
    const std::size_t n = u.ambient_dim();
    Matrix z(u.field(), u.dim() + v.dim(), 2 * n);
    z.set_block(0, 0, u.basis());
    z.set_block(0, n, u.basis());
    z.set_block(u.dim(), 0, v.basis());
    auto piv = eliminate(z, n, true);
    std::size_t s = piv.size();
    return Subspace::span(z.block(s, z.rows() - s, n, n));
}

Subspace complement_within(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "complement_within: ambient dims");
    if (!w.contains(u)) throw Error(ErrorCode::NotContained, "U is not a subspace of W");
    Subspace acc = u;
    Matrix extra(u.field(), 0, u.ambient_dim());
    for (std::size_t i = 0; i < w.dim() && acc.dim() < w.dim(); ++i) {
        auto r = w.basis().row(i);
        Vector vec(r.begin(), r.end());
        if (acc.contains(vec)) continue;
        Matrix one = Matrix::from_rows(u.field(), {vec});
        extra = Matrix::vconcat(extra, one);
        acc = sum(acc, Subspace::span(one));
    }
    return Subspace::span(extra);
}

Matrix cauchy(const Field& f, std::span<const Elem> alphas, std::span<const Elem> betas) {
    std::vector<Elem> all(alphas.begin(), alphas.end());
    all.insert(all.end(), betas.begin(), betas.end());
    check_points(f, all);
    Matrix m(f, alphas.size(), betas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = 0; j < betas.size(); ++j) m(i, j) = f.inv(f.sub(alphas[i], betas[j]));
    return m;
}

Matrix vandermonde(const Field& f, std::span<const Elem> zetas, std::size_t k) {
    check_points(f, zetas);
    if (k > zetas.size()) throw Error(ErrorCode::DimensionMismatch, "Vandermonde needs K <= N");
    Matrix m(f, k, zetas.size());
    for (std::size_t j = 0; j < zetas.size(); ++j) {
        Elem p = 1;
        for (std::size_t i = 0; i < k; ++i) {
            m(i, j) = p;
            p = f.mul(p, zetas[j]);
        }
    }
    return m;
}

Matrix grs(const Field& f, std::span<const Elem> v, std::span<const Elem> alphas,
           std::optional<std::size_t> rows) {
    if (v.size() != alphas.size()) throw Error(ErrorCode::DimensionMismatch, "GRS multiplier count");
    check_points(f, alphas);
    for (Elem x : v) {
        if (!f.contains(x)) throw Error(ErrorCode::BadFormat, "multiplier outside field");
        if (x == 0) throw Error(ErrorCode::ZeroMultiplier, "GRS multiplier is zero");
    }
    const std::size_t n = alphas.size();
    const std::size_t k = rows.value_or(n);
    Matrix m(f, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem p = v[j];
        for (std::size_t i = 0; i < k; ++i) {
            m(i, j) = p;
            p = f.mul(p, alphas[j]);
        }
    }
    return m;
}

Matrix grs_dual(const Field& f, std::span<const Elem> v, std::span<const Elem> alphas, std::size_t k) {
    grs(f, v, alphas, 0);  // validates inputs
    const std::size_t n = alphas.size();
    if (k < 1 || k >= n) throw Error(ErrorCode::DimensionMismatch, "GRS dual needs 1 <= K < N");
    std::vector<Elem> u(n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem d = v[j];
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) d = f.mul(d, f.sub(alphas[j], alphas[i]));
        u[j] = f.inv(d);
    }
    return grs(f, u, alphas, n - k);
}

bool lemma3_check(const Field& f, std::span<const Elem> v, std::span<const Elem> alphas, std::size_t k) {
    Matrix gd = grs_dual(f, v, alphas, k);
    Matrix full = grs(f, v, alphas);
    const std::size_t n = alphas.size();
    Matrix fm = full.block(k, n - k, 0, n);
    return rank(gd * fm.transpose()) == n - k;
}

std::vector<Elem> ascending_points(const Field& f, std::size_t count, std::size_t start) {
    if (start + count > f.q())
        throw Error(ErrorCode::FieldTooSmall, "need " + std::to_string(start + count) +
                                                  " distinct points, field has " + std::to_string(f.q()));
    std::vector<Elem> pts(count);
    for (std::size_t i = 0; i < count; ++i) pts[i] = static_cast<Elem>(start + i);
    return pts;
}

}  // namespace eacode
