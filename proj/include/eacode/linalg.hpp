#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eacode/gf.hpp"

namespace eacode {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over F_q.
///
/// Row-vector convention throughout: a linear map acts as x -> x * M, so an
/// r x c matrix maps F_q^r to F_q^c.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(const Field& field, std::size_t n);
    /// Throws DimensionMismatch on ragged input, BadFormat on out-of-range entries.
    static Matrix from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows,
                            std::size_t cols_if_empty = 0);
    static Matrix hconcat(const Matrix& a, const Matrix& b);
    static Matrix vconcat(const Matrix& a, const Matrix& b);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<std::vector<Elem>> to_rows() const;

    Matrix transpose() const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_cols(std::span<const std::size_t> idx) const;
    /// M(I, J) in the usual sub-matrix notation.
    Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        return select_rows(rows).select_cols(cols);
    }
    /// Contiguous slices [r0, r0 + nr) x [c0, c0 + nc).
    Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// x * M for a row vector x.
Vector mul(const Vector& x, const Matrix& m);
Vector add(const Field& f, const Vector& a, const Vector& b);

/// Reduced row-echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Any x with x * M = y, or nullopt.
std::optional<Vector> try_solve(const Matrix& m, const Vector& y);
/// As try_solve; throws NoSolution.
Vector solve(const Matrix& m, const Vector& y);
/// Throws Singular for non-square or rank-deficient input.
Matrix inverse(const Matrix& m);

class Subspace;

/// Left kernel {x : x * M = 0}.
Subspace kernel(const Matrix& m);
/// Span of the rows of M.
Subspace row_space(const Matrix& m);

/// Subspace of F_q^n held as its canonical RREF basis, so equality of
/// subspaces is equality of bases.
class Subspace {
public:
    Subspace(Field field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}
    /// Span of the rows of `generators`.
    static Subspace span(const Matrix& generators);
    static Subspace full(const Field& field, std::size_t ambient_dim);

    const Field& field() const { return basis_.field(); }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}
    Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus: reduce [[U, U], [V, 0]]; rows with zero left half span U ∩ V.
Subspace intersection(const Subspace& u, const Subspace& v);
/// A direct-sum complement of U inside W. Throws NotContained unless U ⊆ W.
Subspace complement_within(const Subspace& u, const Subspace& w);

// Structured matrices. All evaluation points must lie in the field.

/// Entry (i, j) = 1 / (alpha_i - beta_j). Throws DuplicateEvaluationPoint
/// unless the combined point list is pairwise distinct.
Matrix cauchy(const Field& f, std::span<const Elem> alphas, std::span<const Elem> betas);
/// K x N, entry (i, j) = zeta_j^i.
Matrix vandermonde(const Field& f, std::span<const Elem> zetas, std::size_t k);
/// rows x N, entry (i, j) = v_j * alpha_j^i. Square (rows == N) is the full
/// generalized Reed-Solomon generator.
Matrix grs(const Field& f, std::span<const Elem> v, std::span<const Elem> alphas,
           std::optional<std::size_t> rows = std::nullopt);
/// Generator of the dual of the code spanned by the first K rows of grs(v, alphas):
/// (N-K) x N, multipliers u_n = (v_n * prod_{i != n} (alpha_n - alpha_i))^-1.
Matrix grs_dual(const Field& f, std::span<const Elem> v, std::span<const Elem> alphas, std::size_t k);
/// rank(G_dual * F^T) == N - K, where F is the last N - K rows of grs(v, alphas).
bool lemma3_check(const Field& f, std::span<const Elem> v, std::span<const Elem> alphas, std::size_t k);

/// Consecutive field elements start, start + 1, ... as integers. Throws
/// FieldTooSmall when they do not fit in F_q.
std::vector<Elem> ascending_points(const Field& f, std::size_t count, std::size_t start = 0);

}  // namespace eacode
