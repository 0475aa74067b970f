#include "vlab/linalg.hpp"

#include "vlab/errors.hpp"

namespace vlab {

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(ErrorCode::wrong_dimension, "dot of vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector vec_add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(ErrorCode::wrong_dimension, "adding vectors with different lengths");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector vec_sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(ErrorCode::wrong_dimension, "subtracting vectors with different lengths");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector vec_scale(const Rational& r, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = r * v[i];
    return out;
}

Vector vec_neg(const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

bool vec_is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim)); }

Vector unit_vector(int dim, int axis) {
    Vector v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(axis)] = 1;
    return v;
}

int lex_compare(const Vector& a, const Vector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m.cols()))
            fail(ErrorCode::wrong_dimension, "ragged rows in matrix construction");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Matrix Matrix::outer(const Vector& a, const Vector& b) {
    Matrix m(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return m;
}

Vector Matrix::row(int i) const {
    Vector r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::wrong_dimension, "matrix shape mismatch in +");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::wrong_dimension, "matrix shape mismatch in -");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::wrong_dimension, "matrix shape mismatch in *");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix mat_scale(const Rational& r, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r * m.at(i, j);
    return out;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (static_cast<std::size_t>(m.cols()) != v.size())
        fail(ErrorCode::wrong_dimension, "matrix/vector shape mismatch");
    Vector out(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) fail(ErrorCode::wrong_dimension, "determinant of non-square matrix");
    const int n = m.rows();
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const Rational f = m.at(r, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::wrong_dimension, "inverse of non-square matrix");
    const int n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rational p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    const auto inv = inverse(m);
    if (!inv) return std::nullopt;
    return mat_vec(*inv, b);
}

int rank_of_rows(std::vector<Vector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t lead = 0; lead < cols && rank < rows.size(); ++lead) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][lead].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][lead].is_zero()) continue;
            const Rational f = rows[i][lead] / rows[rank][lead];
            for (std::size_t j = lead; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

LinearMap::LinearMap(Matrix entries) : entries_(std::move(entries)), det_(0) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        fail(ErrorCode::wrong_dimension, "linear map entries must form a nonempty square matrix");
    det_ = determinant(entries_);
}

LinearMap LinearMap::identity(int n) { return LinearMap(Matrix::identity(n)); }

LinearMap LinearMap::diagonal(const std::vector<Rational>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return LinearMap(std::move(m));
}

LinearMap LinearMap::scaling(int n, const Rational& r) {
    return diagonal(std::vector<Rational>(static_cast<std::size_t>(n), r));
}

LinearMap LinearMap::reflect_first(int n) {
    std::vector<Rational> d(static_cast<std::size_t>(n), Rational(1));
    d[0] = -1;
    return diagonal(d);
}

LinearMap LinearMap::swap_first_two(int n) {
    if (n < 2) fail(ErrorCode::wrong_dimension, "coordinate swap needs dimension >= 2");
    Matrix m = Matrix::identity(n);
    m.at(0, 0) = 0;
    m.at(1, 1) = 0;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    return LinearMap(std::move(m));
}

LinearMap LinearMap::inverse() const {
    if (!invertible()) fail(ErrorCode::singular_map, "inverse of a singular map");
    return LinearMap(*vlab::inverse(entries_));
}

LinearMap LinearMap::transposed() const { return LinearMap(entries_.transposed()); }

LinearMap LinearMap::transpose_inverse() const {
    if (!invertible()) fail(ErrorCode::singular_map, "transpose-inverse of a singular map");
    return LinearMap(vlab::inverse(entries_.transposed()).value());
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    return LinearMap(a.entries_ * b.entries_);
}

} // namespace vlab
