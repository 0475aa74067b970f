#pragma once

#include <optional>
#include <vector>

#include "vlab/rational.hpp"

namespace vlab {

/// Coordinate vector over the exact scalar. Length is the ambient dimension.
using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const Rational& r, const Vector& v);
Vector vec_neg(const Vector& v);
bool vec_is_zero(const Vector& v);
Vector zero_vector(int dim);
Vector unit_vector(int dim, int axis);

/// Negative, zero or positive when a is lexicographically before, equal to or after b.
int lex_compare(const Vector& a, const Vector& b);
struct LexLess {
    bool operator()(const Vector& a, const Vector& b) const { return lex_compare(a, b) < 0; }
};

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix outer(const Vector& a, const Vector& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vector row(int i) const;
    Matrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

Matrix mat_scale(const Rational& r, const Matrix& m);
Vector mat_vec(const Matrix& m, const Vector& v);

/// Determinant by exact Gaussian elimination; empty matrix has determinant 1.
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Unique solution of m x = b, or nullopt when m is singular.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
int rank_of_rows(std::vector<Vector> rows);

/// Exact n x n linear map with its determinant computed at construction.
/// Inverse and transpose-inverse require a nonzero determinant.
class LinearMap {
public:
    explicit LinearMap(Matrix entries);

    static LinearMap identity(int n);
    static LinearMap diagonal(const std::vector<Rational>& d);
    static LinearMap scaling(int n, const Rational& r);
    /// diag(-1, 1, ..., 1): the default determinant -1 reflection.
    static LinearMap reflect_first(int n);
    /// Swap of the first two coordinates (n >= 2), determinant -1.
    static LinearMap swap_first_two(int n);

    int dim() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }
    const Rational& det() const { return det_; }
    bool invertible() const { return !det_.is_zero(); }

    Vector apply(const Vector& v) const { return mat_vec(entries_, v); }
    LinearMap inverse() const;           // SingularMap when det == 0
    LinearMap transposed() const;
    LinearMap transpose_inverse() const; // SingularMap when det == 0

    friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.entries_ == b.entries_;
    }

private:
    Matrix entries_;
    Rational det_;
};

} // namespace vlab
