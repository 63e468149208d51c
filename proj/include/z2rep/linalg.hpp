#pragma once

#include "z2rep/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace z2rep {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    std::vector<Vector> row_list() const;

    Matrix transpose() const;
    Vector apply(std::span<const Rational> x) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form. `reduced` keeps only the nonzero rows, one per pivot.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Row echelon form by fraction-free (Bareiss) elimination over the integers,
/// then normalized and back-substituted into RREF over the rationals.
Echelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

/// Basis of {x : a x = 0}, returned in RREF (each vector has a leading 1 on its
/// first nonzero coordinate).
std::vector<Vector> nullspace(const Matrix& a);

/// Bareiss determinant of a square matrix.
Rational determinant(const Matrix& a);

/// Unique solution of a x = b, or nullopt when the system is inconsistent or
/// underdetermined.
std::optional<Vector> solve_unique(const Matrix& a, std::span<const Rational> b);

/// Coordinates of v modulo the row space of an RREF basis (entries at pivot
/// columns cleared). Returns the remainder vector in full coordinates.
Vector reduce_modulo(const Echelon& basis, Vector v);

/// Whether v lies in the row space described by an RREF basis.
bool in_row_space(const Echelon& basis, const Vector& v);

/// Puts a family of vectors into canonical RREF form (the spanned subspace's
/// unique reduced basis).
std::vector<Vector> canonical_basis(const std::vector<Vector>& vectors, std::size_t cols);

}  // namespace z2rep
