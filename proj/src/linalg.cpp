#include "z2rep/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace z2rep {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const
{
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

std::vector<Vector> Matrix::row_list() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(std::span<const Rational> x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0)
                y[i] += (*this)(i, j) * x[j];
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("dimension mismatch in matrix difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators.
IntegerMatrix clear_denominators(const Matrix& a)
{
    IntegerMatrix m(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    return m;
}

struct BareissResult {
    IntegerMatrix echelon;
    std::vector<std::size_t> pivots;
    bool odd_swaps = false;
};

// Fraction-free forward elimination. All divisions by the previous pivot are exact.
BareissResult bareiss(IntegerMatrix m, std::size_t cols)
{
    BareissResult out;
    const std::size_t rows = m.size();
    Integer previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(m[i][c]) == 0)
                continue;
            if (pivot == rows || abs(m[i][c]) < abs(m[pivot][c]))
                pivot = i;
        }
        if (pivot == rows)
            continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            out.odd_swaps = !out.odd_swaps;
        }
        const Integer& p = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer factor = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer value = p * m[i][j] - factor * m[r][j];
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
                m[i][j] = std::move(value);
            }
            m[i][c] = 0;
        }
        previous = p;
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.echelon = std::move(m);
    return out;
}

}  // namespace

Echelon rref(const Matrix& a)
{
    BareissResult forward = bareiss(clear_denominators(a), a.cols());
    const std::size_t rk = forward.pivots.size();
    Matrix reduced(rk, a.cols());
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            reduced(i, j) = Rational(forward.echelon[i][j]);

    for (std::size_t i = rk; i-- > 0;) {
        const std::size_t pc = forward.pivots[i];
        const Rational inv = 1 / reduced(i, pc);
        for (std::size_t j = pc; j < a.cols(); ++j)
            reduced(i, j) *= inv;
        for (std::size_t above = 0; above < i; ++above) {
            const Rational factor = reduced(above, pc);
            if (sgn(factor) == 0)
                continue;
            for (std::size_t j = pc; j < a.cols(); ++j)
                reduced(above, j) -= factor * reduced(i, j);
        }
    }
    return {std::move(reduced), std::move(forward.pivots)};
}

std::size_t rank(const Matrix& a)
{
    return bareiss(clear_denominators(a), a.cols()).pivots.size();
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols)
{
    return rank(Matrix::from_rows(rows, cols));
}

std::vector<Vector> nullspace(const Matrix& a)
{
    const Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return canonical_basis(basis, a.cols());
}

Rational determinant(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0)
        return 1;
    Rational scale = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        scale *= Rational(l);
    }
    const BareissResult forward = bareiss(clear_denominators(a), a.cols());
    if (forward.pivots.size() < a.rows())
        return 0;
    Rational det(forward.echelon.back().back());
    if (forward.odd_swaps)
        det = -det;
    return det / scale;
}

std::optional<Vector> solve_unique(const Matrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("right-hand side length does not match row count");
    Matrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            augmented(i, j) = a(i, j);
        augmented(i, a.cols()) = b[i];
    }
    const Echelon e = rref(augmented);
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    if (e.pivots.size() != a.cols())
        return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.reduced(i, a.cols());
    return x;
}

Vector reduce_modulo(const Echelon& basis, Vector v)
{
    for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
        const Rational factor = v[basis.pivots[i]];
        if (sgn(factor) == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] -= factor * basis.reduced(i, j);
    }
    return v;
}

bool in_row_space(const Echelon& basis, const Vector& v)
{
    const Vector rest = reduce_modulo(basis, v);
    return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<Vector> canonical_basis(const std::vector<Vector>& vectors, std::size_t cols)
{
    if (vectors.empty())
        return {};
    return rref(Matrix::from_rows(vectors, cols)).reduced.row_list();
}

}  // namespace z2rep
