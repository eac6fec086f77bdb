#include "treeshuffle/matrix.hpp"

#include <stdexcept>

namespace treeshuffle {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& q : a_)
        if (q != 0) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::logic_error("matrix product: shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::logic_error("matrix difference: shape mismatch");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RationalMatrix subtract_scaled_identity(const RationalMatrix& a, const Rational& s) {
    RationalMatrix c = a;
    for (std::size_t i = 0; i < c.rows() && i < c.cols(); ++i) c.at(i, i) -= s;
    return c;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Integer IntegerMatrix::trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& n : a_)
        if (n != 0) return false;
    return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::logic_error("matrix product: shape mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                // c[i][j] += a[i][k] * b[k][j], in place.
                mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
            }
        }
    return c;
}

IntegerMatrix subtract_scaled_identity(const IntegerMatrix& a, const Integer& s) {
    IntegerMatrix c = a;
    for (std::size_t i = 0; i < c.rows() && i < c.cols(); ++i) c.at(i, i) -= s;
    return c;
}

std::vector<std::vector<Rational>> null_space(RationalMatrix a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col_of_row;

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));

        Rational inv = 1 / a.at(row, col);
        for (std::size_t j = 0; j < cols; ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational factor = a.at(i, col);
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= factor * a.at(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -a.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace treeshuffle
