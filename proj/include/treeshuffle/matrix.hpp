#pragma once

#include <cstddef>
#include <vector>

#include "treeshuffle/rational.hpp"

namespace treeshuffle {

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

/// a - s*I.
RationalMatrix subtract_scaled_identity(const RationalMatrix& a, const Rational& s);

/// Dense matrix of exact integers. Row-stochastic rational matrices are
/// scaled into this form so that repeated products avoid per-entry gcd work.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Integer trace() const;
    bool is_zero() const;

    bool operator==(const IntegerMatrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix subtract_scaled_identity(const IntegerMatrix& a, const Integer& s);

/// Basis of {x : A x = 0}, computed by exact Gauss-Jordan elimination.
/// One basis vector per free column, in column order.
std::vector<std::vector<Rational>> null_space(RationalMatrix a);

} // namespace treeshuffle
