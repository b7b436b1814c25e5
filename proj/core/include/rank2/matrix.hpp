#pragma once

#include <string>
#include <vector>

#include "rank2/scalar.hpp"

namespace rank2 {

using Vec = std::vector<CycScalar>;

/// Dense matrix over Q(zeta_N)(v).  All eliminations pick the first nonzero
/// pivot in row/column order, so every derived basis is deterministic.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix scalar(int n, const CycScalar& s);
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const CycScalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec column(int j) const;
    void set_column(int j, const Vec& v);
    Matrix columns(const std::vector<int>& idx) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const CycScalar& s) const;
    Matrix transpose() const;
    Matrix power(long e) const;          // square matrices; e >= 0
    Matrix inverse() const;              // throws std::domain_error if singular

    Vec apply(const Vec& v) const;       // matrix * vector

    /// Row-reduce in place; returns the pivot column of each pivot row.
    std::vector<int> rref();
    int rank() const;
    CycScalar determinant() const;   // fraction-free elimination

    /// Basis of the null space as columns (deterministic free-variable basis).
    Matrix kernel() const;

    /// Solve A X = B exactly; throws std::domain_error when inconsistent.
    Matrix solve(const Matrix& b) const;

    /// Column-space basis: the columns of A at its pivot positions, as a matrix.
    Matrix column_space() const;
    std::vector<int> pivot_columns() const;

    /// Horizontal / vertical concatenation.
    static Matrix h_concat(const Matrix& a, const Matrix& b);
    static Matrix v_concat(const Matrix& a, const Matrix& b);

    static Matrix kronecker(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<CycScalar> a_;
};

/// True when m is c * I for some scalar c (reported through c_out).
bool is_scalar_matrix(const Matrix& m, CycScalar& c_out);

}  // namespace rank2
