#include "rank2/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rank2 {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycScalar(1);
    return m;
}

Matrix Matrix::scalar(int n, const CycScalar& s) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("Matrix::from_columns: ragged column");
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

Vec Matrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_column(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix+: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix-: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const CycScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const CycScalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

Matrix Matrix::scaled(const CycScalar& s) const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::power(long e) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::power: not square");
    if (e < 0) throw std::invalid_argument("Matrix::power: negative exponent");
    Matrix acc = identity(rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;   // harmless extra square on the last step
        e >>= 1;
    }
    return acc;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
    Vec out(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const CycScalar& aij = at(i, j);
            if (aij.is_zero()) continue;
            out[i] += aij * v[j];
        }
    }
    return out;
}

namespace {

// Clear denominators row by row so fraction-free elimination stays inside
// the Laurent subring (cheap arithmetic, no per-operation gcd).
void clear_row_denominators(Matrix& a) {
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const CycScalar& e = a.at(i, j);
            if (e.is_zero() || e.den().is_one()) continue;
            CycScalar d(e.den(), LaurentPoly(1));
            for (int k = 0; k < a.cols(); ++k) a.at(i, k) = a.at(i, k) * d;
        }
    }
}

// Bareiss echelon form; returns the pivot column of each pivot row.
// Pivots are chosen exactly as in reduced elimination (first nonzero in
// column scan order), so downstream bases are unchanged.
std::vector<int> echelon_ff(Matrix& a) {
    clear_row_denominators(a);
    std::vector<int> pivots;
    CycScalar prev(1);
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        for (int i = row + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero()) {
                if (prev.is_one()) continue;
                for (int j = col + 1; j < a.cols(); ++j)
                    if (!a.at(i, j).is_zero()) a.at(i, j) = a.at(row, col) * a.at(i, j) / prev;
                continue;
            }
            for (int j = col + 1; j < a.cols(); ++j) {
                CycScalar t = a.at(row, col) * a.at(i, j) - a.at(i, col) * a.at(row, j);
                a.at(i, j) = t.is_zero() ? t : t / prev;
            }
            a.at(i, col) = CycScalar();
        }
        prev = a.at(row, col);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int i = row; i < rows_; ++i) {
            if (!at(i, col).is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        CycScalar inv = at(row, col).inverse();
        for (int j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const CycScalar f = at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix copy = *this;
    return static_cast<int>(echelon_ff(copy).size());
}

Matrix Matrix::kernel() const {
    Matrix r = *this;
    std::vector<int> pivots = echelon_ff(r);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols_);
        v[j] = CycScalar(1);
        // back substitution over the echelon rows
        for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
            CycScalar acc;
            for (int k = pivots[i] + 1; k < cols_; ++k) {
                if (k > j && is_pivot[k] == false) continue;   // later free vars are zero
                if (!r.at(i, k).is_zero() && !v[k].is_zero()) acc += r.at(i, k) * v[k];
            }
            v[pivots[i]] = -acc / r.at(i, pivots[i]);
        }
        basis.push_back(std::move(v));
    }
    return from_columns(cols_, basis);
}

CycScalar Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
    if (rows_ == 0) return CycScalar(1);
    Matrix a = *this;
    // track the factor introduced by denominator clearing
    CycScalar scale(1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const CycScalar& e = a.at(i, j);
            if (!e.is_zero() && !e.den().is_one()) scale = scale * CycScalar(e.den(), LaurentPoly(1));
        }
    int sign = 1;
    {
        // replicate echelon_ff but track row swaps
        clear_row_denominators(a);
        CycScalar prev(1);
        int row = 0;
        for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
            int p = -1;
            for (int i = row; i < a.rows(); ++i)
                if (!a.at(i, col).is_zero()) { p = i; break; }
            if (p < 0) return CycScalar();
            if (p != row) {
                for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
                sign = -sign;
            }
            for (int i = row + 1; i < a.rows(); ++i) {
                if (a.at(i, col).is_zero()) {
                    if (prev.is_one()) continue;
                    for (int j = col + 1; j < a.cols(); ++j)
                        if (!a.at(i, j).is_zero()) a.at(i, j) = a.at(row, col) * a.at(i, j) / prev;
                    continue;
                }
                for (int j = col + 1; j < a.cols(); ++j) {
                    CycScalar t = a.at(row, col) * a.at(i, j) - a.at(i, col) * a.at(row, j);
                    a.at(i, j) = t.is_zero() ? t : t / prev;
                }
                a.at(i, col) = CycScalar();
            }
            prev = a.at(row, col);
            ++row;
        }
        CycScalar det = a.at(rows_ - 1, cols_ - 1) / scale;
        return sign > 0 ? det : -det;
    }
}

Matrix Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("Matrix::solve: shape mismatch");
    Matrix aug = h_concat(*this, b);
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
        if (p >= cols_) throw std::domain_error("Matrix::solve: inconsistent system");
    Matrix x(cols_, b.cols_);
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols_; ++j) x.at(pivots[r], j) = aug.at(static_cast<int>(r), cols_ + j);
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
    Matrix aug = h_concat(*this, identity(rows_));
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= rows_)
        throw std::domain_error("Matrix::inverse: singular matrix");
    for (int p : pivots)
        if (p >= rows_) throw std::domain_error("Matrix::inverse: singular matrix");
    Matrix out(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) out.at(i, j) = aug.at(i, rows_ + j);
    return out;
}

std::vector<int> Matrix::pivot_columns() const {
    Matrix copy = *this;
    return echelon_ff(copy);
}

Matrix Matrix::column_space() const {
    return columns(pivot_columns());
}

Matrix Matrix::h_concat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("Matrix::h_concat: shape mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::v_concat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("Matrix::v_concat: shape mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
    return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    m.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

bool is_scalar_matrix(const Matrix& m, CycScalar& c_out) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) { c_out = CycScalar(); return true; }
    c_out = m.at(0, 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j) {
                if (m.at(i, j) != c_out) return false;
            } else if (!m.at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace rank2
