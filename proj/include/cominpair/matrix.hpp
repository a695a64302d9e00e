#ifndef COMINPAIR_MATRIX_HPP
#define COMINPAIR_MATRIX_HPP

// Dense matrices over an arbitrary scalar type, plus thin skew-symmetric and
// symmetric wrappers that enforce their shape invariant on construction.
// Index subsets are 1-based and strictly increasing, matching the row/column
// index sets used by minors and sub-Pfaffians.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cominpair {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T init = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, init) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < rhs.cols_; ++j) {
                    const T& bkj = rhs(k, j);
                    if (bkj == T(0)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

// Strictly increasing 1-based indices in 1..n.
class IndexSubset {
  public:
    IndexSubset() = default;
    IndexSubset(std::vector<int> indices, int n) : idx_(std::move(indices)) {
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (idx_[k] < 1 || idx_[k] > n)
                throw std::invalid_argument("subset index out of range 1..n");
            if (k > 0 && idx_[k] <= idx_[k - 1])
                throw std::invalid_argument("subset indices must be strictly increasing");
        }
    }

    int size() const { return static_cast<int>(idx_.size()); }
    int operator[](int k) const { return idx_[k]; }
    const std::vector<int>& indices() const { return idx_; }

  private:
    std::vector<int> idx_;
};

// Skew-symmetric n x n matrix; only the strict upper triangle is free.
template <typename T>
class SkewMatrix {
  public:
    explicit SkewMatrix(int n = 0) : n_(n), upper_(static_cast<std::size_t>(n) * n, T(0)) {}

    static SkewMatrix from_full(const Matrix<T>& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("skew matrix must be square");
        SkewMatrix z(m.rows());
        for (int i = 0; i < m.rows(); ++i) {
            if (m(i, i) != T(0)) throw std::invalid_argument("skew matrix has nonzero diagonal");
            for (int j = i + 1; j < m.cols(); ++j) {
                if (m(i, j) != -m(j, i))
                    throw std::invalid_argument("matrix is not skew-symmetric");
                z.set(i, j, m(i, j));
            }
        }
        return z;
    }

    int size() const { return n_; }

    // 0-based accessors; (i,j) with i>j returns the negated mirror entry.
    T at(int i, int j) const {
        if (i == j) return T(0);
        return i < j ? upper_[static_cast<std::size_t>(i) * n_ + j]
                     : -upper_[static_cast<std::size_t>(j) * n_ + i];
    }
    void set(int i, int j, const T& v) {
        if (i == j) {
            if (v != T(0)) throw std::invalid_argument("skew diagonal must stay zero");
            return;
        }
        if (i < j)
            upper_[static_cast<std::size_t>(i) * n_ + j] = v;
        else
            upper_[static_cast<std::size_t>(j) * n_ + i] = -v;
    }

    Matrix<T> to_full() const {
        Matrix<T> m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = at(i, j);
        return m;
    }

  private:
    int n_;
    std::vector<T> upper_;
};

template <typename T>
class SymMatrix {
  public:
    explicit SymMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) {}

    static SymMatrix from_full(const Matrix<T>& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
        SymMatrix s(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
                s.set(i, j, m(i, j));
            }
        return s;
    }

    int size() const { return n_; }
    T at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, const T& v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    Matrix<T> to_full() const {
        Matrix<T> m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = at(i, j);
        return m;
    }

  private:
    int n_;
    std::vector<T> a_;
};

} // namespace cominpair

#endif
