#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ssm {

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, T init = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, init) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    DenseMatrix transposed() const {
        DenseMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix: shape mismatch in product");
        DenseMatrix c(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("DenseMatrix: shape mismatch in difference");
        DenseMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("DenseMatrix: shape mismatch in sum");
        DenseMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

// Antisymmetric square matrix; writes keep a(j,i) = -a(i,j) and a(i,i) = 0.
template <class T>
class AntisymmetricMatrix {
public:
    explicit AntisymmetricMatrix(std::size_t dim) : m_(dim, dim, T(0)) {}

    // Validates an arbitrary square matrix. `tol` bounds |a(i,j)+a(j,i)| for
    // float modes; pass T(0) to require exact antisymmetry.
    static AntisymmetricMatrix from_matrix(const DenseMatrix<T>& m, const T& tol = T(0)) {
        if (m.rows() != m.cols())
            throw std::invalid_argument("AntisymmetricMatrix: matrix not square");
        using std::abs;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!(abs(m(i, i)) <= tol))
                throw std::invalid_argument("AntisymmetricMatrix: nonzero diagonal");
            for (std::size_t j = i + 1; j < m.cols(); ++j)
                if (!(abs(m(i, j) + m(j, i)) <= tol))
                    throw std::invalid_argument("AntisymmetricMatrix: antisymmetry violated");
        }
        AntisymmetricMatrix a(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i + 1; j < m.cols(); ++j) a.set(i, j, m(i, j));
        return a;
    }

    std::size_t dim() const { return m_.rows(); }

    void set(std::size_t i, std::size_t j, T v) {
        if (i == j) throw std::invalid_argument("AntisymmetricMatrix: cannot set diagonal");
        m_(i, j) = v;
        m_(j, i) = -std::move(v);
    }

    const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const DenseMatrix<T>& dense() const { return m_; }

private:
    DenseMatrix<T> m_;
};

}  // namespace ssm
