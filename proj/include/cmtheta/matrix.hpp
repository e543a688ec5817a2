#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cmtheta/bigint.hpp"

namespace cmtheta {

/// Dense row-major matrix over an arbitrary ring-like element type.
template <typename T>
class Matrix
{
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
    }

    template <typename>
    friend class Matrix;

  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T const & fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n, T const & zero, T const & one)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    T const & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_, data_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        std::vector<T> buf;
        buf.reserve(nr * nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                buf.push_back((*this)(r0 + i, c0 + j));
        return Matrix(nr, nc, std::move(buf));
    }

    void set_block(std::size_t r0, std::size_t c0, Matrix const & b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    template <typename F>
    auto map(F && f) const
    {
        using U = decltype(f(data_[0]));
        std::vector<U> buf;
        buf.reserve(data_.size());
        for (auto const & x : data_)
            buf.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(buf));
    }

    friend Matrix operator*(Matrix const & x, Matrix const & y)
    {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix out(x.rows_, y.cols_, x(0, 0) - x(0, 0));
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < y.cols_; ++j) {
                T acc = x(i, 0) * y(0, j);
                for (std::size_t k = 1; k < x.cols_; ++k)
                    acc += x(i, k) * y(k, j);
                out(i, j) = acc;
            }
        return out;
    }

    friend Matrix operator+(Matrix x, Matrix const & y)
    {
        for (std::size_t i = 0; i < x.data_.size(); ++i)
            x.data_[i] += y.data_[i];
        return x;
    }

    friend Matrix operator-(Matrix x, Matrix const & y)
    {
        for (std::size_t i = 0; i < x.data_.size(); ++i)
            x.data_[i] -= y.data_[i];
        return x;
    }

    friend bool operator==(Matrix const & x, Matrix const & y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }
};

using IntMatrix = Matrix<Int>;

IntMatrix int_identity(std::size_t n);

/// J_{2g} = [[0, I], [-I, 0]]
IntMatrix standard_symplectic(std::size_t g);

/// Exact determinant (fraction-free Bareiss elimination).
Int int_det(IntMatrix const & m);

/// Exact inverse of a unimodular integer matrix.
IntMatrix int_inverse_unimodular(IntMatrix const & m);

} // namespace cmtheta
