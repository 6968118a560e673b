#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rb/scalar.hpp"

namespace rb {

// Dense exact matrix, row-major. Products skip zero entries, which keeps the
// mostly sparse structure matrices cheap.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, int order = 1);

    static Matrix identity(size_t n, int order = 1);
    static Matrix column(const std::vector<Scalar>& v);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    int order() const { return order_; }

    Scalar& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix kron(const Matrix& o) const;
    Matrix transpose() const;
    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const Matrix& b);
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    size_t nonzeros() const;

    // Reduced row echelon form; pivot columns reported in order.
    Matrix rref(std::vector<size_t>* pivots = nullptr) const;
    size_t rank() const;
    // Basis of the right kernel as columns, one per free column of the RREF,
    // normalized to have 1 in that free coordinate.
    Matrix nullspace() const;
    // Some X with (*this) X = b, or nullopt if inconsistent. Free variables are 0.
    std::optional<Matrix> solve(const Matrix& b) const;
    Matrix inverse() const;

    // First (row, col) where the two matrices differ, if any.
    std::optional<std::pair<size_t, size_t>> first_difference(const Matrix& o) const;
    std::vector<std::vector<std::string>> to_strings() const;

private:
    size_t r_ = 0, c_ = 0;
    int order_ = 1;
    std::vector<Scalar> d_;
};

}  // namespace rb
