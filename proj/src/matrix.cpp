#include "rb/matrix.hpp"

#include "rb/error.hpp"

namespace rb {

namespace {
std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }
}  // namespace

Matrix::Matrix(size_t rows, size_t cols, int order)
    : r_(rows), c_(cols), order_(order), d_(rows * cols, Scalar::zero(order)) {}

Matrix Matrix::identity(size_t n, int order) {
    Matrix m(n, n, order);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(order);
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    int order = v.empty() ? 1 : v[0].order();
    Matrix m(v.size(), 1, order);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) fail("ShapeMismatch", "product of " + shape(*this) + " and " + shape(o));
    Matrix out(r_, o.c_, order_ != 1 ? order_ : o.order_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                const Scalar& b = o(k, j);
                if (b.is_zero()) continue;
                out(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail("ShapeMismatch", "sum of " + shape(*this) + " and " + shape(o));
    Matrix out = *this;
    if (order_ == 1) out.order_ = o.order_;
    for (size_t k = 0; k < d_.size(); ++k)
        if (!o.d_[k].is_zero()) out.d_[k] += o.d_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.d_)
        if (!x.is_zero()) x = -x;
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out = *this;
    if (s.order() != 1) out.order_ = s.order();
    for (auto& x : out.d_)
        if (!x.is_zero()) x *= s;
    return out;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix out(r_ * o.r_, c_ * o.c_, order_ != 1 ? order_ : o.order_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            const Scalar& a = (*this)(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < o.r_; ++k)
                for (size_t l = 0; l < o.c_; ++l) {
                    const Scalar& b = o(k, l);
                    if (!b.is_zero()) out(i * o.r_ + k, j * o.c_ + l) = a * b;
                }
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(c_, r_, order_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) fail("ShapeMismatch", "block outside " + shape(*this));
    Matrix out(nr, nc, order_);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
    if (r0 + b.r_ > r_ || c0 + b.c_ > c_) fail("ShapeMismatch", "block outside " + shape(*this));
    if (order_ == 1) order_ = b.order_;
    for (size_t i = 0; i < b.r_; ++i)
        for (size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (r_ != o.r_) fail("ShapeMismatch", "hstack of " + shape(*this) + " and " + shape(o));
    Matrix out(r_, c_ + o.c_, order_ != 1 ? order_ : o.order_);
    out.set_block(0, 0, *this);
    out.set_block(0, c_, o);
    return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (c_ != o.c_) fail("ShapeMismatch", "vstack of " + shape(*this) + " and " + shape(o));
    Matrix out(r_ + o.r_, c_, order_ != 1 ? order_ : o.order_);
    out.set_block(0, 0, *this);
    out.set_block(r_, 0, o);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t k = 0; k < d_.size(); ++k)
        if (d_[k] != o.d_[k]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : d_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

size_t Matrix::nonzeros() const {
    size_t n = 0;
    for (const auto& x : d_) n += !x.is_zero();
    return n;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
    Matrix m = *this;
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
        size_t p = row;
        while (p < r_ && m(p, col).is_zero()) ++p;
        if (p == r_) continue;
        if (p != row)
            for (size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(row, j));
        Scalar inv = m(row, col).inv();
        for (size_t j = col; j < c_; ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (size_t i = 0; i < r_; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar t = m(i, col);
            for (size_t j = col; j < c_; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= t * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = piv;
    return m;
}

size_t Matrix::rank() const {
    std::vector<size_t> piv;
    rref(&piv);
    return piv.size();
}

Matrix Matrix::nullspace() const {
    std::vector<size_t> piv;
    Matrix m = rref(&piv);
    std::vector<bool> is_piv(c_, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < c_; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Matrix out(c_, free_cols.size(), order_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        out(f, k) = Scalar::one(order_);
        for (size_t i = 0; i < piv.size(); ++i)
            if (!m(i, f).is_zero()) out(piv[i], k) = -m(i, f);
    }
    return out;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.r_ != r_) fail("ShapeMismatch", "solve with " + shape(*this) + " and rhs " + shape(b));
    Matrix aug = hstack(b);
    std::vector<size_t> piv;
    Matrix m = aug.rref(&piv);
    for (size_t p : piv)
        if (p >= c_) return std::nullopt;
    Matrix x(c_, b.c_, aug.order());
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < b.c_; ++j) x(piv[i], j) = m(i, c_ + j);
    return x;
}

Matrix Matrix::inverse() const {
    if (r_ != c_) fail("NotInvertible", "non-square matrix " + shape(*this));
    std::vector<size_t> piv;
    Matrix m = hstack(Matrix::identity(r_, order_)).rref(&piv);
    if (piv.size() < r_ || (r_ > 0 && piv[r_ - 1] >= c_)) fail("NotInvertible", "singular " + shape(*this) + " matrix");
    return m.block(0, c_, r_, r_);
}

std::optional<std::pair<size_t, size_t>> Matrix::first_difference(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return std::make_pair(size_t(0), size_t(0));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != o(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> out(r_, std::vector<std::string>(c_));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out[i][j] = (*this)(i, j).str();
    return out;
}

}  // namespace rb
