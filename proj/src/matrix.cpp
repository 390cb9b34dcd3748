#include "halg/matrix.hpp"

#include "halg/error.hpp"

namespace halg {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1L);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw MathError("ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) throw MathError("row size mismatch");
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw MathError("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix sum shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix diff shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

void Mat::append_rows(const Mat& o) {
    if (rows_ == 0 && cols_ == 0) {
        *this = o;
        return;
    }
    if (o.cols_ != cols_) throw MathError("append shape mismatch");
    a_.insert(a_.end(), o.a_.begin(), o.a_.end());
    rows_ += o.rows_;
}

std::vector<size_t> Mat::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
        Scalar inv = at(r, c).inverse();
        for (size_t j = c; j < cols_; ++j)
            if (!at(r, j).is_zero()) at(r, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (size_t j = c; j < cols_; ++j) {
                if (at(r, j).is_zero()) continue;
                at(i, j) -= f * at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t Mat::rank() const {
    Mat m = *this;
    return m.rref().size();
}

Mat Mat::left_kernel() const {
    // solve x * A = 0: row reduce A^T augmented implicitly
    // standard: compute RREF of A^T? Work instead with the transpose relation:
    // x*A = 0  <=>  A^T x^T = 0, i.e. right kernel of A^T = left kernel of A.
    // Compute via RREF of [this | I] tracking row operations.
    Mat aug(rows_, cols_ + rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1L);
    }
    aug.rref();
    // rows whose leading part (first cols_) is zero give kernel combinations
    std::vector<Vec> rows;
    for (size_t i = 0; i < rows_; ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols_ && zero; ++j)
            if (!aug.at(i, j).is_zero()) zero = false;
        if (!zero) continue;
        Vec v(rows_);
        for (size_t j = 0; j < rows_; ++j) v[j] = aug.at(i, cols_ + j);
        rows.push_back(std::move(v));
    }
    Mat k = Mat::from_rows(rows);
    if (k.rows() == 0) return Mat(0, rows_);
    k.rref();
    return k;
}

std::optional<Vec> Mat::solve_left(const Vec& b) const {
    if (b.size() != cols_) throw MathError("solve shape mismatch");
    // [A | I] row reduced; find combination of rows of A equal to b by
    // reducing the stacked matrix [A; b] and checking consistency.
    Mat aug(rows_ + 1, cols_ + rows_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1L);
    }
    for (size_t j = 0; j < cols_; ++j) aug.at(rows_, j) = b[j];
    aug.at(rows_, cols_ + rows_) = Scalar(1L);
    aug.rref();
    // look for a row with zero A-part, nonzero last marker
    for (size_t i = 0; i <= rows_; ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols_ && zero; ++j)
            if (!aug.at(i, j).is_zero()) zero = false;
        if (!zero) continue;
        const Scalar& marker = aug.at(i, cols_ + rows_);
        if (marker.is_zero()) continue;
        Scalar minv = marker.inverse();
        Vec x(rows_);
        bool ok = true;
        for (size_t j = 0; j < rows_; ++j) x[j] = -(aug.at(i, cols_ + j) * minv);
        (void)ok;
        return x;
    }
    return std::nullopt;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) throw MathError("inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1L);
    }
    auto piv = aug.rref();
    if (piv.size() != rows_) return std::nullopt;
    for (size_t i = 0; i < rows_; ++i)
        if (piv[i] != i) return std::nullopt;
    Mat inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator*(const Vec& x, const Mat& A) {
    if (x.size() != A.rows()) throw MathError("vector-matrix shape mismatch");
    Vec r(A.cols());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < A.cols(); ++j) {
            const Scalar& y = A.at(i, j);
            if (y.is_zero()) continue;
            r[j] += x[i] * y;
        }
    }
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MathError("vector sum shape mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MathError("vector diff shape mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Scalar& s) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MathError("dot shape mismatch");
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec tensor_vec(const Vec& u, const Vec& v) {
    Vec r(u.size() * v.size());
    for (size_t j = 0; j < u.size(); ++j) {
        if (u[j].is_zero()) continue;
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            r[j * v.size() + k] = u[j] * v[k];
        }
    }
    return r;
}

} // namespace halg
