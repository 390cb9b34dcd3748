#pragma once

// Dense matrices over Scalar with exact reduced row echelon form.
// Vectors are rows; a linear map given by matrix A acts as x -> x * A.

#include "halg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace halg {

using Vec = std::vector<Scalar>;

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const;
    void set_row(size_t i, const Vec& v);

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    bool operator==(const Mat& o) const;

    /// Appends the rows of o (same column count).
    void append_rows(const Mat& o);

    /// In-place reduced row echelon form (leftmost pivots, leading 1).
    /// Returns the pivot column of each of the first `rank` rows.
    std::vector<size_t> rref();

    size_t rank() const;

    /// Basis of { x : x * A = 0 } as RREF rows ((rows() - rank) x rows()).
    Mat left_kernel() const;

    /// One solution x of x * A = b, if any.
    std::optional<Vec> solve_left(const Vec& b) const;

    /// Inverse of a square matrix; nullopt if singular.
    std::optional<Mat> inverse() const;

    bool is_zero() const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

Vec operator*(const Vec& x, const Mat& A);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& s);
bool vec_is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

/// Kronecker/tensor coordinates: (j,k) in dim x dim maps to j*dim + k.
Vec tensor_vec(const Vec& u, const Vec& v);

} // namespace halg
