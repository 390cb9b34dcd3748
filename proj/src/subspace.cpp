#include "halg/subspace.hpp"

#include "halg/error.hpp"

#include <algorithm>

namespace halg {

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Mat m = Mat::from_rows(vectors);
    if (m.cols() != ambient) throw MathError("span ambient mismatch");
    return span(m);
}

Subspace Subspace::span(const Mat& rows) {
    Subspace s(rows.cols());
    Mat m = rows;
    auto piv = m.rref();
    Mat b(piv.size(), rows.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = m.at(i, j);
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::whole(size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Mat::identity(ambient);
    return s;
}

Subspace Subspace::single(const Vec& v) {
    return span(v.size(), {v});
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw MathError("contains ambient mismatch");
    if (vec_is_zero(v)) return true;
    if (dim() == 0) return false;
    return basis_.solve_left(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw MathError("contains ambient mismatch");
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (vec_is_zero(v)) return Vec(dim());
    if (dim() == 0) return std::nullopt;
    return basis_.solve_left(v);
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw MathError("sum ambient mismatch");
    Mat m = basis_;
    m.append_rows(o.basis_);
    if (m.rows() == 0) return Subspace(ambient_);
    return span(m);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw MathError("intersect ambient mismatch");
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    // kernel of [U; V] gives coefficient pairs (x, y) with x*U + y*V = 0;
    // then x*U ranges over the intersection.
    Mat stacked = basis_;
    stacked.append_rows(o.basis_);
    Mat ker = stacked.left_kernel();
    std::vector<Vec> rows;
    for (size_t i = 0; i < ker.rows(); ++i) {
        Vec x(dim());
        for (size_t j = 0; j < dim(); ++j) x[j] = ker.at(i, j);
        rows.push_back(x * basis_);
    }
    if (rows.empty()) return Subspace(ambient_);
    return span(ambient_, rows);
}

Subspace Subspace::image(const Mat& A) const {
    if (A.rows() != ambient_) throw MathError("image shape mismatch");
    if (dim() == 0) return Subspace(A.cols());
    return span(basis_ * A);
}

Subspace Subspace::preimage(const Mat& A, const Subspace& W) {
    if (W.ambient_dim() != A.cols()) throw MathError("preimage shape mismatch");
    // x*A in W  <=>  x*A*N = 0 where columns of N span the annihilator of W.
    Subspace ann = W.annihilator();
    if (ann.dim() == 0) return Subspace::whole(A.rows());
    Mat N = ann.basis().transpose();
    Mat AN = A * N;
    Mat ker = AN.left_kernel();
    Subspace s(A.rows());
    if (ker.rows() == 0) return s;
    return span(ker);
}

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(ambient_);
    // { f : basis . f = 0 } = left kernel of basis^T
    Mat ker = basis_.transpose().left_kernel();
    if (ker.rows() == 0) return Subspace(ambient_);
    return span(ker);
}

Subspace Subspace::tensor(const Subspace& U, const Subspace& V) {
    size_t amb = U.ambient_dim() * V.ambient_dim();
    std::vector<Vec> rows;
    for (size_t i = 0; i < U.dim(); ++i)
        for (size_t j = 0; j < V.dim(); ++j)
            rows.push_back(tensor_vec(U.basis_vector(i), V.basis_vector(j)));
    if (rows.empty()) return Subspace(amb);
    return span(amb, rows);
}

std::vector<size_t> Subspace::pivots() const {
    std::vector<size_t> p;
    for (size_t i = 0; i < basis_.rows(); ++i)
        for (size_t j = 0; j < ambient_; ++j)
            if (!basis_.at(i, j).is_zero()) {
                p.push_back(j);
                break;
            }
    return p;
}

std::vector<size_t> Subspace::quotient_coords() const {
    auto piv = pivots();
    std::vector<size_t> q;
    size_t k = 0;
    for (size_t j = 0; j < ambient_; ++j) {
        if (k < piv.size() && piv[k] == j) {
            ++k;
            continue;
        }
        q.push_back(j);
    }
    return q;
}

int Subspace::cmp(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    auto pa = a.pivots(), pb = b.pivots();
    if (pa != pb) return pa < pb ? -1 : 1;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.ambient_; ++j) {
            int c = Scalar::cmp(a.basis_.at(i, j), b.basis_.at(i, j));
            if (c != 0) return c;
        }
    return 0;
}

} // namespace halg
