#pragma once

// Subspaces of k^n in canonical form: the basis is the reduced row echelon
// form of any spanning set, so equal subspaces have identical representations.

#include "halg/matrix.hpp"

namespace halg {

class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
    static Subspace span(const Mat& rows);
    static Subspace whole(size_t ambient);
    static Subspace single(const Vec& v);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Coordinates of v in this basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    /// Image x -> x*A of this subspace (A maps ambient to A.cols()).
    Subspace image(const Mat& A) const;

    /// { x : x*A in W }, where A : k^dom -> k^cod and W lives in the codomain.
    static Subspace preimage(const Mat& A, const Subspace& W);

    /// Right annihilator { f : v . f = 0 for all v here }, as a subspace of
    /// the dual coordinate space (same ambient dimension).
    Subspace annihilator() const;

    /// Tensor product inside k^(n*m) with coordinates (j,k) -> j*m + k.
    static Subspace tensor(const Subspace& U, const Subspace& V);

    /// Pivot columns of the canonical basis.
    std::vector<size_t> pivots() const;

    /// Complementary coordinates (non-pivot columns); these index a basis of
    /// the quotient ambient/this.
    std::vector<size_t> quotient_coords() const;

    /// Canonical total order for deterministic sorting of equal-ambient spaces.
    static int cmp(const Subspace& a, const Subspace& b);

private:
    size_t ambient_;
    Mat basis_; // RREF, no zero rows
};

} // namespace halg
