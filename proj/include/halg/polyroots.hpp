#pragma once

// Exact root finding for univariate polynomials over Q(zeta_n), and the
// square test built on it.  Roots are certified both ways: every returned
// root is verified by exact evaluation, and completeness follows from an
// integral height bound on the power-basis coordinates of any root, checked
// against a p-adic lift at sufficient precision.

#include "halg/scalar.hpp"

#include <optional>
#include <vector>

namespace halg {

/// Polynomial over Scalar, coefficients low degree first.
struct KPoly {
    std::vector<Scalar> c;

    int degree() const;
    void trim();
    Scalar eval(const Scalar& x) const;
    KPoly derivative() const;
    std::string str() const; // in variable t, for error messages
};

KPoly kpoly_monic(const KPoly& p);
KPoly kpoly_gcd(KPoly a, KPoly b);                 // monic gcd
KPoly kpoly_div_exact(const KPoly& num, const KPoly& den);
KPoly kpoly_deflate(const KPoly& p, const Scalar& root); // divide by (t - root)

/// All roots of p lying in Q(zeta_n), where n is the lcm of the coefficient
/// conductors (or `conductor` if larger).  Complete over that field.
std::vector<Scalar> roots_in_field(const KPoly& p, unsigned conductor = 1);

/// Square test: a solution of x^2 = a in the field of a, if one exists.
/// The returned root is canonical (lexicographically largest of the pair).
std::optional<Scalar> scalar_sqrt(const Scalar& a);

} // namespace halg
