#pragma once

// Exact scalars:  elements of Q(zeta_n) in the power basis of zeta_n,
// with coefficients reduced modulo the n-th cyclotomic polynomial.
// Conductor 1 is plain Q.  All arithmetic is exact (GMP rationals);
// there is no floating point anywhere in this library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace halg {

using Rat = mpq_class;
using Int = mpz_class;

/// Data attached to one conductor: Euler phi, the cyclotomic polynomial and
/// reduction rows for powers zeta^k, phi <= k <= 2*phi-2.
struct CycloField {
    unsigned conductor = 1;
    unsigned phi = 1;
    std::vector<Rat> min_poly;              // monic, length phi+1, Phi_n
    std::vector<std::vector<Rat>> red_rows; // red_rows[k-phi] = coords of zeta^k
    Int abs_disc;                           // |disc(Phi_n)|
};

/// Fetches (and caches) the field data for a conductor.  Thread safe.
const CycloField& cyclo_field(unsigned conductor);

unsigned euler_phi(unsigned n);

/// Cyclotomic polynomial Phi_n as a monic integer polynomial (rational coeffs).
std::vector<Rat> cyclotomic_polynomial(unsigned n);

class Scalar {
public:
    Scalar() : cond_(1), c_(1, Rat(0)) {}
    explicit Scalar(const Rat& r) : cond_(1), c_(1, r) { c_[0].canonicalize(); }
    Scalar(long num, long den);
    explicit Scalar(long n) : Scalar(Rat(n)) {}

    /// Element with given coefficient vector in the power basis of zeta_n.
    /// The vector may have any length up to phi(n) (zero padded).
    static Scalar from_coeffs(unsigned conductor, std::vector<Rat> coeffs);

    /// zeta_n^k.
    static Scalar zeta(unsigned conductor, long k = 1);

    unsigned conductor() const { return cond_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;       // value lies in Q (regardless of conductor)
    Rat rational_value() const;     // requires is_rational()

    /// Lift into Q(zeta_m); the current conductor must divide m.
    Scalar promoted(unsigned m) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;         // throws MathError on zero
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical total order (conductor-promoted lexicographic compare);
    /// used only to make sorting deterministic, it is not a field order.
    static int cmp(const Scalar& a, const Scalar& b);

    /// Text form: "p/q" or "p" for rational values at conductor 1,
    /// "[c0,c1,...]@n" otherwise.
    std::string str() const;

    /// Parses the syntax accepted by all file formats; see str().
    /// Coefficient lists longer than phi(n) are reduced mod Phi_n.
    static Scalar parse(const std::string& text);

private:
    unsigned cond_;
    std::vector<Rat> c_; // length phi(cond_)

    void reduce_tail(std::vector<Rat>& raw) const; // reduce degree >= phi terms
};

/// lcm of conductors, used to put operands into a common field.
unsigned conductor_lcm(unsigned a, unsigned b);

} // namespace halg
