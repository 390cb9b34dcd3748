#include "halg/polyroots.hpp"

#include "halg/error.hpp"

#include <numeric>

#include <algorithm>
#include <map>
#include <sstream>

namespace halg {

int KPoly::degree() const {
    for (int i = int(c.size()) - 1; i >= 0; --i)
        if (!c[size_t(i)].is_zero()) return i;
    return -1;
}

void KPoly::trim() {
    int d = degree();
    c.resize(size_t(std::max(d + 1, 1)));
    if (c.empty()) c.push_back(Scalar());
}

Scalar KPoly::eval(const Scalar& x) const {
    Scalar acc;
    for (int i = int(c.size()) - 1; i >= 0; --i) {
        acc = acc * x;
        acc += c[size_t(i)];
    }
    return acc;
}

KPoly KPoly::derivative() const {
    KPoly d;
    d.c.assign(std::max<size_t>(c.size() - 1, 1), Scalar());
    for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * Scalar(long(i));
    d.trim();
    return d;
}

std::string KPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& x = c[size_t(i)];
        if (x.is_zero() && degree() >= 1) continue;
        if (!first) os << " + ";
        os << "(" << x.str() << ")";
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

KPoly kpoly_monic(const KPoly& p) {
    KPoly q = p;
    q.trim();
    int d = q.degree();
    if (d < 0) return q;
    Scalar inv = q.c[size_t(d)].inverse();
    for (auto& x : q.c) x *= inv;
    return q;
}

KPoly kpoly_div_exact(const KPoly& num, const KPoly& den) {
    KPoly n = num, d = den;
    n.trim();
    d.trim();
    int dn = n.degree(), dd = d.degree();
    if (dd < 0) throw MathError("polynomial division by zero");
    KPoly q;
    q.c.assign(size_t(std::max(dn - dd + 1, 1)), Scalar());
    Scalar lead_inv = d.c[size_t(dd)].inverse();
    while (dn >= dd) {
        Scalar f = n.c[size_t(dn)] * lead_inv;
        q.c[size_t(dn - dd)] = f;
        for (int i = 0; i <= dd; ++i) n.c[size_t(dn - dd + i)] -= f * d.c[size_t(i)];
        dn = n.degree();
    }
    if (dn >= 0) throw MathError("inexact polynomial division");
    q.trim();
    return q;
}

KPoly kpoly_gcd(KPoly a, KPoly b) {
    a.trim();
    b.trim();
    while (b.degree() >= 0) {
        // a mod b
        int db = b.degree();
        Scalar lead_inv = b.c[size_t(db)].inverse();
        int da = a.degree();
        while (da >= db) {
            Scalar f = a.c[size_t(da)] * lead_inv;
            for (int i = 0; i <= db; ++i) a.c[size_t(da - db + i)] -= f * b.c[size_t(i)];
            da = a.degree();
        }
        a.trim();
        std::swap(a, b);
    }
    if (a.degree() < 0) return a;
    return kpoly_monic(a);
}

KPoly kpoly_deflate(const KPoly& p, const Scalar& root) {
    // synthetic division by (t - root)
    int d = p.degree();
    if (d < 1) throw MathError("deflating a constant");
    KPoly q;
    q.c.assign(size_t(d), Scalar());
    Scalar carry;
    for (int i = d; i >= 1; --i) {
        carry = p.c[size_t(i)] + carry * root;
        q.c[size_t(i - 1)] = carry;
    }
    return q;
}

namespace {

// ---------------------------------------------------------------------------
// p-adic root extraction

bool is_prime_u(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int mod_norm(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int balanced(const Int& a, const Int& m) {
    Int r = mod_norm(a, m);
    if (2 * r > m) r -= m;
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw MathError("non-invertible residue");
    return r;
}

using IPoly = std::vector<Int>; // low degree first

Int ipoly_eval_mod(const IPoly& f, const Int& x, const Int& m) {
    Int acc = 0;
    for (int i = int(f.size()) - 1; i >= 0; --i) acc = mod_norm(acc * x + f[size_t(i)], m);
    return acc;
}

IPoly ipoly_derivative(const IPoly& f) {
    IPoly d(std::max<size_t>(f.size() - 1, 1), Int(0));
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * long(i);
    return d;
}

int ipoly_deg_mod(const IPoly& f, const Int& p) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (mod_norm(f[size_t(i)], p) != 0) return i;
    return -1;
}

IPoly ipoly_gcd_mod(IPoly a, IPoly b, const Int& p) {
    auto norm = [&](IPoly& f) {
        for (auto& x : f) x = mod_norm(x, p);
        int d = ipoly_deg_mod(f, p);
        f.resize(size_t(std::max(d + 1, 1)), Int(0));
    };
    norm(a);
    norm(b);
    while (ipoly_deg_mod(b, p) >= 0) {
        int db = ipoly_deg_mod(b, p);
        Int inv = inv_mod(b[size_t(db)], p);
        int da = ipoly_deg_mod(a, p);
        while (da >= db) {
            Int f = mod_norm(a[size_t(da)] * inv, p);
            for (int i = 0; i <= db; ++i)
                a[size_t(da - db + i)] = mod_norm(a[size_t(da - db + i)] - f * b[size_t(i)], p);
            da = ipoly_deg_mod(a, p);
        }
        norm(a);
        std::swap(a, b);
    }
    return a;
}

// Newton lift of a simple root of f from mod p to mod target_mod (p power).
Int newton_lift(const IPoly& f, const IPoly& fd, Int root, const Int& p, const Int& target_mod) {
    Int mod = p;
    while (mod < target_mod) {
        mod = mod * mod;
        if (mod > target_mod) mod = target_mod;
        Int val = ipoly_eval_mod(f, root, mod);
        Int der = ipoly_eval_mod(fd, root, mod);
        // derivative is a unit mod p, hence mod any p power
        Int dinv = inv_mod(der, mod);
        root = mod_norm(root - val * dinv, mod);
    }
    return root;
}

// Gaussian inverse of a square matrix mod M (pivots must be units mod p).
std::vector<std::vector<Int>> mat_inverse_mod(std::vector<std::vector<Int>> A, const Int& M, const Int& p) {
    size_t n = A.size();
    std::vector<std::vector<Int>> I(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = n;
        for (size_t i = col; i < n; ++i)
            if (mod_norm(A[i][col], p) != 0) {
                sel = i;
                break;
            }
        if (sel == n) throw MathError("modular matrix not invertible");
        std::swap(A[col], A[sel]);
        std::swap(I[col], I[sel]);
        Int inv = inv_mod(A[col][col], M);
        for (size_t j = 0; j < n; ++j) {
            A[col][j] = mod_norm(A[col][j] * inv, M);
            I[col][j] = mod_norm(I[col][j] * inv, M);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Int f = A[i][col];
            if (f == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                A[i][j] = mod_norm(A[i][j] - f * A[col][j], M);
                I[i][j] = mod_norm(I[i][j] - f * I[col][j], M);
            }
        }
    }
    return I;
}

Int floor_isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// integral model: coefficients of the monic polynomial scaled so that any
// root has coordinates in (1/e) Z[zeta]; matrix of integer coordinate rows
struct IntegralModel {
    unsigned conductor;
    unsigned phi;
    Int e;                       // denominator scale
    std::vector<std::vector<Int>> coeff; // coeff[j][l]: coordinate l of t^j coefficient
    Int height;                  // bound for |coordinate| of e * root
};

IntegralModel integralize(const KPoly& monic, unsigned n) {
    const CycloField& fld = cyclo_field(n);
    IntegralModel m;
    m.conductor = n;
    m.phi = fld.phi;
    int deg = monic.degree();
    // common denominator over all coordinates
    Int e = 1;
    for (int j = 0; j < deg; ++j) {
        Scalar cj = monic.c[size_t(j)].promoted(n);
        for (const Rat& q : cj.coeffs()) {
            Int den = q.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), den.get_mpz_t());
            e = e / g * den;
        }
    }
    m.e = e;
    // scaled coefficients: c'_j = c_j * e^(deg-j), integral
    m.coeff.assign(size_t(deg + 1), std::vector<Int>(m.phi, Int(0)));
    Int B = 0;
    for (int j = 0; j <= deg; ++j) {
        Scalar cj = monic.c[size_t(j)].promoted(n);
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), e.get_mpz_t(), unsigned(deg - j));
        Int row_abs = 0;
        for (unsigned l = 0; l < m.phi; ++l) {
            Rat q = cj.coeffs()[l] * Rat(scale);
            q.canonicalize();
            if (q.get_den() != 1) throw MathError("integral scaling failed");
            m.coeff[size_t(j)][l] = q.get_num();
            row_abs += abs(q.get_num());
        }
        if (j < deg && row_abs > B) B = row_abs;
    }
    B += 1; // Cauchy bound: |embedded root| <= 1 + max_j |embedded c'_j|
    // kappa = phi * (phi-1)^((phi-1)/2) / sqrt(|disc|), rounded up safely
    Int kappa_num = m.phi;
    if (m.phi >= 2) {
        Int base = m.phi - 1;
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), (m.phi - 1) / 2);
        kappa_num *= pw;
        if ((m.phi - 1) % 2 == 1) {
            // one more factor sqrt(phi-1), round up to phi-1
            kappa_num *= base;
        }
    }
    Int denom = floor_isqrt(fld.abs_disc);
    if (denom < 1) denom = 1;
    m.height = (kappa_num * B) / denom + 1;
    return m;
}

std::vector<Int> nth_roots_of_unity_mod(unsigned n, const Int& p) {
    // returns all primitive n-th roots of unity mod p, requires p = 1 mod n
    if (n == 1) return {Int(1)};
    Int exp = (p - 1) / long(n);
    std::vector<unsigned> prime_divs;
    unsigned m = n;
    for (unsigned q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_divs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_divs.push_back(m);
    for (Int a = 2; a < p; ++a) {
        Int r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        bool primitive = r != 1;
        for (unsigned q : prime_divs) {
            if (!primitive) break;
            Int t;
            Int e2 = long(n / q);
            mpz_powm(t.get_mpz_t(), r.get_mpz_t(), e2.get_mpz_t(), p.get_mpz_t());
            if (t == 1) primitive = false;
        }
        if (!primitive) continue;
        std::vector<Int> roots;
        Int cur = 1;
        for (unsigned j = 0; j < n; ++j) {
            cur = j == 0 ? Int(1) : mod_norm(cur * r, p);
            if (std::gcd(j, n) == 1 || (n == 1)) {
                if (j != 0 || n == 1) roots.push_back(cur);
            }
        }
        return roots;
    }
    throw MathError("no primitive root found (prime too small?)");
}

constexpr size_t kComboCap = 200000;

// roots of a squarefree monic polynomial with no easy roots left
std::vector<Scalar> padic_roots(const KPoly& monic, unsigned n) {
    int deg = monic.degree();
    if (deg <= 0) return {};
    if (deg == 1) {
        return {-(monic.c[0])};
    }
    IntegralModel model = integralize(monic, n);
    unsigned phi = model.phi;

    unsigned long p_start = std::max<unsigned long>(3, n + 1);
    unsigned tried = 0;
    for (unsigned long pc = p_start; tried < 24; ++pc) {
        if (!is_prime_u(pc)) continue;
        if (n > 1 && (pc - 1) % n != 0) continue;
        ++tried;
        Int p = long(pc);
        // roots of Phi_n mod p (phi of them), one per embedding
        std::vector<Int> phi_roots;
        try {
            phi_roots = nth_roots_of_unity_mod(n, p);
        } catch (const MathError&) {
            continue;
        }
        if (phi_roots.size() != phi) continue;
        std::sort(phi_roots.begin(), phi_roots.end());
        // per-embedding integer polynomial and squarefreeness check
        std::vector<IPoly> embedded(phi);
        bool ok = true;
        for (unsigned i = 0; i < phi && ok; ++i) {
            IPoly f(size_t(deg + 1));
            for (int j = 0; j <= deg; ++j) {
                Int v = 0, pw = 1;
                for (unsigned l = 0; l < phi; ++l) {
                    v = mod_norm(v + model.coeff[size_t(j)][l] * pw, p);
                    pw = mod_norm(pw * phi_roots[i], p);
                }
                f[size_t(j)] = v;
            }
            if (ipoly_deg_mod(f, p) != deg) {
                ok = false; // should not happen (monic), safety
                break;
            }
            IPoly g = ipoly_gcd_mod(f, ipoly_derivative(f), p);
            if (ipoly_deg_mod(g, p) > 0) ok = false;
            embedded[i] = std::move(f);
        }
        if (!ok) continue;
        // roots mod p per embedding (brute scan; p is small)
        std::vector<std::vector<Int>> proots(phi);
        size_t combos = 1;
        bool empty = false;
        for (unsigned i = 0; i < phi; ++i) {
            for (unsigned long t = 0; t < pc; ++t)
                if (ipoly_eval_mod(embedded[i], Int(long(t)), p) == 0) proots[i].push_back(Int(long(t)));
            if (proots[i].empty()) empty = true;
            combos *= std::max<size_t>(proots[i].size(), 1);
        }
        if (empty) return {};
        if (combos > kComboCap) continue;
        // precision: p^K > 2 * e-scaled height
        Int target = 2 * model.height + 1;
        Int M = p;
        while (M < target) M *= p;
        // lift phi roots and polynomial roots
        IPoly phin(size_t(cyclo_field(n).min_poly.size()));
        for (size_t i = 0; i < phin.size(); ++i) {
            Rat q = cyclo_field(n).min_poly[i];
            phin[i] = q.get_num(); // Phi_n is integral monic
        }
        IPoly phin_d = ipoly_derivative(phin);
        std::vector<Int> lifted_nodes(phi);
        for (unsigned i = 0; i < phi; ++i)
            lifted_nodes[i] = n == 1 ? Int(1) : newton_lift(phin, phin_d, phi_roots[i], p, M);
        std::vector<std::vector<Int>> lifted_roots(phi);
        for (unsigned i = 0; i < phi; ++i) {
            IPoly f(size_t(deg + 1));
            for (int j = 0; j <= deg; ++j) {
                Int v = 0, pw = 1;
                for (unsigned l = 0; l < phi; ++l) {
                    v = mod_norm(v + model.coeff[size_t(j)][l] * pw, M);
                    pw = mod_norm(pw * lifted_nodes[i], M);
                }
                f[size_t(j)] = v;
            }
            IPoly fd = ipoly_derivative(f);
            for (const Int& r0 : proots[i]) lifted_roots[i].push_back(newton_lift(f, fd, r0, p, M));
        }
        // Vandermonde in the lifted nodes, inverted mod M
        std::vector<std::vector<Int>> V(phi, std::vector<Int>(phi));
        for (unsigned i = 0; i < phi; ++i) {
            Int pw = 1;
            for (unsigned l = 0; l < phi; ++l) {
                V[i][l] = pw;
                pw = mod_norm(pw * lifted_nodes[i], M);
            }
        }
        auto Vinv = mat_inverse_mod(V, M, p);
        // enumerate sign/root combinations with per-coordinate early abort
        std::vector<size_t> idx(phi, 0);
        std::vector<Scalar> found;
        while (true) {
            bool good = true;
            std::vector<Rat> coords(phi);
            for (unsigned l = 0; l < phi && good; ++l) {
                Int acc = 0;
                for (unsigned i = 0; i < phi; ++i)
                    acc = mod_norm(acc + Vinv[l][i] * lifted_roots[i][idx[i]], M);
                Int z = balanced(acc, M);
                if (abs(z) > model.height) {
                    good = false;
                    break;
                }
                coords[l] = Rat(z) / Rat(model.e);
                coords[l].canonicalize();
            }
            if (good) {
                Scalar cand = Scalar::from_coeffs(n, coords);
                if (monic.eval(cand).is_zero()) {
                    bool dup = false;
                    for (const auto& r : found)
                        if (r == cand) dup = true;
                    if (!dup) found.push_back(cand);
                }
            }
            // odometer
            unsigned pos = 0;
            while (pos < phi) {
                if (++idx[pos] < lifted_roots[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == phi) break;
        }
        return found;
    }
    throw LimitError("root search exceeded prime/combination budget for " + monic.str());
}

const std::vector<Rat>& easy_rationals() {
    static const std::vector<Rat> vals = [] {
        std::vector<Rat> v;
        for (long q : {1L, 2L, 3L, 4L, 5L}) v.emplace_back(q);
        v.emplace_back(1, 2);
        v.emplace_back(1, 3);
        v.emplace_back(3, 2);
        for (auto& x : v) x.canonicalize();
        return v;
    }();
    return vals;
}

} // namespace

std::vector<Scalar> roots_in_field(const KPoly& p, unsigned conductor) {
    KPoly g = p;
    g.trim();
    unsigned n = conductor;
    for (const auto& x : g.c) n = conductor_lcm(n, x.conductor());
    if (g.degree() <= 0) return {};
    g = kpoly_monic(g);
    // squarefree part
    KPoly gc = kpoly_gcd(g, g.derivative());
    if (gc.degree() > 0) g = kpoly_div_exact(g, gc);

    std::vector<Scalar> roots;
    auto try_root = [&](const Scalar& cand) {
        if (g.degree() < 1) return;
        if (g.eval(cand).is_zero()) {
            roots.push_back(cand);
            g = kpoly_deflate(g, cand);
        }
    };
    // cheap candidates: 0 and small rational multiples of roots of unity
    try_root(Scalar());
    for (unsigned j = 0; j < n && g.degree() >= 1; ++j) {
        Scalar z = Scalar::zeta(n, long(j));
        for (const Rat& q : easy_rationals()) {
            Scalar c = z * Scalar(q);
            try_root(c);
            try_root(-c);
        }
    }
    if (g.degree() == 1) {
        roots.push_back(-(g.c[0]));
    } else if (g.degree() >= 2) {
        for (const auto& r : padic_roots(g, n)) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<Scalar> scalar_sqrt(const Scalar& a) {
    if (a.is_zero()) return Scalar();
    if (a.is_rational()) {
        Rat q = a.rational_value();
        if (q > 0) {
            Int num = q.get_num(), den = q.get_den();
            if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
                Int rn = floor_isqrt(num), rd = floor_isqrt(den);
                Rat r(rn, rd);
                r.canonicalize();
                Scalar root(r);
                return a.conductor() == 1 ? root : root.promoted(a.conductor());
            }
        }
        if (a.conductor() == 1) return std::nullopt; // negative or non-square in Q
    }
    KPoly p;
    p.c = {-a, Scalar(), Scalar(1L)};
    auto roots = roots_in_field(p, a.conductor());
    if (roots.empty()) return std::nullopt;
    return roots.back(); // canonical: lexicographically largest
}

} // namespace halg
