#include "halg/scalar.hpp"

#include "halg/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace halg {

namespace {

// polynomial helpers over Q, coefficient vectors low degree first

int degree(const std::vector<Rat>& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(std::vector<Rat>& p) {
    int d = degree(p);
    p.resize(size_t(d + 1 < 1 ? 1 : d + 1), Rat(0));
}

// exact division, remainder must be zero
std::vector<Rat> poly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    int dn = degree(num), dd = degree(den);
    if (dd < 0) throw MathError("polynomial division by zero");
    std::vector<Rat> q(size_t(std::max(dn - dd + 1, 1)), Rat(0));
    while (dn >= dd) {
        Rat f = num[size_t(dn)] / den[size_t(dd)];
        q[size_t(dn - dd)] = f;
        for (int i = 0; i <= dd; ++i) num[size_t(dn - dd + i)] -= f * den[size_t(i)];
        dn = degree(num);
    }
    if (dn >= 0) throw MathError("inexact polynomial division");
    trim(q);
    return q;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d(std::max<size_t>(p.size() - 1, 1), Rat(0));
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(long(i));
    trim(d);
    return d;
}

// resultant of two rational polynomials via the Euclidean algorithm
Rat poly_resultant(std::vector<Rat> a, std::vector<Rat> b) {
    Rat res(1);
    trim(a);
    trim(b);
    while (true) {
        int da = degree(a), db = degree(b);
        if (db < 0) return Rat(0);
        if (db == 0) {
            Rat lead = b[0];
            Rat p(1);
            for (int i = 0; i < da; ++i) p *= lead;
            return res * p;
        }
        // a = q*b + r
        std::vector<Rat> r = a;
        int dr = degree(r);
        while (dr >= db) {
            Rat f = r[size_t(dr)] / b[size_t(db)];
            for (int i = 0; i <= db; ++i) r[size_t(dr - db + i)] -= f * b[size_t(i)];
            dr = degree(r);
        }
        trim(r);
        int drr = degree(r);
        if (drr < 0) return Rat(0);
        // res(a,b) = (-1)^(da*db) * lc(b)^(da-drr) * res(b,r)
        Rat lb = b[size_t(db)];
        Rat scale(1);
        for (int i = 0; i < da - drr; ++i) scale *= lb;
        if ((da % 2) && (db % 2)) res = -res;
        res *= scale;
        a = b;
        b = r;
    }
}

std::mutex g_field_mutex;
std::map<unsigned, CycloField> g_fields;

CycloField build_field(unsigned n) {
    CycloField f;
    f.conductor = n;
    f.min_poly = cyclotomic_polynomial(n);
    f.phi = unsigned(f.min_poly.size() - 1);
    unsigned phi = f.phi;
    // reduction rows: zeta^k for phi <= k <= max(n-1, 2*phi-2); products need
    // 2*phi-2, coefficient folding mod zeta^n = 1 needs n-1
    unsigned limit = std::max(n >= 1 ? n - 1 : 0u, phi >= 1 ? 2 * phi - 2 : 0u);
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> cur(phi, Rat(0));
    for (unsigned i = 0; i < phi; ++i) cur[i] = -f.min_poly[i];
    rows.push_back(cur);
    for (unsigned k = phi + 1; k <= limit; ++k) {
        // multiply previous row by zeta
        std::vector<Rat> nxt(phi, Rat(0));
        Rat top = cur[phi - 1];
        for (unsigned i = phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < phi; ++i) nxt[i] += top * rows[0][i];
        rows.push_back(nxt);
        cur = nxt;
    }
    f.red_rows = std::move(rows);
    // |disc(Phi_n)| = |res(Phi_n, Phi_n')| for monic Phi_n
    Rat r = poly_resultant(f.min_poly, poly_derivative(f.min_poly));
    Rat ar = abs(r);
    if (ar.get_den() != 1) throw MathError("cyclotomic discriminant not integral");
    f.abs_disc = ar.get_num();
    return f;
}

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Rat> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw MathError("conductor must be positive");
    if (n == 1) return {Rat(-1), Rat(1)};
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
    return num;
}

const CycloField& cyclo_field(unsigned conductor) {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_fields.find(conductor);
    if (it == g_fields.end()) it = g_fields.emplace(conductor, build_field(conductor)).first;
    return it->second;
}

unsigned conductor_lcm(unsigned a, unsigned b) {
    return unsigned(std::lcm(a, b));
}

Scalar::Scalar(long num, long den) : cond_(1), c_(1, Rat(num, den)) {
    if (den == 0) throw MathError("zero denominator");
    c_[0].canonicalize();
}

Scalar Scalar::from_coeffs(unsigned conductor, std::vector<Rat> coeffs) {
    const CycloField& f = cyclo_field(conductor);
    Scalar s;
    s.cond_ = conductor;
    s.c_.assign(f.phi, Rat(0));
    // fold coefficients of degree >= phi down with zeta^n = 1 first, then rows
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        size_t e = k % conductor;
        if (e < f.phi) {
            s.c_[e] += coeffs[k];
        } else {
            const auto& row = f.red_rows[e - f.phi];
            for (unsigned i = 0; i < f.phi; ++i) s.c_[i] += coeffs[k] * row[i];
        }
    }
    for (auto& x : s.c_) x.canonicalize();
    return s;
}

Scalar Scalar::zeta(unsigned conductor, long k) {
    long e = k % long(conductor);
    if (e < 0) e += conductor;
    std::vector<Rat> v(size_t(e + 1), Rat(0));
    v[size_t(e)] = 1;
    return from_coeffs(conductor, std::move(v));
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Scalar::rational_value() const {
    if (!is_rational()) throw MathError("scalar is not rational: " + str());
    return c_[0];
}

Scalar Scalar::promoted(unsigned m) const {
    if (m == cond_) return *this;
    if (m % cond_ != 0) throw MathError("conductor does not divide target");
    // zeta_cond = zeta_m^(m/cond)
    unsigned step = m / cond_;
    std::vector<Rat> raw(size_t(cond_ > 1 ? (c_.size() - 1) * step + 1 : 1), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] += c_[i];
    return from_coeffs(m, std::move(raw));
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (cond_ != o.cond_) {
        unsigned m = conductor_lcm(cond_, o.cond_);
        *this = promoted(m);
        return *this += o.promoted(m);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (cond_ != o.cond_) {
        unsigned m = conductor_lcm(cond_, o.cond_);
        *this = promoted(m);
        return *this -= o.promoted(m);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (cond_ != o.cond_) {
        unsigned m = conductor_lcm(cond_, o.cond_);
        *this = promoted(m);
        return *this *= o.promoted(m);
    }
    if (cond_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    const CycloField& f = cyclo_field(cond_);
    unsigned phi = f.phi;
    std::vector<Rat> prod(2 * phi - 1, Rat(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> out(phi, Rat(0));
    for (unsigned k = 0; k < phi; ++k) out[k] = prod[k];
    for (unsigned k = phi; k <= 2 * phi - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = f.red_rows[k - phi];
        for (unsigned i = 0; i < phi; ++i) out[i] += prod[k] * row[i];
    }
    c_ = std::move(out);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero scalar");
    if (cond_ == 1 || is_rational()) {
        Scalar r;
        r.cond_ = cond_;
        r.c_.assign(c_.size(), Rat(0));
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    // extended Euclid: u * a + v * Phi_n = 1 in Q[x]
    const CycloField& f = cyclo_field(cond_);
    std::vector<Rat> r0 = f.min_poly, r1(c_.begin(), c_.end());
    trim(r1);
    std::vector<Rat> t0{Rat(0)}, t1{Rat(1)};
    while (true) {
        int d1 = degree(r1);
        if (d1 < 0) throw MathError("scalar not invertible (unexpected)");
        if (d1 == 0) break;
        // r0 = q*r1 + r2
        std::vector<Rat> q(size_t(std::max(degree(r0) - d1 + 1, 1)), Rat(0));
        std::vector<Rat> r2 = r0;
        int dr = degree(r2);
        while (dr >= d1) {
            Rat fac = r2[size_t(dr)] / r1[size_t(d1)];
            q[size_t(dr - d1)] = fac;
            for (int i = 0; i <= d1; ++i) r2[size_t(dr - d1 + i)] -= fac * r1[size_t(i)];
            dr = degree(r2);
        }
        trim(r2);
        // t2 = t0 - q*t1
        std::vector<Rat> t2 = t0;
        t2.resize(std::max(t2.size(), q.size() + t1.size()), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        }
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat lead = r1[0];
    for (auto& x : t1) x /= lead;
    return from_coeffs(cond_, std::move(t1));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc(1L);
    acc = acc.promoted(cond_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (cond_ == o.cond_) return c_ == o.c_;
    unsigned m = conductor_lcm(cond_, o.cond_);
    return promoted(m).c_ == o.promoted(m).c_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    unsigned m = conductor_lcm(a.cond_, b.cond_);
    auto av = a.promoted(m), bv = b.promoted(m);
    for (size_t i = 0; i < av.c_.size(); ++i) {
        int c = ::cmp(av.c_[i], bv.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Scalar::str() const {
    if (cond_ == 1 || is_rational()) {
        // conductor kept implicit for rational values
        return c_[0].get_str();
    }
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    os << "]@" << cond_;
    return os.str();
}

Scalar Scalar::parse(const std::string& text) {
    std::string s = text;
    // strip spaces
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw MathError("empty scalar");
    if (s[0] == '[') {
        auto close = s.find(']');
        auto at = s.find('@', close == std::string::npos ? 0 : close);
        if (close == std::string::npos || at == std::string::npos)
            throw MathError("bad scalar syntax: " + text);
        unsigned n = unsigned(std::stoul(s.substr(at + 1)));
        std::vector<Rat> coeffs;
        std::string inner = s.substr(1, close - 1);
        std::string cur;
        std::istringstream is(inner);
        while (std::getline(is, cur, ',')) {
            if (cur.empty()) throw MathError("bad scalar syntax: " + text);
            Rat r(cur, 10);
            r.canonicalize();
            coeffs.push_back(r);
        }
        if (coeffs.empty()) throw MathError("bad scalar syntax: " + text);
        return from_coeffs(n, std::move(coeffs));
    }
    Rat r(s, 10);
    r.canonicalize();
    return Scalar(r);
}

void Scalar::reduce_tail(std::vector<Rat>&) const {}

} // namespace halg
