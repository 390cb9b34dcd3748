#include "halg/matrix.hpp"
#include "halg/polyroots.hpp"
#include "halg/scalar.hpp"
#include "halg/subspace.hpp"

#include <doctest.h>

#include <random>

using namespace halg;

namespace {

Scalar rand_scalar(std::mt19937_64& rng, unsigned conductor) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    unsigned phi = euler_phi(conductor);
    std::vector<Rat> c(phi);
    for (auto& x : c) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
    }
    return Scalar::from_coeffs(conductor, std::move(c));
}

Vec rand_vec(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long> num(-5, 5);
    Vec v(n);
    for (auto& x : v) x = Scalar(num(rng));
    return v;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK(cyclotomic_polynomial(3) == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(cyclotomic_polynomial(8) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(euler_phi(12) == 4);
    CHECK(cyclotomic_polynomial(12).size() == 5);
}

TEST_CASE("scalar arithmetic basics") {
    Scalar a(2, 3); // 2/3
    Scalar b(1, 6);
    CHECK((a + b) == Scalar(5, 6));
    CHECK((a * b) == Scalar(1, 9));
    CHECK((a / b) == Scalar(4L));
    Scalar i = Scalar::zeta(4);
    CHECK((i * i) == Scalar(-1L));
    Scalar z8 = Scalar::zeta(8);
    CHECK(z8.pow(8) == Scalar(1L).promoted(8));
    CHECK((z8 * z8) == Scalar::zeta(4).promoted(8));
    // zeta_3 satisfies 1 + z + z^2 = 0
    Scalar z3 = Scalar::zeta(3);
    CHECK((Scalar(1L) + z3 + z3 * z3).is_zero());
    // mixed conductors promote to the lcm
    CHECK((z3 * i).conductor() == 12);
    CHECK((z3 * i) == Scalar::zeta(12, 7)); // zeta_12^4 * zeta_12^3
}

TEST_CASE("scalar field axioms on randomized elements") {
    std::mt19937_64 rng(20240811);
    for (unsigned conductor : {1u, 3u, 4u, 8u}) {
        for (int it = 0; it < 40; ++it) {
            Scalar a = rand_scalar(rng, conductor);
            Scalar b = rand_scalar(rng, conductor);
            Scalar c = rand_scalar(rng, conductor);
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            if (!a.is_zero()) {
                CHECK((a * a.inverse()) == Scalar(1L).promoted(conductor));
            }
        }
    }
}

TEST_CASE("scalar text round trip") {
    for (const char* s : {"3", "-7/2", "[1,-1/3]@3", "[0,1]@4", "[2,0,0,1]@8"}) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    // over-long coefficient lists reduce mod the cyclotomic polynomial
    CHECK(Scalar::parse("[0,0,0,0,1]@8") == Scalar(-1L).promoted(8)); // zeta_8^4 = -1
}

TEST_CASE("square detection") {
    auto r = scalar_sqrt(Scalar(4, 9));
    REQUIRE(r.has_value());
    CHECK(*r == Scalar(2, 3));
    CHECK((*r) * (*r) == Scalar(4, 9));
    CHECK(!scalar_sqrt(Scalar(2L)).has_value());
    CHECK(!scalar_sqrt(Scalar(-1L)).has_value());
    // zeta_4 is a square in Q(zeta_8), with root zeta_8
    Scalar i8 = Scalar::zeta(4).promoted(8);
    auto s = scalar_sqrt(i8);
    REQUIRE(s.has_value());
    CHECK((*s) * (*s) == i8);
    // -1 becomes a square once i is in the field
    auto t = scalar_sqrt(Scalar(-1L).promoted(4));
    REQUIRE(t.has_value());
    CHECK((*t) * (*t) == Scalar(-1L).promoted(4));
    // exercise the p-adic path with a rational value outside the easy list
    auto u = scalar_sqrt(Scalar(49, 64).promoted(3));
    REQUIRE(u.has_value());
    CHECK((*u) * (*u) == Scalar(49, 64).promoted(3));
    CHECK(!scalar_sqrt(Scalar(7, 5).promoted(4)).has_value());
}

TEST_CASE("polynomial roots in cyclotomic fields") {
    // t^2 - t over Q: roots 0, 1
    KPoly p;
    p.c = {Scalar(), -Scalar(1L), Scalar()};
    p.c = {Scalar(), Scalar(-1L), Scalar(1L)};
    auto roots = roots_in_field(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Scalar());
    CHECK(roots[1] == Scalar(1L));
    // t^3 - 1 over Q: only root 1; over Q(zeta_3): three roots
    KPoly q;
    q.c = {Scalar(-1L), Scalar(), Scalar(), Scalar(1L)};
    CHECK(roots_in_field(q).size() == 1);
    CHECK(roots_in_field(q, 3).size() == 3);
    // t^2 + t + 1 has no rational roots
    KPoly r;
    r.c = {Scalar(1L), Scalar(1L), Scalar(1L)};
    CHECK(roots_in_field(r).empty());
    CHECK(roots_in_field(r, 3).size() == 2);
    // a p-adic case: t^2 - 2*t - 1/4 has roots 1 +- sqrt(5)/... none in Q
    KPoly s;
    s.c = {Scalar(-1, 4), Scalar(-2L), Scalar(1L)};
    CHECK(roots_in_field(s).empty());
    // (t - 22/7)(t - 10/9) exercises reconstruction with denominators
    KPoly u;
    Scalar a(22, 7), b(10, 9);
    u.c = {a * b, -(a + b), Scalar(1L)};
    auto ur = roots_in_field(u);
    REQUIRE(ur.size() == 2);
    CHECK(ur[0] == b);
    CHECK(ur[1] == a);
}

TEST_CASE("rref canonical form") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 25; ++it) {
        std::vector<Vec> rows;
        for (int i = 0; i < 4; ++i) rows.push_back(rand_vec(rng, 5));
        Subspace u = Subspace::span(5, rows);
        std::shuffle(rows.begin(), rows.end(), rng);
        // also mix in random combinations
        rows.push_back(vec_add(rows[0], vec_scaled(rows[1], Scalar(3L))));
        Subspace v = Subspace::span(5, rows);
        CHECK(u == v);
    }
}

TEST_CASE("dimension formula for sum and intersection") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 30; ++it) {
        std::vector<Vec> ur, vr;
        std::uniform_int_distribution<int> cnt(0, 4);
        int cu = cnt(rng), cv = cnt(rng);
        for (int i = 0; i < cu; ++i) ur.push_back(rand_vec(rng, 5));
        for (int i = 0; i < cv; ++i) vr.push_back(rand_vec(rng, 5));
        Subspace U = Subspace::span(5, ur), V = Subspace::span(5, vr);
        Subspace S = U.sum(V), I = U.intersect(V);
        CHECK(S.dim() + I.dim() == U.dim() + V.dim());
        CHECK(S.contains(U));
        CHECK(S.contains(V));
        CHECK(U.contains(I));
        CHECK(V.contains(I));
    }
}

TEST_CASE("subspace sum idempotence and unit examples") {
    Vec e1{Scalar(1L), Scalar(), Scalar()};
    Vec e2{Scalar(), Scalar(1L), Scalar()};
    Subspace U = Subspace::span(3, {e1});
    Subspace V = Subspace::span(3, {e2});
    CHECK(U.sum(V).dim() == 2);
    CHECK(U.sum(U) == U);
}

TEST_CASE("preimage basics and properties") {
    // identity map: preimage is W itself
    std::mt19937_64 rng(5);
    Mat id = Mat::identity(4);
    Subspace W = Subspace::span(4, {rand_vec(rng, 4), rand_vec(rng, 4)});
    CHECK(Subspace::preimage(id, W) == W);
    // zero map: whole domain
    Mat zero(3, 4);
    CHECK(Subspace::preimage(zero, W) == Subspace::whole(3));
    // random maps: image(preimage(W)) inside W, preimage(image(domain)) = domain
    for (int it = 0; it < 15; ++it) {
        Mat A(3, 5);
        for (size_t i = 0; i < 3; ++i) A.set_row(i, rand_vec(rng, 5));
        Subspace Wr = Subspace::span(5, {rand_vec(rng, 5), rand_vec(rng, 5)});
        Subspace pre = Subspace::preimage(A, Wr);
        Subspace img = pre.image(A);
        CHECK(Wr.contains(img));
        Subspace full_img = Subspace::whole(3).image(A);
        CHECK(Subspace::preimage(A, full_img) == Subspace::whole(3));
    }
}

TEST_CASE("kernel and solve") {
    Mat A(3, 2);
    A.at(0, 0) = Scalar(1L);
    A.at(1, 0) = Scalar(1L);
    A.at(2, 1) = Scalar(1L);
    Mat k = A.left_kernel();
    REQUIRE(k.rows() == 1);
    CHECK(vec_is_zero(k.row(0) * A));
    auto sol = A.solve_left({Scalar(3L), Scalar(5L)});
    REQUIRE(sol.has_value());
    CHECK((*sol * A) == Vec{Scalar(3L), Scalar(5L)});
}

TEST_CASE("tensor subspace") {
    Vec e1{Scalar(1L), Scalar()};
    Vec e2{Scalar(), Scalar(1L)};
    Subspace U = Subspace::span(2, {e1});
    Subspace V = Subspace::span(2, {e1, e2});
    Subspace T = Subspace::tensor(U, V);
    CHECK(T.ambient_dim() == 4);
    CHECK(T.dim() == 2);
}
