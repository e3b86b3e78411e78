#include <random>

#include "doctest.h"
#include "rlrs/torus.hpp"

using namespace rlrs;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

IntVec V(std::initializer_list<long> c) {
    IntVec v;
    for (long x : c) v.emplace_back(x);
    return v;
}

std::vector<AlgebraicNumber> sixth_roots() { return roots_of(P({1, -1, 1})); }

std::vector<AlgebraicNumber> gauss_pair() {
    return {AlgebraicNumber::gaussian({Rational(3, 5), Rational(4, 5)}),
            AlgebraicNumber::gaussian({Rational(3, 5), Rational(-4, 5)})};
}

// Brute-force oracle: all relations with entries in [-h, h].
IntMatrix brute_relations(const std::vector<AlgebraicNumber>& g, long h) {
    IntMatrix out;
    size_t k = g.size();
    std::vector<long> lam(k, -h);
    for (;;) {
        IntVec v;
        for (long x : lam) v.emplace_back(x);
        if (power_product_is_one(g, v)) out.push_back(v);
        size_t r = 0;
        while (r < k && lam[r] == h) lam[r++] = -h;
        if (r == k) break;
        ++lam[r];
    }
    return out;
}

bool in_lattice(const IntMatrix& hnf, const IntVec& v) {
    IntMatrix rows = hnf;
    size_t before = hnf_rows(rows, v.size()).size();
    rows.push_back(v);
    IntMatrix h = hnf_rows(rows, v.size());
    return h.size() == before && h == hnf_rows(hnf, v.size());
}

}  // namespace

TEST_CASE("hermite and smith forms") {
    IntMatrix a0{V({2, 4, 4}), V({-6, 6, 12}), V({10, 4, 16})};
    IntMatrix h = hnf_rows(a0, 3);
    REQUIRE(h.size() == 3);
    // |det| = 624, and the two row sets generate each other.
    CHECK(h[0][0] * h[1][1] * h[2][2] == 624);
    CHECK(h[1][0] == 0);
    CHECK(h[2][0] == 0);
    CHECK(h[2][1] == 0);
    for (const auto& row : a0) CHECK(in_lattice(h, row));
    for (const auto& row : h) CHECK(in_lattice(a0, row));
    CHECK(hnf_rows({V({6, 6}), V({1, 1}), V({0, 6})}, 2) == IntMatrix{V({1, 1}), V({0, 6})});
    CHECK(hnf_rows({V({1, 7}), V({0, 6})}, 2) == IntMatrix{V({1, 1}), V({0, 6})});

    std::mt19937_64 rng(1);
    for (int it = 0; it < 40; ++it) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix a(r, IntVec(c));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
        SmithForm s = smith(a, c);
        IntMatrix d = multiply(multiply(s.U, a, c), s.V, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) {
                Integer want = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
                CHECK(d[i][j] == want);
            }
        for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        for (const auto& kv : integer_kernel(a, c)) {
            IntMatrix col(c, IntVec(1));
            for (size_t j = 0; j < c; ++j) col[j][0] = kv[j];
            for (const auto& row : multiply(a, col, 1)) CHECK(row[0] == 0);
        }
    }
}

TEST_CASE("power products") {
    CHECK(power_product_is_one({AlgebraicNumber::rational(Rational(-1))}, V({2})));
    CHECK(!power_product_is_one({AlgebraicNumber::rational(Rational(-1))}, V({1})));
    CHECK(power_product_is_one(gauss_pair(), V({1, 1})));
    CHECK(!power_product_is_one({gauss_pair()[0]}, V({3})));
    auto z = sixth_roots();
    CHECK(power_product_is_one(z, V({1, 1})));
    CHECK(power_product_is_one(z, V({6, 0})));
    CHECK(!power_product_is_one(z, V({3, 0})));
    CHECK(power_product_is_one(z, V({4, -2})));
}

TEST_CASE("relation lattices") {
    auto m1 = relation_lattice({AlgebraicNumber::rational(Rational(-1))});
    CHECK(m1.generators == IntMatrix{V({2})});
    CHECK(m1.complete);

    auto z = relation_lattice(sixth_roots());
    CHECK(z.generators == IntMatrix{V({1, 1}), V({0, 6})});
    CHECK(z.complete);

    auto g = relation_lattice(gauss_pair());
    CHECK(g.generators == IntMatrix{V({1, 1})});
    CHECK(g.complete);

    // Family at p = 1/2: roots 1 and the primitive sixth roots of unity.
    auto roots = roots_of(P({-1, 1}) * P({1, -1, 1}));
    auto e3 = relation_lattice(roots);
    CHECK(e3.complete);
    CHECK(e3.generators == IntMatrix{V({1, 0, 0}), V({0, 1, 1}), V({0, 0, 6})});

    // Mixed: a non-torsion pair and -1.
    std::vector<AlgebraicNumber> mixed = gauss_pair();
    mixed.push_back(AlgebraicNumber::rational(Rational(-1)));
    auto mx = relation_lattice(mixed);
    CHECK(mx.complete);
    CHECK(mx.generators == IntMatrix{V({1, 1, 0}), V({0, 0, 2})});

    // Agreement with brute force on small boxes.
    for (const auto& gs : {sixth_roots(), gauss_pair(), mixed}) {
        auto lat = relation_lattice(gs);
        for (const auto& v : brute_relations(gs, 3)) CHECK(in_lattice(lat.generators, v));
        for (const auto& v : lat.generators) CHECK(power_product_is_one(gs, v));
    }
}

TEST_CASE("two independent non-torsion pairs trigger the bounded search") {
    // (3+4i)/5 and ((3+4i)/5)^2 are related by (2, 0, -1, 0).
    auto a = gauss_pair();
    std::vector<AlgebraicNumber> g{a[0], a[1], pow(a[0], 2), pow(a[1], 2)};
    auto lat = relation_lattice(g, 8);
    CHECK(!lat.complete);
    for (const auto& v : lat.generators) CHECK(power_product_is_one(g, v));
    CHECK(in_lattice(lat.generators, V({2, 0, -1, 0})));
    CHECK(in_lattice(lat.generators, V({1, 1, 0, 0})));
}

TEST_CASE("parametrization") {
    auto t1 = parametrize(relation_lattice({AlgebraicNumber::rational(Rational(-1))}));
    CHECK(t1.free_rank == 0);
    REQUIRE(t1.finite_part.size() == 2);
    CHECK(t1.finite_point(0)[0].is_one());
    CHECK(t1.finite_point(1)[0].as_rational() == Rational(-1));

    auto t2 = parametrize(relation_lattice(gauss_pair()));
    CHECK(t2.free_rank == 1);
    CHECK(t2.finite_part.size() == 1);
    CHECK(t2.embedding[0][0] == -t2.embedding[1][0]);
    CHECK(abs(t2.embedding[0][0]) == 1);

    auto t3 = parametrize(relation_lattice(sixth_roots()));
    CHECK(t3.free_rank == 0);
    REQUIRE(t3.finite_part.size() == 6);
    for (size_t c = 0; c < 6; ++c) {
        auto pt = t3.finite_point(c);
        CHECK(equal(pt[0], conj(pt[1])));
        CHECK(t3.satisfies(t3.finite_part[c]));
    }

    // Random rational free angles stay on the torus.
    std::mt19937_64 rng(2);
    auto roots = roots_of(P({-1, 1}) * P({1, -1, 1}));
    std::vector<AlgebraicNumber> mixed = gauss_pair();
    mixed.push_back(AlgebraicNumber::rational(Rational(-1)));
    for (const auto& gs : {roots, mixed, gauss_pair()}) {
        auto tp = parametrize(relation_lattice(gs));
        for (int it = 0; it < 10; ++it) {
            std::vector<Rational> phi;
            for (size_t e = 0; e < tp.free_rank; ++e) {
                Rational x(static_cast<long>(rng() % 1000), 997);
                x.canonicalize();
                phi.push_back(x);
            }
            CHECK(tp.satisfies(tp.turns(rng() % tp.finite_part.size(), phi)));
        }
    }
}

TEST_CASE("orbit points") {
    auto g = gauss_pair();
    auto o0 = orbit_point(g, 0);
    CHECK(o0[0].is_one());
    CHECK(o0[1].is_one());
    auto o2 = orbit_point(g, 2);
    CHECK(o2[0].as_rational() == std::nullopt);
    CHECK(equal(o2[0], AlgebraicNumber::gaussian({Rational(-7, 25), Rational(24, 25)})));
    CHECK(equal(o2[1], AlgebraicNumber::gaussian({Rational(-7, 25), Rational(-24, 25)})));
    auto lat = relation_lattice(sixth_roots());
    auto z = sixth_roots();
    for (unsigned long n = 0; n <= 100; n += 7)
        for (const auto& v : lat.generators) CHECK(power_product_is_one(orbit_point(z, n), v));
}
