#include <random>

#include "doctest.h"
#include "rlrs/algebraic.hpp"
#include "rlrs/elementary.hpp"

using namespace rlrs;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

AlgebraicNumber sqrt_of(long n) { return sqrt_positive(AlgebraicNumber::rational(Rational(n))); }

}  // namespace

TEST_CASE("rational roots of x^2 - 1") {
    auto r = roots_of(P({-1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].as_rational() == Rational(1));
    CHECK(r[1].as_rational() == Rational(-1));
}

TEST_CASE("roots of (x-1)^2 (x^2-x+1)^2 are 1 and the primitive sixth roots of unity") {
    Poly a = P({-1, 1}), b = P({1, -1, 1});
    auto r = roots_of(a * a * b * b);
    REQUIRE(r.size() == 3);
    CHECK(r[0].is_one());
    CHECK(root_of_unity_order(r[1]) == 6);
    CHECK(root_of_unity_order(r[2]) == 6);
    CHECK(equal(r[1], conj(r[2])));
}

TEST_CASE("golden ratio") {
    auto r = roots_of(P({-1, -1, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].is_real());
    CHECK(r[0].sign() == 1);
    CHECK(r[1].sign() == -1);
    // phi * psi = -1, phi + psi = 1
    CHECK((r[0] * r[1]).as_rational() == Rational(-1));
    CHECK((r[0] + r[1]).as_rational() == Rational(1));
    ComplexInterval e = r[0].enclosure(100);
    CHECK(e.re().overlaps(RealInterval(parse_rational("1.61803398874989484820458683436563811772"),
                                       parse_rational("1.61803398874989484820458683436563811773"))));
}

TEST_CASE("refinement of sqrt 2 and (1 + i sqrt 3) / 2") {
    AlgebraicNumber s2 = sqrt_of(2);
    ComplexInterval e = s2.enclosure(200);
    CHECK(e.re().width() <= pow2(-200));
    CHECK(e.re().sqr().contains(Rational(2)));
    auto r = roots_of(P({1, -1, 1}));
    REQUIRE(r.size() == 2);
    ComplexInterval z = r[0].enclosure(150);
    CHECK(z.re().contains(Rational(1, 2)));
    CHECK(z.im().sqr().contains(Rational(3, 4)));
    CHECK(z.width() <= pow2(-150));
}

TEST_CASE("arithmetic on surds") {
    AlgebraicNumber s2 = sqrt_of(2), s3 = sqrt_of(3), s6 = sqrt_of(6);
    CHECK((s2 * s2).as_rational() == Rational(2));
    CHECK(equal(s2 * s3, s6));
    CHECK(!equal(s2 + s3, s6));
    AlgebraicNumber t = s2 + s3;
    CHECK(t.degree() == 4);
    CHECK(equal(t * t, AlgebraicNumber::rational(Rational(5)) + AlgebraicNumber::rational(Rational(2)) * s6));
    CHECK((s2 - s2).is_zero());
    CHECK(compare(s2, s3) == -1);
    CHECK(compare(s3, s2) == 1);
    CHECK(equal(inverse(s2), s2 * AlgebraicNumber::rational(Rational(1, 2))));
}

TEST_CASE("gaussian rationals and products of powers") {
    AlgebraicNumber g = AlgebraicNumber::gaussian({Rational(3, 5), Rational(4, 5)});
    CHECK(norm2(g).is_one());
    CHECK((g * conj(g)).is_one());
    CHECK(root_of_unity_order(g) == 0);
    CHECK(!pow(g, 3).is_one());
    AlgebraicNumber m = AlgebraicNumber::rational(Rational(-1));
    CHECK(pow(m, 2).is_one());
    CHECK(root_of_unity_order(m) == 2);
    AlgebraicNumber z6 = roots_of(P({1, -1, 1}))[0];
    CHECK(pow(z6, 6).is_one());
    CHECK(!pow(z6, 3).is_one());
    CHECK(real_part(z6).as_rational() == Rational(1, 2));
}

TEST_CASE("eval at root through the companion matrix") {
    // gamma root of x^2 - 2, A(t) = 1 + t gives 1 + sqrt 2.
    auto r = roots_of(P({-2, 0, 1}));
    AlgebraicNumber v = eval_at_root(P({1, 1}), P({-2, 0, 1}), r[0]);
    CHECK(equal(v, AlgebraicNumber::rational(Rational(1)) + sqrt_of(2)));
}

TEST_CASE("root isolation on random integer polynomials") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        int d = 2 + static_cast<int>(rng() % 7);
        std::vector<Rational> c(static_cast<size_t>(d + 1));
        for (auto& x : c) x = Rational(static_cast<long>(rng() % 21) - 10);
        c.back() = Rational(1 + static_cast<long>(rng() % 3));
        if (c[0] == 0) c[0] = 1;
        Poly p(c);
        Poly q = squarefree_part(p);
        auto disks = isolate_roots(q);
        CHECK(static_cast<long>(disks.size()) == q.degree());
        for (size_t i = 0; i < disks.size(); ++i) {
            CHECK(pellet_test(q, disks[i].center, disks[i].radius, 1));
            for (size_t j = i + 1; j < disks.size(); ++j) {
                Rational s = disks[i].radius + disks[j].radius;
                CHECK((disks[i].center - disks[j].center).norm2() >= s * s);
            }
        }
    }
}
