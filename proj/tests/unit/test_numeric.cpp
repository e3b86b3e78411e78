#include <random>

#include "doctest.h"
#include "rlrs/elementary.hpp"
#include "rlrs/poly.hpp"

using namespace rlrs;

namespace {

// Checks that the interval contains the decimal reference and is narrow.
void check_encloses(const RealInterval& x, const char* ref, long bits) {
    Rational r = parse_rational(ref);
    Rational slack = pow2(-120);
    CHECK(x.lo() <= r + slack);
    CHECK(r - slack <= x.hi());
    CHECK(x.width() <= pow2(-bits + 4));
}

}  // namespace

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1//2"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("6/-4"), InvalidInput);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("12")) == "12");
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(to_decimal(Rational(-1, 3), 4) == "-0.3333");
    CHECK(to_decimal(Rational(2, 3), 2) == "0.67");
}

TEST_CASE("directed square roots bracket the true value") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational q(static_cast<long>(rng() % 100000 + 1), static_cast<long>(rng() % 997 + 1));
        q.canonicalize();
        Rational lo = sqrt_down(q, 80), hi = sqrt_up(q, 80);
        CHECK(lo * lo <= q);
        CHECK(q <= hi * hi);
        CHECK(hi - lo <= q * pow2(-70) + pow2(-70));
    }
}

TEST_CASE("polynomial arithmetic") {
    Poly p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    Poly q({Rational(1), Rational(1)});                // x + 1
    auto [d, r] = divmod(p, q);
    CHECK(r.is_zero());
    CHECK(d == Poly({Rational(-1), Rational(1)}));
    CHECK(gcd(p, q) == q);
    CHECK(p.shift(Rational(1)) == Poly({Rational(0), Rational(2), Rational(1)}));
    CHECK(cyclotomic(6) == Poly({Rational(1), Rational(-1), Rational(1)}));
    CHECK(cyclotomic(12).degree() == 4);
}

TEST_CASE("yun decomposition of (x-1)^2 (x^2-x+1)^2") {
    Poly a({Rational(-1), Rational(1)});
    Poly b({Rational(1), Rational(-1), Rational(1)});
    Poly f = a * a * b * b;
    auto parts = yun(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].degree() == 0);
    CHECK(parts[1] == a * b);
}

TEST_CASE("yun reconstructs random products") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        Poly f = Poly::constant(Rational(1));
        std::vector<Poly> factors;
        for (int k = 1; k <= 3; ++k) {
            Poly s({Rational(static_cast<long>(rng() % 7) - 3 + 10 * k), Rational(1)});
            Poly pk = Poly::constant(Rational(1));
            for (int j = 0; j < k; ++j) pk = pk * s;
            f = f * pk;
            factors.push_back(s);
        }
        auto parts = yun(f);
        REQUIRE(parts.size() == 3);
        for (int k = 0; k < 3; ++k) CHECK(parts[k] == factors[k]);
    }
}

TEST_CASE("pi enclosure") {
    RealInterval p = pi_interval(100);
    check_encloses(p, "3.141592653589793238462643383279502884197", 100);
}

TEST_CASE("cos and sin in turns") {
    auto [c1, s1] = cos_sin_turns(RealInterval(Rational(1, 7)), 100);
    check_encloses(c1, "0.6234898018587335305250048840042398106323", 100);
    check_encloses(s1, "0.7818314824680298087084445266740577502323", 100);
    auto [c2, s2] = cos_sin_turns(RealInterval(Rational(3, 10)), 100);
    check_encloses(c2, "-0.3090169943749474241022934171828190588602", 100);
    auto [c3, s3] = cos_sin_turns(RealInterval(Rational(-13, 10)), 100);
    check_encloses(s3, "-0.9510565162951535721164393333793821434057", 100);
    auto [c6, s6] = cos_sin_turns(RealInterval(Rational(1, 6)), 100);
    CHECK(c6.contains(Rational(1, 2)));
}

TEST_CASE("cos^2 + sin^2 encloses one") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Rational t(static_cast<long>(rng() % 20001) - 10000, 997);
        t.canonicalize();
        auto [c, s] = cos_sin_turns(RealInterval(t), 80);
        CHECK((c.sqr() + s.sqr()).contains(Rational(1)));
    }
}

TEST_CASE("argument in turns") {
    check_encloses(arg_turns(Rational(3), Rational(4), 100), "0.1475836176504332741754010762247405259511", 100);
    check_encloses(arg_turns(Rational(-5), Rational(-12), 100), "-0.3128329581890011838137472524352214476652", 100);
    CHECK(arg_turns(Rational(-1), Rational(0), 60).contains(Rational(1, 2)));
    RealInterval a = arg_turns(Rational(1, 2), Rational(1), 90);
    auto [c, s] = cos_sin_turns(a, 80);
    // cos(arg(1/2 + i)) = 1 / sqrt(5)
    CHECK(c.sqr().overlaps(RealInterval(Rational(1, 5))));
}
