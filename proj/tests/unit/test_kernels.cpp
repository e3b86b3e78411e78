#include <cmath>
#include <random>

#include "doctest.h"
#include "rlrs/elementary.hpp"
#include "rlrs/hardness.hpp"
#include "rlrs/kernels.hpp"

using namespace rlrs;
using namespace rlrs::kernels;

namespace {

Rational R(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

FixedTurn gauss_turn() { return UnitAngle::make(R(3, 5), R(4, 5)).fixed(); }

}  // namespace

TEST_CASE("fixed-point angles") {
    FixedTurn h = fixed_turn_exact(R(1, 2));
    CHECK(h.base == (u128(1) << 127));
    CHECK(h.span == 0);
    FixedTurn s = fixed_turn_exact(R(1, 6));
    CHECK(s.span == 1);
    CHECK(nearest_int_distance(s, 6).lo == 0);
    CHECK_THROWS_AS(fixed_turn(RealInterval(Rational(0), pow2(-10))), InvalidInput);

    // Distances agree with interval arithmetic on the exact angle.
    RealInterval t = arg_turns(R(3, 5), R(4, 5), 200);
    FixedTurn f = gauss_turn();
    for (uint64_t n : {1ul, 7ul, 393ul, 123456ul}) {
        RealInterval nt = RealInterval(Rational(static_cast<unsigned long>(n))) * t;
        nt = nt - RealInterval(Rational(floor_of(nt.mid() + Rational(1, 2))));
        Rational d = abs(nt.mid());
        DistBounds db = nearest_int_distance(f, n);
        CHECK(scaled_to_rational(db.lo, 128) <= d);
        CHECK(scaled_to_rational(db.hi, 128) >= d);
    }
}

TEST_CASE("serial and parallel kernels agree") {
    FixedTurn f = gauss_turn();
    PrefixMin a = prefix_min_serial(f, 1, 200000), b = prefix_min_omp(f, 1, 200000);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
    CHECK(a.argmin == b.argmin);
    CHECK(a.argmin == 393);

    HardnessParams hp = compute_params(UnitAngle::make(R(3, 5), R(4, 5)), Rational(1), R(1, 20));
    BallTermParams bp = ball_term_params(hp);
    CHECK(ball_term_scan_serial(f, 1, 50000, bp) == ball_term_scan_omp(f, 1, 50000, bp));
    CHECK(closed_form_scan_serial(f, hp.n2 + 1, 50000, bp) == closed_form_scan_omp(f, hp.n2 + 1, 50000, bp));
    CHECK(converse_scan_serial(f, hp.n1 + 1, 50000, bp) == converse_scan_omp(f, hp.n1 + 1, 50000, bp));

    std::vector<std::vector<long double>> pts{{2.1L, 1.9L, 0, 0, 0, 2}, {2.05L, 1.95L, 0.01L, 0, 0.02L, 1.99L}};
    bp.psi = 0.1L;
    SampleGap ga = ball_sample_gap_serial(f, 20000, pts, bp), gb = ball_sample_gap_omp(f, 20000, pts, bp);
    CHECK(ga.worst == gb.worst);
    CHECK(ga.worst_n == gb.worst_n);
    CHECK(std::fabs(ga.mean_gap - gb.mean_gap) <= 1e-12L * (1 + std::fabs(ga.mean_gap)));

    std::vector<std::vector<FixedTurn>> targets;
    for (long k = 1; k <= 5; ++k) targets.push_back({fixed_turn_exact(R(k, 7))});
    CHECK(kronecker_hits_serial({f}, targets, 1e-2L, 100000) == kronecker_hits_omp({f}, targets, 1e-2L, 100000));
}

TEST_CASE("scan results match the interval closed form") {
    UnitAngle a = UnitAngle::make(R(3, 5), R(4, 5));
    HardnessParams hp = compute_params(a, Rational(1), R(1, 20));
    hp.psi = R(1, 10);
    BallTermParams bp = ball_term_params(hp);
    FixedTurn f = a.fixed();
    for (uint64_t n : {1ul, 7ul, 393ul, 5000ul, 99991ul}) {
        RealInterval v = min_ball_term_turns(n, hp);
        CHECK(std::fabs(ball_term_ld(f, n, bp) - to_ld(v.mid())) < 1e-12L);
    }
    ScanReport r = ball_term_scan_serial(f, 1, 2000, bp);
    CHECK(r.checked == 2000);
    CHECK(r.negatives + r.ambiguous.size() > 0);
    CHECK(r.first_negative > 0);
    CHECK(min_ball_term(r.first_negative, hp).negative());

    // Each certified hit is a true approach within eps.
    std::vector<std::vector<FixedTurn>> targets{{fixed_turn_exact(R(1, 3))}};
    uint64_t n = kronecker_hits_serial({f}, targets, 1e-2L, 1000000)[0];
    REQUIRE(n > 0);
    auto [c, s] = cos_sin_turns(RealInterval(Rational(static_cast<unsigned long>(n))) * a.turns(200), 100);
    auto [tc, ts] = cos_sin_turns(RealInterval(R(1, 3)), 100);
    RealInterval d2 = (c - tc).sqr() + (s - ts).sqr();
    CHECK(d2.hi() < R(1, 10000));
}
