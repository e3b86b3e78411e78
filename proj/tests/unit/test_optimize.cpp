#include <cmath>
#include <random>

#include "doctest.h"
#include "rlrs/optimize.hpp"

using namespace rlrs;

namespace {

AlgebraicNumber Q(const Rational& q) { return AlgebraicNumber::rational(q); }

Rational R(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// z - x cos(phi) - y sin(phi) on the torus of 1 and (p + qi).
struct ConeForm {
    DominantForm form;
    TorusParam torus;
};

ConeForm cone_form(const Rational& z, const Rational& x, const Rational& y, const Rational& p = R(3, 5),
                   const Rational& q = R(4, 5)) {
    AlgebraicNumber g = AlgebraicNumber::gaussian({p, q});
    AlgebraicNumber a = AlgebraicNumber::gaussian({-x / 2, y / 2});
    ConeForm cf;
    cf.form.terms = {{0, Q(z), Q(Rational(1))}, {1, a, g}, {2, conj(a), conj(g)}};
    cf.torus = parametrize(relation_lattice(cf.form.gammas()));
    return cf;
}

long double closed_form(const Rational& z, const Rational& x, const Rational& y) {
    long double zz = to_ld(z), xx = to_ld(x), yy = to_ld(y);
    return zz - std::sqrt(xx * xx + yy * yy);
}

DominantForm single(long alpha, long gamma) {
    DominantForm f;
    f.terms = {{0, Q(Rational(alpha)), Q(Rational(gamma))}};
    return f;
}

Lrr fib() { return make_lrr({Rational(1), Rational(1)}); }

}  // namespace

TEST_CASE("dominant values") {
    DominantForm f = single(1, -1);
    TorusParam t = parametrize(relation_lattice(f.gammas()));
    RealInterval v = dominant_value(f, t, {Rational(1, 2)});
    CHECK(v.contains(Rational(-1)));
    CHECK(v.width() < pow2(-60));
    CHECK_THROWS_AS(dominant_value(f, t, {Rational(1, 3)}), InvalidInput);

    auto cf = cone_form(Rational(2), Rational(1), Rational(1));
    // phi = 1/4 turn on the pair: z - x cos - y sin = 2 - 0 - 1 with the pair angles (1/4, -1/4).
    RealInterval w = dominant_value(cf.form, cf.torus, {Rational(0), Rational(1, 4), Rational(-1, 4)});
    CHECK(w.contains(Rational(1)));
}

TEST_CASE("mu and nu on finite tori") {
    DominantForm f = single(1, -1);
    TorusParam t = parametrize(relation_lattice(f.gammas()));
    SignOutcome m = mu(f, t);
    CHECK(m.verdict == Verdict::negative);
    CHECK(m.enclosure.contains(Rational(-1)));
    CHECK(m.enclosure.width() <= pow2(-40));
    CHECK(t.finite_part[m.witness_coset][0] == Rational(1, 2));
    SignOutcome n = nu(f, t);
    CHECK(n.verdict == Verdict::positive);
    CHECK(n.enclosure.contains(Rational(1)));

    // Sixth roots with alpha = 1/2 each: cos(2 pi k / 6) has minimum -1 and |.| minimum 1/2.
    Poly phi6({Rational(1), Rational(-1), Rational(1)});
    auto z = roots_of(phi6);
    DominantForm g;
    g.terms = {{0, Q(R(1, 2)), z[0]}, {1, Q(R(1, 2)), z[1]}};
    TorusParam tz = parametrize(relation_lattice(g.gammas()));
    CHECK(mu(g, tz).enclosure.contains(Rational(-1)));
    CHECK(nu(g, tz).enclosure.contains(R(1, 2)));

    // Zero at a coset, proved by exact evaluation: 1 + zeta^3 over sixth roots.
    DominantForm h;
    h.terms = {{0, Q(Rational(1)), Q(Rational(1))}, {1, Q(R(1, 2)), z[0]}, {2, Q(R(1, 2)), z[1]}};
    TorusParam th = parametrize(relation_lattice(h.gammas()));
    SignOutcome hz = mu(h, th);
    CHECK(hz.verdict == Verdict::zero);
    CHECK(hz.certificate.find("finite") != std::string::npos);
}

TEST_CASE("mu on the cone family") {
    auto zero = cone_form(Rational(2), Rational(2), Rational(0));
    SignOutcome m0 = mu(zero.form, zero.torus);
    CHECK(m0.verdict == Verdict::zero);
    CHECK(m0.certificate.find("pair") != std::string::npos);

    Rational psi(1, 10);
    auto pos = cone_form(2 + psi, 2 - psi, Rational(0));
    SignOutcome mp = mu(pos.form, pos.torus);
    CHECK(mp.verdict == Verdict::positive);
    CHECK(mp.enclosure.contains(R(1, 5)));
    CHECK(mp.enclosure.width() <= pow2(-40));

    auto neg = cone_form(Rational(1), Rational(1), Rational(1));
    CHECK(mu(neg.form, neg.torus).verdict == Verdict::negative);

    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        Rational z = R(static_cast<long>(rng() % 2001) - 1000, 97), x = R(static_cast<long>(rng() % 2001) - 1000, 89),
                 y = R(static_cast<long>(rng() % 2001) - 1000, 83);
        auto cf = cone_form(z, x, y);
        OptimizeOptions o;
        o.tol = Rational(1, 1000000000);
        SignOutcome s = mu(cf.form, cf.torus, o);
        long double cfv = closed_form(z, x, y);
        CHECK(s.enclosure.width() <= o.tol);
        CHECK(to_ld(s.enclosure.lo()) <= cfv + 1e-15L * (1 + std::fabs(cfv)));
        CHECK(to_ld(s.enclosure.hi()) >= cfv - 1e-15L * (1 + std::fabs(cfv)));
    }
}

TEST_CASE("nu on the cone family and Fibonacci") {
    auto cf = cone_form(Rational(1), Rational(2), Rational(0));
    SignOutcome n = nu(cf.form, cf.torus);
    CHECK(n.verdict == Verdict::zero);

    auto off = cone_form(Rational(5), Rational(3), Rational(0));
    SignOutcome n2 = nu(off.form, off.torus);
    CHECK(n2.verdict == Verdict::positive);
    CHECK(n2.enclosure.contains(Rational(2)));

    auto p = dominant_problem(fib(), InitialConfig{{Rational(1), Rational(1)}});
    SignOutcome nf = nu(p.normalized.dominant(), p.torus);
    CHECK(nf.verdict == Verdict::positive);
    // phi / sqrt 5 = 0.72360679774997896964...
    CHECK(abs(nf.enclosure.mid() - parse_rational("0.72360679774997896964")) < Rational(1, 100000000000000000L));
}

TEST_CASE("lower-bound soundness along the orbit") {
    auto cf = cone_form(R(3, 2), R(1, 1), R(-1, 3));
    SignOutcome s = mu(cf.form, cf.torus);
    for (uint64_t n = 1; n <= 10000; n += 97) {
        ComplexInterval v = cf.form.evaluate(n, 60);
        CHECK(s.enclosure.lo() <= v.re().hi() + pow2(-40));
    }
}

TEST_CASE("halving the tolerance keeps the enclosure nested") {
    auto cf = cone_form(R(7, 3), R(2, 1), R(1, 5));
    OptimizeOptions a, b;
    a.tol = pow2(-20);
    b.tol = pow2(-21);
    SignOutcome sa = mu(cf.form, cf.torus, a), sb = mu(cf.form, cf.torus, b);
    CHECK(sb.enclosure.lo() >= sa.enclosure.lo());
    CHECK(sb.enclosure.hi() <= sa.enclosure.hi());
    SignOutcome sa2 = mu(cf.form, cf.torus, a);
    CHECK(sa2.enclosure.lo() == sa.enclosure.lo());
    CHECK(sa2.enclosure.hi() == sa.enclosure.hi());
}

TEST_CASE("minimum over a ball") {
    auto p = dominant_problem(fib(), InitialConfig{{Rational(1), Rational(1)}});
    BallForm bf = ball_form(p.model, p.normalized);
    SignOutcome s = min_over_ball(bf, R(1, 10), p.torus);
    CHECK(s.verdict == Verdict::positive);
    long double sq5 = std::sqrt(5.0L), phi = (1 + sq5) / 2, psi = (1 - sq5) / 2;
    long double want = phi / sq5 - 0.1L * std::sqrt(psi * psi + 1) / sq5;
    CHECK(to_ld(s.enclosure.lo()) <= want + 1e-12L);
    CHECK(to_ld(s.enclosure.hi()) >= want - 1e-12L);

    // Tiny radius approaches mu.
    SignOutcome m = mu(p.normalized.dominant(), p.torus);
    SignOutcome tiny = min_over_ball(bf, pow2(-50), p.torus);
    CHECK(abs(tiny.enclosure.lo() - m.enclosure.lo()) < pow2(-30));

    // Negative mu stays negative on every ball.
    auto alt = dominant_problem(make_lrr({Rational(-1)}), InitialConfig{{Rational(1)}});
    BallForm ab = ball_form(alt.model, alt.normalized);
    for (long d : {1000, 10, 1}) CHECK(min_over_ball(ab, R(1, d), alt.torus).verdict == Verdict::negative);
}
