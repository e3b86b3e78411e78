#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "rlrs/decision.hpp"
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

Rational N(uint64_t n) { return Rational(static_cast<unsigned long>(n)); }

UnitAngle gauss() { return UnitAngle::make(R(3, 5), R(4, 5)); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

// ---- 1. Order-6 family at p = 1/2 ----
void example3(Outcome& o) {
    Lrr l = build_hardness_lrr(R(1, 2));
    std::vector<Rational> want;
    for (long a : {-1, 4, -8, 10, -8, 4}) want.emplace_back(a);
    o.require(l.coeffs == want, "coefficients (-1,4,-8,10,-8,4)");
    SpectralData s = spectral(l);
    o.require(s.roots.size() == 3, "three distinct roots");
    int ones = 0, sixth = 0;
    for (const auto& r : s.roots) {
        if (r.gamma.is_one() && r.multiplicity == 2) ++ones;
        if (root_of_unity_order(r.gamma) == 6 && r.multiplicity == 2) ++sixth;
    }
    o.require(ones == 1, "1 with multiplicity 2");
    o.require(sixth == 2, "primitive sixth roots with multiplicity 2");
    o.require(s.rho.is_one(), "rho = 1");
    o.require(s.m == 1, "m = 1");
    o.detail << "roots: 1 (x2), e^{+-i pi/3} (x2); rho = 1, m = 1";
}

// ---- 2. mu on the cone family equals z - sqrt(x^2 + y^2) ----
void cone_formula(Outcome& o) {
    UnitAngle a = gauss();
    Lrr l = build_hardness_lrr(a.p, a.q);
    BasisChange bc = basis_change(a.p, *a.q);
    LrsModel model(l);
    std::mt19937_64 rng(2024);
    auto rnd = [&](long span, long den) -> Rational {
        return R(static_cast<long>(rng() % (2 * span + 1)) - span, 1 + static_cast<long>(rng() % den));
    };
    Rational worst_width = 0;
    int contained = 0;
    for (int it = 0; it < 100; ++it) {
        Rational z = rnd(30, 9), x = rnd(30, 9), y = rnd(30, 9);
        std::vector<Rational> coef{z, x, y, rnd(5, 3), rnd(5, 3), rnd(5, 3)};
        InitialConfig c{bc.C_inv.apply(coef)};
        DominantProblem dp = dominant_problem(l, c);
        SignOutcome m = mu(dp.normalized.dominant(), dp.torus);
        worst_width = std::max<Rational>(worst_width, m.enclosure.width());
        Rational r2 = x * x + y * y;
        Rational r = sqrt_down(r2, 200);
        bool inside;
        if (r * r == r2) {
            inside = m.enclosure.contains(z - r);
        } else {
            RealInterval exact = cone_contains(z, x, y, 200).margin;
            inside = m.enclosure.lo() <= exact.lo() && exact.hi() <= m.enclosure.hi();
        }
        contained += inside;
    }
    o.require(contained == 100, "enclosure contains z - sqrt(x^2 + y^2)");
    o.require(worst_width <= R(1, 1000000000), "width <= 1e-9");
    o.detail << contained << "/100 contain the exact value; widest enclosure " << to_decimal(worst_width, 15);
}

// ---- 3. Rotation of the dominant block ----
void rotation(Outcome& o) {
    auto is = [](const QuadraticNumber& q, const Rational& r) { return q.a == r && q.b == 0; };
    RotationCheck g = rotation_check(R(3, 5), R(4, 5));
    Rational want[3][3] = {{1, 0, 0}, {0, R(3, 5), R(4, 5)}, {0, R(-4, 5), R(3, 5)}};
    bool exact = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) exact = exact && is(g.M[i][j], want[i][j]);
    o.require(exact, "p = 3/5 map equals [[1,0,0],[0,3/5,4/5],[0,-4/5,3/5]]");
    o.require(g.passed(), "p = 3/5 orthogonal with determinant one");

    RotationCheck h = rotation_check(R(1, 2));
    using M3 = std::array<std::array<QuadraticNumber, 3>, 3>;
    M3 p = h.M;
    for (int k = 1; k < 6; ++k) {
        M3 next;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                QuadraticNumber s{0, 0, h.M[0][0].d};
                for (int t = 0; t < 3; ++t) s = s + p[i][t] * h.M[t][j];
                next[i][j] = s;
            }
        p = next;
    }
    bool id = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) id = id && is(p[i][j], Rational(i == j ? 1 : 0));
    o.require(h.passed(), "p = 1/2 map is a rotation");
    o.require(id, "sixth power of the p = 1/2 map is the identity");
    o.detail << "p = 3/5 entries exact; p = 1/2 entry q = " << h.M[1][2].str() << ", M^6 = I";
}

// ---- 4. Exponential-polynomial reconstruction ----
void reconstruction(Outcome& o) {
    std::mt19937_64 rng(77);
    int bad = 0, checked = 0;
    for (int it = 0; it < 50; ++it) {
        size_t k = 1 + rng() % 6;
        std::vector<Rational> a(k);
        for (auto& x : a) x = R(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        if (a[0] == 0) a[0] = R(1, 2);
        InitialConfig c;
        for (size_t i = 0; i < k; ++i) c.entries.push_back(R(static_cast<long>(rng() % 21) - 10, 1 + rng() % 5));
        Lrr l = make_lrr(a);
        auto sol = exp_poly_solution(l, c);
        auto u = eval_terms(l, c, 500);
        for (uint64_t n = 0; n <= 500; ++n, ++checked)
            if (!sol.reconstruct(n, 40).re().contains(u[n])) ++bad;
    }
    o.require(bad == 0, "every enclosure contains u_n");
    o.detail << checked << " terms checked over 50 recurrences, " << bad << " misses";
}

// ---- 5. Relation lattices and orbits ----
void torus(Outcome& o) {
    auto V = [](std::initializer_list<long> c) {
        IntVec v;
        for (long x : c) v.emplace_back(x);
        return v;
    };
    std::vector<AlgebraicNumber> minus{AlgebraicNumber::rational(Rational(-1))};
    std::vector<AlgebraicNumber> sixth = roots_of(Poly({Rational(1), Rational(-1), Rational(1)}));
    std::vector<AlgebraicNumber> gp{AlgebraicNumber::gaussian({R(3, 5), R(4, 5)}),
                                    AlgebraicNumber::gaussian({R(3, 5), R(-4, 5)})};
    struct Case {
        std::vector<AlgebraicNumber> g;
        IntMatrix want;
        const char* name;
    };
    std::vector<Case> cases{{minus, {V({2})}, "[-1]"},
                            {sixth, {V({1, 1}), V({0, 6})}, "[e^{+-i pi/3}]"},
                            {gp, {V({1, 1})}, "[(3+-4i)/5]"}};
    size_t orbit_checks = 0;
    for (const auto& c : cases) {
        RelationLattice lat = relation_lattice(c.g);
        o.require(lat.generators == c.want, std::string("lattice of ") + c.name);
        o.require(lat.complete, std::string("complete lattice for ") + c.name);
        for (unsigned long n = 0; n <= 100; ++n) {
            auto pt = orbit_point(c.g, n);
            for (const auto& v : lat.generators) {
                ++orbit_checks;
                o.require(power_product_is_one(pt, v), std::string("orbit relation for ") + c.name);
            }
        }
    }
    o.detail << "(2), {(1,1),(0,6)}, {(1,1)}; " << orbit_checks << " exact orbit relation checks";
}

// ---- 6. Decision suite against brute force ----
void decisions(Outcome& o) {
    const uint64_t H = 10000;
    const size_t S = 1000;
    Lrr fib = make_lrr({Rational(1), Rational(1)});
    Lrr alt = make_lrr({Rational(-1)});
    InitialConfig f11{{Rational(1), Rational(1)}}, f01{{Rational(0), Rational(1)}}, one{{Rational(1)}};

    auto yes_validated = [&](const Decision& d, const Lrr& l, const InitialConfig& c, Property p,
                             const std::string& name) {
        o.require(d.verdict == Answer::yes, name + " YES");
        if (d.verdict != Answer::yes || !d.certificate.radius) return;
        BruteForceReport b = brute_force_check(l, Region{c, *d.certificate.radius, Topology::closed}, p, H, S);
        o.require(!b.first, name + " certified ball has no sampled violation");
    };

    yes_validated(exists_robust_positivity(fib, f11), fib, f11, Property::positivity, "fib(1,1) positivity");
    yes_validated(exists_robust_skolem(fib, f11), fib, f11, Property::nonzero, "fib(1,1) skolem");
    yes_validated(exists_robust_ultimate_positivity(fib, f11), fib, f11, Property::ultimate, "fib(1,1) ultpos");

    Decision z = exists_robust_positivity(fib, f01);
    o.require(z.verdict == Answer::no && z.certificate.index, "fib(0,1) positivity NO with an index");
    if (z.certificate.index) {
        BruteForceReport at = brute_force_check(fib, Region{f01, {}, Topology::open}, Property::positivity, H, 1);
        o.require(at.first && at.first->n == *z.certificate.index && at.first->value == *z.certificate.value,
                  "fib(0,1) violating index matches brute force");
        BruteForceReport near =
            brute_force_check(fib, Region{f01, R(1, 1000), Topology::open}, Property::positivity, H, S);
        o.require(near.first && near.first->value < 0, "fib(0,1) every small ball has a negative term");
    }

    Decision u = exists_robust_ultimate_positivity(alt, one);
    o.require(u.verdict == Answer::no, "a=(-1) ultpos NO");
    for (long d : {10, 1000}) {
        BruteForceReport b = brute_force_check(alt, Region{one, R(1, d), Topology::open}, Property::ultimate, H, S);
        o.require(b.first.has_value(), "a=(-1) balls violate in the tail");
    }
    yes_validated(exists_robust_skolem(alt, one), alt, one, Property::nonzero, "a=(-1) skolem");

    UnitAngle a = gauss();
    Lrr h = build_hardness_lrr(a.p, a.q);
    InitialConfig surf{basis_change(a.p, *a.q).C_inv.apply(
        {Rational(2), Rational(2), Rational(0), Rational(0), Rational(0), Rational(0)})};
    Decision s = exists_robust_ultimate_positivity(h, surf);
    o.require(s.verdict == Answer::no, "cone-surface ultpos NO");
    for (long d : {10, 100}) {
        BruteForceReport b = brute_force_check(h, Region{surf, R(1, d), Topology::open}, Property::ultimate, H, S);
        o.require(b.first.has_value(), "cone-surface balls violate in the tail");
    }
    o.detail << "9 verdicts; brute force at horizon " << H << " over " << S << " samples";
}

// ---- 7. Ball gadget ----
void gadget(Outcome& o) {
    HardnessParams hp = compute_params(gauss(), Rational(1), R(1, 20));
    hp.psi = R(1, 10);
    BallGadget g = ball_gadget(hp, 1000);
    o.require(g.distance_ok, "||c - d|| = sqrt(2) psi");
    o.require(g.d_on_surface, "d has margin 0");
    o.require(g.samples == 1000 && g.interior == 1000, "1000 samples strictly interior");
    o.detail << g.interior << "/" << g.samples << " interior samples, distance and surface checks exact";
}

// 2 pi n ||n theta|| as an interval, from a high-precision enclosure of theta.
RealInterval scaled_distance(const UnitAngle& a, uint64_t n) {
    RealInterval t = RealInterval(N(n)) * a.turns(300);
    t = t - RealInterval(Rational(floor_of(t.mid() + R(1, 2))));
    Rational lo = t.lo(), hi = t.hi();
    RealInterval d = lo >= 0 ? t : (hi <= 0 ? RealInterval(-hi, -lo) : RealInterval(Rational(0), std::max<Rational>(-lo, hi)));
    return RealInterval(2 * N(n)) * pi_interval(300) * d;
}

// ---- 8. Closed form of the ball minimum ----
void closed_form(Outcome& o) {
    const uint64_t NMAX = 100000;
    UnitAngle a = gauss();
    HardnessParams hp = compute_params(a, Rational(1), R(1, 20));
    BallTermParams bp = ball_term_params(hp);
    FixedTurn f = a.fixed();

    // Samples of both balls B (y' = 2) and B- (y' = -2) of radius sqrt(2) psi, boundary included.
    long double psi = to_ld(hp.psi), rad = std::sqrt(2.0L) * psi;
    std::mt19937_64 rng(8);
    std::normal_distribution<long double> nd;
    std::vector<std::vector<long double>> pts;
    for (int k = 0; k < 64; ++k) {
        std::vector<long double> off(6);
        long double norm = 0;
        for (auto& v : off) {
            v = nd(rng);
            norm += v * v;
        }
        long double r = (k % 4 == 0 ? 1.0L : std::pow(static_cast<long double>(rng() % 1000) / 1000, 1.0L / 6)) * rad /
                        std::sqrt(norm);
        long double sgn = (k % 2) ? 1 : -1;
        pts.push_back({2 + psi + r * off[0], 2 - psi + r * off[1], r * off[2], r * off[3], r * off[4],
                       2 * sgn + r * off[5]});
    }
    SampleGap gap = ball_sample_gap_omp(f, NMAX, pts, bp);
    o.require(gap.worst <= 1e-9L, "sampled minimum >= closed form - 1e-9");

    ScanReport scan = closed_form_scan_omp(f, hp.n2 + 1, NMAX, bp);
    o.require(scan.violations == 0, "no certified violation of the implication");
    size_t unresolved = 0;
    Rational thr = 2 * hp.qprime + hp.eps;
    for (uint64_t n : scan.ambiguous) {
        RealInterval lhs = scaled_distance(a, n);
        if (lhs.hi() < thr) continue;
        RealInterval v = min_ball_term(n, hp, 160);
        if (v.lo() >= 0) continue;
        if (lhs.lo() >= thr && v.hi() < 0) o.require(false, "violation at n = " + std::to_string(n));
        ++unresolved;
    }
    o.require(unresolved == 0, "all guard-band values resolved");
    o.detail << "psi = " << to_string(hp.psi) << ", n2 = " << hp.n2 << "; max(closed form - sampled min) " << static_cast<double>(gap.worst)
             << " at n = " << gap.worst_n << "; " << scan.checked << " indices scanned, " << scan.ambiguous.size()
             << " re-checked exactly";
}

// ---- 9. L estimation against the prefix oracle ----
void l_estimate(Outcome& o) {
    const uint64_t H = 1000000;
    UnitAngle a = gauss();
    LEstimate e = approximate_L(a, R(1, 20), H);
    RealInterval direct = lagrange_prefix(a, H);
    Rational mid = (e.ell_min + e.ell_max) / 2;
    Rational diff = abs(mid - direct.mid()) + direct.width() / 2;
    o.require(diff <= R(1, 20), "|midpoint - prefix| <= 1/20");

    LEstimate h = approximate_L(UnitAngle::make(R(1, 2)), R(1, 20), H);
    o.require(h.ell_min == 0, "p = 1/2 lower end is 0");
    o.require((h.ell_min + h.ell_max) / 2 <= R(1, 20), "p = 1/2 midpoint within 1/20 of 0");
    o.detail << "3/5: [" << to_decimal(e.ell_min, 6) << ", " << to_decimal(e.ell_max, 6) << "] vs prefix "
             << to_decimal(direct.mid(), 9) << "; 1/2: [" << to_decimal(h.ell_min, 6) << ", "
             << to_decimal(h.ell_max, 6) << "]";
}

// ---- 10. Kronecker density on the (3 +- 4i)/5 torus ----
void kronecker(Outcome& o) {
    const uint64_t NMAX = 1000000;
    const long double eps = 1e-2L;
    UnitAngle a = gauss();
    RealInterval t = a.turns(200);
    std::vector<FixedTurn> theta{fixed_turn(t), fixed_turn(RealInterval(Rational(1)) - t)};
    std::mt19937_64 rng(10);
    std::vector<Rational> phis;
    std::vector<std::vector<FixedTurn>> targets;
    for (int k = 0; k < 20; ++k) {
        Rational phi = R(static_cast<long>(rng() % 1000000), 1000000);
        phis.push_back(phi);
        targets.push_back({fixed_turn_exact(phi), fixed_turn_exact(phi == 0 ? phi : 1 - phi)});
    }
    auto hits = kronecker_hits_omp(theta, targets, eps, NMAX);
    uint64_t worst = 0;
    int verified = 0;
    for (size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] == 0) continue;
        worst = std::max(worst, hits[k]);
        auto [c, s] = cos_sin_turns(RealInterval(N(hits[k])) * t, 100);
        auto [tc, ts] = cos_sin_turns(RealInterval(phis[k]), 100);
        // Both coordinates of (s^n, conj s^n) sit at the same distance from (t, conj t).
        RealInterval d2 = RealInterval(Rational(2)) * ((c - tc).sqr() + (s - ts).sqr());
        verified += d2.hi() < R(1, 10000);
    }
    o.require(verified == 20, "all 20 targets approached within 1e-2");
    o.detail << verified << "/20 targets hit, largest n = " << worst;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all{
        {1, "order-6 family at p = 1/2", example3},
        {2, "cone formula for mu", cone_formula},
        {3, "rotation exactness", rotation},
        {4, "exp-poly reconstruction", reconstruction},
        {5, "relation lattices and orbits", torus},
        {6, "decision suite vs brute force", decisions},
        {7, "ball gadget", gadget},
        {8, "closed-form ball minimum", closed_form},
        {9, "L estimation coherence", l_estimate},
        {10, "Kronecker density", kronecker},
    };
    int failed = 0;
    for (const auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %2d %s: %s (%.2f s) %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
