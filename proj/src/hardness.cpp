#include "rlrs/hardness.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <random>
#include <sstream>

#include "rlrs/elementary.hpp"

namespace rlrs {

namespace {

using kernels::FixedTurn;

Rational canon(Rational r) {
    r.canonicalize();
    return r;
}

bool is_square(const Rational& r, Rational& root) {
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
    Integer n = sqrt(Integer(r.get_num())), d = sqrt(Integer(r.get_den()));
    root = canon(Rational(n, d));
    return true;
}

CRat gauss_pow(CRat base, uint64_t e) {
    CRat out(Rational(1));
    while (e) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

long double cos_turn(long double t) { return std::cos(2 * 3.141592653589793238462643383279502884L * t); }
long double sin_turn(long double t) { return std::sin(2 * 3.141592653589793238462643383279502884L * t); }

long double turn_of(const FixedTurn& f, uint64_t n) {
    kernels::u128 v = kernels::u128(n) * f.base;
    return std::ldexp(std::ldexp(static_cast<long double>(static_cast<uint64_t>(v >> 64)), 64) +
                          static_cast<long double>(static_cast<uint64_t>(v)),
                      -128);
}

// 1 / (sqrt(n^2 + 1) + n) = sqrt(n^2 + 1) - n.
RealInterval sqrt_gap(uint64_t n, long bits) {
    Rational nn(static_cast<unsigned long>(n));
    RealInterval s = sqrt_interval(RealInterval(nn * nn + 1), bits + 8);
    return (s + RealInterval(nn)).inv().rounded(bits + 8);
}

// n(2 - psi)(1 - c) - 2 q' |s| - 2 psi gap.
RealInterval ball_term_from(const RealInterval& c, const RealInterval& s, uint64_t n, const HardnessParams& hp,
                            long bits) {
    Rational nn(static_cast<unsigned long>(n));
    RealInterval abs_s(s.mig(), s.mag());
    RealInterval v = RealInterval(nn * (2 - hp.psi)) * (RealInterval(Rational(1)) - c) -
                     RealInterval(2 * hp.qprime) * abs_s - RealInterval(2 * hp.psi) * sqrt_gap(n, bits);
    return v.rounded(bits);
}

// Exact sign of the closed form for rational q: A >= 2 psi (sqrt(n^2+1) - n).
int ball_term_sign_exact(uint64_t n, const HardnessParams& hp) {
    auto [c, s] = hp.angle.cos_sin(n);
    Rational nn(static_cast<unsigned long>(n));
    Rational A = nn * (2 - hp.psi) * (1 - c) - 2 * hp.qprime * abs(s);
    Rational lhs = A + 2 * hp.psi * nn;  // compare with 2 psi sqrt(n^2 + 1)
    Rational rhs2 = 4 * hp.psi * hp.psi * (nn * nn + 1);
    if (lhs < 0) return -1;
    Rational l2 = lhs * lhs;
    return l2 > rhs2 ? 1 : (l2 == rhs2 ? 0 : -1);
}

}  // namespace

UnitAngle UnitAngle::make(const Rational& p, std::optional<Rational> q) {
    if (p == 0) throw InvalidInput("p must be nonzero");
    if (q) {
        if (*q == 0) throw InvalidInput("q must be nonzero");
        if (p * p + *q * *q != 1) throw InvalidInput("p^2 + q^2 must equal 1");
        return {p, q};
    }
    if (abs(p) >= 1) throw InvalidInput("|p| must be below 1");
    Rational r;
    if (is_square(1 - p * p, r)) return {p, r};
    return {p, std::nullopt};
}

std::optional<Rational> UnitAngle::rational_turn() const {
    if (q) return std::nullopt;
    if (p == Rational(1, 2)) return Rational(1, 6);
    if (p == Rational(-1, 2)) return Rational(1, 3);
    return std::nullopt;
}

RealInterval UnitAngle::turns(long bits) const {
    if (auto t = rational_turn()) return RealInterval(*t);
    if (q) return arg_turns(p, *q, bits);
    RealInterval s = sqrt_interval(RealInterval(1 - p * p), bits + 16);
    return arg_turns(ComplexInterval(RealInterval(p), s), bits);
}

FixedTurn UnitAngle::fixed(long bits) const {
    if (auto t = rational_turn()) return kernels::fixed_turn_exact(*t);
    bits = std::max(bits, 130L);
    return kernels::fixed_turn(turns(bits).rounded(bits));
}

std::pair<Rational, Rational> UnitAngle::cos_sin(uint64_t n) const {
    if (!q) throw InvalidInput("exact cos/sin needs a rational q");
    CRat z = gauss_pow(CRat(p, *q), n);
    return {z.re, z.im};
}

Lrr build_hardness_lrr(const Rational& p, std::optional<Rational> q) {
    UnitAngle a = UnitAngle::make(p, q);
    Poly lin({Rational(-1), Rational(1)});
    Poly quad({Rational(1), -2 * a.p, Rational(1)});
    Poly ch = lin * lin * quad * quad;
    std::vector<Rational> coeffs(6);
    for (size_t j = 0; j < 6; ++j) coeffs[j] = -ch.coeff(j);
    return make_lrr(coeffs);
}

Rational coefficient_term(const UnitAngle& a, const std::array<Rational, 6>& coef, uint64_t n) {
    auto [c, s] = a.cos_sin(n);
    Rational nn(static_cast<unsigned long>(n));
    return coef[0] * nn - coef[1] * nn * c - coef[2] * nn * s + coef[3] - coef[4] * c - coef[5] * s;
}

BasisChange basis_change(const Rational& p, const Rational& q) {
    UnitAngle a = UnitAngle::make(p, q);
    QMatrix B(6, 6);
    for (uint64_t n = 0; n < 6; ++n) {
        auto [c, s] = a.cos_sin(n);
        Rational nn(static_cast<unsigned long>(n));
        B(n, 0) = nn;
        B(n, 1) = -nn * c;
        B(n, 2) = -nn * s;
        B(n, 3) = 1;
        B(n, 4) = -c;
        B(n, 5) = -s;
    }
    return {inverse(B), B};
}

ConeMembership cone_contains(const Rational& z, const Rational& x, const Rational& y, long bits) {
    Rational r2 = x * x + y * y;
    bool in = z >= 0 && z * z >= r2;
    if (z >= 0 && z * z == r2) return {true, RealInterval(Rational(0))};
    RealInterval margin = RealInterval(z) - sqrt_interval(RealInterval(r2), bits);
    return {in, margin};
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    return {a + o.a, b + o.b, b != 0 ? d : o.d};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
    return {a - o.a, b - o.b, b != 0 ? d : o.d};
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    Rational dd = b != 0 ? d : o.d;
    return {a * o.a + b * o.b * dd, a * o.b + b * o.a, dd};
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const { return a == o.a && b == o.b; }

std::string QuadraticNumber::str() const {
    if (b == 0) return to_string(a);
    std::string s = a != 0 ? to_string(a) + (b > 0 ? "+" : "") : "";
    return s + to_string(b) + "*sqrt(" + to_string(d) + ")";
}

RotationCheck rotation_check(const Rational& p, std::optional<Rational> q_in) {
    QuadraticNumber P{p, 0, 0}, Q;
    if (q_in) {
        if (p * p + *q_in * *q_in != 1) throw InvalidInput("p^2 + q^2 must equal 1");
        Q = {*q_in, 0, 0};
    } else {
        if (abs(p) > 1) throw InvalidInput("|p| must be at most 1");
        Rational r, rad = 1 - p * p;
        if (is_square(rad, r)) {
            Q = {r, 0, 0};
        } else {
            Integer nd = rad.get_num() * rad.get_den(), outside = 1;
            for (Integer f = 2; f * f <= nd && f < 100000; ++f)
                while (nd % (f * f) == 0) {
                    nd /= f * f;
                    outside *= f;
                }
            Q = {0, canon(Rational(outside, rad.get_den())), Rational(nd)};
        }
    }
    QuadraticNumber zero{0, 0, 0}, one{1, 0, 0};
    if (!(P * P + Q * Q == one)) throw InvalidInput("p^2 + q^2 must equal 1");

    // cos_{n+1} = p cos_n - q sin_n, sin_{n+1} = q cos_n + p sin_n, in the basis (1, cos_n, sin_n).
    std::array<QuadraticNumber, 3> cos_next{zero, P, zero - Q}, sin_next{zero, Q, P};
    RotationCheck rc;
    for (size_t i = 0; i < 3; ++i) {
        // v_{n+1}(e_i) = [i==0] - [i==1] cos_{n+1} - [i==2] sin_{n+1}.
        std::array<QuadraticNumber, 3> t{zero, zero, zero};
        if (i == 0) t[0] = one;
        for (size_t b = 0; b < 3; ++b) {
            if (i == 1) t[b] = t[b] - cos_next[b];
            if (i == 2) t[b] = t[b] - sin_next[b];
        }
        // v_n(w) has coordinates (w_z, -w_x, -w_y) in the same basis.
        rc.M[0][i] = t[0];
        rc.M[1][i] = zero - t[1];
        rc.M[2][i] = zero - t[2];
    }
    rc.orthogonal = true;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            QuadraticNumber s = zero;
            for (size_t k = 0; k < 3; ++k) s = s + rc.M[k][i] * rc.M[k][j];
            if (!(s == (i == j ? one : zero))) rc.orthogonal = false;
        }
    const auto& M = rc.M;
    QuadraticNumber det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                          M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                          M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    rc.det_one = det == one;
    std::array<std::array<QuadraticNumber, 3>, 3> want{
        {{one, zero, zero}, {zero, P, Q}, {zero, zero - Q, P}}};
    rc.is_rotation = true;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (!(M[i][j] == want[i][j])) rc.is_rotation = false;
    std::array<QuadraticNumber, 3> v{zero, one, zero};
    for (int it = 0; it < 6; ++it) {
        std::array<QuadraticNumber, 3> w{zero, zero, zero};
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) w[i] = w[i] + M[i][j] * v[j];
        v = w;
    }
    rc.sixfold_identity = v[0] == zero && v[1] == one && v[2] == zero;
    return rc;
}

HardnessParams compute_params(const UnitAngle& angle, const Rational& qprime, const Rational& eps) {
    if (qprime <= 0 || eps <= 0) throw InvalidInput("ell and eps must be positive");
    HardnessParams hp;
    hp.angle = angle;
    hp.qprime = qprime;
    hp.eps = eps;
    Rational two_ql = 2 * qprime;  // 2 pi ell
    // |f(a)| <= a^4/12 and sin(a)/a >= 1 - a^2/6 give the relative bound eta for a^2 below this.
    Rational eta = eps / two_ql;
    Rational a2 = std::min<Rational>(6 * eta, 12 * eta / (1 + eta));
    hp.alpha0 = sqrt_down(a2, 64);
    Rational lead = two_ql - eps;
    hp.n1 = lead > 0 ? floor_of(lead / hp.alpha0).get_ui() + 1 : 1;
    hp.tau1 = two_ql / (two_ql + eps / 3);
    Rational cap = std::min<Rational>({Rational(1, 3), qprime, 2 - 2 * hp.tau1, 2 * hp.tau1 * qprime * eps / 3});
    hp.psi = cap / 2;
    Rational pi_hi = pi_interval(64).hi();
    Rational k = pow(36 * pi_hi, 3) / (4 * eps);
    Integer n2 = ceil_of(sqrt_up(k, 64));
    hp.n2 = std::max<uint64_t>(n2.get_ui(), hp.n1 + 1);
    return hp;
}

std::vector<std::string> check_params(const HardnessParams& hp) {
    std::vector<std::string> bad;
    const auto& a = hp.angle;
    if (a.q && a.p * a.p + *a.q * *a.q != 1) bad.push_back("p^2 + q^2 = 1");
    if (!(hp.psi > 0)) bad.push_back("psi > 0");
    if (!(hp.psi < Rational(1, 3))) bad.push_back("psi < 1/3");
    if (!(hp.psi < hp.qprime)) bad.push_back("psi < pi*ell");
    Rational two_ql = 2 * hp.qprime;
    if (hp.tau1 != two_ql / (two_ql + hp.eps / 3)) bad.push_back("tau1 = 2 pi ell / (2 pi ell + eps/3)");
    if (!(hp.psi <= 2 - 2 * hp.tau1)) bad.push_back("psi <= 2 - 2 tau1");
    if (!(hp.psi < 2 * hp.tau1 * hp.qprime * hp.eps / 3)) bad.push_back("psi < 2 tau1 pi ell eps / 3");
    Rational pi_hi = pi_interval(64).hi();
    Rational n2(static_cast<unsigned long>(hp.n2));
    if (!(pow(36 * pi_hi / n2, 3) * n2 <= 4 * hp.eps)) bad.push_back("(36 pi / n2)^3 n2 <= 4 eps");
    if (!(hp.n2 > hp.n1)) bad.push_back("n2 > n1");
    return bad;
}

kernels::BallTermParams ball_term_params(const HardnessParams& hp) {
    return {to_ld(hp.psi), to_ld(2 * hp.qprime), to_ld(hp.eps)};
}

BallGadget ball_gadget(const HardnessParams& hp, size_t samples, uint64_t seed) {
    if (!(hp.psi > 0)) throw InvalidInput("ball gadget: psi > 0 violated");
    if (!(hp.psi < Rational(1, 3))) throw InvalidInput("ball gadget: psi < 1/3 violated");
    if (!(hp.psi < hp.qprime)) throw InvalidInput("ball gadget: psi < pi*ell violated");
    BallGadget g;
    const Rational& psi = hp.psi;
    g.center = {2 + psi, 2 - psi, 0, 0, 0, 2 * hp.qprime};
    g.point_d = {2, 2, 0, 0, 0, 2 * hp.qprime};
    g.radius2 = 2 * psi * psi;
    Rational dist2 = 0;
    for (size_t i = 0; i < 6; ++i) dist2 += (g.center[i] - g.point_d[i]) * (g.center[i] - g.point_d[i]);
    g.distance_ok = dist2 == g.radius2;
    ConeMembership cm = cone_contains(g.point_d[0], g.point_d[1], g.point_d[2]);
    g.d_on_surface = cm.contains && cm.margin.lo() == 0 && cm.margin.hi() == 0;

    std::mt19937_64 rng(seed);
    auto small = [&](long range) -> Rational {
        return canon(Rational(static_cast<long>(rng() % (2 * range + 1)) - range, range));
    };
    // Rational point of the unit 2-sphere by inverse stereographic projection.
    auto sphere = [&]() -> std::array<Rational, 3> {
        Rational s = 3 * small(1000), t = 3 * small(1000);
        Rational den = s * s + t * t + 1;
        return {2 * s / den, 2 * t / den, (s * s + t * t - 1) / den};
    };
    for (size_t k = 0; k < samples; ++k) {
        std::array<Rational, 6> off;
        if (k % 3 == 0) {
            // Boundary: psi (u, v) with unit u, v on disjoint coordinates has norm sqrt(2) psi.
            auto u = sphere(), v = sphere();
            for (size_t i = 0; i < 3; ++i) {
                off[i] = psi * u[i];
                off[i + 3] = psi * v[i];
            }
        } else {
            for (;;) {
                Rational n2 = 0;
                for (auto& o : off) {
                    o = 3 * psi * small(1 << 20) / 2;
                    n2 += o * o;
                }
                if (n2 <= g.radius2) break;
            }
        }
        std::array<Rational, 6> dp;
        bool same = true;
        for (size_t i = 0; i < 6; ++i) {
            dp[i] = g.center[i] + off[i];
            if (dp[i] != g.point_d[i]) same = false;
        }
        if (same) continue;
        ++g.samples;
        bool strict = dp[1] < dp[0] && dp[0] > 0 && dp[0] * dp[0] > dp[1] * dp[1] + dp[2] * dp[2];
        if (strict) ++g.interior;
    }
    return g;
}

RealInterval min_ball_term(uint64_t n, const HardnessParams& hp, long bits) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    if (!hp.angle.q) return min_ball_term_turns(n, hp, bits + 40);
    auto [c, s] = hp.angle.cos_sin(n);
    return ball_term_from(RealInterval(c), RealInterval(s), n, hp, bits);
}

RealInterval min_ball_term_turns(uint64_t n, const HardnessParams& hp, long bits) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    long extra = 8 + static_cast<long>(std::log2(static_cast<double>(n) + 1));
    RealInterval t = hp.angle.turns(bits + extra);
    Rational nn(static_cast<unsigned long>(n));
    RealInterval nt = RealInterval(nn) * t;
    Rational shift(floor_of(nt.lo()));
    nt = nt - RealInterval(shift);
    auto [c, s] = cos_sin_turns(nt, bits);
    return ball_term_from(c, s, n, hp, bits);
}

RealInterval lagrange_prefix(const UnitAngle& a, uint64_t N, long precision, bool parallel) {
    if (N == 0) throw InvalidInput("N must be at least 1");
    FixedTurn f = a.fixed(precision);
    kernels::PrefixMin m = parallel ? kernels::prefix_min_omp(f, 1, N) : kernels::prefix_min_serial(f, 1, N);
    return RealInterval(kernels::scaled_to_rational(m.lo, 96), kernels::scaled_to_rational(m.hi, 96));
}

RealInterval lagrange_window(const UnitAngle& a, uint64_t n_lo, uint64_t n_hi, long precision) {
    if (n_lo == 0 || n_hi < n_lo) throw InvalidInput("window must satisfy 1 <= n_lo <= n_hi");
    FixedTurn f = a.fixed(precision);
    kernels::PrefixMin m = kernels::prefix_min_omp(f, n_lo, n_hi);
    return RealInterval(kernels::scaled_to_rational(m.lo, 96), kernels::scaled_to_rational(m.hi, 96));
}

RealInterval lagrange_prefix_exact(const UnitAngle& a, uint64_t N, long bits) {
    if (N == 0) throw InvalidInput("N must be at least 1");
    std::optional<RealInterval> best;
    if (auto t = a.rational_turn()) {
        for (uint64_t n = 1; n <= N; ++n) {
            Rational nt = Rational(static_cast<unsigned long>(n)) * *t;
            nt -= Rational(floor_of(nt));
            Rational d = std::min<Rational>(nt, 1 - nt);
            RealInterval v(Rational(static_cast<unsigned long>(n)) * d);
            best = best ? min(*best, v) : v;
        }
        return *best;
    }
    if (!a.q) throw InvalidInput("exact prefix needs a rational angle or rational q");
    CRat z(Rational(1)), step(a.p, *a.q);
    for (uint64_t n = 1; n <= N; ++n) {
        z = z * step;
        RealInterval t = arg_turns(z.re, z.im, bits);
        RealInterval d(t.mig(), t.mag());
        RealInterval v = RealInterval(Rational(static_cast<unsigned long>(n))) * d;
        best = best ? min(*best, v) : v;
    }
    return *best;
}

LEstimate approximate_L(const UnitAngle& a, const Rational& eps, uint64_t horizon_cap) {
    if (eps <= 0) throw InvalidInput("eps must be positive");
    if (horizon_cap == 0) throw InvalidInput("horizon must be positive");
    LEstimate est;
    est.horizon = horizon_cap;
    Rational e = eps / 2;
    RealInterval pi = pi_interval(128);
    Rational lo = 0, hi = sqrt_up(Rational(1, 5), 64);
    FixedTurn f = a.fixed();
    std::string note;
    while (hi - lo > eps) {
        ++est.probes;
        Rational mid = (lo + hi) / 2;
        Rational qprime = round_up(mid * pi.mid(), 80);
        Rational ell_lo = qprime / pi.hi(), ell_hi = qprime / pi.lo();
        Rational eps_scaled = round_down(2 * pi.lo() * e, 80);
        HardnessParams hp = compute_params(a, qprime, eps_scaled);
        uint64_t n2 = std::min<uint64_t>(hp.n2, horizon_cap);
        RealInterval prefix = lagrange_window(a, 1, n2);
        if (prefix.hi() < ell_lo + e) {
            hi = ell_hi;
            continue;
        }
        if (prefix.lo() < ell_hi - e) {
            note = "probe at ell = " + to_decimal(mid, 6) + " was ambiguous; bracket kept";
            break;
        }
        bool tail_negative = false, unresolved = false;
        if (hp.n2 < horizon_cap) {
            kernels::ScanReport r = kernels::ball_term_scan_omp(f, hp.n2 + 1, horizon_cap, ball_term_params(hp));
            tail_negative = r.negatives > 0;
            for (uint64_t n : r.ambiguous) {
                if (tail_negative) break;
                RealInterval v = min_ball_term_turns(n, hp, 200);
                if (v.negative()) {
                    tail_negative = true;
                } else if (!(v.lo() >= 0)) {
                    int sg = a.q ? ball_term_sign_exact(n, hp) : 0;
                    if (sg < 0) tail_negative = true;
                    if (!a.q) unresolved = true;
                }
            }
        }
        if (unresolved) {
            note = "tail sign unresolved at ell = " + to_decimal(mid, 6) + "; bracket kept";
            break;
        }
        if (tail_negative) {
            hi = ell_hi;
        } else {
            lo = ell_lo;
        }
    }
    est.ell_min = std::max<Rational>(Rational(0), lo - e);
    est.ell_max = hi + e;
    est.certificate = "encloses L_{<=" + std::to_string(horizon_cap) +
                      "}(theta), an upper bound for L(theta); tail examined up to the horizon cap";
    if (!note.empty()) est.certificate += "; " + note;
    return est;
}

Rational hyperplane_offset(const UnitAngle& a, uint64_t n, const Rational& z_res, const Rational& x_res,
                           const Rational& y_res) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    auto [c, s] = a.cos_sin(n);
    return -(z_res - x_res * c - y_res * s) / Rational(static_cast<unsigned long>(n));
}

OrbitScan dominant_orbit_scan(const UnitAngle& a, long double z, long double x, long double y, uint64_t N) {
    return full_orbit_scan(a, {z, x, y, 0, 0, 0}, N);
}

OrbitScan full_orbit_scan(const UnitAngle& a, const std::array<long double, 6>& coef, uint64_t N) {
    FixedTurn f = a.fixed();
    OrbitScan o{1e300L, 0, 0};
    bool has_res = coef[3] != 0 || coef[4] != 0 || coef[5] != 0;
    for (uint64_t n = 1; n <= N; ++n) {
        long double t = turn_of(f, n), c = cos_turn(t), s = sin_turn(t);
        long double v = coef[0] - coef[1] * c - coef[2] * s;
        if (has_res) v = static_cast<long double>(n) * v + coef[3] - coef[4] * c - coef[5] * s;
        if (v < o.min_value) {
            o.min_value = v;
            o.argmin = n;
        }
        if (v < 0 && o.first_negative == 0) o.first_negative = n;
    }
    return o;
}

// Fixed 15-digit decimals; "-0.000..." prints as "0.000...".
static std::string fmt15(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15Lf", v);
    std::string out(buf);
    if (out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

std::string cone_section_csv(const Rational& z, unsigned steps) {
    std::ostringstream os;
    os << "angle,x,y,margin\n";
    long double zz = to_ld(z);
    for (unsigned i = 0; i < steps; ++i) {
        long double t = static_cast<long double>(i) / steps;
        os << fmt15(t) << ',' << fmt15(zz * cos_turn(t)) << ',' << fmt15(zz * sin_turn(t)) << ",0\n";
    }
    return os.str();
}

std::string hyperplane_trace_csv(const UnitAngle& a, const Rational& z_res, const Rational& x_res,
                                 const Rational& y_res, uint64_t n_max) {
    std::ostringstream os;
    os << "n,angle,offset,cos,sin\n";
    FixedTurn f = a.fixed();
    for (uint64_t n = 1; n <= n_max; ++n) {
        long double t = turn_of(f, n), c = cos_turn(t), s = sin_turn(t);
        long double off = a.q && n <= 200 ? to_ld(hyperplane_offset(a, n, z_res, x_res, y_res))
                                          : -(to_ld(z_res) - to_ld(x_res) * c - to_ld(y_res) * s) / n;
        os << n << ',' << fmt15(t) << ',' << fmt15(off) << ',' << fmt15(c) << ',' << fmt15(s) << '\n';
    }
    return os.str();
}

std::string orbit_csv(const UnitAngle& a, const Rational& z, const Rational& x, const Rational& y, uint64_t n_max) {
    std::ostringstream os;
    os << "n,angle,value,margin\n";
    FixedTurn f = a.fixed();
    ConeMembership cm = cone_contains(z, x, y);
    std::string margin = fmt15(to_ld(cm.margin.mid()));
    for (uint64_t n = 1; n <= n_max; ++n) {
        long double t = turn_of(f, n);
        long double v = to_ld(z) - to_ld(x) * cos_turn(t) - to_ld(y) * sin_turn(t);
        os << n << ',' << fmt15(t) << ',' << fmt15(v) << ',' << margin << '\n';
    }
    return os.str();
}

}  // namespace rlrs
