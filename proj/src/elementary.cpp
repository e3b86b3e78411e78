#include "rlrs/elementary.hpp"

#include <mutex>

namespace rlrs {

namespace {

// [lo, hi] * 2^-F with integer endpoints.
struct Fixed {
    Integer lo, hi;
};

Integer fdiv(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer cdiv(const Integer& a, const Integer& b) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer one_shifted(long f) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(f));
    return r;
}

RealInterval to_interval(const Integer& lo, const Integer& hi, long f) {
    return {Rational(lo) * pow2(-f), Rational(hi) * pow2(-f)};
}

// atan(1/m) with scale f.
Fixed atan_inv(unsigned long m, long f) {
    Integer one = one_shifted(f);
    Integer mm = Integer(m) * Integer(m);
    Fixed p{fdiv(one, Integer(m)), cdiv(one, Integer(m))};
    Fixed s{0, 0};
    for (unsigned long k = 0;; ++k) {
        Integer d = Integer(2 * k + 1);
        Integer tlo = fdiv(p.lo, d), thi = cdiv(p.hi, d);
        if (k % 2 == 0) {
            s.lo += tlo;
            s.hi += thi;
        } else {
            s.lo -= thi;
            s.hi -= tlo;
        }
        if (p.hi <= 1) break;
        p.lo = fdiv(p.lo, mm);
        p.hi = cdiv(p.hi, mm);
    }
    // Alternating tail bounded by the next term, which is below one unit.
    s.lo -= 1;
    s.hi += 1;
    return s;
}

// cos and sin of X * 2^-f for |X * 2^-f| < 1.
std::pair<Fixed, Fixed> cos_sin_point(const Integer& X, long f) {
    Integer ax = abs(X);
    Integer one = one_shifted(f);
    Fixed a{one, one};
    Fixed c{0, 0}, s{0, 0};
    for (unsigned long j = 0;; ++j) {
        if (j > 0) {
            Integer den = one * Integer(j);
            a.lo = fdiv(a.lo * ax, den);
            a.hi = cdiv(a.hi * ax, den);
        }
        if (a.hi <= 1 && j > 0) break;
        Fixed& dst = (j % 2 == 0) ? c : s;
        bool plus = (j / 2) % 2 == 0;
        if (plus) {
            dst.lo += a.lo;
            dst.hi += a.hi;
        } else {
            dst.lo -= a.hi;
            dst.hi -= a.lo;
        }
    }
    // Lagrange remainder: at most one unit.
    c.lo -= 1; c.hi += 1;
    s.lo -= 1; s.hi += 1;
    if (X < 0) {
        Integer t = -s.lo;
        s.lo = -s.hi;
        s.hi = t;
    }
    return {c, s};
}

// atan(U * 2^-f) for 0 <= U * 2^-f <= 1/4.
Fixed atan_point(const Integer& U, long f) {
    Integer one = one_shifted(f);
    Integer den2 = one * one;
    Integer u2 = U * U;
    Fixed p{U, U};
    Fixed s{0, 0};
    for (unsigned long k = 0;; ++k) {
        Integer d = Integer(2 * k + 1);
        Integer tlo = fdiv(p.lo, d), thi = cdiv(p.hi, d);
        if (k % 2 == 0) {
            s.lo += tlo;
            s.hi += thi;
        } else {
            s.lo -= thi;
            s.hi -= tlo;
        }
        if (p.hi <= 1) break;
        p.lo = fdiv(p.lo * u2, den2);
        p.hi = cdiv(p.hi * u2, den2);
    }
    s.lo -= 1;
    s.hi += 1;
    return s;
}

RealInterval clamp_unit(const RealInterval& x) {
    Rational lo = x.lo() < -1 ? Rational(-1) : x.lo();
    Rational hi = x.hi() > 1 ? Rational(1) : x.hi();
    if (lo > hi) return RealInterval(Rational(-1), Rational(1));
    return {lo, hi};
}

// atan of a nonnegative interval within [0, 1].
RealInterval atan_unit(const RealInterval& t, long bits) {
    long f = bits + 24;
    RealInterval x = t;
    // Three argument halvings: atan t = 2 atan(t / (1 + sqrt(1 + t^2))).
    for (int i = 0; i < 3; ++i) {
        RealInterval root = sqrt_interval(RealInterval(Rational(1)) + x.sqr(), f);
        x = (x / (RealInterval(Rational(1)) + root)).rounded(f);
    }
    Integer U = floor_of(x.mid() * pow2(f));
    Rational u = Rational(U) * pow2(-f);
    Rational dev = std::max(abs(x.lo() - u), abs(x.hi() - u));
    Fixed a = atan_point(U, f);
    RealInterval r = to_interval(a.lo, a.hi, f).widened(dev);
    return (RealInterval(Rational(8)) * r).rounded(bits + 4);
}

std::mutex pi_mutex;
RealInterval pi_cache;
long pi_cache_bits = -1;

}  // namespace

RealInterval pi_interval(long bits) {
    {
        std::lock_guard<std::mutex> lock(pi_mutex);
        if (pi_cache_bits >= bits) return pi_cache.rounded(bits + 2);
    }
    long f = bits + 16;
    Fixed a = atan_inv(5, f), b = atan_inv(239, f);
    Integer lo = 16 * a.lo - 4 * b.hi;
    Integer hi = 16 * a.hi - 4 * b.lo;
    RealInterval p = to_interval(lo, hi, f);
    std::lock_guard<std::mutex> lock(pi_mutex);
    if (bits > pi_cache_bits) {
        pi_cache = p;
        pi_cache_bits = bits;
    }
    return p.rounded(bits + 2);
}

RealInterval sqrt_interval(const RealInterval& x, long bits) {
    Rational lo = x.lo() > 0 ? sqrt_down(x.lo(), bits + 4) : Rational(0);
    if (x.hi() < 0) throw std::domain_error("sqrt of negative interval");
    Rational hi = sqrt_up(x.hi(), bits + 4);
    return {lo, hi};
}

std::pair<RealInterval, RealInterval> cos_sin_turns(const RealInterval& t, long bits) {
    long f = bits + 20;
    Rational m = t.mid(), r = t.rad();
    Integer q = floor_of(4 * m + Rational(1, 2));
    Rational s = m - Rational(q) / 4;
    RealInterval pi = pi_interval(f + 4);
    RealInterval x = RealInterval(2 * s) * pi;
    Integer X = floor_of(x.mid() * pow2(f) + Rational(1, 2));
    Rational xm = Rational(X) * pow2(-f);
    Rational err = std::max(abs(x.lo() - xm), abs(x.hi() - xm)) + 2 * pi.hi() * r;
    auto [cf, sf] = cos_sin_point(X, f);
    RealInterval c = to_interval(cf.lo, cf.hi, f).widened(err);
    RealInterval sn = to_interval(sf.lo, sf.hi, f).widened(err);
    Integer q4;
    mpz_fdiv_r_ui(q4.get_mpz_t(), q.get_mpz_t(), 4);
    RealInterval rc, rs;
    switch (q4.get_ui()) {
        case 0: rc = c; rs = sn; break;
        case 1: rc = -sn; rs = c; break;
        case 2: rc = -c; rs = -sn; break;
        default: rc = sn; rs = -c; break;
    }
    return {clamp_unit(rc.rounded(bits + 2)), clamp_unit(rs.rounded(bits + 2))};
}

RealInterval arg_turns(const Rational& x, const Rational& y, long bits) {
    if (x == 0 && y == 0) throw std::domain_error("argument of zero");
    if (y == 0) return RealInterval(x > 0 ? Rational(0) : Rational(1, 2));
    if (x == 0) return RealInterval(y > 0 ? Rational(1, 4) : Rational(-1, 4));
    long f = bits + 8;
    RealInterval pi = pi_interval(f);
    Rational a = abs(x), b = abs(y);
    RealInterval phi;
    if (b <= a)
        phi = atan_unit(RealInterval(b / a), f);
    else
        phi = pi * RealInterval(Rational(1, 2)) - atan_unit(RealInterval(a / b), f);
    RealInterval ang;
    if (x > 0 && y > 0) ang = phi;
    else if (x < 0 && y > 0) ang = pi - phi;
    else if (x < 0) ang = phi - pi;
    else ang = -phi;
    RealInterval two_pi = RealInterval(Rational(2)) * pi;
    return (ang / two_pi).rounded(bits + 2);
}

RealInterval arg_turns(const ComplexInterval& z, long bits) {
    CRat c = z.mid();
    Rational h2 = z.re().rad() * z.re().rad() + z.im().rad() * z.im().rad();
    Rational d2 = c.norm2();
    if (h2 >= d2) throw std::domain_error("argument of a box near the origin");
    RealInterval base = arg_turns(c.re, c.im, bits + 4);
    if (h2 == 0) return base;
    Rational ratio = sqrt_up(h2 / d2, bits + 8);
    // arcsin(r) <= pi r / 2 radians, i.e. r / 4 turns.
    return base.widened(ratio / 4).rounded(bits + 2);
}

ComplexInterval unit_turns(const RealInterval& t, long bits) {
    auto [c, s] = cos_sin_turns(t, bits);
    return {c, s};
}

}  // namespace rlrs
