#include "rlrs/roots.hpp"

#include <algorithm>
#include <cmath>

namespace rlrs {

namespace {

using CLD = std::complex<long double>;

Rational round_near(const Rational& q, long bits) {
    return Rational(floor_of(q * pow2(bits) + Rational(1, 2))) * pow2(-bits);
}

CRat round_near(const CRat& z, long bits) { return {round_near(z.re, bits), round_near(z.im, bits)}; }

CRat from_ld(const CLD& z, long bits) {
    auto conv = [bits](long double v) {
        if (!std::isfinite(v)) throw std::domain_error("non-finite root approximation");
        long double s = std::ldexp(v, static_cast<int>(bits));
        Integer i;
        mpz_set_d(i.get_mpz_t(), static_cast<double>(std::nearbyint(s)));
        return Rational(i) * pow2(-bits);
    };
    return {conv(z.real()), conv(z.imag())};
}

std::vector<CRat> taylor_shift(const Poly& p, const CRat& c) {
    std::vector<CRat> d;
    d.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) d.emplace_back(v);
    size_t n = d.size();
    bool real = c.im == 0;
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j > i; --j) {
            if (real) {
                d[j - 1].re += c.re * d[j].re;
                d[j - 1].im += c.re * d[j].im;
            } else {
                d[j - 1] = d[j - 1] + c * d[j];
            }
        }
    return d;
}

Rational abs_up(const CRat& z) { return z.is_zero() ? Rational(0) : sqrt_up(z.norm2(), 48); }
Rational abs_down(const CRat& z) { return z.is_zero() ? Rational(0) : sqrt_down(z.norm2(), 48); }

// |a - b|^2 < s^2 with exact arithmetic.
bool dist_less(const CRat& a, const CRat& b, const Rational& s) { return (a - b).norm2() < s * s; }

// Newton iteration with Pellet certification; returns false when it does not settle.
bool newton_certify(const Poly& p, const Poly& dp, CRat z, long prec, long bits, const Rational& max_radius,
                    const RootDisk* inside, RootDisk& out) {
    Rational target = pow2(-bits);
    for (int iter = 0; iter < 120; ++iter) {
        CRat pz = p.eval(z), dz = dp.eval(z);
        if (dz.is_zero()) return false;
        Rational r = pz.is_zero() ? Rational(0) : 2 * sqrt_up(pz.norm2() / dz.norm2(), 32);
        Rational floor_r = pow2(-prec);
        if (r < floor_r) r = floor_r;
        bool fits = r < max_radius;
        if (fits && inside) fits = r < inside->radius && dist_less(z, inside->center, inside->radius - r);
        if (fits && pellet_test(p, z, r, 1)) {
            out = {z, r};
            if (r <= target) return true;
        }
        CRat step = pz / dz;
        z = round_near(z - step, prec);
        if (prec < bits + 16) prec = std::min(2 * prec, bits + 16);
    }
    return false;
}

// Subdivision inside an isolating disk, used when Newton does not settle.
RootDisk subdivide(const Poly& p, const RootDisk& disk, long bits) {
    struct Square {
        CRat c;
        Rational h;  // half side
    };
    Rational target = pow2(-bits);
    std::vector<Square> live{{disk.center, disk.radius}};
    for (int level = 0; level < 4 * bits + 400; ++level) {
        std::vector<Square> next;
        for (const auto& s : live) {
            Rational h = s.h / 2;
            for (int dx = -1; dx <= 1; dx += 2)
                for (int dy = -1; dy <= 1; dy += 2) {
                    CRat c{s.c.re + dx * h, s.c.im + dy * h};
                    Rational cover = h * 3 / 2;  // exceeds the half diagonal
                    if (!dist_less(c, disk.center, disk.radius + cover)) continue;
                    if (pellet_test(p, c, cover, 0)) continue;
                    next.push_back({c, h});
                }
        }
        if (next.empty()) throw std::runtime_error("root subdivision lost the root");
        live = std::move(next);
        Rational xlo = live[0].c.re, xhi = xlo, ylo = live[0].c.im, yhi = ylo;
        for (const auto& s : live) {
            xlo = std::min(xlo, s.c.re);
            xhi = std::max(xhi, s.c.re);
            ylo = std::min(ylo, s.c.im);
            yhi = std::max(yhi, s.c.im);
        }
        CRat mid{(xlo + xhi) / 2, (ylo + yhi) / 2};
        Rational half = std::max(xhi - xlo, yhi - ylo) / 2 + live[0].h;
        Rational r = half * 3 / 2;
        if (r <= target && pellet_test(p, mid, r, 1)) return {mid, r};
        if (live.size() > 64) throw std::runtime_error("root subdivision diverged");
    }
    throw std::runtime_error("root subdivision did not converge");
}

std::vector<CLD> aberth(const Poly& p) {
    Poly q = p.monic();
    size_t d = static_cast<size_t>(q.degree());
    std::vector<CLD> a(d + 1), da(d);
    for (size_t i = 0; i <= d; ++i) a[i] = to_ld(q.coeff(i));
    for (size_t i = 1; i <= d; ++i) da[i - 1] = a[i] * static_cast<long double>(i);
    long double R = 0;
    for (size_t k = 1; k <= d; ++k) {
        long double v = std::pow(std::abs(a[d - k]), 1.0L / static_cast<long double>(k));
        R = std::max(R, v);
    }
    R = std::max(2 * R, 1e-3L);
    std::vector<CLD> z(d);
    const long double two_pi = 6.283185307179586476925286766559L;
    for (size_t k = 0; k < d; ++k)
        z[k] = std::polar(R * 0.5L, two_pi * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L);
    auto horner = [](const std::vector<CLD>& c, CLD x) {
        CLD acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (size_t i = 0; i < d; ++i) {
            CLD pv = horner(a, z[i]), dv = horner(da, z[i]);
            if (pv == CLD(0)) continue;
            CLD w = pv / dv;
            CLD s = 0;
            for (size_t j = 0; j < d; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            CLD corr = w / (1.0L - w * s);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = w;
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0L, std::abs(z[i])));
        }
        if (worst < 1e-18L) break;
    }
    return z;
}

// Certifies seeds; returns false when some seed does not settle to its own disk.
bool certify_seeds(const Poly& p, const std::vector<CRat>& seeds, std::vector<RootDisk>& out) {
    Poly dp = p.derivative();
    size_t d = seeds.size();
    out.assign(d, {});
    for (size_t i = 0; i < d; ++i) {
        Rational sep = -1;
        for (size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            Rational s = (seeds[i] - seeds[j]).norm2();
            if (sep < 0 || s < sep) sep = s;
        }
        Rational max_r = sep < 0 ? Rational(1) : sqrt_down(sep, 16) / 3;
        if (max_r == 0) return false;
        long bits = std::max<long>(8, 2 - ilog2(max_r));
        if (!newton_certify(p, dp, seeds[i], 64, bits, max_r, nullptr, out[i])) return false;
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            if (dist_less(out[i].center, out[j].center, out[i].radius + out[j].radius)) return false;
    return true;
}

// Seeds at higher precision: Aberth iteration in rounded dyadic arithmetic.
std::vector<CRat> aberth_dyadic(const Poly& p, const std::vector<CLD>& start, long prec) {
    Poly dp = p.derivative();
    size_t d = start.size();
    std::vector<CRat> z(d);
    for (size_t i = 0; i < d; ++i) {
        CLD s = start[i];
        // Spread coincident starts.
        s += CLD(1e-6L * static_cast<long double>(i + 1), 1e-6L * static_cast<long double>(i % 3));
        z[i] = from_ld(s, 60);
    }
    for (int it = 0; it < 400; ++it) {
        bool moved = false;
        for (size_t i = 0; i < d; ++i) {
            CRat pv = p.eval(z[i]);
            if (pv.is_zero()) continue;
            CRat dv = dp.eval(z[i]);
            CRat s;
            for (size_t j = 0; j < d; ++j)
                if (j != i) {
                    CRat diff = z[i] - z[j];
                    if (diff.is_zero()) continue;
                    s = s + round_near(CRat(Rational(1)) / diff, prec);
                }
            if (dv.is_zero()) continue;
            CRat w = round_near(pv / dv, prec);
            CRat den = CRat(Rational(1)) - w * s;
            CRat corr = den.is_zero() ? w : round_near(w / den, prec);
            if (corr.norm2() > pow2(-2 * prec + 8)) moved = true;
            z[i] = round_near(z[i] - corr, prec);
        }
        if (!moved) break;
    }
    return z;
}

}  // namespace

bool pellet_test(const Poly& p, const CRat& center, const Rational& radius, unsigned k) {
    if (radius <= 0 || p.degree() < static_cast<long>(k)) return false;
    auto b = taylor_shift(p, center);
    Rational rp(1), lhs, rhs;
    for (size_t j = 0; j < b.size(); ++j) {
        if (j == k)
            lhs = abs_down(b[j]) * rp;
        else if (!b[j].is_zero())
            rhs += abs_up(b[j]) * rp;
        rp *= radius;
    }
    return lhs > rhs;
}

std::vector<std::complex<long double>> approximate_roots(const Poly& p) {
    if (p.degree() <= 0) return {};
    return aberth(p);
}

RootDisk refine_disk(const Poly& p, const RootDisk& disk, long bits) {
    if (disk.radius <= pow2(-bits)) return disk;
    RootDisk out;
    long prec = std::max<long>(64, -ilog2(disk.radius) + 16);
    if (newton_certify(p, p.derivative(), disk.center, prec, bits, disk.radius, &disk, out)) return out;
    RootDisk sub = subdivide(p, disk, bits);
    if (disk.center.im == 0 && sub.center.im != 0) {
        // Keep real roots on real centers.
        RootDisk real{{sub.center.re, Rational(0)}, sub.radius + abs(sub.center.im)};
        if (pellet_test(p, real.center, real.radius, 1)) return real;
    }
    return sub;
}

std::vector<RootDisk> isolate_roots(const Poly& p) {
    long d = p.degree();
    if (d <= 0) return {};
    if (d == 1) return {{CRat(-p.coeff(0) / p.coeff(1)), Rational(1)}};
    auto approx = aberth(p);
    std::vector<RootDisk> disks;
    std::vector<CRat> seeds;
    bool ok = false;
    try {
        for (auto& z : approx) seeds.push_back(from_ld(z, 60));
        ok = certify_seeds(p, seeds, disks);
    } catch (const std::domain_error&) {
        ok = false;
    }
    for (long prec = 128; !ok && prec <= 8192; prec *= 2) {
        for (auto& z : approx)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) z = CLD(0.5L, 0.5L);
        seeds = aberth_dyadic(p, approx, prec);
        ok = certify_seeds(p, seeds, disks);
    }
    if (!ok) throw std::runtime_error("root isolation failed for " + to_string(p));
    // Decide reality of each root.
    for (auto& dk : disks) {
        for (long bits = 16;; bits += 32) {
            if (abs(dk.center.im) >= dk.radius) break;  // disk misses the real axis
            RootDisk real{{dk.center.re, Rational(0)}, dk.radius + abs(dk.center.im)};
            if (pellet_test(p, real.center, real.radius, 1)) {
                dk = real;
                break;
            }
            dk = refine_disk(p, dk, bits);
            if (bits > 20000) throw std::runtime_error("cannot decide reality of a root");
        }
    }
    std::sort(disks.begin(), disks.end(), [](const RootDisk& a, const RootDisk& b) {
        if (a.center.re != b.center.re) return a.center.re > b.center.re;
        return a.center.im > b.center.im;
    });
    return disks;
}

RootDisk certify_enclosed_root(const Poly& p, const std::function<ComplexInterval(long)>& enclose) {
    for (long bits = 32; bits <= 1 << 15; bits *= 2) {
        ComplexInterval box = enclose(bits);
        CRat c = round_near(box.mid(), bits + 8);
        bool real = box.im().lo() == 0 && box.im().hi() == 0;
        if (real) c.im = 0;
        Rational h2 = box.re().rad() * box.re().rad() + box.im().rad() * box.im().rad();
        Rational h = sqrt_up(h2 + pow2(-2 * (bits + 8)), 32);
        Rational r = 2 * h + pow2(-(bits + 6));
        if (pellet_test(p, c, r, 1)) return {c, r};
    }
    throw std::runtime_error("could not certify enclosed root of " + to_string(p));
}

}  // namespace rlrs
