#include "rlrs/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlrs::kernels {

namespace {

constexpr u128 kHalf = u128(1) << 127;
constexpr long double kPi = 3.141592653589793238462643383279502884L;
// Values within this band of a decision threshold are handed back for an interval re-check.
constexpr long double kGuard = 1e-9L;
constexpr uint64_t kChunks = 64;

u128 dist(u128 x) { return x <= kHalf ? x : u128(0) - x; }

DistBounds interval_distance(u128 x, u128 w) {
    u128 end = x + w;
    if (end < x) {  // wraps past an integer
        return {0, std::max(dist(x), dist(end))};
    }
    u128 a = dist(x), b = dist(end);
    u128 lo = std::min(a, b);
    u128 hi = (x <= kHalf && kHalf <= end) ? kHalf : std::max(a, b);
    return {lo, hi};
}

long double to_ld_u128(u128 v) {
    return std::ldexp(static_cast<long double>(static_cast<uint64_t>(v >> 64)), 64) +
           static_cast<long double>(static_cast<uint64_t>(v));
}

// Turn in [0, 1) as a long double.
long double turn_ld(u128 v) { return std::ldexp(to_ld_u128(v), -128); }

u128 rational_to_fixed_floor(const Rational& x) {
    Rational f = x - Rational(floor_of(x));
    Integer v = floor_of(f * Rational(Integer(1) << 128));
    u128 out = 0;
    for (int i = 3; i >= 0; --i) {
        Integer part = (v >> (32 * i)) & Integer(0xffffffffUL);
        out = (out << 32) | u128(part.get_ui());
    }
    return out;
}

struct Trig {
    long double one_minus_cos, cos, sin, abs_sin;
};

Trig trig(u128 turn) {
    long double t = turn_ld(turn);
    if (t > 0.5L) t -= 1.0L;
    long double s_half = std::sin(kPi * t);
    long double s = std::sin(2 * kPi * t);
    long double omc = 2 * s_half * s_half;
    return {omc, 1 - omc, s, std::fabs(s)};
}

long double ball_term_at(u128 turn, uint64_t n, const BallTermParams& p) {
    Trig tr = trig(turn);
    long double nn = static_cast<long double>(n);
    long double tail = 1.0L / (std::sqrt(nn * nn + 1) + nn);
    return nn * (2 - p.psi) * tr.one_minus_cos - p.two_qp * tr.abs_sin - 2 * p.psi * tail;
}

void merge(ScanReport& into, const ScanReport& r) {
    into.checked += r.checked;
    into.negatives += r.negatives;
    if (into.first_negative == 0) into.first_negative = r.first_negative;
    into.violations += r.violations;
    if (into.first_violation == 0) into.first_violation = r.first_violation;
    if (r.argmin != 0 && (into.argmin == 0 || r.min_value < into.min_value)) {
        into.min_value = r.min_value;
        into.argmin = r.argmin;
    }
    into.ambiguous.insert(into.ambiguous.end(), r.ambiguous.begin(), r.ambiguous.end());
}

void note_value(ScanReport& r, uint64_t n, long double v) {
    if (r.argmin == 0 || v < r.min_value) {
        r.min_value = v;
        r.argmin = n;
    }
}

void ball_step(const FixedTurn& t, uint64_t n, const BallTermParams& p, ScanReport& r) {
    long double v = ball_term_at(u128(n) * t.base, n, p);
    ++r.checked;
    note_value(r, n, v);
    if (v < -kGuard) {
        ++r.negatives;
        if (r.first_negative == 0) r.first_negative = n;
    } else if (v <= kGuard) {
        r.ambiguous.push_back(n);
    }
}

void closed_form_step(const FixedTurn& t, uint64_t n, const BallTermParams& p, ScanReport& r) {
    ++r.checked;
    DistBounds d = nearest_int_distance(t, n);
    long double nn = static_cast<long double>(n);
    long double lhs_lo = 2 * kPi * nn * turn_ld(d.lo) * (1 - 1e-15L);
    long double lhs_hi = 2 * kPi * nn * turn_ld(d.hi) * (1 + 1e-15L);
    long double thr = p.two_qp + p.eps;
    if (lhs_hi < thr) return;
    long double v = ball_term_at(u128(n) * t.base, n, p);
    note_value(r, n, v);
    if (lhs_lo < thr) {
        if (v < kGuard) r.ambiguous.push_back(n);
        return;
    }
    if (v < -kGuard) {
        ++r.violations;
        if (r.first_violation == 0) r.first_violation = n;
    } else if (v <= kGuard) {
        r.ambiguous.push_back(n);
    }
}

void converse_step(const FixedTurn& t, uint64_t n, const BallTermParams& p, ScanReport& r) {
    ++r.checked;
    u128 turn = u128(n) * t.base;
    long double tt = turn_ld(turn);
    long double margin = 1e-15L;
    if (tt > 0.5L + margin) return;  // angle in (pi, 2 pi)
    Trig tr = trig(turn);
    long double nn = static_cast<long double>(n);
    long double u = 2 * nn * tr.one_minus_cos - p.two_qp * tr.sin;
    if (u < -kGuard) return;
    DistBounds d = nearest_int_distance(t, n);
    long double lhs_lo = 2 * kPi * nn * turn_ld(d.lo) * (1 - 1e-15L);
    long double lhs_hi = 2 * kPi * nn * turn_ld(d.hi) * (1 + 1e-15L);
    long double thr = p.two_qp - p.eps;
    if (lhs_lo > thr) return;
    bool premise_certain = u > kGuard && tt < 0.5L - margin;
    if (premise_certain && lhs_hi <= thr) {
        ++r.violations;
        if (r.first_violation == 0) r.first_violation = n;
    } else {
        r.ambiguous.push_back(n);
    }
}

template <class Step>
ScanReport scan_serial(uint64_t n_lo, uint64_t n_hi, Step step) {
    ScanReport r;
    for (uint64_t n = n_lo; n <= n_hi && n != 0; ++n) step(n, r);
    return r;
}

template <class Step>
ScanReport scan_omp(uint64_t n_lo, uint64_t n_hi, Step step) {
    if (n_hi < n_lo || n_lo == 0) return {};
    uint64_t total = n_hi - n_lo + 1, chunks = std::min<uint64_t>(kChunks, total);
    std::vector<ScanReport> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
        uint64_t a = n_lo + total * c / chunks, b = n_lo + total * (c + 1) / chunks;
        for (uint64_t n = a; n < b; ++n) step(n, parts[c]);
    }
    ScanReport r;
    for (const auto& part : parts) merge(r, part);
    return r;
}

PrefixMin prefix_step(const FixedTurn& t, uint64_t n, PrefixMin m) {
    DistBounds d = nearest_int_distance(t, n);
    u128 lo = u128(n) * (d.lo >> 32), hi = u128(n) * ((d.hi >> 32) + 1);
    if (lo < m.lo) m.lo = lo;
    if (hi < m.hi) {
        m.hi = hi;
        m.argmin = n;
    }
    return m;
}

}  // namespace

bool ScanReport::operator==(const ScanReport& o) const {
    return checked == o.checked && negatives == o.negatives && first_negative == o.first_negative &&
           violations == o.violations && first_violation == o.first_violation && min_value == o.min_value &&
           argmin == o.argmin && ambiguous == o.ambiguous;
}

FixedTurn fixed_turn(const RealInterval& turns) {
    if (turns.width() >= pow2(-120)) throw InvalidInput("angle enclosure too wide for fixed point");
    FixedTurn f;
    f.base = rational_to_fixed_floor(turns.lo());
    Rational span = (turns.hi() - Rational(floor_of(turns.lo()))) * Rational(Integer(1) << 128);
    Rational base_r = (turns.lo() - Rational(floor_of(turns.lo()))) * Rational(Integer(1) << 128);
    Integer s = ceil_of(span) - floor_of(base_r);
    f.span = u128(s.get_ui());
    return f;
}

FixedTurn fixed_turn_exact(const Rational& turn) {
    FixedTurn f;
    f.base = rational_to_fixed_floor(turn);
    Rational frac = turn - Rational(floor_of(turn));
    f.span = (frac * Rational(Integer(1) << 128) == Rational(floor_of(frac * Rational(Integer(1) << 128)))) ? 0 : 1;
    return f;
}

DistBounds nearest_int_distance(const FixedTurn& t, uint64_t n) {
    return interval_distance(u128(n) * t.base, u128(n) * t.span);
}

Rational scaled_to_rational(u128 v, int shift) {
    Integer z(static_cast<unsigned long>(static_cast<uint64_t>(v >> 64)));
    z <<= 64;
    z += Integer(static_cast<unsigned long>(static_cast<uint64_t>(v)));
    Rational q(z);
    return q / Rational(Integer(1) << shift);
}

PrefixMin prefix_min_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi) {
    PrefixMin m;
    for (uint64_t n = std::max<uint64_t>(n_lo, 1); n <= n_hi; ++n) m = prefix_step(t, n, m);
    return m;
}

PrefixMin prefix_min_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi) {
    n_lo = std::max<uint64_t>(n_lo, 1);
    if (n_hi < n_lo) return {};
    uint64_t total = n_hi - n_lo + 1, chunks = std::min<uint64_t>(kChunks, total);
    std::vector<PrefixMin> parts(chunks);
#pragma omp parallel for schedule(static)
    for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
        uint64_t a = n_lo + total * c / chunks, b = n_lo + total * (c + 1) / chunks;
        PrefixMin m;
        for (uint64_t n = a; n < b; ++n) m = prefix_step(t, n, m);
        parts[c] = m;
    }
    PrefixMin m;
    for (const auto& p : parts) {
        if (p.lo < m.lo) m.lo = p.lo;
        if (p.hi < m.hi) {
            m.hi = p.hi;
            m.argmin = p.argmin;
        }
    }
    return m;
}

long double ball_term_ld(const FixedTurn& t, uint64_t n, const BallTermParams& p) {
    return ball_term_at(u128(n) * t.base, n, p);
}

ScanReport ball_term_scan_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p) {
    return scan_serial(n_lo, n_hi, [&](uint64_t n, ScanReport& r) { ball_step(t, n, p, r); });
}

ScanReport ball_term_scan_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p) {
    return scan_omp(n_lo, n_hi, [&](uint64_t n, ScanReport& r) { ball_step(t, n, p, r); });
}

ScanReport closed_form_scan_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p) {
    return scan_serial(n_lo, n_hi, [&](uint64_t n, ScanReport& r) { closed_form_step(t, n, p, r); });
}

ScanReport closed_form_scan_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p) {
    return scan_omp(n_lo, n_hi, [&](uint64_t n, ScanReport& r) { closed_form_step(t, n, p, r); });
}

ScanReport converse_scan_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p) {
    return scan_serial(n_lo, n_hi, [&](uint64_t n, ScanReport& r) { converse_step(t, n, p, r); });
}

ScanReport converse_scan_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p) {
    return scan_omp(n_lo, n_hi, [&](uint64_t n, ScanReport& r) { converse_step(t, n, p, r); });
}

namespace {

// Returns (closed form - sampled minimum, sampled minimum - closed form).
std::pair<long double, long double> sample_gap_at(const FixedTurn& t, uint64_t n,
                                                  const std::vector<std::vector<long double>>& pts,
                                                  const BallTermParams& p) {
    Trig tr = trig(u128(n) * t.base);
    long double nn = static_cast<long double>(n);
    long double smin = 1e300L;
    for (const auto& d : pts) {
        long double u = d[0] * nn - d[1] * nn * tr.cos - d[2] * nn * tr.sin + d[3] - d[4] * tr.cos - d[5] * tr.sin;
        smin = std::min(smin, u);
    }
    long double v = ball_term_at(u128(n) * t.base, n, p);
    return {v - smin, smin - v};
}

}  // namespace

SampleGap ball_sample_gap_serial(const FixedTurn& t, uint64_t n_hi, const std::vector<std::vector<long double>>& pts,
                                 const BallTermParams& p) {
    SampleGap g;
    long double sum = 0;
    for (uint64_t n = 1; n <= n_hi; ++n) {
        auto [gap, slack] = sample_gap_at(t, n, pts, p);
        if (gap > g.worst) {
            g.worst = gap;
            g.worst_n = n;
        }
        sum += slack;
    }
    g.mean_gap = n_hi ? sum / static_cast<long double>(n_hi) : 0;
    return g;
}

SampleGap ball_sample_gap_omp(const FixedTurn& t, uint64_t n_hi, const std::vector<std::vector<long double>>& pts,
                              const BallTermParams& p) {
    SampleGap g;
    if (n_hi == 0) return g;
    uint64_t chunks = std::min<uint64_t>(kChunks, n_hi);
    std::vector<SampleGap> parts(chunks);
    std::vector<long double> sums(chunks, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
        uint64_t a = 1 + n_hi * c / chunks, b = 1 + n_hi * (c + 1) / chunks;
        for (uint64_t n = a; n < b; ++n) {
            auto [gap, slack] = sample_gap_at(t, n, pts, p);
            if (gap > parts[c].worst) {
                parts[c].worst = gap;
                parts[c].worst_n = n;
            }
            sums[c] += slack;
        }
    }
    long double sum = 0;
    for (uint64_t c = 0; c < chunks; ++c) {
        if (parts[c].worst > g.worst) {
            g.worst = parts[c].worst;
            g.worst_n = parts[c].worst_n;
        }
        sum += sums[c];
    }
    g.mean_gap = sum / static_cast<long double>(n_hi);
    return g;
}

namespace {

uint64_t first_hit(const std::vector<FixedTurn>& theta, const std::vector<FixedTurn>& target, long double eps,
                   uint64_t n_max) {
    long double eps2 = eps * eps * (1 - 1e-15L);
    for (uint64_t n = 1; n <= n_max; ++n) {
        long double s = 0;
        for (size_t j = 0; j < theta.size() && s < eps2; ++j) {
            u128 x = u128(n) * theta[j].base - target[j].base;
            u128 w = u128(n) * theta[j].span + target[j].span + 1;
            DistBounds d = interval_distance(x, w);
            long double a = 2 * kPi * turn_ld(d.hi) * (1 + 1e-15L);
            s += a * a;
        }
        if (s < eps2) return n;
    }
    return 0;
}

}  // namespace

std::vector<uint64_t> kronecker_hits_serial(const std::vector<FixedTurn>& theta,
                                            const std::vector<std::vector<FixedTurn>>& targets, long double eps,
                                            uint64_t n_max) {
    std::vector<uint64_t> out;
    for (const auto& t : targets) out.push_back(first_hit(theta, t, eps, n_max));
    return out;
}

std::vector<uint64_t> kronecker_hits_omp(const std::vector<FixedTurn>& theta,
                                         const std::vector<std::vector<FixedTurn>>& targets, long double eps,
                                         uint64_t n_max) {
    std::vector<uint64_t> out(targets.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < static_cast<int64_t>(targets.size()); ++i) out[i] = first_hit(theta, targets[i], eps, n_max);
    return out;
}

}  // namespace rlrs::kernels
