#include "rlrs/decision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>

namespace rlrs {

namespace {

// w_n = A^n D u_n satisfies w_{n+k} = sum_j b_j w_{n+j} with integer b_j = a_j A^{k-j}.
struct ScaledLrr {
    Integer A;
    std::vector<Integer> b;
};

ScaledLrr scale_lrr(const Lrr& lrr) {
    ScaledLrr s;
    s.A = 1;
    for (const auto& a : lrr.coeffs) s.A = lcm(s.A, Integer(a.get_den()));
    size_t k = lrr.order();
    for (size_t j = 0; j < k; ++j) {
        Rational v = lrr.coeffs[j];
        for (size_t e = 0; e < k - j; ++e) v *= Rational(s.A);
        s.b.push_back(v.get_num());  // integer by construction
    }
    return s;
}

Integer common_den(const std::vector<Rational>& v) {
    Integer D = 1;
    for (const auto& x : v) D = lcm(D, Integer(x.get_den()));
    return D;
}

// Streams w_0, w_1, ... for one initial configuration.
class Stepper {
public:
    Stepper(const ScaledLrr& s, const std::vector<Rational>& c) : s_(s), k_(c.size()), w_(c.size()) {
        D_ = common_den(c);
        Integer Ap = 1;
        for (size_t j = 0; j < k_; ++j) {
            w_[j] = Integer(c[j] * Rational(D_) * Rational(Ap));
            Ap *= s.A;
        }
    }
    // Value at index n; calls must use n = 0, 1, 2, ...
    const Integer& next() {
        if (n_ < k_) return w_[n_++];
        acc_ = 0;
        for (size_t j = 0; j < k_; ++j) mpz_addmul(acc_.get_mpz_t(), s_.b[j].get_mpz_t(), w_[(start_ + j) % k_].get_mpz_t());
        w_[start_].swap(acc_);
        const Integer& out = w_[start_];
        start_ = (start_ + 1) % k_;
        ++n_;
        return out;
    }
    const Integer& D() const { return D_; }

private:
    const ScaledLrr& s_;
    size_t k_;
    std::vector<Integer> w_;
    Integer D_, acc_;
    size_t start_ = 0;
    uint64_t n_ = 0;
};

Rational unscale(const Integer& w, const Integer& A, uint64_t n, const Integer& D) {
    Integer An;
    mpz_pow_ui(An.get_mpz_t(), A.get_mpz_t(), n);
    Rational r(w, An * D);
    r.canonicalize();
    return r;
}

struct PrefixScan {
    std::optional<uint64_t> violation;
    Rational violation_value;
    Rational min_ratio2;  // min over the prefix of u_n^2 / ||y_n||^2
};

// Exact scan of n = 0..N. skolem: violation iff u_n = 0; otherwise violation iff u_n <= 0.
PrefixScan prefix_scan(const Lrr& lrr, const InitialConfig& c, uint64_t N, bool skolem) {
    ScaledLrr s = scale_lrr(lrr);
    size_t k = lrr.order();
    Stepper sc(s, c.entries);
    std::vector<Stepper> basis;
    basis.reserve(k);
    for (size_t t = 0; t < k; ++t) {
        std::vector<Rational> e(k);
        e[t] = 1;
        basis.emplace_back(s, e);
    }
    PrefixScan out;
    bool have = false;
    Rational D2 = Rational(sc.D()) * Rational(sc.D());
    for (uint64_t n = 0; n <= N; ++n) {
        const Integer& w = sc.next();
        Integer y2 = 0;
        for (auto& b : basis) {
            const Integer& y = b.next();
            y2 += y * y;
        }
        int sg = sgn(w);
        if (skolem ? sg == 0 : sg <= 0) {
            out.violation = n;
            out.violation_value = unscale(w, s.A, n, sc.D());
            return out;
        }
        Rational r(Integer(w * w), y2);
        r.canonicalize();
        r /= D2;
        if (!have || r < out.min_ratio2) {
            out.min_ratio2 = r;
            have = true;
        }
    }
    return out;
}

Decision unknown(const std::string& kind, const std::string& reason) {
    Decision d;
    d.verdict = Answer::unknown;
    d.certificate.kind = kind;
    d.certificate.reason = reason;
    return d;
}

Decision from_sign(const SignOutcome& s, bool complete, const std::string& no_reason) {
    Decision d;
    d.certificate.outcome = s;
    if (s.verdict == Verdict::unknown) {
        d.verdict = Answer::unknown;
        d.certificate.kind = "optimizer-unknown";
        d.certificate.reason = s.certificate;
        return d;
    }
    if (!complete) {
        d.verdict = Answer::unknown;
        d.certificate.kind = "lattice-incomplete";
        d.certificate.reason = "lattice incomplete: the relation search is bounded, so a non-positive optimum may come from missing relations";
        return d;
    }
    d.verdict = Answer::no;
    d.certificate.kind = "sign-outcome";
    d.certificate.reason = no_reason;
    return d;
}

// psi = min(sqrt(prefix ratio), margin / (2K)) / 2, rounded down to a short rational.
Rational certified_radius(const std::optional<Rational>& ratio2, const Rational& margin, const Rational& K) {
    Rational psi = margin / (2 * K);
    if (ratio2) psi = std::min<Rational>(psi, sqrt_down(*ratio2, 64));
    psi /= 2;
    return round_down_rel(psi, 24);
}

Decision tail_yes(const SignOutcome& s, const DominantProblem& p, const Rational& margin, const DecideOptions& o,
                  bool skolem, bool with_prefix, const InitialConfig& c, const Lrr& lrr) {
    uint64_t N = p.normalized.residual_threshold(margin / 2);
    if (N > o.prefix_cap) {
        Decision d = unknown("cap-exhausted", "residual threshold exceeds the prefix cap");
        d.certificate.threshold = N;
        d.certificate.outcome = s;
        return d;
    }
    std::optional<Rational> ratio2;
    if (with_prefix) {
        PrefixScan ps = prefix_scan(lrr, c, N, skolem);
        if (ps.violation) {
            Decision d;
            d.verdict = Answer::no;
            d.certificate.kind = "violating-index";
            d.certificate.index = *ps.violation;
            d.certificate.value = ps.violation_value;
            d.certificate.threshold = N;
            d.certificate.outcome = s;
            d.certificate.reason = skolem ? "u_n = 0 within the prefix" : "u_n <= 0 within the prefix";
            return d;
        }
        ratio2 = ps.min_ratio2;
    }
    Rational K = ball_constant(p.model);
    Decision d;
    d.verdict = Answer::yes;
    d.certificate.kind = "certified-radius";
    d.certificate.outcome = s;
    d.certificate.threshold = N;
    d.certificate.ball_constant = K;
    d.certificate.radius = certified_radius(ratio2, margin, K);
    d.certificate.tail_margin = margin / 2 - *d.certificate.radius * K;
    d.certificate.reason = with_prefix ? "every point of the ball is strictly valid on the prefix and the tail"
                                       : "every point of the ball is strictly positive beyond the threshold";
    return d;
}

}  // namespace

const char* to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "YES";
        case Answer::no: return "NO";
        default: return "UNKNOWN";
    }
}

const char* to_string(Property p) {
    switch (p) {
        case Property::positivity: return "positivity";
        case Property::nonzero: return "nonzero";
        default: return "ultimate";
    }
}

Rational ball_constant(const LrsModel& model) {
    const SpectralData& sd = model.spectral();
    const long bits = 64;
    Rational rho_lo = sd.rho.enclosure(bits).re().lo();
    if (!(rho_lo > 0)) throw std::runtime_error("spectral radius enclosure must be positive");
    const Rational e_lo(2718, 1000);
    Rational K = 0;
    for (size_t i = 0; i < sd.roots.size(); ++i) {
        const RootEntry& re = sd.roots[i];
        Rational r_hi = 1;
        if (re.modulus_class != 0) {
            for (long b = bits;; b += 64) {
                Rational m2 = re.modulus2.enclosure(b).re().hi();
                Rational rl = sd.rho.enclosure(b).re().lo();
                r_hi = sqrt_up(m2 / (rl * rl), b);
                if (r_hi < 1) break;
                if (b > 2048) throw std::runtime_error("cannot separate a modulus class from rho");
            }
        }
        for (unsigned j = 0; j < re.multiplicity; ++j) {
            Rational norm2 = 0;
            ComplexInterval g = re.gamma.enclosure(bits);
            for (const Poly& w : model.functional(i, j)) {
                Rational mg = eval(w, g, bits).mag(bits);
                norm2 += mg * mg;
            }
            Rational norm = sqrt_up(norm2, bits);
            int a = static_cast<int>(j) - static_cast<int>(sd.m);
            Rational S = 1;
            if (re.modulus_class != 0 && a > 0) {
                // n^a r^n <= (a / (e (1 - r)))^a since ln r <= r - 1.
                S = std::max<Rational>(Rational(1), pow(Rational(a) / (e_lo * (1 - r_hi)), static_cast<unsigned long>(a)));
            }
            K += norm * S;
        }
    }
    return round_up_rel(K, 32);
}

Decision exists_robust_ultimate_positivity(const Lrr& lrr, const InitialConfig& c, const DecideOptions& o) {
    DominantProblem p = dominant_problem(lrr, c, o.height_bound);
    SignOutcome s = mu(p.normalized.dominant(), p.torus, o.opt);
    if (s.verdict != Verdict::positive)
        return from_sign(s, p.lattice.complete,
                         s.verdict == Verdict::negative ? "mu < 0: the dominant part is negative infinitely often"
                                                        : "mu = 0: every ball contains points that are negative infinitely often");
    return tail_yes(s, p, s.enclosure.lo(), o, false, false, c, lrr);
}

Decision robust_nonuniform_ultpos_open_ball(const Lrr& lrr, const Ball& ball, const DecideOptions& o) {
    if (ball.topology != Topology::open) throw InvalidInput("closed balls are not supported for this question");
    if (!(ball.radius > 0)) throw InvalidInput("ball radius must be positive");
    DominantProblem p = dominant_problem(lrr, ball.center, o.height_bound);
    BallForm bf = ball_form(p.model, p.normalized);
    OptimizeOptions so = o.opt;
    so.sign_only = true;
    SignOutcome s = min_over_ball(bf, ball.radius, p.torus, so);
    if (s.verdict == Verdict::positive) {
        Decision d;
        d.verdict = Answer::yes;
        d.certificate.kind = "sign-outcome";
        d.certificate.reason = "the closed ball lies in the dominant-positive set";
        d.certificate.outcome = s;
        return d;
    }
    if (s.verdict == Verdict::negative)
        return from_sign(s, p.lattice.complete, "the ball leaves the dominant-positive set");
    return from_sign(s, p.lattice.complete, "");
}

Decision exists_robust_positivity(const Lrr& lrr, const InitialConfig& c, const DecideOptions& o) {
    DominantProblem p = dominant_problem(lrr, c, o.height_bound);
    SignOutcome s = mu(p.normalized.dominant(), p.torus, o.opt);
    if (s.verdict != Verdict::positive)
        return from_sign(s, p.lattice.complete,
                         s.verdict == Verdict::negative ? "mu < 0" : "mu = 0: arbitrarily close points go negative");
    return tail_yes(s, p, s.enclosure.lo(), o, false, true, c, lrr);
}

Decision exists_robust_skolem(const Lrr& lrr, const InitialConfig& c, const DecideOptions& o) {
    DominantProblem p = dominant_problem(lrr, c, o.height_bound);
    SignOutcome s = nu(p.normalized.dominant(), p.torus, o.opt);
    if (s.verdict != Verdict::positive)
        return from_sign(s, p.lattice.complete, "nu = 0: every ball contains points with a zero term");
    return tail_yes(s, p, s.enclosure.lo(), o, true, true, c, lrr);
}

std::vector<std::vector<Rational>> sample_region(const Region& r, size_t samples, uint64_t seed) {
    std::vector<std::vector<Rational>> out{r.center.entries};
    if (!r.radius || samples <= 1) return out;
    const Rational& rad = *r.radius;
    if (!(rad > 0)) throw InvalidInput("sample radius must be positive");
    size_t k = r.center.entries.size();
    long den_bits = 40 + std::max(0L, -ilog2(rad));
    Rational scale = pow2(den_bits), rad2 = rad * rad;
    long double rad_ld = to_ld(rad);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (size_t s = 1; s < samples; ++s) {
        std::vector<long double> dir(k);
        long double norm = 0;
        while (norm == 0) {
            norm = 0;
            for (auto& x : dir) {
                x = normal(rng);
                norm += x * x;
            }
        }
        norm = std::sqrt(norm);
        long double len = (s % 2 == 1) ? rad_ld * (1 - std::ldexp(1.0L, -20))
                                       : rad_ld * std::pow(static_cast<long double>(unif(rng)), 1.0L / k);
        std::vector<Rational> d(k);
        for (;;) {
            Rational n2 = 0;
            for (size_t t = 0; t < k; ++t) {
                long double v = dir[t] / norm * len * std::ldexp(1.0L, static_cast<int>(den_bits));
                d[t] = Rational(Integer(std::to_string(static_cast<long long>(std::llroundl(v))))) / scale;
                n2 += d[t] * d[t];
            }
            bool inside = r.topology == Topology::open ? n2 < rad2 : n2 <= rad2;
            if (inside) break;
            len /= 2;
        }
        std::vector<Rational> pt(k);
        for (size_t t = 0; t < k; ++t) pt[t] = r.center.entries[t] + d[t];
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

struct SampleResult {
    std::optional<uint64_t> n;
    Integer w;
    Integer D;
};

SampleResult run_sample(const ScaledLrr& s, const std::vector<Rational>& pt, Property prop, uint64_t horizon,
                        uint64_t tail_from, const std::atomic<uint64_t>& best) {
    Stepper st(s, pt);
    SampleResult r;
    r.D = st.D();
    for (uint64_t n = 0; n <= horizon; ++n) {
        if (n > best.load(std::memory_order_relaxed)) break;
        const Integer& w = st.next();
        int sg = sgn(w);
        bool bad = prop == Property::positivity ? sg <= 0
                   : prop == Property::nonzero  ? sg == 0
                                                : (n >= tail_from && sg <= 0);
        if (bad) {
            r.n = n;
            r.w = w;
            return r;
        }
    }
    return r;
}

void lower_best(std::atomic<uint64_t>& best, uint64_t n) {
    uint64_t cur = best.load();
    while (n < cur && !best.compare_exchange_weak(cur, n)) {
    }
}

BruteForceReport aggregate(const Lrr& lrr, const ScaledLrr& s, const std::vector<std::vector<Rational>>& pts,
                           const std::vector<SampleResult>& res, Property prop, uint64_t horizon, uint64_t tail_from) {
    BruteForceReport rep;
    rep.samples = pts.size();
    rep.horizon = horizon;
    rep.tail_from = tail_from;
    rep.property = prop;
    std::optional<size_t> win;
    for (size_t i = 0; i < res.size(); ++i) {
        if (!res[i].n) continue;
        if (!win || *res[i].n < *res[*win].n || (*res[i].n == *res[*win].n && pts[i] < pts[*win])) win = i;
    }
    (void)lrr;
    if (win) {
        Violation v;
        v.n = *res[*win].n;
        v.point = pts[*win];
        v.sample = *win;
        v.value = unscale(res[*win].w, s.A, v.n, res[*win].D);
        rep.first = v;
    }
    return rep;
}

uint64_t resolve_tail(uint64_t horizon, std::optional<uint64_t> tail_from) {
    return tail_from ? *tail_from : horizon / 2;
}

}  // namespace

BruteForceReport brute_force_check(const Lrr& lrr, const Region& region, Property property, uint64_t horizon,
                                   size_t samples, uint64_t seed, std::optional<uint64_t> tail_from) {
    if (region.center.entries.size() != lrr.order()) throw InvalidInput("initial configuration length differs from the order");
    ScaledLrr s = scale_lrr(lrr);
    auto pts = sample_region(region, samples, seed);
    uint64_t tf = resolve_tail(horizon, tail_from);
    std::vector<SampleResult> res(pts.size());
    std::atomic<uint64_t> best{UINT64_MAX};
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < static_cast<int64_t>(pts.size()); ++i) {
        res[i] = run_sample(s, pts[i], property, horizon, tf, best);
        if (res[i].n) lower_best(best, *res[i].n);
    }
    return aggregate(lrr, s, pts, res, property, horizon, tf);
}

BruteForceReport brute_force_check_serial(const Lrr& lrr, const Region& region, Property property,
                                          uint64_t horizon, size_t samples, uint64_t seed,
                                          std::optional<uint64_t> tail_from) {
    if (region.center.entries.size() != lrr.order()) throw InvalidInput("initial configuration length differs from the order");
    ScaledLrr s = scale_lrr(lrr);
    auto pts = sample_region(region, samples, seed);
    uint64_t tf = resolve_tail(horizon, tail_from);
    std::vector<SampleResult> res(pts.size());
    std::atomic<uint64_t> unbounded{UINT64_MAX};
    for (size_t i = 0; i < pts.size(); ++i) res[i] = run_sample(s, pts[i], property, horizon, tf, unbounded);
    return aggregate(lrr, s, pts, res, property, horizon, tf);
}

}  // namespace rlrs
