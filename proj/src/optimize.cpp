#include "rlrs/optimize.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "rlrs/elementary.hpp"

namespace rlrs {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::positive: return "POSITIVE";
        case Verdict::negative: return "NEGATIVE";
        case Verdict::zero: return "ZERO";
        default: return "UNKNOWN";
    }
}

RealInterval dominant_value(const DominantForm& form, const TorusParam& torus, const std::vector<Rational>& theta,
                            long bits) {
    if (theta.size() != torus.k || form.terms.size() != torus.k)
        throw InvalidInput("torus point has the wrong dimension");
    if (!torus.satisfies(theta)) throw InvalidInput("point is not on the torus");
    std::vector<RealInterval> t;
    for (const auto& x : theta) t.emplace_back(x);
    return form.evaluate_turns(t, bits + 8).rounded(bits + 4);
}

namespace {

enum class Kind { plain, absolute, ball };

struct Eval {
    RealInterval f;
    std::vector<RealInterval> g;
    RealInterval gnorm;  // ||G|| for the ball objective
};

class Objective {
public:
    Objective(const DominantForm& form, const TorusParam& torus, long bits, Kind kind, const BallForm* bf,
              const Rational& radius)
        : torus_(torus), bits_(bits), kind_(kind), radius_(radius) {
        size_t k = torus.k, d = torus.free_rank;
        Rational two_pi = 2 * pi_interval(bits).hi();
        two_pi_ = RealInterval(2 * pi_interval(bits).lo(), two_pi);
        for (const auto& t : form.terms) alpha_.push_back(t.alpha.enclosure(bits + 8));
        hb_.assign(d, std::vector<Rational>(d));
        for (size_t j = 0; j < k; ++j) {
            Rational a = alpha_[j].mag(bits);
            for (size_t p = 0; p < d; ++p)
                for (size_t q = 0; q < d; ++q)
                    hb_[p][q] += two_pi * two_pi * a * abs(Rational(torus.embedding[j][p])) *
                                 abs(Rational(torus.embedding[j][q]));
        }
        if (kind == Kind::ball) {
            size_t kappa = bf->gradient.empty() ? 0 : bf->gradient[0].size();
            beta_.assign(k, std::vector<ComplexInterval>(kappa));
            lg_.assign(d, Rational(0));
            for (size_t j = 0; j < k; ++j) {
                ComplexInterval g = bf->roots[j].enclosure(bits + 16);
                RealInterval n2;
                for (size_t s = 0; s < kappa; ++s) {
                    beta_[j][s] = eval(bf->gradient[j][s], g, bits + 8).rounded(bits + 8);
                    n2 = n2 + beta_[j][s].norm2();
                }
                Rational bn = sqrt_up(n2.hi(), bits);
                for (size_t p = 0; p < d; ++p) lg_[p] += two_pi * bn * abs(Rational(torus.embedding[j][p]));
            }
        }
    }

    Eval eval_at(size_t coset, const std::vector<Rational>& phi) const {
        size_t k = torus_.k, d = torus_.free_rank;
        Eval e;
        e.g.assign(d, RealInterval());
        std::vector<ComplexInterval> u(k);
        for (size_t j = 0; j < k; ++j) {
            Rational th = torus_.finite_part[coset][j];
            for (size_t a = 0; a < d; ++a)
                if (torus_.embedding[j][a] != 0) th += Rational(torus_.embedding[j][a]) * phi[a];
            u[j] = unit_turns(RealInterval(th), bits_ + 8);
            ComplexInterval z = (alpha_[j] * u[j]).rounded(bits_ + 8);
            e.f = e.f + z.re();
            for (size_t a = 0; a < d; ++a)
                if (torus_.embedding[j][a] != 0)
                    e.g[a] = e.g[a] - RealInterval(Rational(torus_.embedding[j][a])) * two_pi_ * z.im();
        }
        e.f = e.f.rounded(bits_ + 4);
        if (kind_ == Kind::ball) {
            size_t kappa = beta_.empty() ? 0 : beta_[0].size();
            RealInterval n2;
            for (size_t s = 0; s < kappa; ++s) {
                RealInterval gs;
                for (size_t j = 0; j < k; ++j) gs = gs + (beta_[j][s] * u[j]).re();
                n2 = n2 + gs.sqr();
            }
            e.gnorm = sqrt_interval(n2.rounded(bits_ + 8), bits_ + 4);
        }
        return e;
    }

    // Lower bound over the box and an upper bound at its center.
    std::pair<Rational, Rational> bounds(const Eval& e, const std::vector<Rational>& h) const {
        size_t d = h.size();
        Rational delta;
        for (size_t a = 0; a < d; ++a) delta += e.g[a].mag() * h[a];
        for (size_t a = 0; a < d; ++a)
            for (size_t b = 0; b < d; ++b) delta += hb_[a][b] * h[a] * h[b] / 2;
        switch (kind_) {
            case Kind::plain: return {e.f.lo() - delta, e.f.hi()};
            case Kind::absolute: {
                Rational L = e.f.lo() - delta, U = e.f.hi() + delta;
                Rational lb = L > 0 ? L : (U < 0 ? Rational(-U) : Rational(0));
                return {lb, e.f.mag()};
            }
            case Kind::ball: {
                Rational spread = e.gnorm.hi();
                for (size_t a = 0; a < d; ++a) spread += lg_[a] * h[a];
                return {e.f.lo() - delta - radius_ * spread, e.f.hi() - radius_ * e.gnorm.lo()};
            }
        }
        return {};
    }

private:
    const TorusParam& torus_;
    long bits_;
    Kind kind_;
    Rational radius_;
    RealInterval two_pi_;
    std::vector<ComplexInterval> alpha_;
    std::vector<std::vector<Rational>> hb_;
    std::vector<std::vector<ComplexInterval>> beta_;
    std::vector<Rational> lg_;
};

struct Box {
    Rational lb;
    uint64_t seq;
    size_t coset;
    std::vector<Rational> c, h;
};

struct BoxOrder {
    bool operator()(const Box& a, const Box& b) const {
        if (a.lb != b.lb) return a.lb > b.lb;
        return a.seq > b.seq;
    }
};

struct RunResult {
    Rational lb, ub;
    size_t coset = 0;
    std::vector<Rational> phi;
    uint64_t boxes = 0;
    bool budget_hit = false;
    bool sign_change = false;
};

long bits_for(const Rational& tol) { return std::max<long>(80, 40 - ilog2(tol)); }

RunResult branch_and_bound(const Objective& obj, const TorusParam& torus, const Rational& tol, uint64_t max_boxes,
                           Kind kind, bool sign_only) {
    size_t d = torus.free_rank;
    RunResult r;
    std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
    std::optional<Rational> finished_lb;
    std::optional<Rational> best;
    uint64_t seq = 0;
    std::vector<int> seen(torus.finite_part.size(), 0);  // bit 1: positive center, bit 2: negative
    auto visit = [&](size_t coset, std::vector<Rational> c, std::vector<Rational> h) {
        Eval e = obj.eval_at(coset, c);
        auto [lb, ub] = obj.bounds(e, h);
        ++r.boxes;
        if (!best || ub < *best) {
            best = ub;
            r.coset = coset;
            r.phi = c;
        }
        if (e.f.positive()) seen[coset] |= 1;
        if (e.f.negative()) seen[coset] |= 2;
        if (d == 0) {
            if (!finished_lb || lb < *finished_lb) finished_lb = lb;
        } else {
            queue.push(Box{lb, seq++, coset, std::move(c), std::move(h)});
        }
    };
    // Initial grid: 4 cells per free angle.
    size_t cells = 1;
    for (size_t a = 0; a < d; ++a) cells *= 4;
    for (size_t coset = 0; coset < torus.finite_part.size(); ++coset)
        for (size_t cell = 0; cell < cells; ++cell) {
            std::vector<Rational> c(d), h(d, Rational(1, 8));
            size_t x = cell;
            for (size_t a = 0; a < d; ++a, x /= 4) c[a] = Rational(static_cast<long>(2 * (x % 4) + 1), 8);
            visit(coset, std::move(c), std::move(h));
        }
    for (;;) {
        Rational lb = queue.empty() ? *finished_lb : queue.top().lb;
        if (finished_lb && *finished_lb < lb) lb = *finished_lb;
        r.lb = lb;
        r.ub = *best;
        if (queue.empty() || *best - lb <= tol) break;
        if (sign_only && (lb > 0 || *best < 0)) break;
        if (r.boxes >= max_boxes) {
            r.budget_hit = true;
            break;
        }
        if (kind == Kind::absolute)
            for (int s : seen)
                if (s == 3) {
                    r.sign_change = true;
                }
        Box b = queue.top();
        queue.pop();
        size_t a = 0;
        for (size_t i = 1; i < d; ++i)
            if (b.h[i] > b.h[a]) a = i;
        std::vector<Rational> h = b.h;
        h[a] /= 2;
        std::vector<Rational> c1 = b.c, c2 = b.c;
        c1[a] -= h[a];
        c2[a] += h[a];
        visit(b.coset, std::move(c1), h);
        visit(b.coset, std::move(c2), h);
    }
    if (kind == Kind::absolute)
        for (int s : seen)
            if (s == 3) r.sign_change = true;
    if (r.lb > r.ub) r.lb = r.ub;
    return r;
}

AlgebraicNumber real_value(const AlgebraicNumber& a) { return a.is_real() ? a : real_part(a); }

// Exact value of sum_{j not in skip} alpha_j zeta_j at a coset.
AlgebraicNumber exact_partial(const DominantForm& form, const TorusParam& torus, size_t coset,
                              const std::vector<bool>& skip) {
    AlgebraicNumber s = AlgebraicNumber::rational(Rational(0));
    for (size_t j = 0; j < torus.k; ++j) {
        if (skip[j] || form.terms[j].alpha.is_zero()) continue;
        s = s + form.terms[j].alpha * root_of_unity(torus.finite_part[coset][j]);
    }
    return s;
}

// The free part moves exactly one conjugate pair with opposite unit weights.
std::optional<std::pair<size_t, size_t>> single_pair(const DominantForm& form, const TorusParam& torus) {
    if (torus.free_rank != 1 || !form.conjugate_closed) return std::nullopt;
    std::vector<size_t> nz;
    for (size_t j = 0; j < torus.k; ++j)
        if (torus.embedding[j][0] != 0) nz.push_back(j);
    if (nz.size() != 2) return std::nullopt;
    size_t p = nz[0], q = nz[1];
    if (abs(torus.embedding[p][0]) != 1 || torus.embedding[p][0] != -torus.embedding[q][0]) return std::nullopt;
    if (!equal(form.terms[q].gamma, conj(form.terms[p].gamma))) return std::nullopt;
    if (!equal(form.terms[q].alpha, conj(form.terms[p].alpha))) return std::nullopt;
    for (const auto& f : torus.finite_part)
        if (f[p] + f[q] != 0 && f[p] + f[q] != 1) return std::nullopt;
    return std::make_pair(p, q);
}

struct ExactMin {
    AlgebraicNumber value;
    size_t coset;
    std::string how;
};

// Exact minimum of the objective when the torus structure allows it.
std::optional<ExactMin> exact_minimum(const DominantForm& form, const TorusParam& torus, Kind kind) {
    bool all_zero = true;
    for (const auto& t : form.terms)
        if (!t.alpha.is_zero()) all_zero = false;
    if (all_zero) return ExactMin{AlgebraicNumber(), 0, "dominant form vanishes identically"};
    if (torus.finite_part.size() > 256) return std::nullopt;
    std::vector<bool> none(torus.k, false);
    if (torus.free_rank == 0) {
        std::optional<ExactMin> best;
        for (size_t c = 0; c < torus.finite_part.size(); ++c) {
            AlgebraicNumber v = real_value(exact_partial(form, torus, c, none));
            if (kind == Kind::absolute && v.sign() < 0) v = -v;
            if (!best || compare(v, best->value) < 0) best = ExactMin{v, c, ""};
        }
        best->how = "finite torus: exact evaluation at every coset";
        return best;
    }
    if (auto pq = single_pair(form, torus)) {
        auto [p, q] = *pq;
        std::vector<bool> skip(torus.k, false);
        skip[p] = skip[q] = true;
        std::optional<ExactMin> best;
        for (size_t c = 0; c < torus.finite_part.size(); ++c) {
            AlgebraicNumber c0 = real_value(exact_partial(form, torus, c, skip));
            AlgebraicNumber beta = form.terms[p].alpha * root_of_unity(torus.finite_part[c][p]);
            AlgebraicNumber b2 = norm2(beta);
            AlgebraicNumber two_b = b2.is_zero() ? AlgebraicNumber() : AlgebraicNumber::rational(Rational(2)) * sqrt_positive(b2);
            AlgebraicNumber v;
            if (kind == Kind::plain) {
                v = c0 - two_b;
            } else {
                AlgebraicNumber ac0 = c0.sign() < 0 ? -c0 : c0;
                v = compare(ac0, two_b) <= 0 ? AlgebraicNumber() : ac0 - two_b;
            }
            if (!best || compare(v, best->value) < 0) best = ExactMin{v, c, ""};
        }
        best->how = "single conjugate pair: closed form c0 - 2|beta|";
        return best;
    }
    return std::nullopt;
}

SignOutcome optimize(const DominantForm& form, const TorusParam& torus, const OptimizeOptions& opt, Kind kind,
                     const BallForm* bf, const Rational& radius) {
    if (opt.tol <= 0) throw InvalidInput("tolerance must be positive");
    if (form.terms.size() != torus.k) throw InvalidInput("torus dimension differs from the dominant form");
    SignOutcome out;
    Rational tol = opt.tol;
    bool tried_exact = false;
    for (;;) {
        long bits = bits_for(tol);
        Objective obj(form, torus, bits, kind, bf, radius);
        RunResult r = branch_and_bound(obj, torus, tol, opt.max_boxes, kind, opt.sign_only);
        out.boxes += r.boxes;
        out.enclosure = RealInterval(r.lb, r.ub);
        out.witness_coset = r.coset;
        out.witness_phi = r.phi;
        out.tol_reached = tol;
        if (r.lb > 0) {
            out.verdict = Verdict::positive;
            return out;
        }
        if (r.ub < 0) {
            out.verdict = Verdict::negative;
            return out;
        }
        if (kind == Kind::absolute && r.sign_change) {
            out.verdict = Verdict::zero;
            out.enclosure = RealInterval(Rational(0));
            out.certificate = "sign change within one torus component";
            return out;
        }
        if (kind != Kind::ball && !tried_exact) {
            tried_exact = true;
            if (auto ex = exact_minimum(form, torus, kind)) {
                int s = ex->value.sign();
                out.certificate = ex->how;
                if (s == 0) {
                    out.verdict = Verdict::zero;
                    out.enclosure = RealInterval(Rational(0));
                    return out;
                }
                // Exact nonzero optimum: intersect with its enclosure.
                for (long b = bits;; b += 64) {
                    RealInterval e = ex->value.enclosure(b).re();
                    Rational lo = std::max(e.lo(), r.lb), hi = std::min(e.hi(), r.ub);
                    if (hi < lo) {
                        lo = e.lo();
                        hi = e.hi();
                    }
                    if ((s > 0 && lo > 0) || (s < 0 && hi < 0)) {
                        out.enclosure = RealInterval(lo, hi);
                        out.verdict = s > 0 ? Verdict::positive : Verdict::negative;
                        return out;
                    }
                }
            }
        }
        if (r.budget_hit) {
            out.verdict = Verdict::unknown;
            out.certificate = "box budget exhausted";
            return out;
        }
        if (tol <= opt.min_tol) {
            out.verdict = Verdict::unknown;
            out.certificate = "tolerance exhausted with zero inside the enclosure";
            return out;
        }
        tol = std::max<Rational>(tol * pow2(-10), opt.min_tol);
    }
}

}  // namespace

SignOutcome mu(const DominantForm& form, const TorusParam& torus, const OptimizeOptions& opt) {
    return optimize(form, torus, opt, Kind::plain, nullptr, Rational(0));
}

SignOutcome nu(const DominantForm& form, const TorusParam& torus, const OptimizeOptions& opt) {
    return optimize(form, torus, opt, Kind::absolute, nullptr, Rational(0));
}

BallForm ball_form(const LrsModel& model, const NormalizedLrs& nl) {
    BallForm bf;
    bf.form = nl.dominant();
    const auto& sd = model.spectral();
    for (const auto& t : bf.form.terms) {
        bf.gradient.push_back(model.functional(t.root, sd.m));
        bf.roots.push_back(sd.roots[t.root].gamma);
    }
    return bf;
}

SignOutcome min_over_ball(const BallForm& bf, const Rational& radius, const TorusParam& torus,
                          const OptimizeOptions& opt) {
    if (radius <= 0) throw InvalidInput("radius > 0 required");
    OptimizeOptions o = opt;
    // No exact zero certificate exists for the ball objective; stop escalating early.
    if (o.min_tol < pow2(-60)) o.min_tol = std::min(o.tol, pow2(-60));
    return optimize(bf.form, torus, o, Kind::ball, &bf, radius);
}

DominantProblem dominant_problem(const Lrr& lrr, const InitialConfig& c, unsigned height_bound) {
    LrsModel model(lrr);
    NormalizedLrs nl(model.solve(c));
    RelationLattice lat = relation_lattice(nl.dominant().gammas(), height_bound);
    TorusParam tp = parametrize(lat);
    return DominantProblem{std::move(model), std::move(nl), std::move(lat), std::move(tp)};
}

}  // namespace rlrs
