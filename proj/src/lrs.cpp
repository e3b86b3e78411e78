#include "rlrs/lrs.hpp"

#include <algorithm>
#include <cmath>

#include "rlrs/elementary.hpp"

namespace rlrs {

Poly Lrr::characteristic() const {
    std::vector<Rational> c(coeffs.size() + 1);
    for (size_t j = 0; j < coeffs.size(); ++j) c[j] = -coeffs[j];
    c.back() = 1;
    return Poly(std::move(c));
}

QMatrix Lrr::companion() const { return QMatrix::companion(characteristic()); }

Lrr make_lrr(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw InvalidInput("recurrence order must be positive");
    if (coeffs[0] == 0)
        throw InvalidInput("a_0 must be nonzero (otherwise the recurrence has a lower order after a shift)");
    return Lrr{std::move(coeffs)};
}

std::vector<Rational> eval_terms(const Lrr& lrr, const InitialConfig& c, uint64_t n_max) {
    size_t k = lrr.order();
    if (c.entries.size() != k)
        throw InvalidInput("initial configuration has length " + std::to_string(c.entries.size()) +
                           " but the recurrence has order " + std::to_string(k));
    std::vector<Rational> u(c.entries);
    u.reserve(static_cast<size_t>(n_max) + 1);
    for (uint64_t n = k; n <= n_max; ++n) {
        Rational s;
        size_t base = static_cast<size_t>(n) - k;
        for (size_t j = 0; j < k; ++j)
            if (lrr.coeffs[j] != 0) s += lrr.coeffs[j] * u[base + j];
        u.push_back(s);
    }
    u.resize(static_cast<size_t>(n_max) + 1);
    return u;
}

SpectralData spectral(const Lrr& lrr) {
    SpectralData sd;
    sd.lrr = lrr;
    sd.factors = yun(lrr.characteristic());
    for (size_t k = 0; k < sd.factors.size(); ++k) {
        if (sd.factors[k].degree() < 1) continue;
        for (auto& g : roots_of(sd.factors[k])) sd.roots.push_back({g, static_cast<unsigned>(k + 1), g, 0});
    }
    // |gamma|^2, shared between conjugates.
    for (size_t i = 0; i < sd.roots.size(); ++i) {
        auto& r = sd.roots[i];
        bool done = false;
        if (!r.gamma.is_real())
            for (size_t j = 0; j < i && !done; ++j)
                if (sd.roots[j].multiplicity == r.multiplicity && !sd.roots[j].gamma.is_real() &&
                    equal(sd.roots[j].gamma, conj(r.gamma))) {
                    r.modulus2 = sd.roots[j].modulus2;
                    done = true;
                }
        if (!done) r.modulus2 = r.gamma.is_real() ? r.gamma * r.gamma : norm2(r.gamma);
    }
    // Equal-modulus classes ordered by decreasing modulus.
    std::vector<size_t> reps;
    std::vector<size_t> cls(sd.roots.size());
    for (size_t i = 0; i < sd.roots.size(); ++i) {
        size_t c = reps.size();
        for (size_t r = 0; r < reps.size(); ++r)
            if (equal(sd.roots[reps[r]].modulus2, sd.roots[i].modulus2)) {
                c = r;
                break;
            }
        if (c == reps.size()) reps.push_back(i);
        cls[i] = c;
    }
    std::vector<size_t> order(reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return compare(sd.roots[reps[a]].modulus2, sd.roots[reps[b]].modulus2) > 0;
    });
    std::vector<size_t> rank(reps.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    for (size_t i = 0; i < sd.roots.size(); ++i) sd.roots[i].modulus_class = rank[cls[i]];
    // Within a class: by argument, then multiplicity.
    std::vector<long double> arg(sd.roots.size());
    for (size_t i = 0; i < sd.roots.size(); ++i) arg[i] = std::arg(sd.roots[i].gamma.approx());
    std::vector<size_t> idx(sd.roots.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        const auto &ra = sd.roots[a], &rb = sd.roots[b];
        if (ra.modulus_class != rb.modulus_class) return ra.modulus_class < rb.modulus_class;
        if (std::fabs(arg[a]) != std::fabs(arg[b])) return std::fabs(arg[a]) < std::fabs(arg[b]);
        return arg[a] > arg[b];
    });
    std::vector<RootEntry> sorted;
    for (size_t i : idx) sorted.push_back(sd.roots[i]);
    sd.roots = std::move(sorted);

    for (size_t i = 0; i < sd.roots.size(); ++i)
        if (sd.roots[i].modulus_class == 0) {
            sd.dominant.push_back(i);
            sd.m = std::max(sd.m, sd.roots[i].multiplicity - 1);
        }
    const RootEntry* real_dom = nullptr;
    for (size_t i : sd.dominant)
        if (sd.roots[i].gamma.is_real()) real_dom = &sd.roots[i];
    if (real_dom)
        sd.rho = real_dom->gamma.sign() > 0 ? real_dom->gamma : -real_dom->gamma;
    else
        sd.rho = sqrt_positive(sd.roots[sd.dominant[0]].modulus2);
    return sd;
}

const AlgebraicNumber& SpectralData::unit(size_t k) const {
    if (k >= dominant.size()) throw std::out_of_range("unit: index past the dominant roots");
    std::lock_guard<std::mutex> lock(unit_cache->mu);
    auto& vals = unit_cache->values;
    if (vals.size() != dominant.size()) vals.resize(dominant.size());
    if (vals[k]) return *vals[k];
    const AlgebraicNumber& g = roots[dominant[k]].gamma;
    auto rho_q = rho.as_rational();
    if (g.is_real()) {
        vals[k] = AlgebraicNumber::rational(Rational(g.sign()));
    } else if (rho_q) {
        RootDisk dk = g.disk();
        Rational inv = 1 / *rho_q;
        vals[k] = AlgebraicNumber(g.poly().scale_arg(*rho_q), RootDisk{CRat(inv) * dk.center, inv * dk.radius});
    } else {
        vals[k] = g / rho;
    }
    return *vals[k];
}

ExpPolySolution::ExpPolySolution(std::shared_ptr<const SpectralData> spec, std::vector<std::vector<Poly>> coeff_polys)
    : spec_(std::move(spec)), polys_(std::move(coeff_polys)) {}

const Poly& ExpPolySolution::coefficient_poly(size_t root, unsigned j) const {
    const auto& r = spec_->roots.at(root);
    if (j >= r.multiplicity) throw std::out_of_range("coefficient power exceeds multiplicity");
    return polys_.at(r.multiplicity - 1).at(j);
}

AlgebraicNumber ExpPolySolution::alpha(size_t root, unsigned j) const {
    const auto& r = spec_->roots.at(root);
    return eval_at_root(coefficient_poly(root, j), spec_->factors[r.multiplicity - 1], r.gamma);
}

ComplexInterval ExpPolySolution::alpha_enclosure(size_t root, unsigned j, long bits) const {
    const Poly& a = coefficient_poly(root, j);
    const AlgebraicNumber& g = spec_->roots[root].gamma;
    for (long extra = 16;; extra += 32) {
        ComplexInterval v = eval(a, g.enclosure(bits + extra), bits + extra);
        if (v.width() <= pow2(-bits) || extra > 4000) return v;
    }
}

bool ExpPolySolution::alpha_is_zero(size_t root, unsigned j) const {
    return vanishes_at(coefficient_poly(root, j), spec_->roots[root].gamma);
}

ComplexInterval ExpPolySolution::reconstruct(uint64_t n, long bits) const {
    long guard = bits + 2 * static_cast<long>(std::log2(static_cast<double>(n) + 2)) + 24;
    ComplexInterval sum;
    for (size_t i = 0; i < spec_->roots.size(); ++i) {
        const auto& r = spec_->roots[i];
        ComplexInterval gn = pow(r.gamma.enclosure(guard + 8), n, guard);
        for (unsigned j = 0; j < r.multiplicity; ++j) {
            if (coefficient_poly(i, j).is_zero()) continue;
            Rational nj = pow(Rational(static_cast<long>(n)), j);
            if (n == 0 && j == 0) nj = 1;
            sum = sum + RealInterval(nj) * (alpha_enclosure(i, j, guard) * gn);
        }
    }
    return sum;
}

namespace {

// Power sums of the roots of a monic polynomial, p_0..p_{count-1}.
std::vector<Rational> power_sums(const Poly& s, size_t count) {
    Poly q = s.monic();
    size_t d = static_cast<size_t>(q.degree());
    std::vector<Rational> p(count);
    if (count == 0) return p;
    p[0] = Rational(static_cast<long>(d));
    for (size_t e = 1; e < count; ++e) {
        Rational acc;
        for (size_t i = 1; i <= std::min(e - 1, d); ++i) acc -= q.coeff(d - i) * p[e - i];
        if (e <= d) acc -= Rational(static_cast<long>(e)) * q.coeff(d - e);
        p[e] = acc;
    }
    return p;
}

}  // namespace

LrsModel::LrsModel(const Lrr& lrr) : spec_(std::make_shared<SpectralData>(rlrs::spectral(lrr))) {
    size_t kappa = lrr.order();
    size_t offset = 0;
    for (size_t k = 0; k < spec_->factors.size(); ++k) {
        size_t d = static_cast<size_t>(std::max<long>(0, spec_->factors[k].degree()));
        if (d == 0) continue;
        for (unsigned j = 0; j <= k; ++j) {
            blocks_.push_back({k, j, offset, d});
            offset += d;
        }
    }
    if (offset != kappa) throw std::logic_error("multiplicities do not add up to the order");
    QMatrix w(kappa, kappa);
    for (const auto& b : blocks_) {
        auto ps = power_sums(spec_->factors[b.factor], b.degree + kappa);
        for (size_t n = 0; n < kappa; ++n) {
            Rational nj = (b.j == 0) ? Rational(1) : pow(Rational(static_cast<long>(n)), b.j);
            for (size_t l = 0; l < b.degree; ++l) w(n, b.offset + l) = nj * ps[l + n];
        }
    }
    solve_ = inverse(w);
}

ExpPolySolution LrsModel::solve(const InitialConfig& c) const {
    if (c.entries.size() != lrr().order()) throw InvalidInput("initial configuration length differs from the order");
    auto stacked = solve_.apply(c.entries);
    std::vector<std::vector<Poly>> polys(spec_->factors.size());
    for (size_t k = 0; k < polys.size(); ++k) polys[k].assign(k + 1, Poly());
    for (const auto& b : blocks_) {
        std::vector<Rational> coeffs(stacked.begin() + static_cast<long>(b.offset),
                                     stacked.begin() + static_cast<long>(b.offset + b.degree));
        polys[b.factor][b.j] = Poly(std::move(coeffs));
    }
    return ExpPolySolution(spec_, std::move(polys));
}

std::vector<Poly> LrsModel::functional(size_t root, unsigned j) const {
    const auto& r = spec_->roots.at(root);
    for (const auto& b : blocks_)
        if (b.factor == r.multiplicity - 1 && b.j == j) {
            std::vector<Poly> out;
            for (size_t t = 0; t < lrr().order(); ++t) {
                std::vector<Rational> c(b.degree);
                for (size_t l = 0; l < b.degree; ++l) c[l] = solve_(b.offset + l, t);
                out.emplace_back(std::move(c));
            }
            return out;
        }
    throw std::out_of_range("no such coefficient");
}

ExpPolySolution exp_poly_solution(const Lrr& lrr, const InitialConfig& c) { return LrsModel(lrr).solve(c); }

ComplexInterval DominantForm::evaluate(uint64_t n, long bits) const {
    long guard = bits + static_cast<long>(std::log2(static_cast<double>(n) + 2)) + 16;
    ComplexInterval sum;
    for (const auto& t : terms)
        sum = sum + t.alpha.enclosure(guard) * pow(t.gamma.enclosure(guard + 8), n, guard);
    return sum;
}

RealInterval DominantForm::evaluate_turns(const std::vector<RealInterval>& turns, long bits) const {
    RealInterval sum;
    for (size_t j = 0; j < terms.size(); ++j) {
        ComplexInterval a = terms[j].alpha.enclosure(bits + 8);
        ComplexInterval t = unit_turns(turns[j], bits + 8);
        sum = sum + (a * t).re();
    }
    return sum;
}

std::vector<AlgebraicNumber> DominantForm::gammas() const {
    std::vector<AlgebraicNumber> g;
    for (const auto& t : terms) g.push_back(t.gamma);
    return g;
}

NormalizedLrs::NormalizedLrs(const ExpPolySolution& sol) : spec_(sol.spectral_ptr()) {
    const auto& sd = *spec_;
    for (size_t k = 0; k < sd.dominant.size(); ++k) {
        size_t i = sd.dominant[k];
        if (sd.roots[i].multiplicity == sd.m + 1) dom_.terms.push_back({i, sol.alpha(i, sd.m), sd.unit(k)});
    }
    for (size_t i = 0; i < sd.roots.size(); ++i) {
        const auto& r = sd.roots[i];
        bool dominant = r.modulus_class == 0;
        for (unsigned j = 0; j < r.multiplicity; ++j) {
            if (dominant && j == sd.m) continue;
            if (sol.alpha_is_zero(i, j)) continue;
            res_.push_back({i, j, static_cast<int>(j) - static_cast<int>(sd.m), sol.alpha(i, j), dominant});
        }
    }
    for (const auto& t : dom_.terms) {
        bool found = false;
        for (const auto& u : dom_.terms)
            if (equal(conj(t.gamma), u.gamma) && equal(conj(t.alpha), u.alpha)) {
                found = true;
                break;
            }
        if (!found) dom_.conjugate_closed = false;
    }
}

RealInterval NormalizedLrs::ratio(size_t root, long bits) const {
    const auto& r = spec_->roots[root];
    if (r.modulus_class == 0) return RealInterval(Rational(1));
    RealInterval m2 = r.modulus2.enclosure(bits + 8).re();
    RealInterval rho = spec_->rho.enclosure(bits + 8).re();
    return (sqrt_interval(m2, bits + 8) / rho).rounded(bits + 4);
}

ComplexInterval NormalizedLrs::unit_power(size_t root, uint64_t n, long bits) const {
    const auto& sd = *spec_;
    long guard = bits + static_cast<long>(std::log2(static_cast<double>(n) + 2)) + 16;
    ComplexInterval g = sd.roots[root].gamma.enclosure(guard);
    RealInterval rho = sd.rho.enclosure(guard).re();
    return pow((rho.inv() * g).rounded_rel(guard), n, guard);
}

ComplexInterval NormalizedLrs::residual(uint64_t n, long bits) const {
    if (n == 0) throw std::invalid_argument("residual is defined for n >= 1");
    ComplexInterval sum;
    for (const auto& t : res_) {
        Rational scale = t.exponent >= 0 ? pow(Rational(static_cast<long>(n)), static_cast<unsigned long>(t.exponent))
                                         : 1 / pow(Rational(static_cast<long>(n)), static_cast<unsigned long>(-t.exponent));
        sum = sum + RealInterval(scale) * (t.alpha.enclosure(bits + 16) * unit_power(t.root, n, bits + 16));
    }
    return sum.rounded(bits + 8);
}

ComplexInterval NormalizedLrs::normalized_value(uint64_t n, long bits) const {
    return dom_.evaluate(n, bits) + residual(n, bits);
}

uint64_t NormalizedLrs::residual_threshold(const Rational& eps) const {
    if (eps <= 0) throw InvalidInput("residual threshold needs eps > 0");
    if (res_.empty()) return 0;
    Rational target = eps / static_cast<long>(res_.size());
    uint64_t N = 0;
    for (const auto& t : res_) {
        Rational A = t.alpha.enclosure(64).mag(64);
        int e = t.exponent;
        uint64_t start = 1;
        Rational r_hi(1);
        if (!t.unit_ratio) {
            for (long bits = 32;; bits += 32) {
                r_hi = ratio(t.root, bits).hi();
                if (r_hi < 1) break;
            }
            if (e > 0) start = static_cast<uint64_t>(ceil_of(Rational(e) / (1 - r_hi)).get_ui()) + 1;
        }
        // Upper envelope, decreasing for n >= start.
        auto bound = [&](uint64_t n) -> Rational {
            Rational ne = e >= 0 ? pow(Rational(static_cast<long>(n)), static_cast<unsigned long>(e))
                                 : 1 / pow(Rational(static_cast<long>(n)), static_cast<unsigned long>(-e));
            Rational rn = t.unit_ratio ? Rational(1) : pow(RealInterval(r_hi), n, 64).hi();
            return A * ne * rn;
        };
        if (bound(start) < target) {
            N = std::max(N, start - 1);
            continue;
        }
        uint64_t lo = start, hi = start;
        while (!(bound(hi) < target)) {
            lo = hi;
            if (hi > (uint64_t(1) << 62)) throw std::runtime_error("residual threshold overflow");
            hi *= 2;
        }
        while (hi - lo > 1) {
            uint64_t mid = lo + (hi - lo) / 2;
            if (bound(mid) < target) hi = mid;
            else lo = mid;
        }
        N = std::max(N, hi - 1);
    }
    return N;
}

NormalizedLrs normalize(const Lrr& lrr, const InitialConfig& c) { return NormalizedLrs(exp_poly_solution(lrr, c)); }

RealInterval distance_to_hyperplane(const Lrr& lrr, const InitialConfig& c, uint64_t n, long bits) {
    size_t k = lrr.order();
    if (c.entries.size() != k) throw InvalidInput("initial configuration length differs from the order");
    QMatrix mn = pow(lrr.companion(), n);
    Rational u, y2;
    for (size_t t = 0; t < k; ++t) {
        u += mn(0, t) * c.entries[t];
        y2 += mn(0, t) * mn(0, t);
    }
    if (u == 0) return RealInterval(Rational(0));
    Rational au = abs(u);
    return {au / sqrt_up(y2, bits), au / sqrt_down(y2, bits)};
}

Rational hyperplane_constant(const SpectralData& spec, long bits) {
    // Frobenius norm of the generalized Vandermonde matrix V[n][(i,j)] = n^j gamma_i^n, n < order.
    size_t k = spec.lrr.order();
    Rational total;
    for (const auto& r : spec.roots) {
        Rational m2 = r.modulus2.enclosure(bits).re().hi();
        for (unsigned j = 0; j < r.multiplicity; ++j)
            for (size_t n = 0; n < k; ++n) {
                Rational nj = (j == 0) ? Rational(1) : pow(Rational(static_cast<long>(n)), 2 * j);
                total += nj * pow(m2, n);
            }
    }
    return sqrt_up(total, bits);
}

}  // namespace rlrs
