#include "rlrs/torus.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rlrs/elementary.hpp"

namespace rlrs {

namespace {

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

long double approx_turn(const AlgebraicNumber& g) {
    auto z = g.approx();
    return std::atan2(z.imag(), z.real()) / (2 * 3.14159265358979323846264338327950288L);
}

// Exact turn of a root of unity of the given order.
Rational rou_turn(const AlgebraicNumber& g, unsigned order) {
    long double t = approx_turn(g);
    long a = std::lround(t * order);
    a = ((a % static_cast<long>(order)) + static_cast<long>(order)) % static_cast<long>(order);
    Rational turn(a, static_cast<long>(order));
    turn.canonicalize();
    if (!equal(root_of_unity(turn), g)) throw std::logic_error("root of unity turn mismatch");
    return turn;
}

}  // namespace

AlgebraicNumber root_of_unity(const Rational& turn) {
    Rational t = frac(turn);
    Integer b = t.get_den();
    if (b == 1) return AlgebraicNumber::rational(Rational(1));
    if (b == 2) return AlgebraicNumber::rational(Rational(-1));
    if (b == 4) return AlgebraicNumber::gaussian({Rational(0), t == Rational(1, 4) ? Rational(1) : Rational(-1)});
    if (!b.fits_uint_p()) throw std::invalid_argument("root of unity order too large");
    Poly phi = cyclotomic(static_cast<unsigned>(b.get_ui()));
    return AlgebraicNumber::from_enclosure(phi, [&](long bits) { return unit_turns(RealInterval(t), bits + 4); });
}

bool power_product_is_one(const std::vector<AlgebraicNumber>& gammas, const IntVec& exps) {
    if (gammas.size() != exps.size()) throw std::invalid_argument("power_product_is_one: size mismatch");
    // Interval screen.
    ComplexInterval prod(RealInterval(Rational(1)));
    bool trivial = true;
    for (size_t j = 0; j < gammas.size(); ++j) {
        if (exps[j] == 0) continue;
        trivial = false;
        if (!exps[j].fits_slong_p()) throw std::invalid_argument("exponent too large");
        long e = exps[j].get_si();
        ComplexInterval g = gammas[j].enclosure(64);
        if (e < 0) g = g.inv();
        prod = (prod * pow(g.rounded(80), static_cast<unsigned long>(std::labs(e)), 80)).rounded(80);
    }
    if (trivial) return true;
    if (!prod.contains(CRat(Rational(1)))) return false;
    AlgebraicNumber num = AlgebraicNumber::rational(Rational(1)), den = num;
    for (size_t j = 0; j < gammas.size(); ++j) {
        long e = exps[j].get_si();
        if (e > 0) num = num * pow(gammas[j], static_cast<unsigned long>(e));
        if (e < 0) den = den * pow(gammas[j], static_cast<unsigned long>(-e));
    }
    return equal(num, den);
}

RelationLattice relation_lattice(const std::vector<AlgebraicNumber>& gammas, unsigned height_bound) {
    RelationLattice lat;
    lat.k = gammas.size();
    lat.height_bound = height_bound;
    size_t k = lat.k;
    IntMatrix gens;

    std::vector<unsigned> order(k);
    std::vector<Rational> turn(k);
    std::vector<size_t> rou, other;
    for (size_t j = 0; j < k; ++j) {
        order[j] = root_of_unity_order(gammas[j]);
        if (order[j]) {
            turn[j] = rou_turn(gammas[j], order[j]);
            rou.push_back(j);
        } else {
            other.push_back(j);
        }
    }

    // Roots of unity: sum_j lambda_j a_j / o_j in Z.
    if (!rou.empty()) {
        Integer L = 1;
        for (size_t j : rou) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), order[j]);
        IntMatrix row(1, IntVec(rou.size() + 1));
        for (size_t r = 0; r < rou.size(); ++r) row[0][r] = turn[rou[r]].get_num() * (L / turn[rou[r]].get_den());
        row[0][rou.size()] = L;
        for (const auto& v : integer_kernel(row, rou.size() + 1)) {
            IntVec g(k, Integer(0));
            for (size_t r = 0; r < rou.size(); ++r) g[rou[r]] = v[r];
            gens.push_back(std::move(g));
        }
    }

    // Conjugate pairs among the rest always satisfy gamma * conj(gamma) = 1.
    std::vector<size_t> reps;
    std::vector<bool> used(k, false);
    size_t pairs = 0;
    for (size_t a = 0; a < other.size(); ++a) {
        size_t i = other[a];
        if (used[i]) continue;
        used[i] = true;
        reps.push_back(i);
        for (size_t b = a + 1; b < other.size(); ++b) {
            size_t j = other[b];
            if (!used[j] && equal(gammas[j], conj(gammas[i]))) {
                used[j] = true;
                IntVec g(k, Integer(0));
                g[i] = 1;
                g[j] = 1;
                gens.push_back(std::move(g));
                ++pairs;
                break;
            }
        }
    }

    // One non-torsion pair: any further relation would make gamma a root of unity.
    if (reps.empty() || (reps.size() == 1 && pairs == 1)) {
        lat.complete = true;
    } else {
        lat.complete = false;
        size_t q = reps.size();
        const double budget = 2e6;
        long H = static_cast<long>(height_bound);
        while (H > 1 && std::pow(2.0 * H + 1, static_cast<double>(q)) > budget) --H;
        lat.height_bound = static_cast<unsigned>(H);
        std::vector<long double> th(q);
        long degree_bound = 1;
        for (size_t r = 0; r < q; ++r) {
            th[r] = approx_turn(gammas[reps[r]]);
            degree_bound *= gammas[reps[r]].degree();
        }
        long max_order = std::min<long>(2 * degree_bound * degree_bound + 2, 4096);
        std::vector<long> lam(q, -H);
        for (;;) {
            // Canonical sign: first nonzero entry positive.
            size_t fnz = q;
            for (size_t r = 0; r < q; ++r)
                if (lam[r] != 0) {
                    fnz = r;
                    break;
                }
            if (fnz < q && lam[fnz] > 0) {
                long double t = 0;
                for (size_t r = 0; r < q; ++r) t += lam[r] * th[r];
                for (long o = 1; o <= max_order; ++o) {
                    long double x = t * o;
                    if (std::fabs(x - std::nearbyint(x)) > 1e-10L * o * (1 + H)) continue;
                    IntVec g(k, Integer(0));
                    for (size_t r = 0; r < q; ++r) g[reps[r]] = lam[r] * o;
                    if (power_product_is_one(gammas, g)) gens.push_back(std::move(g));
                    break;
                }
            }
            size_t r = 0;
            while (r < q && lam[r] == H) lam[r++] = -H;
            if (r == q) break;
            ++lam[r];
        }
    }
    lat.generators = hnf_rows(std::move(gens), k);
    return lat;
}

std::vector<AlgebraicNumber> TorusParam::finite_point(size_t coset) const {
    std::vector<AlgebraicNumber> out;
    for (const auto& t : finite_part.at(coset)) out.push_back(root_of_unity(t));
    return out;
}

std::vector<Rational> TorusParam::turns(size_t coset, const std::vector<Rational>& phi) const {
    if (phi.size() != free_rank) throw std::invalid_argument("wrong number of free angles");
    std::vector<Rational> th = finite_part.at(coset);
    for (size_t j = 0; j < k; ++j)
        for (size_t e = 0; e < free_rank; ++e) th[j] += Rational(embedding[j][e]) * phi[e];
    return th;
}

bool TorusParam::satisfies(const std::vector<Rational>& theta) const {
    for (const auto& r : relations) {
        Rational s;
        for (size_t j = 0; j < k; ++j) s += Rational(r[j]) * theta[j];
        if (s.get_den() != 1) return false;
    }
    return true;
}

TorusParam parametrize(const RelationLattice& lat) {
    TorusParam tp;
    tp.k = lat.k;
    tp.relations = lat.generators;
    size_t k = lat.k;
    if (lat.generators.empty()) {
        tp.finite_part.push_back(std::vector<Rational>(k));
        tp.free_rank = k;
        tp.embedding.assign(k, IntVec(k, Integer(0)));
        for (size_t j = 0; j < k; ++j) tp.embedding[j][j] = 1;
        return tp;
    }
    SmithForm s = smith(lat.generators, k);
    size_t r = s.diagonal.size();
    tp.free_rank = k - r;
    tp.embedding.assign(k, IntVec(tp.free_rank));
    for (size_t j = 0; j < k; ++j)
        for (size_t e = 0; e < tp.free_rank; ++e) tp.embedding[j][e] = s.V[j][r + e];
    Integer count = 1;
    for (const auto& d : s.diagonal) count *= d;
    if (count > 1000000) throw std::runtime_error("torus has too many finite cosets");
    std::vector<Integer> a(r, Integer(0));
    for (;;) {
        std::vector<Rational> th(k);
        for (size_t i = 0; i < r; ++i) {
            if (a[i] == 0) continue;
            Rational psi(a[i], s.diagonal[i]);
            psi.canonicalize();
            for (size_t j = 0; j < k; ++j) th[j] += Rational(s.V[j][i]) * psi;
        }
        for (auto& t : th) t = frac(t);
        tp.finite_part.push_back(std::move(th));
        size_t i = 0;
        while (i < r && a[i] + 1 == s.diagonal[i]) a[i++] = 0;
        if (i == r) break;
        ++a[i];
    }
    return tp;
}

std::vector<AlgebraicNumber> orbit_point(const std::vector<AlgebraicNumber>& gammas, unsigned long n) {
    std::vector<AlgebraicNumber> out;
    for (const auto& g : gammas) out.push_back(pow(g, n));
    return out;
}

}  // namespace rlrs
