#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rlrs/algebraic.hpp"

namespace rlrs {

// u_{n+k} = sum_j a_j u_{n+j}.
struct Lrr {
    std::vector<Rational> coeffs;

    size_t order() const { return coeffs.size(); }
    // x^k - sum_j a_j x^j.
    Poly characteristic() const;
    // Shift matrix with a_0..a_{k-1} in the last row.
    QMatrix companion() const;
};

// Validates the standing assumptions (order >= 1, a_0 != 0).
Lrr make_lrr(std::vector<Rational> coeffs);

struct InitialConfig {
    std::vector<Rational> entries;
};

enum class Topology { open, closed };

struct Ball {
    InitialConfig center;
    Rational radius;
    Topology topology = Topology::open;
};

std::vector<Rational> eval_terms(const Lrr& lrr, const InitialConfig& c, uint64_t n_max);

struct RootEntry {
    AlgebraicNumber gamma;
    unsigned multiplicity;
    AlgebraicNumber modulus2;  // |gamma|^2
    size_t modulus_class;      // 0 is the dominant class; classes by decreasing modulus
};

struct SpectralData {
    Lrr lrr;
    std::vector<Poly> factors;  // factors[k-1]: monic squarefree, roots of multiplicity k
    std::vector<RootEntry> roots;
    std::vector<size_t> dominant;
    AlgebraicNumber rho;
    unsigned m = 0;
    // gamma / rho for the root dominant[k]; computed on first use and shared between copies.
    const AlgebraicNumber& unit(size_t k) const;

    struct UnitCache {
        std::mutex mu;
        std::vector<std::optional<AlgebraicNumber>> values;
    };
    std::shared_ptr<UnitCache> unit_cache = std::make_shared<UnitCache>();
};

SpectralData spectral(const Lrr& lrr);

// Exponential-polynomial solution u_n = sum_i sum_j alpha_ij n^j gamma_i^n.
// alpha_ij = A_kj(gamma_i) where A_kj is a rational polynomial modulo the factor containing gamma_i.
class ExpPolySolution {
public:
    ExpPolySolution(std::shared_ptr<const SpectralData> spec, std::vector<std::vector<Poly>> coeff_polys);

    const SpectralData& spectral() const { return *spec_; }
    std::shared_ptr<const SpectralData> spectral_ptr() const { return spec_; }
    // Polynomial representing alpha_ij modulo factors[multiplicity-1].
    const Poly& coefficient_poly(size_t root, unsigned j) const;
    AlgebraicNumber alpha(size_t root, unsigned j) const;
    ComplexInterval alpha_enclosure(size_t root, unsigned j, long bits) const;
    bool alpha_is_zero(size_t root, unsigned j) const;
    // Enclosure of sum_ij alpha_ij n^j gamma_i^n with relative precision about 2^-bits.
    ComplexInterval reconstruct(uint64_t n, long bits) const;

private:
    std::shared_ptr<const SpectralData> spec_;
    std::vector<std::vector<Poly>> polys_;  // by multiplicity index k-1, then j
};

// Spectral data plus the inverse of the trace-form system, shared across initial configurations.
class LrsModel {
public:
    explicit LrsModel(const Lrr& lrr);

    const Lrr& lrr() const { return spec_->lrr; }
    const SpectralData& spectral() const { return *spec_; }
    std::shared_ptr<const SpectralData> spectral_ptr() const { return spec_; }

    ExpPolySolution solve(const InitialConfig& c) const;
    // alpha_ij(c) = sum_t c_t * w_t(gamma_i); returns the polynomials w_t.
    std::vector<Poly> functional(size_t root, unsigned j) const;

private:
    struct Block {
        size_t factor;  // multiplicity - 1
        unsigned j;
        size_t offset;
        size_t degree;
    };
    std::shared_ptr<const SpectralData> spec_;
    std::vector<Block> blocks_;
    QMatrix solve_;  // stacked coefficients = solve_ * c
};

ExpPolySolution exp_poly_solution(const Lrr& lrr, const InitialConfig& c);

struct DominantTerm {
    size_t root;
    AlgebraicNumber alpha;
    AlgebraicNumber gamma;  // unit modulus
};

struct DominantForm {
    std::vector<DominantTerm> terms;
    bool conjugate_closed = true;

    // Enclosure of sum_j alpha_j gamma_j^n.
    ComplexInterval evaluate(uint64_t n, long bits) const;
    // Enclosure of sum_j alpha_j t_j with t_j = e^{2 pi i turns_j}.
    RealInterval evaluate_turns(const std::vector<RealInterval>& turns, long bits) const;
    std::vector<AlgebraicNumber> gammas() const;
};

struct ResidualTerm {
    size_t root;
    unsigned j;
    int exponent;  // j - m
    AlgebraicNumber alpha;
    bool unit_ratio;  // |gamma| = rho
};

class NormalizedLrs {
public:
    NormalizedLrs(const ExpPolySolution& sol);

    const DominantForm& dominant() const { return dom_; }
    const std::vector<ResidualTerm>& residual_terms() const { return res_; }
    const SpectralData& spectral() const { return *spec_; }

    // Enclosure of v_n^res for n >= 1.
    ComplexInterval residual(uint64_t n, long bits) const;
    // Enclosure of u_n / (n^m rho^n) for n >= 1.
    ComplexInterval normalized_value(uint64_t n, long bits) const;
    // Certified N with |v_n^res| < eps for all n > N.
    uint64_t residual_threshold(const Rational& eps) const;

private:
    std::shared_ptr<const SpectralData> spec_;
    DominantForm dom_;
    std::vector<ResidualTerm> res_;
    // |gamma_i| / rho enclosures are computed on demand at the requested precision.
    RealInterval ratio(size_t root, long bits) const;
    ComplexInterval unit_power(size_t root, uint64_t n, long bits) const;
};

NormalizedLrs normalize(const Lrr& lrr, const InitialConfig& c);

// Enclosure of |u_n(c)| / ||y_n|| with y_n the first row of M^n.
RealInterval distance_to_hyperplane(const Lrr& lrr, const InitialConfig& c, uint64_t n, long bits = 64);
// Upper bound C with distance(c, H_n) <= C |v_n(c)| for n >= 1.
Rational hyperplane_constant(const SpectralData& spec, long bits = 64);

}  // namespace rlrs
