#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rlrs/kernels.hpp"
#include "rlrs/lrs.hpp"

// The order-6 family with characteristic polynomial (x-1)^2 (x^2 - 2px + 1)^2 and its gadgets.
namespace rlrs {

// e^{2 pi i theta} = p + qi. q is stored when rational; otherwise q = +sqrt(1 - p^2).
struct UnitAngle {
    Rational p;
    std::optional<Rational> q;

    // Validates p^2 + q^2 = 1 (when q is given), |p| < 1 and q != 0.
    static UnitAngle make(const Rational& p, std::optional<Rational> q = std::nullopt);
    // Exact turn when theta is rational (only p in {0, +-1/2} without rational q).
    std::optional<Rational> rational_turn() const;
    RealInterval turns(long bits) const;
    // Fixed-point angle from a `bits`-bit enclosure (at least 130).
    kernels::FixedTurn fixed(long bits = 150) const;
    // Exact (cos, sin) of 2 pi n theta; requires rational q.
    std::pair<Rational, Rational> cos_sin(uint64_t n) const;
};

Lrr build_hardness_lrr(const Rational& p, std::optional<Rational> q = std::nullopt);

// C * c = (z_dom, x_dom, y_dom, z_res, x_res, y_res) for initial configurations c.
struct BasisChange {
    QMatrix C, C_inv;
};
BasisChange basis_change(const Rational& p, const Rational& q);

// u_n from coefficient coordinates (rational p, q).
Rational coefficient_term(const UnitAngle& a, const std::array<Rational, 6>& coef, uint64_t n);

struct ConeMembership {
    bool contains;
    RealInterval margin;  // z - sqrt(x^2 + y^2)
};
ConeMembership cone_contains(const Rational& z, const Rational& x, const Rational& y, long bits = 80);

// a + b sqrt(d), d not a perfect square unless b = 0.
struct QuadraticNumber {
    Rational a, b, d;
    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    bool operator==(const QuadraticNumber& o) const;
    std::string str() const;
};

struct RotationCheck {
    // M acting on (z, x, y) with v_{n+1}(w) = v_n(M w) for v_n(w) = z - x cos_n - y sin_n.
    std::array<std::array<QuadraticNumber, 3>, 3> M;
    bool orthogonal = false;
    bool det_one = false;
    bool is_rotation = false;    // M = [[1,0,0],[0,p,q],[0,-q,p]]
    bool sixfold_identity = false;  // M^6 applied to (0,1,0)
    bool passed() const { return orthogonal && det_one && is_rotation; }
};
// p = 1 with q = 0 is accepted here as the degenerate identity case.
RotationCheck rotation_check(const Rational& p, std::optional<Rational> q = std::nullopt);

struct HardnessParams {
    UnitAngle angle;
    Rational qprime;  // ell = qprime / pi
    Rational eps;     // slack in the n [2 pi n theta] scale
    Rational psi;
    Rational alpha0;
    uint64_t n1 = 0;
    Rational tau1;
    uint64_t n2 = 0;
};

HardnessParams compute_params(const UnitAngle& angle, const Rational& qprime, const Rational& eps);
// Names of violated constraints; empty when all hold.
std::vector<std::string> check_params(const HardnessParams& hp);
kernels::BallTermParams ball_term_params(const HardnessParams& hp);

struct BallGadget {
    std::array<Rational, 6> center, point_d;
    Rational radius2;  // 2 psi^2
    bool distance_ok = false;
    bool d_on_surface = false;
    size_t samples = 0;
    size_t interior = 0;  // samples with x < z and strict cone interior
    bool passed() const { return distance_ok && d_on_surface && interior == samples; }
};
// Requires psi < 1/3 and psi < pi ell; samples exact rational points of the closed ball.
BallGadget ball_gadget(const HardnessParams& hp, size_t samples = 1000, uint64_t seed = 7);

// Closed-form minimum over both balls of u_n, using the exact (cos_n, sin_n) recurrence.
RealInterval min_ball_term(uint64_t n, const HardnessParams& hp, long bits = 80);
// The same value from an enclosure of theta; works for irrational q.
RealInterval min_ball_term_turns(uint64_t n, const HardnessParams& hp, long bits = 200);

// Enclosure of L_{<=N} = min_{0<n<=N} n ||n theta||.
RealInterval lagrange_prefix(const UnitAngle& a, uint64_t N, long precision = 160, bool parallel = true);
// Same quantity from exact (cos_n, sin_n) pairs; for small N.
RealInterval lagrange_prefix_exact(const UnitAngle& a, uint64_t N, long bits = 80);
// min over n_lo <= n <= n_hi; the finite analogue of a tail infimum.
RealInterval lagrange_window(const UnitAngle& a, uint64_t n_lo, uint64_t n_hi, long precision = 160);

struct LEstimate {
    Rational ell_min, ell_max;  // encloses L_{<=horizon}
    uint64_t horizon = 0;
    unsigned probes = 0;
    std::string certificate;
};
LEstimate approximate_L(const UnitAngle& a, const Rational& eps, uint64_t horizon_cap);

// z_dom - x_dom cos - y_dom sin = offset on the hyperplane where u_n vanishes.
Rational hyperplane_offset(const UnitAngle& a, uint64_t n, const Rational& z_res, const Rational& x_res,
                           const Rational& y_res);

// min over 1 <= n <= N of z - x cos - y sin, first negative index (0 if none).
struct OrbitScan {
    long double min_value;
    uint64_t argmin;
    uint64_t first_negative;
};
OrbitScan dominant_orbit_scan(const UnitAngle& a, long double z, long double x, long double y, uint64_t N);
// Same for u_n with both dominant and residual coordinates.
OrbitScan full_orbit_scan(const UnitAngle& a, const std::array<long double, 6>& coef, uint64_t N);

// CSV emitters: header row, LF endings.
std::string cone_section_csv(const Rational& z, unsigned steps);
std::string hyperplane_trace_csv(const UnitAngle& a, const Rational& z_res, const Rational& x_res,
                                 const Rational& y_res, uint64_t n_max);
std::string orbit_csv(const UnitAngle& a, const Rational& z, const Rational& x, const Rational& y, uint64_t n_max);

}  // namespace rlrs
