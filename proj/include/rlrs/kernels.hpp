#pragma once

#include <cstdint>
#include <vector>

#include "rlrs/interval.hpp"

// Fixed-point scan kernels. Every kernel has a serial reference and an OpenMP version that
// must return identical results.
namespace rlrs::kernels {

using u128 = unsigned __int128;

// An angle in turns known to lie in [base, base + span] * 2^-128 (mod 1).
struct FixedTurn {
    u128 base = 0;
    u128 span = 0;
};

// Requires an enclosure narrower than 2^-120.
FixedTurn fixed_turn(const RealInterval& turns);
FixedTurn fixed_turn_exact(const Rational& turn);

// Enclosure of the distance from n * theta to the nearest integer, scaled by 2^128 (lo, hi).
struct DistBounds {
    u128 lo, hi;
};
DistBounds nearest_int_distance(const FixedTurn& t, uint64_t n);

// min over 1 <= n <= N of n * ||n theta||, as [lo, hi] * 2^-96.
struct PrefixMin {
    u128 lo = ~u128(0), hi = ~u128(0);
    uint64_t argmin = 0;
};
PrefixMin prefix_min_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi);
PrefixMin prefix_min_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi);
Rational scaled_to_rational(u128 v, int shift);

// n(2 - psi)(1 - cos a) - two_qp |sin a| - 2 psi (sqrt(n^2 + 1) - n), a = 2 pi n theta.
struct BallTermParams {
    long double psi;
    long double two_qp;  // 2 pi ell
    long double eps;     // slack in the n [2 pi n theta] scale
};
long double ball_term_ld(const FixedTurn& t, uint64_t n, const BallTermParams& p);

struct ScanReport {
    uint64_t checked = 0;
    uint64_t negatives = 0;         // certified strictly negative values
    uint64_t first_negative = 0;    // 0 when none
    uint64_t violations = 0;        // implication failures (implication scans)
    uint64_t first_violation = 0;
    long double min_value = 0;
    uint64_t argmin = 0;
    std::vector<uint64_t> ambiguous;  // need an interval re-check
    bool operator==(const ScanReport& o) const;
};
// Sign scan of the closed-form ball minimum over n in [n_lo, n_hi].
ScanReport ball_term_scan_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p);
ScanReport ball_term_scan_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p);

// For n in range: n [2 pi n theta] >= two_qp + eps implies ball term >= 0.
ScanReport closed_form_scan_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p);
ScanReport closed_form_scan_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p);

// For n in range: u_n(d) >= 0 and 2 pi n theta mod 2 pi in [0, pi] imply n [2 pi n theta] > two_qp - eps.
ScanReport converse_scan_serial(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p);
ScanReport converse_scan_omp(const FixedTurn& t, uint64_t n_lo, uint64_t n_hi, const BallTermParams& p);

// max over n of (closed form - min over samples of u_n(sample)); samples in coefficient coordinates.
struct SampleGap {
    long double worst = -1e300L;  // closed form minus sampled minimum; <= 0 means sound
    uint64_t worst_n = 0;
    long double mean_gap = 0;     // mean of sampled minimum minus closed form
    bool operator==(const SampleGap& o) const {
        return worst == o.worst && worst_n == o.worst_n && mean_gap == o.mean_gap;
    }
};
SampleGap ball_sample_gap_serial(const FixedTurn& t, uint64_t n_hi, const std::vector<std::vector<long double>>& pts,
                                 const BallTermParams& p);
SampleGap ball_sample_gap_omp(const FixedTurn& t, uint64_t n_hi, const std::vector<std::vector<long double>>& pts,
                              const BallTermParams& p);

// First n <= n_max with sum_j (2 pi ||n theta_j - target_j||)^2 < eps^2 (a certified sufficient
// condition for ||s^n - t|| < eps), or 0.
std::vector<uint64_t> kronecker_hits_serial(const std::vector<FixedTurn>& theta,
                                            const std::vector<std::vector<FixedTurn>>& targets, long double eps,
                                            uint64_t n_max);
std::vector<uint64_t> kronecker_hits_omp(const std::vector<FixedTurn>& theta,
                                         const std::vector<std::vector<FixedTurn>>& targets, long double eps,
                                         uint64_t n_max);

}  // namespace rlrs::kernels
