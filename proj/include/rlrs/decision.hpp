#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlrs/optimize.hpp"

namespace rlrs {

enum class Answer { yes, no, unknown };

const char* to_string(Answer a);

struct Certificate {
    // violating-index | certified-radius | sign-outcome | cap-exhausted | lattice-incomplete | optimizer-unknown
    std::string kind;
    std::string reason;
    std::optional<uint64_t> index;       // violating index
    std::optional<Rational> value;       // exact u_n at that index
    std::optional<Rational> radius;      // certified radius psi
    std::optional<uint64_t> threshold;   // N: the tail bound holds for n > N
    std::optional<Rational> tail_margin; // lower bound of |u_n| / (n^m rho^n) on the ball for n > N
    std::optional<Rational> ball_constant;  // K with |u_n(d)| <= K ||d|| n^m rho^n for n >= 1
    std::optional<SignOutcome> outcome;
};

struct Decision {
    Answer verdict = Answer::unknown;
    Certificate certificate;
};

struct DecideOptions {
    OptimizeOptions opt;
    uint64_t prefix_cap = 1000000;
    unsigned height_bound = 64;
};

// YES iff mu > 0; NO iff mu <= 0.
Decision exists_robust_ultimate_positivity(const Lrr& lrr, const InitialConfig& c, const DecideOptions& o = {});
// Open balls only: YES iff the closed ball lies in the dominant-positive set.
Decision robust_nonuniform_ultpos_open_ball(const Lrr& lrr, const Ball& ball, const DecideOptions& o = {});
Decision exists_robust_positivity(const Lrr& lrr, const InitialConfig& c, const DecideOptions& o = {});
Decision exists_robust_skolem(const Lrr& lrr, const InitialConfig& c, const DecideOptions& o = {});

// K with |u_n(d)| <= K ||d|| n^m rho^n for all n >= 1 and all d.
Rational ball_constant(const LrsModel& model);

// Brute-force oracle over sampled rational points.
enum class Property { positivity, nonzero, ultimate };

const char* to_string(Property p);

struct Region {
    InitialConfig center;
    std::optional<Rational> radius;  // none: the single point
    Topology topology = Topology::open;
};

struct Violation {
    uint64_t n = 0;
    std::vector<Rational> point;
    Rational value;
    size_t sample = 0;
};

struct BruteForceReport {
    std::optional<Violation> first;  // minimal n, then lexicographically smallest point
    size_t samples = 0;
    uint64_t horizon = 0;
    uint64_t tail_from = 0;
    Property property = Property::positivity;
};

// Sample points: the center, then boundary-biased and uniform points alternating.
std::vector<std::vector<Rational>> sample_region(const Region& r, size_t samples, uint64_t seed);

// `tail_from` applies to the ultimate property (default horizon / 2).
BruteForceReport brute_force_check(const Lrr& lrr, const Region& region, Property property, uint64_t horizon,
                                   size_t samples, uint64_t seed = 1, std::optional<uint64_t> tail_from = {});
BruteForceReport brute_force_check_serial(const Lrr& lrr, const Region& region, Property property,
                                          uint64_t horizon, size_t samples, uint64_t seed = 1,
                                          std::optional<uint64_t> tail_from = {});

}  // namespace rlrs
