#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlrs/lrs.hpp"
#include "rlrs/torus.hpp"

namespace rlrs {

enum class Verdict { positive, negative, zero, unknown };

const char* to_string(Verdict v);

struct SignOutcome {
    Verdict verdict = Verdict::unknown;
    RealInterval enclosure;
    // Torus point at the upper end of the enclosure: coset index and free angles in turns.
    size_t witness_coset = 0;
    std::vector<Rational> witness_phi;
    std::string certificate;  // how ZERO was proved, or why the outcome is UNKNOWN
    Rational tol_reached;
    uint64_t boxes = 0;
};

struct OptimizeOptions {
    Rational tol = pow2(-40);
    // Escalation floor when the enclosure still straddles zero.
    Rational min_tol = pow2(-200);
    uint64_t max_boxes = 4000000;
    // Stop as soon as the sign of the optimum is certified; the enclosure may then be wider than tol.
    bool sign_only = false;
};

// Enclosure of sum_j Re(alpha_j t_j) for t_j = e^{2 pi i theta_j}; theta must lie on the torus.
RealInterval dominant_value(const DominantForm& form, const TorusParam& torus, const std::vector<Rational>& theta,
                            long bits = 64);

// min over T of dominant(c, t).
SignOutcome mu(const DominantForm& form, const TorusParam& torus, const OptimizeOptions& opt = {});
// min over T of |dominant(c, t)|.
SignOutcome nu(const DominantForm& form, const TorusParam& torus, const OptimizeOptions& opt = {});

// d -> dominant(c + d, t) = dominant(c, t) + sum_s d_s Re(sum_j beta_js t_j).
struct BallForm {
    DominantForm form;
    // gradient[j][s] = coefficient of d_s in alpha_j, as a polynomial in gamma of the dominant root.
    std::vector<std::vector<Poly>> gradient;
    std::vector<AlgebraicNumber> roots;  // gamma (not normalized) for each dominant term
};

BallForm ball_form(const LrsModel& model, const NormalizedLrs& nl);

// min over ||d|| <= radius and t in T of dominant(c + d, t) = min_t f(t) - radius ||G(t)||.
SignOutcome min_over_ball(const BallForm& bf, const Rational& radius, const TorusParam& torus,
                          const OptimizeOptions& opt = {});

// Everything needed to optimize the dominant part of one sequence.
struct DominantProblem {
    LrsModel model;
    NormalizedLrs normalized;
    RelationLattice lattice;
    TorusParam torus;
};

DominantProblem dominant_problem(const Lrr& lrr, const InitialConfig& c, unsigned height_bound = 64);

}  // namespace rlrs
