#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "rlrs/decision.hpp"
#include "rlrs/hardness.hpp"

namespace rlrs {

using Json = nlohmann::ordered_json;

enum class Question {
    exists_robust_positivity,
    exists_robust_skolem,
    exists_robust_ultpos,
    robust_ultpos_open,
    eval,
    roots,
    torus,
    mu,
};

const char* to_string(Question q);
std::optional<Question> question_from_string(const std::string& s);
// Questions about a given ball (as opposed to some ball around init).
bool needs_ball(Question q);
bool forbids_ball(Question q);

struct Limits {
    Rational tol = pow2(-40);
    uint64_t prefix_cap = 1000000;
    uint64_t horizon = 20;
    unsigned height_bound = 64;
    int digits = 20;  // decimal rendering in reports
};

struct ProblemSpec {
    Lrr lrr;
    InitialConfig init;
    std::optional<Ball> ball;
    Question question = Question::exists_robust_positivity;
    Limits limits;
};

// Errors carry a JSON pointer ("/coeffs/2: ...") or a byte offset for syntax errors.
ProblemSpec parse_problem(const std::string& text, const Limits& defaults = {});
ProblemSpec problem_from_json(const Json& j, const Limits& defaults = {});
Json to_json(const ProblemSpec& p);
bool operator==(const ProblemSpec& a, const ProblemSpec& b);

// Overrides fields of `base` from a config object {tol, prefix_cap, horizon, height_bound, digits}.
Limits limits_from_json(const Json& j, Limits base = {});

Json to_json(const RealInterval& x, int digits);
Json to_json(const AlgebraicNumber& a, int digits);
Json to_json(const SignOutcome& s, int digits);
Json to_json(const Certificate& c, int digits);
Json to_json(const RelationLattice& l);
Json to_json(const TorusParam& t, int digits);
Json to_json(const SpectralData& s, int digits);
Json to_json(const LEstimate& e, int digits);
Json to_json(const HardnessParams& h, int digits);

// Runs a decision, spectral or torus question. Exit status: 0 YES, 1 NO, 2 UNKNOWN (0 for non-decisions).
struct Report {
    Json body;
    int exit_code = 0;
};

Report run(const ProblemSpec& spec);

// "n,u_n" rows for n = 0..n_max with exact values.
std::string terms_csv(const Lrr& lrr, const InitialConfig& c, uint64_t n_max);

}  // namespace rlrs
