#include "rlrs/io.hpp"

#include <cmath>
#include <sstream>

namespace rlrs {

namespace {

struct QuestionName {
    Question q;
    const char* name;
};

constexpr QuestionName kQuestions[] = {
    {Question::exists_robust_positivity, "exists-robust-positivity"},
    {Question::exists_robust_skolem, "exists-robust-skolem"},
    {Question::exists_robust_ultpos, "exists-robust-ultpos"},
    {Question::robust_ultpos_open, "robust-ultpos-open"},
    {Question::eval, "eval"},
    {Question::roots, "roots"},
    {Question::torus, "torus"},
    {Question::mu, "mu"},
};

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InvalidInput(where + ": " + what); }

Rational rational_at(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(where, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(where, "expected a rational string \"p/q\"");
}

std::vector<Rational> rationals_at(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rational strings");
    std::vector<Rational> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(rational_at(j[i], where + "/" + std::to_string(i)));
    return out;
}

uint64_t count_at(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) return j.get<uint64_t>();
    if (j.is_number_integer() && j.get<long>() >= 0) return static_cast<uint64_t>(j.get<long>());
    if (j.is_number_float()) {
        double d = j.get<double>();
        if (d >= 0 && d == std::floor(d) && d < 1.8e19) return static_cast<uint64_t>(d);
    }
    fail(where, "expected a non-negative integer");
}

Json strings(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json int_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_string(x));
        rows.push_back(row);
    }
    return rows;
}

Json limits_json(const Limits& l) {
    Json j;
    j["tol"] = to_string(l.tol);
    j["prefix_cap"] = l.prefix_cap;
    j["horizon"] = l.horizon;
    j["height_bound"] = l.height_bound;
    j["digits"] = l.digits;
    return j;
}

int exit_code(Answer a) {
    switch (a) {
        case Answer::yes: return 0;
        case Answer::no: return 1;
        default: return 2;
    }
}

}  // namespace

const char* to_string(Question q) {
    for (const auto& e : kQuestions)
        if (e.q == q) return e.name;
    return "?";
}

std::optional<Question> question_from_string(const std::string& s) {
    for (const auto& e : kQuestions)
        if (s == e.name) return e.q;
    return std::nullopt;
}

bool needs_ball(Question q) { return q == Question::robust_ultpos_open; }

bool forbids_ball(Question q) {
    return q == Question::exists_robust_positivity || q == Question::exists_robust_skolem ||
           q == Question::exists_robust_ultpos;
}

Limits limits_from_json(const Json& j, Limits base) {
    if (!j.is_object()) fail("", "expected an object");
    if (j.contains("tol")) {
        base.tol = rational_at(j["tol"], "/tol");
        if (base.tol <= 0) fail("/tol", "tol > 0 required");
    }
    if (j.contains("prefix_cap")) base.prefix_cap = count_at(j["prefix_cap"], "/prefix_cap");
    if (j.contains("horizon")) base.horizon = count_at(j["horizon"], "/horizon");
    if (j.contains("height_bound")) {
        uint64_t h = count_at(j["height_bound"], "/height_bound");
        if (h == 0 || h > 1000000) fail("/height_bound", "height_bound must lie in [1, 10^6]");
        base.height_bound = static_cast<unsigned>(h);
    }
    if (j.contains("digits")) {
        uint64_t d = count_at(j["digits"], "/digits");
        if (d > 1000) fail("/digits", "digits must be at most 1000");
        base.digits = static_cast<int>(d);
    }
    return base;
}

ProblemSpec problem_from_json(const Json& j, const Limits& defaults) {
    if (!j.is_object()) fail("", "expected a JSON object");
    static const char* known[] = {"coeffs", "init", "ball", "question", "tol", "prefix_cap", "horizon", "height_bound",
                                  "digits"};
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) fail("/" + key, "unknown field");
    }
    ProblemSpec p;
    if (!j.contains("coeffs")) fail("/coeffs", "missing field");
    std::vector<Rational> coeffs = rationals_at(j["coeffs"], "/coeffs");
    try {
        p.lrr = make_lrr(std::move(coeffs));
    } catch (const InvalidInput& e) {
        fail("/coeffs", e.what());
    }
    if (!j.contains("init")) fail("/init", "missing field");
    p.init.entries = rationals_at(j["init"], "/init");
    if (p.init.entries.size() != p.lrr.order())
        fail("/init", "length " + std::to_string(p.init.entries.size()) + " differs from the order " +
                          std::to_string(p.lrr.order()));
    if (j.contains("question")) {
        if (!j["question"].is_string()) fail("/question", "expected a string");
        auto q = question_from_string(j["question"].get<std::string>());
        if (!q) fail("/question", "unknown question '" + j["question"].get<std::string>() + "'");
        p.question = *q;
    }
    if (j.contains("ball") && !j["ball"].is_null()) {
        const Json& b = j["ball"];
        if (!b.is_object()) fail("/ball", "expected an object");
        Ball ball;
        ball.center = p.init;
        if (b.contains("center")) {
            ball.center.entries = rationals_at(b["center"], "/ball/center");
            if (ball.center.entries.size() != p.lrr.order()) fail("/ball/center", "length differs from the order");
        }
        if (!b.contains("radius")) fail("/ball/radius", "missing field");
        ball.radius = rational_at(b["radius"], "/ball/radius");
        if (ball.radius <= 0) fail("/ball/radius", "radius > 0 required");
        std::string topo = b.value("topology", std::string("open"));
        if (topo == "open")
            ball.topology = Topology::open;
        else if (topo == "closed")
            ball.topology = Topology::closed;
        else
            fail("/ball/topology", "expected \"open\" or \"closed\"");
        p.ball = ball;
    }
    if (needs_ball(p.question) && !p.ball) fail("/ball", std::string(to_string(p.question)) + " requires a ball");
    if (forbids_ball(p.question) && p.ball)
        fail("/ball", std::string(to_string(p.question)) + " quantifies over balls and takes no ball");
    p.limits = limits_from_json(j, defaults);
    return p;
}

ProblemSpec parse_problem(const std::string& text, const Limits& defaults) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("byte " + std::to_string(e.byte) + ": malformed JSON (" + e.what() + ")");
    }
    try {
        return problem_from_json(j, defaults);
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("schema: ") + e.what());
    }
}

Json to_json(const ProblemSpec& p) {
    Json j;
    j["question"] = to_string(p.question);
    j["coeffs"] = strings(p.lrr.coeffs);
    j["init"] = strings(p.init.entries);
    if (p.ball) {
        Json b;
        b["center"] = strings(p.ball->center.entries);
        b["radius"] = to_string(p.ball->radius);
        b["topology"] = p.ball->topology == Topology::open ? "open" : "closed";
        j["ball"] = b;
    }
    Json lim = limits_json(p.limits);
    for (auto& [k, v] : lim.items()) j[k] = v;
    return j;
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
    auto same_ball = [](const std::optional<Ball>& x, const std::optional<Ball>& y) {
        if (x.has_value() != y.has_value()) return false;
        if (!x) return true;
        return x->center.entries == y->center.entries && x->radius == y->radius && x->topology == y->topology;
    };
    return a.question == b.question && a.lrr.coeffs == b.lrr.coeffs && a.init.entries == b.init.entries &&
           same_ball(a.ball, b.ball) && a.limits.tol == b.limits.tol && a.limits.prefix_cap == b.limits.prefix_cap &&
           a.limits.horizon == b.limits.horizon && a.limits.height_bound == b.limits.height_bound &&
           a.limits.digits == b.limits.digits;
}

Json to_json(const RealInterval& x, int digits) {
    Json j;
    j["lo"] = to_decimal(x.lo(), digits);
    j["hi"] = to_decimal(x.hi(), digits);
    return j;
}

Json to_json(const AlgebraicNumber& a, int digits) {
    long bits = std::max<long>(8, static_cast<long>(std::ceil(digits * 3.33)));
    RootDisk d = refine_disk(a.poly(), a.disk(), bits);
    Json j;
    j["poly"] = strings(a.poly().coeffs());
    j["re"] = to_string(d.center.re);
    j["im"] = to_string(d.center.im);
    j["radius"] = to_string(d.radius);
    return j;
}

Json to_json(const SignOutcome& s, int digits) {
    Json j;
    j["verdict"] = to_string(s.verdict);
    j["enclosure"] = to_json(s.enclosure, digits);
    j["witness"] = {{"coset", s.witness_coset}, {"phi", strings(s.witness_phi)}};
    if (!s.certificate.empty()) j["certificate"] = s.certificate;
    j["tol_reached"] = to_string(s.tol_reached);
    j["boxes"] = s.boxes;
    return j;
}

Json to_json(const Certificate& c, int digits) {
    Json j;
    j["kind"] = c.kind;
    j["reason"] = c.reason;
    if (c.index) j["index"] = *c.index;
    if (c.value) j["value"] = to_string(*c.value);
    if (c.radius) j["radius"] = to_string(*c.radius);
    if (c.threshold) j["threshold"] = *c.threshold;
    if (c.tail_margin) j["tail_margin"] = to_string(*c.tail_margin);
    if (c.ball_constant) j["ball_constant"] = to_string(*c.ball_constant);
    if (c.outcome) j["outcome"] = to_json(*c.outcome, digits);
    return j;
}

Json to_json(const RelationLattice& l) {
    Json j;
    j["k"] = l.k;
    j["generators"] = int_matrix(l.generators);
    j["height_bound"] = l.height_bound;
    j["complete"] = l.complete;
    return j;
}

Json to_json(const TorusParam& t, int digits) {
    Json j;
    j["k"] = t.k;
    j["relations"] = int_matrix(t.relations);
    j["free_rank"] = t.free_rank;
    j["embedding"] = int_matrix(t.embedding);
    Json cosets = Json::array();
    for (size_t c = 0; c < t.finite_part.size(); ++c) {
        Json pts = Json::array();
        for (const auto& z : t.finite_point(c)) pts.push_back(to_json(z, digits));
        cosets.push_back({{"turns", strings(t.finite_part[c])}, {"points", pts}});
    }
    j["cosets"] = cosets;
    return j;
}

Json to_json(const SpectralData& s, int digits) {
    Json j;
    j["coeffs"] = strings(s.lrr.coeffs);
    j["characteristic"] = strings(s.lrr.characteristic().coeffs());
    Json roots = Json::array();
    for (size_t i = 0; i < s.roots.size(); ++i) {
        const RootEntry& r = s.roots[i];
        Json e;
        e["gamma"] = to_json(r.gamma, digits);
        e["multiplicity"] = r.multiplicity;
        e["modulus_class"] = r.modulus_class;
        e["dominant"] = r.modulus_class == 0;
        for (size_t k = 0; k < s.dominant.size(); ++k)
            if (s.dominant[k] == i) {
                unsigned ord = root_of_unity_order(s.unit(k));
                if (ord) e["unit_root_of_unity_order"] = ord;
            }
        roots.push_back(e);
    }
    j["roots"] = roots;
    j["rho"] = to_json(s.rho, digits);
    j["m"] = s.m;
    return j;
}

Json to_json(const LEstimate& e, int digits) {
    Json j;
    j["ell_min"] = to_string(e.ell_min);
    j["ell_max"] = to_string(e.ell_max);
    j["ell_min_decimal"] = to_decimal(e.ell_min, digits);
    j["ell_max_decimal"] = to_decimal(e.ell_max, digits);
    j["horizon"] = e.horizon;
    j["probes"] = e.probes;
    j["certificate"] = e.certificate;
    return j;
}

Json to_json(const HardnessParams& h, int digits) {
    Json j;
    j["p"] = to_string(h.angle.p);
    if (h.angle.q) j["q"] = to_string(*h.angle.q);
    j["qprime"] = to_string(h.qprime);
    j["eps"] = to_string(h.eps);
    j["psi"] = to_string(h.psi);
    j["alpha0"] = to_string(h.alpha0);
    j["alpha0_decimal"] = to_decimal(h.alpha0, digits);
    j["n1"] = h.n1;
    j["tau1"] = to_string(h.tau1);
    j["n2"] = h.n2;
    Json bad = Json::array();
    for (const auto& s : check_params(h)) bad.push_back(s);
    j["violated"] = bad;
    return j;
}

std::string terms_csv(const Lrr& lrr, const InitialConfig& c, uint64_t n_max) {
    std::ostringstream os;
    os << "n,u_n\n";
    auto u = eval_terms(lrr, c, n_max);
    for (uint64_t n = 0; n <= n_max; ++n) os << n << ',' << to_string(u[n]) << '\n';
    return os.str();
}

Report run(const ProblemSpec& spec) {
    const int digits = spec.limits.digits;
    Report r;
    Json& b = r.body;
    b["question"] = to_string(spec.question);
    DecideOptions o;
    o.opt.tol = spec.limits.tol;
    o.prefix_cap = spec.limits.prefix_cap;
    o.height_bound = spec.limits.height_bound;
    Json prov;
    prov["library"] = "rlrs 1.0";
    prov["limits"] = limits_json(spec.limits);

    auto decide = [&](const Decision& d) {
        b["verdict"] = to_string(d.verdict);
        b["certificate"] = to_json(d.certificate, digits);
        r.exit_code = exit_code(d.verdict);
    };
    auto lattice_flag = [&]() {
        DominantProblem dp = dominant_problem(spec.lrr, spec.init, spec.limits.height_bound);
        prov["lattice_complete"] = dp.lattice.complete;
    };

    switch (spec.question) {
        case Question::exists_robust_positivity:
            decide(exists_robust_positivity(spec.lrr, spec.init, o));
            lattice_flag();
            break;
        case Question::exists_robust_skolem:
            decide(exists_robust_skolem(spec.lrr, spec.init, o));
            lattice_flag();
            break;
        case Question::exists_robust_ultpos:
            decide(exists_robust_ultimate_positivity(spec.lrr, spec.init, o));
            lattice_flag();
            break;
        case Question::robust_ultpos_open: {
            decide(robust_nonuniform_ultpos_open_ball(spec.lrr, *spec.ball, o));
            DominantProblem dp = dominant_problem(spec.lrr, spec.ball->center, spec.limits.height_bound);
            prov["lattice_complete"] = dp.lattice.complete;
            break;
        }
        case Question::eval: {
            auto u = eval_terms(spec.lrr, spec.init, spec.limits.horizon);
            Json rows = Json::array();
            for (const auto& x : u) rows.push_back(to_string(x));
            b["terms"] = rows;
            break;
        }
        case Question::roots:
            b["spectral"] = to_json(spectral(spec.lrr), digits);
            break;
        case Question::torus: {
            DominantProblem dp = dominant_problem(spec.lrr, spec.init, spec.limits.height_bound);
            b["lattice"] = to_json(dp.lattice);
            b["parametrization"] = to_json(dp.torus, digits);
            prov["lattice_complete"] = dp.lattice.complete;
            break;
        }
        case Question::mu: {
            DominantProblem dp = dominant_problem(spec.lrr, spec.init, spec.limits.height_bound);
            SignOutcome m = mu(dp.normalized.dominant(), dp.torus, o.opt);
            SignOutcome n = nu(dp.normalized.dominant(), dp.torus, o.opt);
            b["mu"] = to_json(m, digits);
            b["mu"]["witness"]["theta"] = strings(dp.torus.turns(m.witness_coset, m.witness_phi));
            b["nu"] = to_json(n, digits);
            b["nu"]["witness"]["theta"] = strings(dp.torus.turns(n.witness_coset, n.witness_phi));
            prov["lattice_complete"] = dp.lattice.complete;
            break;
        }
    }
    b["provenance"] = prov;
    return r;
}

}  // namespace rlrs
