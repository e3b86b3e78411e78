#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rlrs/io.hpp"

using namespace rlrs;

namespace {

constexpr int kInputError = 3;
constexpr int kInternalError = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Common {
    std::string problem, out, config, tol;
    uint64_t prefix_cap = 0, horizon = 0, height_bound = 0;
    int digits = -1;
};

void add_limits(CLI::App* app, Common& c) {
    app->add_option("--tol", c.tol, "optimizer tolerance (rational, default 2^-40)");
    app->add_option("--prefix-cap", c.prefix_cap, "largest prefix scanned exactly");
    app->add_option("--horizon", c.horizon, "number of terms or scan horizon");
    app->add_option("--height-bound", c.height_bound, "relation search height bound");
    app->add_option("--digits", c.digits, "decimal digits in reports");
    app->add_option("--out", c.out, "output file (default stdout)");
}

Limits base_limits(const Common& c) {
    Limits l;
    std::string path = c.config;
    if (path.empty())
        if (const char* env = std::getenv("RLRS_CONFIG")) path = env;
    if (!path.empty()) {
        Json j;
        try {
            j = Json::parse(slurp(path));
        } catch (const Json::parse_error& e) {
            throw InvalidInput(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
        }
        l = limits_from_json(j, l);
    }
    return l;
}

void apply_flags(const Common& c, Limits& l) {
    if (!c.tol.empty()) {
        l.tol = parse_rational(c.tol);
        if (l.tol <= 0) throw InvalidInput("--tol: tol > 0 required");
    }
    if (c.prefix_cap) l.prefix_cap = c.prefix_cap;
    if (c.horizon) l.horizon = c.horizon;
    if (c.height_bound) l.height_bound = static_cast<unsigned>(c.height_bound);
    if (c.digits >= 0) l.digits = c.digits;
}

ProblemSpec load(const Common& c, std::optional<Question> q) {
    if (c.problem.empty()) throw InvalidInput("--problem is required");
    std::string text = slurp(c.problem);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(c.problem + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    if (q && j.is_object()) j["question"] = to_string(*q);
    ProblemSpec spec;
    try {
        spec = problem_from_json(j, base_limits(c));
    } catch (const InvalidInput& e) {
        throw InvalidInput(c.problem + ": " + e.what());
    } catch (const Json::exception& e) {
        throw InvalidInput(c.problem + ": schema: " + e.what());
    }
    apply_flags(c, spec.limits);
    return spec;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(c.out, std::ios::binary);
    if (!o) throw InvalidInput("cannot write '" + c.out + "'");
    o << text;
}

void emit(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

struct AngleArgs {
    std::string p = "3/5", q;
};

void add_angle(CLI::App* app, AngleArgs& a) {
    app->add_option("--p", a.p, "cos(2 pi theta) as a rational")->capture_default_str();
    app->add_option("--q", a.q, "sin(2 pi theta) when rational");
}

std::optional<Rational> opt_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_rational(s);
}

UnitAngle angle_of(const AngleArgs& a) { return UnitAngle::make(parse_rational(a.p), opt_rational(a.q)); }

Json quadratic(const QuadraticNumber& x) {
    return {{"a", to_string(x.a)}, {"b", to_string(x.b)}, {"d", to_string(x.d)}, {"text", x.str()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rlrs: robust positivity and Skolem questions for rational linear recurrences"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--config", common.config, "JSON file with default limits (else $RLRS_CONFIG)");
    int code = 0;
    std::function<void()> action;

    auto problem_verb = [&](const std::string& name, const std::string& help, std::optional<Question> q) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("--problem", common.problem, "problem JSON file")->required();
        add_limits(s, common);
        s->callback([&, q] {
            action = [&, q] {
                Report r = run(load(common, q));
                emit(common, r.body);
                code = r.exit_code;
            };
        });
        return s;
    };

    CLI::App* decide = app.add_subcommand("decide", "decide a robustness question");
    decide->require_subcommand(1);
    for (const char* name : {"exists-robust-positivity", "exists-robust-skolem", "exists-robust-ultpos",
                             "robust-ultpos-open"}) {
        CLI::App* s = decide->add_subcommand(name, "");
        s->add_option("--problem", common.problem, "problem JSON file")->required();
        add_limits(s, common);
        Question q = *question_from_string(name);
        s->callback([&, q] {
            action = [&, q] {
                Report r = run(load(common, q));
                emit(common, r.body);
                code = r.exit_code;
            };
        });
    }

    CLI::App* eval = app.add_subcommand("eval", "exact terms u_0..u_horizon as CSV n,u_n");
    eval->add_option("--problem", common.problem, "problem JSON file")->required();
    add_limits(eval, common);
    eval->callback([&] {
        action = [&] {
            ProblemSpec spec = load(common, std::nullopt);
            emit(common, terms_csv(spec.lrr, spec.init, spec.limits.horizon));
        };
    });
    problem_verb("roots", "characteristic roots, multiplicities and dominant data", Question::roots);
    problem_verb("torus", "relation lattice and torus parametrization", Question::torus);
    problem_verb("mu", "certified min of the dominant part and of its absolute value", Question::mu);

    CLI::App* lab = app.add_subcommand("lab", "order-6 family constructions");
    lab->require_subcommand(1);

    AngleArgs angle;
    std::string z = "1", x = "0", y = "0", zres = "0", xres = "0", yres = "0", eps = "1/20", qprime = "1", psi;
    uint64_t n = 1, steps = 360;

    CLI::App* build = lab->add_subcommand("build", "recurrence of the family for p");
    add_angle(build, angle);
    build->add_option("--out", common.out);
    build->callback([&] {
        action = [&] {
            Lrr l = build_hardness_lrr(parse_rational(angle.p), opt_rational(angle.q));
            Json j;
            j["coeffs"] = Json::array();
            for (const auto& c : l.coeffs) j["coeffs"].push_back(to_string(c));
            j["characteristic"] = Json::array();
            Poly ch = l.characteristic();
            for (const auto& c : ch.coeffs()) j["characteristic"].push_back(to_string(c));
            emit(common, j);
        };
    });

    CLI::App* rot = lab->add_subcommand("rotation", "dominant-block map and its rotation checks");
    add_angle(rot, angle);
    rot->add_option("--out", common.out);
    rot->callback([&] {
        action = [&] {
            RotationCheck rc = rotation_check(parse_rational(angle.p), opt_rational(angle.q));
            Json m = Json::array();
            for (const auto& row : rc.M) {
                Json r = Json::array();
                for (const auto& e : row) r.push_back(quadratic(e));
                m.push_back(r);
            }
            emit(common, Json{{"M", m},
                              {"orthogonal", rc.orthogonal},
                              {"det_one", rc.det_one},
                              {"is_rotation", rc.is_rotation},
                              {"sixfold_identity", rc.sixfold_identity},
                              {"passed", rc.passed()}});
        };
    });

    CLI::App* cone = lab->add_subcommand("cone", "membership in z >= sqrt(x^2 + y^2)");
    cone->add_option("--z", z)->required();
    cone->add_option("--x", x)->required();
    cone->add_option("--y", y)->required();
    cone->add_option("--out", common.out);
    cone->callback([&] {
        action = [&] {
            ConeMembership c = cone_contains(parse_rational(z), parse_rational(x), parse_rational(y));
            emit(common, Json{{"contains", c.contains}, {"margin", to_json(c.margin, 30)}});
            code = c.contains ? 0 : 1;
        };
    });

    CLI::App* params = lab->add_subcommand("params", "constants psi, alpha0, n1, tau1, n2");
    add_angle(params, angle);
    params->add_option("--qprime", qprime, "ell = qprime / pi")->capture_default_str();
    params->add_option("--eps", eps)->capture_default_str();
    params->add_option("--out", common.out);
    params->callback([&] {
        action = [&] {
            emit(common, to_json(compute_params(angle_of(angle), parse_rational(qprime), parse_rational(eps)), 30));
        };
    });

    CLI::App* gadget = lab->add_subcommand("gadget", "exact checks of the ball gadget");
    add_angle(gadget, angle);
    gadget->add_option("--qprime", qprime)->capture_default_str();
    gadget->add_option("--eps", eps)->capture_default_str();
    gadget->add_option("--psi", psi, "override psi");
    uint64_t samples = 1000;
    gadget->add_option("--samples", samples)->capture_default_str();
    gadget->add_option("--out", common.out);
    gadget->callback([&] {
        action = [&] {
            HardnessParams hp = compute_params(angle_of(angle), parse_rational(qprime), parse_rational(eps));
            if (!psi.empty()) hp.psi = parse_rational(psi);
            BallGadget g = ball_gadget(hp, samples);
            Json c = Json::array();
            for (const auto& v : g.center) c.push_back(to_string(v));
            emit(common, Json{{"center", c},
                              {"radius2", to_string(g.radius2)},
                              {"distance_ok", g.distance_ok},
                              {"d_on_surface", g.d_on_surface},
                              {"samples", g.samples},
                              {"interior", g.interior},
                              {"passed", g.passed()}});
            code = g.passed() ? 0 : 1;
        };
    });

    CLI::App* approx = lab->add_subcommand("approx-L", "certified bracket for L up to a horizon");
    add_angle(approx, angle);
    approx->add_option("--eps", eps)->capture_default_str();
    uint64_t horizon = 100000;
    approx->add_option("--horizon", horizon)->capture_default_str();
    approx->add_option("--out", common.out);
    approx->callback([&] {
        action = [&] {
            UnitAngle a = angle_of(angle);
            LEstimate e = approximate_L(a, parse_rational(eps), horizon);
            Json j = to_json(e, 30);
            j["lagrange_prefix"] = to_json(lagrange_prefix(a, horizon), 30);
            emit(common, j);
        };
    });

    CLI::App* lagr = lab->add_subcommand("lagrange", "min over n <= N of n ||n theta||");
    add_angle(lagr, angle);
    lagr->add_option("--n", n)->required();
    lagr->add_option("--out", common.out);
    lagr->callback([&] { action = [&] { emit(common, Json{{"value", to_json(lagrange_prefix(angle_of(angle), n), 30)}}); }; });

    CLI::App* bt = lab->add_subcommand("ball-term", "closed-form minimum of u_n over the gadget ball");
    add_angle(bt, angle);
    bt->add_option("--n", n)->required();
    bt->add_option("--qprime", qprime)->capture_default_str();
    bt->add_option("--eps", eps)->capture_default_str();
    bt->add_option("--psi", psi, "override psi");
    bt->add_option("--out", common.out);
    bt->callback([&] {
        action = [&] {
            HardnessParams hp = compute_params(angle_of(angle), parse_rational(qprime), parse_rational(eps));
            if (!psi.empty()) hp.psi = parse_rational(psi);
            RealInterval v = hp.angle.q ? min_ball_term(n, hp) : min_ball_term_turns(n, hp);
            emit(common, Json{{"n", n}, {"psi", to_string(hp.psi)}, {"value", to_json(v, 30)}});
        };
    });

    CLI::App* cs = lab->add_subcommand("cone-section", "CSV angle,x,y,margin on the circle of radius z");
    cs->add_option("--z", z)->capture_default_str();
    cs->add_option("--steps", steps)->capture_default_str();
    cs->add_option("--out", common.out);
    cs->callback([&] { action = [&] { emit(common, cone_section_csv(parse_rational(z), static_cast<unsigned>(steps))); }; });

    CLI::App* ht = lab->add_subcommand("hyperplane-trace", "CSV n,angle,offset,cos,sin");
    add_angle(ht, angle);
    ht->add_option("--zres", zres)->capture_default_str();
    ht->add_option("--xres", xres)->capture_default_str();
    ht->add_option("--yres", yres)->capture_default_str();
    ht->add_option("--n", n)->required();
    ht->add_option("--out", common.out);
    ht->callback([&] {
        action = [&] {
            emit(common, hyperplane_trace_csv(angle_of(angle), parse_rational(zres), parse_rational(xres),
                                              parse_rational(yres), n));
        };
    });

    CLI::App* orb = lab->add_subcommand("orbit", "CSV n,angle,value,margin of the dominant part");
    add_angle(orb, angle);
    orb->add_option("--z", z)->capture_default_str();
    orb->add_option("--x", x)->capture_default_str();
    orb->add_option("--y", y)->capture_default_str();
    orb->add_option("--n", n)->required();
    orb->add_option("--out", common.out);
    orb->callback([&] {
        action = [&] {
            emit(common, orbit_csv(angle_of(angle), parse_rational(z), parse_rational(x), parse_rational(y), n));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    try {
        if (action) action();
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return code;
}
