#include "doctest.h"
#include "rlrs/io.hpp"

using namespace rlrs;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("problem parsing") {
    ProblemSpec p = parse_problem(R"({"coeffs":["1","1"],"init":["1","1"],"question":"exists-robust-positivity"})");
    CHECK(p.lrr.coeffs == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(p.question == Question::exists_robust_positivity);
    CHECK(!p.ball);

    ProblemSpec b = parse_problem(
        R"({"coeffs":["-1","4"],"init":["1/2","0"],"ball":{"radius":"1/10","topology":"closed"},"question":"robust-ultpos-open","tol":"1/1024"})");
    REQUIRE(b.ball);
    CHECK(b.ball->radius == Rational(1, 10));
    CHECK(b.ball->center.entries == b.init.entries);
    CHECK(b.ball->topology == Topology::closed);
    CHECK(b.limits.tol == Rational(1, 1024));

    CHECK(error_of(R"({"coeffs":["0","1"],"init":["1","1"]})").find("a_0") != std::string::npos);
    CHECK(error_of(R"({"coeffs":["1"],"init":["1"],"ball":{"radius":"-1/2"},"question":"robust-ultpos-open"})")
              .find("radius > 0") != std::string::npos);
    CHECK(error_of(R"({"coeffs":["1","x/2"],"init":["1","1"]})").find("/coeffs/1") == 0);
    CHECK(error_of(R"({"coeffs":["1","1"],"init":["1"]})").find("/init") == 0);
    CHECK(error_of(R"({"coeffs":["1"],"init":["1"],"question":"robust-ultpos-open"})").find("requires a ball") !=
          std::string::npos);
    CHECK(error_of(R"({"coeffs":["1"],"init":["1"],"ball":{"radius":"1"}})").find("takes no ball") !=
          std::string::npos);
    CHECK(error_of(R"({"coeffs":["1"],"init":["1"],"colour":1})").find("/colour") == 0);
    CHECK(error_of(R"({"coeffs":["1"], "init":)").find("byte") == 0);
    CHECK(error_of(R"({"coeffs":["1"],"init":["1"],"ball":{"radius":"1","topology":3},"question":"robust-ultpos-open"})") !=
          "");
}

TEST_CASE("problem round trip") {
    for (const char* text :
         {R"({"coeffs":["1","1"],"init":["1","1"]})",
          R"({"coeffs":["-1","22/5","-231/25","292/25","-231/25","22/5"],"init":["1","0","0","0","0","-3/7"],"question":"mu","horizon":50})",
          R"({"coeffs":["2"],"init":["1"],"ball":{"center":["3/2"],"radius":"1/3"},"question":"robust-ultpos-open","digits":5})"}) {
        ProblemSpec p = parse_problem(text);
        std::string once = to_json(p).dump();
        ProblemSpec q = parse_problem(once);
        CHECK(p == q);
        CHECK(to_json(q).dump() == once);
    }
}

TEST_CASE("reports") {
    Report f = run(parse_problem(R"({"coeffs":["1","1"],"init":["1","1"],"question":"exists-robust-positivity"})"));
    CHECK(f.exit_code == 0);
    CHECK(f.body["verdict"] == "YES");
    CHECK(f.body["certificate"]["kind"] == "certified-radius");
    CHECK(f.body["provenance"]["lattice_complete"] == true);

    Report a = run(parse_problem(R"({"coeffs":["-1"],"init":["1"],"question":"exists-robust-ultpos"})"));
    CHECK(a.exit_code == 1);
    CHECK(a.body["certificate"]["outcome"]["verdict"] == "NEGATIVE");

    // Deterministic output.
    Report a2 = run(parse_problem(R"({"coeffs":["-1"],"init":["1"],"question":"exists-robust-ultpos"})"));
    CHECK(a.body.dump() == a2.body.dump());

    Report e = run(parse_problem(R"({"coeffs":["1","1"],"init":["0","1"],"question":"eval","horizon":20})"));
    CHECK(e.body["terms"].size() == 21);
    CHECK(e.body["terms"][20] == "6765");

    Report r = run(parse_problem(R"({"coeffs":["-1","4","-8","10","-8","4"],"init":["1","0","0","0","0","0"],"question":"roots"})"));
    CHECK(r.body["spectral"]["m"] == 1);
    CHECK(r.body["spectral"]["roots"].size() == 3);

    Report t = run(parse_problem(R"({"coeffs":["-1"],"init":["1"],"question":"torus"})"));
    CHECK(t.body["lattice"]["generators"][0][0] == "2");
}

TEST_CASE("term CSV") {
    std::string csv = terms_csv(make_lrr({Rational(1), Rational(1)}), InitialConfig{{Rational(0), Rational(1)}}, 20);
    CHECK(csv.rfind("n,u_n\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.find("\n20,6765\n") != std::string::npos);
}
