#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "mellin/report_io.hpp"

using namespace mellin;

namespace {

Report sample_report() {
    Report rep;
    rep.seed = 99;
    rep.wall_time_s = 1.5;
    CheckResult a;
    a.id = "zeta-bernoulli";
    a.params = "n=03 z=1.25";
    a.lhs = Complex{0.1234567890123456789, -2.0};
    a.rhs = Complex{0.1234567890123456, -2.0};
    a.abs_err = 7.9e-17;
    a.rel_err = 3.9e-17;
    a.pass = true;
    CheckResult b;
    b.id = "master";
    b.params = "f=1/(1+s) s=0.5";
    b.lhs = Complex{1.0};
    b.rhs = Complex{2.0};
    b.abs_err = 1.0;
    b.rel_err = 0.5;
    b.pass = false;
    b.note = "quote \" backslash \\ newline \n done";
    rep.results = {a, b};
    rep.n_pass = 1;
    rep.n_fail = 1;
    return rep;
}

}  // namespace

TEST_CASE("json output parses and round-trips every field") {
    Report rep = sample_report();
    auto j = nlohmann::json::parse(report_json(rep, true));
    CHECK(j["seed"] == 99);
    CHECK(j["n_pass"] == 1);
    CHECK(j["n_fail"] == 1);
    CHECK(j["wall_time_s"] == 1.5);
    REQUIRE(j["results"].size() == 2);
    const auto& r0 = j["results"][0];
    CHECK(r0["id"] == "zeta-bernoulli");
    CHECK(r0["params"] == "n=03 z=1.25");
    // %.17g is enough digits for binary64 round-trips
    CHECK(r0["lhs"]["re"].get<double>() == rep.results[0].lhs.real());
    CHECK(r0["lhs"]["im"].get<double>() == -2.0);
    CHECK(r0["abs_err"].get<double>() == 7.9e-17);
    CHECK(r0["pass"] == true);
    CHECK(r0["note"] == "");
    const auto& r1 = j["results"][1];
    CHECK(r1["pass"] == false);
    CHECK(r1["note"] == "quote \" backslash \\ newline \n done");
}

TEST_CASE("json keys are emitted in byte order") {
    std::string s = report_json(sample_report());
    CHECK(s.find("{\"n_fail\":") == 0);
    size_t npass = s.find("\"n_pass\":");
    size_t results = s.find("\"results\":");
    size_t seed = s.find("\"seed\":");
    size_t wall = s.find("\"wall_time_s\":");
    REQUIRE(npass != std::string::npos);
    REQUIRE(results != std::string::npos);
    REQUIRE(seed != std::string::npos);
    REQUIRE(wall != std::string::npos);
    CHECK(npass < results);
    CHECK(results < seed);
    CHECK(seed < wall);
    size_t abs_err = s.find("\"abs_err\":");
    size_t id = s.find("\"id\":");
    size_t lhs = s.find("\"lhs\":");
    size_t note = s.find("\"note\":");
    CHECK(abs_err < id);
    CHECK(id < lhs);
    CHECK(lhs < note);
}

TEST_CASE("timing is zeroed unless requested") {
    Report rep = sample_report();
    std::string without = report_json(rep);
    CHECK(without.find("\"wall_time_s\":0}") != std::string::npos);
    std::string with = report_json(rep, true);
    CHECK(with.find("\"wall_time_s\":1.5}") != std::string::npos);
    // identical runs, identical bytes
    CHECK(report_json(rep) == report_json(sample_report()));
}

TEST_CASE("live reports are byte-deterministic") {
    RunConfig rc;
    rc.seed = 7;
    rc.samples = 2;
    std::string s1 = report_json(run_all(rc));
    std::string s2 = report_json(run_all(rc));
    CHECK(s1 == s2);
    // wall time varies between runs but is suppressed without timing
    CHECK(s1.find("\"wall_time_s\":0}") != std::string::npos);
}

TEST_CASE("csv output has the documented header and quoting") {
    Report rep = sample_report();
    std::string csv = report_csv(rep);
    CHECK(csv.rfind(
              "id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,note"
              "\n",
              0) == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    // header + two rows + the newline embedded in the second row's note
    CHECK(lines == 4);
    // params with a comma inside must be quoted, quotes doubled
    CHECK(csv.find("\"f=1/(1+s) s=0.5\"") == std::string::npos);  // no comma here
    Report rep2;
    rep2.seed = 1;
    CheckResult c;
    c.id = "x";
    c.params = "a,b";
    c.note = "said \"hi\"";
    rep2.results = {c};
    rep2.n_fail = 1;
    std::string csv2 = report_csv(rep2);
    CHECK(csv2.find("\"a,b\"") != std::string::npos);
    CHECK(csv2.find("\"said \"\"hi\"\"\"") != std::string::npos);
}

TEST_CASE("plain output marks failures and totals") {
    Report rep = sample_report();
    std::string plain = report_plain(rep);
    CHECK(plain.find("pass  zeta-bernoulli") != std::string::npos);
    CHECK(plain.find("FAIL  master") != std::string::npos);
    CHECK(plain.find("1 passed, 1 failed, seed 99") != std::string::npos);
    CHECK(plain.find(" s\n") == std::string::npos);
    std::string timed = report_plain(rep, true);
    CHECK(timed.find("1.500 s") != std::string::npos);
}
