#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mellin/identities.hpp"

using namespace mellin;

TEST_CASE("generator reproduces its frozen reference stream") {
    // cross-platform reproducibility contract: these exact values
    Lcg a(42);
    CHECK(a.next() == 10481999410520546993ULL);
    CHECK(a.next() == 4159066171780167020ULL);
    CHECK(a.next() == 7615522811268512075ULL);
    CHECK(a.next() == 11628791489956661374ULL);
    Lcg b(42);
    CHECK(b.uniform() == 0.5682303266439076);
    CHECK(b.uniform() == 0.2254634289477513);
    CHECK(b.uniform() == 0.41283831882951183);
    CHECK(b.uniform() == 0.6303980498395979);
}

TEST_CASE("generator ranges are honored") {
    Lcg rng(9);
    std::set<int> seen;
    for (int k = 0; k < 400; ++k) {
        int v = rng.uniform_int(0, 3);
        REQUIRE(v >= 0);
        REQUIRE(v <= 3);
        seen.insert(v);
        double u = rng.uniform(2.0, 5.0);
        REQUIRE(u >= 2.0);
        REQUIRE(u < 5.0);
    }
    CHECK(seen.size() == 4);
    CHECK(rng.uniform_int(5, 5) == 5);
}

TEST_CASE("string hash matches the published test vectors") {
    CHECK(detail::fnv1a64("") == 14695981039346656037ULL);
    CHECK(detail::fnv1a64("a") == 12638187200555641996ULL);
    CHECK(detail::fnv1a64("zeta-bernoulli") != detail::fnv1a64("zeta-mellin"));
}

TEST_CASE("registry is complete, unique, and ordered") {
    const auto& reg = identity_registry();
    CHECK(reg.size() == 12);
    std::set<std::string> ids;
    for (const auto& spec : reg) {
        ids.insert(spec.id);
        CHECK(!spec.statement.empty());
        CHECK(!spec.lhs_calls.empty());
        CHECK(!spec.rhs_calls.empty());
        CHECK(spec.tol_rel > 0.0);
        CHECK(spec.tol_abs > 0.0);
    }
    CHECK(ids.size() == reg.size());
    for (size_t k = 1; k < reg.size(); ++k)
        CHECK(reg[k - 1].id < reg[k].id);  // byte-order sorted
}

TEST_CASE("each identity's two routes share no entry points") {
    for (const auto& spec : identity_registry()) {
        std::set<std::string> lhs(spec.lhs_calls.begin(), spec.lhs_calls.end());
        for (const auto& fn : spec.rhs_calls) {
            INFO(spec.id << " shares " << fn);
            CHECK(lhs.count(fn) == 0);
        }
    }
}

TEST_CASE("unknown identity names are rejected") {
    CHECK_THROWS_AS(find_identity("nope"), UnknownIdentity);
    RunConfig rc;
    CHECK_THROWS_AS(run_identity("nope", rc), UnknownIdentity);
    CHECK_NOTHROW(find_identity("zeta-bernoulli"));
}

TEST_CASE("identity runs are deterministic in the seed") {
    RunConfig rc;
    rc.seed = 77;
    rc.samples = 5;
    auto r1 = run_identity("zeta-bernoulli", rc);
    auto r2 = run_identity("zeta-bernoulli", rc);
    REQUIRE(r1.size() == 5);
    REQUIRE(r2.size() == 5);
    for (size_t k = 0; k < r1.size(); ++k) {
        CHECK(r1[k].params == r2[k].params);
        CHECK(r1[k].lhs == r2[k].lhs);
        CHECK(r1[k].rhs == r2[k].rhs);
        CHECK(r1[k].abs_err == r2[k].abs_err);
    }
    rc.seed = 78;
    auto r3 = run_identity("zeta-bernoulli", rc);
    bool any_different = false;
    for (size_t k = 0; k < r1.size(); ++k)
        if (r3[k].params != r1[k].params) any_different = true;
    CHECK(any_different);
}

TEST_CASE("results come back sorted by their parameter strings") {
    RunConfig rc;
    rc.seed = 5;
    rc.samples = 8;
    auto rs = run_identity("eta-euler-poly", rc);
    for (size_t k = 1; k < rs.size(); ++k)
        CHECK(rs[k - 1].params <= rs[k].params);
}

TEST_CASE("every registered identity passes a seeded sweep") {
    RunConfig rc;
    rc.seed = 20260815;
    rc.samples = 3;
    Report rep = run_all(rc);
    CHECK(rep.seed == rc.seed);
    CHECK(rep.n_pass == int(identity_registry().size()) * rc.samples);
    CHECK(rep.n_fail == 0);
    CHECK(int(rep.results.size()) == rep.n_pass + rep.n_fail);
    for (const auto& r : rep.results) {
        INFO(r.id << " " << r.params << " note: " << r.note);
        CHECK(r.pass);
        CHECK(r.note.empty());
    }
    // block order follows the registry
    size_t idx = 0;
    for (const auto& spec : identity_registry())
        for (int k = 0; k < rc.samples; ++k)
            CHECK(rep.results[idx++].id == spec.id);
}

TEST_CASE("tolerance overrides reach the comparison") {
    RunConfig rc;
    rc.samples = 2;
    rc.tol_rel = -1.0;  // impossible: every check must fail
    rc.tol_abs = -1.0;
    auto rs = run_identity("zeta-bernoulli", rc);
    for (const auto& r : rs) CHECK(!r.pass);
}

TEST_CASE("throwing evaluations become failing results, not aborts") {
    IdentitySpec spec;
    spec.id = "always-throws";
    spec.statement = "for testing";
    spec.lhs_calls = {"x"};
    spec.rhs_calls = {"y"};
    spec.tol_rel = 1e-8;
    spec.tol_abs = 1e-10;
    spec.draw = [](Lcg& rng) {
        double v = rng.uniform();
        return DrawnCase{detail::fmt_params("v=%.17g", v), [v]() {
                             throw DomainError("synthetic failure");
                             return std::pair{Complex{v}, Complex{v}};
                         }};
    };
    RunConfig rc;
    rc.samples = 3;
    auto rs = run_identity(spec, rc);
    REQUIRE(rs.size() == 3);
    for (const auto& r : rs) {
        CHECK(!r.pass);
        CHECK(r.note == "synthetic failure");
    }
}
