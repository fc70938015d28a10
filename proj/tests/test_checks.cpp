#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "htrig/bsplines.hpp"
#include "htrig/checks.hpp"

using namespace htrig;
using checks::CheckReport;
using checks::Options;

TEST_SUITE_BEGIN("checks");

TEST_CASE("generator sequence is pinned") {
    checks::Rng rng(42);
    CHECK(rng.uniform01() == 0.75515553295453897);
    CHECK(rng.uniform01() == 0.63903139385469743);
    checks::Rng again(42);
    CHECK(again.uniform(2.0, 4.0) == 2.0 + 2.0 * 0.75515553295453897);
}

TEST_CASE("residual accumulator promotes NaN") {
    checks::ResidualStats s;
    s.add(0.5);
    s.add(std::nan(""));
    CHECK(s.cases == 2);
    CHECK(std::isnan(s.max_residual));
}

TEST_CASE("suite registry") {
    CHECK(checks::suite_names().size() == 7);
    CHECK(checks::is_suite("trig-identities"));
    CHECK(checks::is_suite("integrals"));
    CHECK_FALSE(checks::is_suite("nonsense"));
    CHECK_THROWS_AS(checks::run_suite("nonsense", HParam(1.0)), std::invalid_argument);
}

TEST_CASE("all suites pass at moderate sample counts") {
    const HParam p(1.0);
    Options opt;
    opt.samples = 200;
    for (const std::string& name : checks::suite_names()) {
        const CheckReport r = checks::run_suite(name, p, opt);
        CAPTURE(name);
        CHECK(r.passed);
        CHECK(r.suite == name);
        CHECK(r.h == 1.0);
        CHECK(r.seed == 42);
        CHECK(r.samples > 0);
        CHECK(r.max_residual < r.tol);
        CHECK(r.mean_residual <= r.max_residual);
    }
}

TEST_CASE("same seed reproduces bit for bit, different seed does not") {
    const HParam p(0.25);
    Options opt;
    opt.samples = 150;
    opt.seed = 7;
    const CheckReport a = checks::run_suite("dd-oracles", p, opt);
    const CheckReport b = checks::run_suite("dd-oracles", p, opt);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.mean_residual == b.mean_residual);
    CHECK(a.samples == b.samples);

    opt.seed = 8;
    const CheckReport c = checks::run_suite("dd-oracles", p, opt);
    CHECK(a.max_residual != c.max_residual);
}

TEST_CASE("tolerance override forces failure") {
    const HParam p(1.0);
    Options opt;
    opt.samples = 50;
    opt.tol = 1e-30;
    const CheckReport r = checks::run_suite("trig-identities", p, opt);
    CHECK_FALSE(r.passed);
    CHECK(r.tol == 1e-30);
}

TEST_CASE("integral checks are vacuous for negative h") {
    Options opt;
    opt.samples = 50;
    const CheckReport r = checks::run_suite("integrals", HParam(-0.5), opt);
    CHECK(r.samples == 0);
    CHECK(r.passed);
    CHECK(r.max_residual == 0.0);
}

TEST_CASE("evaluation and checking are safe to run concurrently") {
    const HParam p(1.0);
    Options opt;
    opt.samples = 60;

    const CheckReport expected = checks::run_suite("bspline-equiv", p, opt);
    const KnotVector kv({0.0, 0.7, 1.5, 2.4}, p);
    const double t_expected = eval_T(kv, {0, 3}, 1.1);

    std::vector<CheckReport> reports(4);
    std::vector<double> values(4);
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i) {
        pool.emplace_back([&, i] {
            reports[i] = checks::run_suite("bspline-equiv", p, opt);
            values[i] = eval_T(kv, {0, 3}, 1.1);
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (int i = 0; i < 4; ++i) {
        CHECK(reports[i].max_residual == expected.max_residual);
        CHECK(reports[i].samples == expected.samples);
        CHECK(values[i] == t_expected);
    }
}

TEST_SUITE_END();
