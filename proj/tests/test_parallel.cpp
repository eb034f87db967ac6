#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "urep/parallel.hpp"
#include "urep/suites.hpp"

using namespace urep;

// The OpenMP path and the serial reference path must produce identical output.

TEST_CASE("suite reports are identical serial vs parallel") {
    for (const char* name : {"ring", "section8", "boundary"}) {
        SuiteOptions serial_opt;
        serial_opt.parallel = false;
        SuiteOptions par_opt;
        par_opt.parallel = true;
        CHECK(run_suite(name, serial_opt).to_json() == run_suite(name, par_opt).to_json());
    }
}

TEST_CASE("main-theorem sweep is identical serial vs parallel") {
    SuiteOptions serial_opt;
    serial_opt.max_n = 2;
    serial_opt.parallel = false;
    SuiteOptions par_opt;
    par_opt.max_n = 2;
    par_opt.parallel = true;
    CHECK(run_suite_main_theorem(serial_opt).to_json() == run_suite_main_theorem(par_opt).to_json());
}

TEST_CASE("trajectory batches are identical serial vs parallel") {
    SimConfig cfg;
    cfg.p = quadruple_from_strings("1/2", "7/10", "1/2", "7/10");
    cfg.N = 2;
    cfg.nu0 = Signature({1, 0});
    cfg.horizon = 1.0;
    cfg.seed = 99;
    cfg.trajectories = 64;
    auto serial = simulate(cfg, false);
    auto parallel = simulate(cfg, true);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].points.size() == parallel[i].points.size());
        for (size_t j = 0; j < serial[i].points.size(); ++j) {
            CHECK(serial[i].points[j].first == parallel[i].points[j].first);
            CHECK(serial[i].points[j].second == parallel[i].points[j].second);
        }
    }
}

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), true, [&](size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
}
