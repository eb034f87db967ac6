// Times the OpenMP path of the sweep/trajectory kernels against the serial
// reference path. Both produce identical output (asserted in test_parallel);
// this target reports the wall-clock difference.

#include <chrono>
#include <cstdio>

#include "urep/parallel.hpp"
#include "urep/suites.hpp"

using namespace urep;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());

    {
        SuiteOptions serial_opt;
        serial_opt.parallel = false;
        SuiteOptions par_opt;
        double s = time_ms([&] { run_suite_main_theorem(serial_opt); });
        double p = time_ms([&] { run_suite_main_theorem(par_opt); });
        row("main-theorem sweep", s, p);
    }
    {
        SuiteOptions serial_opt;
        serial_opt.parallel = false;
        SuiteOptions par_opt;
        double s = time_ms([&] { run_suite_intertwine(serial_opt); });
        double p = time_ms([&] { run_suite_intertwine(par_opt); });
        row("intertwine sweep", s, p);
    }
    {
        SuiteOptions serial_opt;
        serial_opt.parallel = false;
        SuiteOptions par_opt;
        double s = time_ms([&] { run_suite_section9(serial_opt); });
        double p = time_ms([&] { run_suite_section9(par_opt); });
        row("orthogonal-polynomial sweep", s, p);
    }
    {
        SimConfig cfg;
        cfg.p = quadruple_from_strings("1/2", "7/10", "1/2", "7/10");
        cfg.N = 1;
        cfg.nu0 = Signature({0});
        cfg.horizon = 0.05;
        cfg.seed = 1;
        cfg.trajectories = 200000;
        double s = time_ms([&] { simulate(cfg, false); });
        double p = time_ms([&] { simulate(cfg, true); });
        row("200k trajectories (N=1)", s, p);
    }
    return 0;
}
