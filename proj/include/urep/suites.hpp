#pragma once

#include <string>
#include <vector>

#include "urep/boundary.hpp"
#include "urep/markov.hpp"
#include "urep/operators.hpp"
#include "urep/orthopoly.hpp"

#include <nlohmann/json_fwd.hpp>

namespace urep {

struct Instance {
    std::string id;
    std::string params;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Instance> instances;
    int passed = 0;
    int failed = 0;

    void tally();
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    int max_n = 3;
    int max_m = 0;  // caps the m-sweeps of the orthogonal-polynomial suite; 0 = defaults
    Window window{-5, 5};
    std::vector<ParameterQuadruple> quadruples;  // empty: use default_quadruples()
    bool parallel = true;
    bool corrupt_rate = false;  // test hook: perturbs one rate in the first instance
};

/// Five rational and two Gaussian-rational quadruples, a mix of admissible
/// and non-admissible parameters.
std::vector<ParameterQuadruple> default_quadruples();

/// Full row comparison of the two intertwining products at lambda.
bool check_intertwining_rows(const ParameterQuadruple& p, size_t N, const Signature& lambda);

Report run_suite_main_theorem(const SuiteOptions& opt);
Report run_suite_intertwine(const SuiteOptions& opt);
Report run_suite_section8(const SuiteOptions& opt);
Report run_suite_section9(const SuiteOptions& opt);
Report run_suite_ring(const SuiteOptions& opt);
Report run_suite_boundary(const SuiteOptions& opt);

/// Dispatch by suite name ("main-theorem", "intertwine", "section8",
/// "section9", "ring", "boundary"); throws std::invalid_argument on unknown.
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace urep
