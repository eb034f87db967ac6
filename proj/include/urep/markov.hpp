#pragma once

#include <iosfwd>
#include <vector>

#include "urep/operators.hpp"

#include <nlohmann/json_fwd.hpp>

namespace urep {

struct Admissibility {
    bool admissible = false;
    std::string reason;  // violated condition when not admissible
};

/// A quadruple is admissible when both pairs lie in the set Z (complex
/// conjugate non-integers, or real non-integers sharing an open unit
/// interval) and the parameter sum exceeds -1.
Admissibility classify_admissible(const ParameterQuadruple& p);

/// One row of the generator matrix on GT_N: off-diagonal entries
/// Dim(nu±e_i)/Dim(nu) * r(nu, nu±e_i) over valid neighbors, diagonal minus
/// their sum.
struct GeneratorRow {
    Signature state;
    std::map<Signature, GRat> entries;  // includes the diagonal
};

GeneratorRow generator_row(const ParameterQuadruple& p, size_t N, const Signature& nu);

/// One row of the canonical stochastic link GT_{N+1} -> GT_N:
/// Dim(mu)/Dim(lambda) over interlacing mu.
struct LinkRow {
    Signature state;
    std::map<Signature, Rat> entries;
};

LinkRow link_row(size_t N, const Signature& lambda);

/// Entrywise identity (D_{N+1} Link)(lambda, mu) = (Link D_N)(lambda, mu);
/// holds for arbitrary complex parameters.
bool check_intertwining(const ParameterQuadruple& p, size_t N, const Signature& lambda,
                        const Signature& mu);

struct SimConfig {
    ParameterQuadruple p;
    size_t N = 1;
    Signature nu0;
    double horizon = 1.0;
    uint64_t seed = 0;
    uint64_t trajectories = 1;
    uint64_t max_jumps = 10'000'000;  // runaway guard; non-explosion is a theorem
};

struct Trajectory {
    std::vector<std::pair<double, Signature>> points;  // (jump time, state), first entry t=0
    bool truncated = false;                            // hit the jump cap before the horizon
};

/// Exact-rate jump-chain simulation of one trajectory. Rates are computed as
/// exact rationals and converted to double only inside the sampler.
/// Deterministic given (config.seed, trajectory_index).
Trajectory simulate_one(const SimConfig& cfg, uint64_t trajectory_index);

/// Batch simulation; parallelizes across trajectories when parallel is set,
/// with identical output either way.
std::vector<Trajectory> simulate(const SimConfig& cfg, bool parallel = false);

void write_trajectories_csv(std::ostream& os, const SimConfig& cfg,
                            const std::vector<Trajectory>& trajs);

SimConfig sim_config_from_json(const nlohmann::json& j);
nlohmann::json sim_config_to_json(const SimConfig& cfg);

}  // namespace urep
