#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "urep/boundary.hpp"
#include "urep/markov.hpp"
#include "urep/orthopoly.hpp"
#include "urep/suites.hpp"

using namespace urep;

namespace {

Signature parse_signature(const std::string& s) {
    std::vector<long long> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(std::stoll(item));
    return Signature(std::move(parts));
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(rat_from_string(item));
    return out;
}

Window parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("window format is lo:hi");
    return Window(std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1)));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

int cmd_verify(const std::string& suite, int max_n, int max_m, const std::string& window_str,
               bool serial, bool corrupt, const std::string& zs, const std::string& zps,
               const std::string& ws, const std::string& wps, const std::string& out_path) {
    SuiteOptions opt;
    opt.max_n = max_n;
    opt.max_m = max_m;
    opt.window = parse_window(window_str);
    opt.parallel = !serial;
    opt.corrupt_rate = corrupt;
    if (!zs.empty()) opt.quadruples = {quadruple_from_strings(zs, zps, ws, wps)};
    Report rep = run_suite(suite, opt);
    emit(rep.to_json().dump(2) + "\n", out_path);
    return rep.failed == 0 ? 0 : 1;
}

int cmd_simulate(const SimConfig& cfg, bool serial, const std::string& out_path) {
    Admissibility adm = classify_admissible(cfg.p);
    std::vector<Trajectory> trajs;
    try {
        trajs = simulate(cfg, !serial);
    } catch (const std::domain_error& e) {
        std::cerr << "simulate: " << (adm.admissible ? e.what() : adm.reason) << "\n";
        return 2;
    }
    std::ostringstream csv;
    write_trajectories_csv(csv, cfg, trajs);
    emit(csv.str(), out_path);

    uint64_t jumps = 0, truncated = 0;
    std::map<Signature, uint64_t> finals;
    for (const auto& t : trajs) {
        jumps += t.points.size() - 1;
        truncated += t.truncated ? 1 : 0;
        finals[t.points.back().second] += 1;
    }
    std::cerr << "trajectories=" << trajs.size() << " jumps=" << jumps
              << " truncated=" << truncated << "\n";
    for (const auto& [s, c] : finals)
        if (c * 20 >= trajs.size()) std::cerr << "final " << sig_to_string(s) << ": " << c << "\n";
    if (cfg.N == 1 && cfg.horizon > 0 && trajs.size() >= 100) {
        // empirical generator read-off for the indicator of each neighbor state
        for (int delta : {+1, -1}) {
            auto nb = cfg.nu0.neighbor(0, delta);
            if (!nb) continue;
            double count = 0;
            for (const auto& t : trajs) count += t.points.back().second == *nb ? 1 : 0;
            double rate_hat = count / static_cast<double>(trajs.size()) / cfg.horizon;
            GRat exact = jump_rate(cfg.p, 1, cfg.nu0, *nb);
            std::cerr << "rate to " << sig_to_string(*nb) << ": empirical " << rate_hat
                      << " exact " << exact.re.get_d() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representation-ring toolkit: exact verification suites, jump-chain simulation, evaluators"};
    app.require_subcommand(1);

    std::string zs = "1/2", zps = "7/10", ws = "1/2", wps = "7/10";
    std::string window_str = "-5:5";
    std::string out_path;
    bool serial = false;

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite and report JSON");
    std::string suite;
    int max_n = 3;
    int max_m = 0;
    bool corrupt = false;
    std::string vz, vzp, vw, vwp;
    verify->add_option("suite", suite, "one of: main-theorem, intertwine, section8, section9, ring, boundary")
        ->required();
    verify->add_option("--N", max_n, "largest signature length in sweeps");
    verify->add_option("--m", max_m, "cap on variable counts in the orthogonal-polynomial suite");
    verify->add_option("--window", window_str, "truncation window lo:hi");
    verify->add_option("--z", vz, "override z (uses the single given quadruple)");
    verify->add_option("--z2", vzp, "override z'");
    verify->add_option("--w", vw, "override w");
    verify->add_option("--w2", vwp, "override w'");
    verify->add_flag("--serial", serial, "disable the worker pool");
    verify->add_flag("--corrupt-rate", corrupt, "test hook: corrupt one rate and expect failure");
    verify->add_option("--out", out_path, "write the JSON report to a file");

    // simulate
    auto* sim = app.add_subcommand("simulate", "exact jump-chain simulation, CSV trajectories");
    std::string nu0_str = "0";
    std::string config_path;
    SimConfig cfg;
    sim->add_option("--z", zs, "z as p/q");
    sim->add_option("--z2", zps, "z' as p/q");
    sim->add_option("--w", ws, "w as p/q");
    sim->add_option("--w2", wps, "w' as p/q");
    sim->add_option("--N", cfg.N, "signature length");
    sim->add_option("--nu0", nu0_str, "start state, comma separated");
    sim->add_option("--horizon", cfg.horizon, "time horizon");
    sim->add_option("--trajectories", cfg.trajectories, "number of trajectories");
    sim->add_option("--seed", cfg.seed, "base seed; trajectory i uses stream (seed, i)");
    sim->add_option("--config", config_path, "read the whole configuration from a JSON file");
    sim->add_flag("--serial", serial, "simulate on one thread");
    sim->add_option("--out", out_path, "write CSV to a file instead of stdout");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one quantity exactly");
    std::string what, lambda_str, mu_str, nu_str, beta_plus_str, beta_minus_str, alpha_plus_str,
        mode = "exact";
    long long en = 0;
    long long eM = 4;
    size_t eN = 1;
    std::string ea = "0", eb = "0", tol = "0";
    eval->add_option("what", what, "one of: lr, jacobi, hahn, link, phi-hat, sigma-hat")->required();
    eval->add_option("--lambda", lambda_str, "signature, comma separated");
    eval->add_option("--mu", mu_str, "signature, comma separated");
    eval->add_option("--nu", nu_str, "signature, comma separated");
    eval->add_option("--n", en, "index / degree");
    eval->add_option("--a", ea, "parameter a as p/q");
    eval->add_option("--b", eb, "parameter b as p/q");
    eval->add_option("--M", eM, "lattice size for the Hahn family");
    eval->add_option("--N", eN, "source level for link rows (lambda has length N)");
    eval->add_option("--beta-plus", beta_plus_str, "comma separated rationals");
    eval->add_option("--beta-minus", beta_minus_str, "comma separated rationals");
    eval->add_option("--alpha-plus", alpha_plus_str, "comma separated rationals");
    eval->add_option("--window", window_str, "window lo:hi");
    eval->add_option("--mode", mode, "exact | float");
    eval->add_option("--tol", tol, "tolerance for truncated factor expansions");
    eval->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(suite, max_n, max_m, window_str, serial, corrupt, vz, vzp, vw, vwp,
                              out_path);

        if (sim->parsed()) {
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw std::invalid_argument("cannot read config: " + config_path);
                nlohmann::json j;
                f >> j;
                cfg = sim_config_from_json(j);
            } else {
                cfg.p = quadruple_from_strings(zs, zps, ws, wps);
                cfg.nu0 = parse_signature(nu0_str);
            }
            return cmd_simulate(cfg, serial, out_path);
        }

        // eval
        std::ostringstream out;
        if (what == "lr") {
            out << lr_coefficient(parse_signature(lambda_str), parse_signature(mu_str),
                                  parse_signature(nu_str)).get_str()
                << "\n";
        } else if (what == "jacobi") {
            out << jacobi_poly(en, rat_from_string(ea), rat_from_string(eb)).to_string("t") << "\n";
        } else if (what == "hahn") {
            out << hahn_poly(en, HahnJacobiParams{rat_from_string(ea), rat_from_string(eb), eM})
                       .to_string("y")
                << "\n";
        } else if (what == "link") {
            if (eN < 1) throw std::invalid_argument("link rows need --N >= 1 (rows of the link from level N)");
            LinkRow row = link_row(eN - 1, parse_signature(lambda_str));
            out << "mu,value\n";
            for (const auto& [mu, v] : row.entries)
                out << "\"" << sig_to_string(mu) << "\"," << rat_to_string(v) << "\n";
        } else if (what == "phi-hat" || what == "sigma-hat") {
            BoundaryPoint omega;
            omega.beta_plus = parse_rat_list(beta_plus_str);
            omega.beta_minus = parse_rat_list(beta_minus_str);
            omega.alpha_plus = parse_rat_list(alpha_plus_str);
            for (const Rat& r : omega.beta_plus) omega.delta_plus += r;
            for (const Rat& r : omega.alpha_plus) omega.delta_plus += r;
            for (const Rat& r : omega.beta_minus) omega.delta_minus += r;
            Window w = parse_window(window_str);
            if (mode == "float") {
                double t = std::stod(tol.empty() || tol == "0" ? "1e-12" : tol);
                double v = what == "phi-hat" ? phi_hat_approx(omega, en, w, t)
                                             : sigma_hat_approx(omega, parse_signature(lambda_str), w, t);
                out << v << " (float, tol " << t << ")\n";
            } else if (what == "phi-hat") {
                ScalarResult r = phi_hat(omega, en, w, rat_from_string(tol));
                out << rat_to_string(r.value);
                if (!r.exact()) out << " (tail bound " << rat_to_string(r.err) << ")";
                out << "\n";
            } else {
                ScalarResult r = sigma_hat(omega, parse_signature(lambda_str), w);
                out << rat_to_string(r.value) << "\n";
            }
        } else {
            std::cerr << "unknown eval target: " << what << "\n";
            return 2;
        }
        emit(out.str(), out_path);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
