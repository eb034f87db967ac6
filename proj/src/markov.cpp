#include "urep/markov.hpp"

#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "urep/parallel.hpp"
#include "urep/rng.hpp"

namespace urep {

namespace {

bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor of a rational (exact)
Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

bool pair_in_Z(const GRat& a, const GRat& b, std::string& why) {
    auto integral = [](const GRat& x) { return x.is_real() && is_integer(x.re); };
    if (integral(a) || integral(b)) {
        why = "parameter is an integer";
        return false;
    }
    if (!a.is_real() || !b.is_real()) {
        if (b == a.conj()) return true;
        why = "non-real pair is not complex conjugate";
        return false;
    }
    if (rat_floor(a.re) == rat_floor(b.re)) return true;
    why = "real pair does not share an open unit interval (m, m+1)";
    return false;
}

}  // namespace

Admissibility classify_admissible(const ParameterQuadruple& p) {
    Admissibility out;
    std::string why;
    if (!pair_in_Z(p.z, p.zp, why)) {
        out.reason = "(z,z'): " + why;
        return out;
    }
    if (!pair_in_Z(p.w, p.wp, why)) {
        out.reason = "(w,w'): " + why;
        return out;
    }
    GRat s = p.parameter_sum();
    if (!s.is_real()) {
        out.reason = "parameter sum is not real";
        return out;
    }
    if (!(s.re > Rat(-1))) {
        out.reason = "z+z'+w+w' <= -1";
        return out;
    }
    out.admissible = true;
    return out;
}

GeneratorRow generator_row(const ParameterQuadruple& p, size_t N, const Signature& nu) {
    if (nu.length() != N) throw std::invalid_argument("generator_row: length(nu) != N");
    GeneratorRow row;
    row.state = nu;
    Int dim_nu = weyl_dimension(nu);
    GRat diag(0);
    for (size_t i = 0; i < N; ++i)
        for (int delta : {+1, -1}) {
            auto mu = nu.neighbor(i, delta);
            if (!mu) continue;  // invalid pattern: rate 0 (its dimension vanishes)
            Rat ratio(weyl_dimension(*mu), dim_nu);
            ratio.canonicalize();
            GRat q = (delta > 0 ? rate_up(p, nu, i) : rate_down(p, nu, i)) * GRat(ratio);
            if (q.is_zero()) continue;
            row.entries[*mu] = q;
            diag -= q;
        }
    if (!diag.is_zero() || row.entries.empty()) row.entries[nu] = diag;
    return row;
}

LinkRow link_row(size_t N, const Signature& lambda) {
    if (lambda.length() != N + 1) throw std::invalid_argument("link_row: length(lambda) != N+1");
    LinkRow row;
    row.state = lambda;
    Int dim_lambda = weyl_dimension(lambda);
    // enumerate interlacing mu directly below lambda
    long long lo = lambda.min_part(), hi = lambda.max_part();
    std::vector<long long> acc;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == N) {
            Signature mu{std::vector<long long>(acc)};
            Rat v(weyl_dimension(mu), dim_lambda);
            v.canonicalize();
            row.entries[mu] = v;
            return;
        }
        long long up = std::min(lambda[i], i ? acc.back() : hi);
        long long down = std::max(lambda[i + 1], lo);
        for (long long v = up; v >= down; --v) {
            acc.push_back(v);
            self(self, i + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    return row;
}

bool check_intertwining(const ParameterQuadruple& p, size_t N, const Signature& lambda,
                        const Signature& mu) {
    if (lambda.length() != N + 1 || mu.length() != N)
        throw std::invalid_argument("check_intertwining: bad lengths");
    // (D_{N+1} Link)(lambda, mu): generator row at lambda against link rows
    GRat lhs(0);
    for (const auto& [kappa, q] : generator_row(p, N + 1, lambda).entries) {
        LinkRow lr = link_row(N, kappa);
        auto it = lr.entries.find(mu);
        if (it != lr.entries.end()) lhs += q * GRat(it->second);
    }
    // (Link D_N)(lambda, mu): link row at lambda against generator rows
    GRat rhs(0);
    for (const auto& [nu, l] : link_row(N, lambda).entries) {
        GeneratorRow gr = generator_row(p, N, nu);
        auto it = gr.entries.find(mu);
        if (it != gr.entries.end()) rhs += GRat(l) * it->second;
    }
    return lhs == rhs;
}

namespace {

// Degenerate setup: z = k and w = l integers with z'-k > -1, w'-l > -1 and the
// start state inside GT_N(k,-l). Rates vanish at the rectangle boundary, so
// the finite chain is well defined even though the quadruple fails the
// admissibility test for the infinite lattice.
bool degenerate_rectangle_setup(const SimConfig& cfg) {
    const auto& p = cfg.p;
    for (const GRat* g : {&p.z, &p.zp, &p.w, &p.wp})
        if (!g->is_real()) return false;
    if (p.z.re.get_den() != 1 || p.w.re.get_den() != 1) return false;
    if (!(p.zp.re - p.z.re > -1) || !(p.wp.re - p.w.re > -1)) return false;
    long long k = p.z.re.get_num().get_si();
    long long l = p.w.re.get_num().get_si();
    if (cfg.nu0.empty()) return true;
    return cfg.nu0.max_part() <= k && cfg.nu0.min_part() >= -l;
}

}  // namespace

namespace {

void validate_sim_config(const SimConfig& cfg) {
    Admissibility adm = classify_admissible(cfg.p);
    if (!adm.admissible && !degenerate_rectangle_setup(cfg))
        throw std::domain_error("simulate: parameters not admissible: " + adm.reason);
    for (const GRat* g : {&cfg.p.z, &cfg.p.zp, &cfg.p.w, &cfg.p.wp})
        if (!g->is_real()) throw std::domain_error("simulate: parameters must be real");
    if (cfg.nu0.length() != cfg.N) throw std::invalid_argument("simulate: length(nu0) != N");
}

}  // namespace

Trajectory simulate_one(const SimConfig& cfg, uint64_t trajectory_index) {
    validate_sim_config(cfg);

    SplitMix64 rng = SplitMix64::stream(cfg.seed, trajectory_index);
    Trajectory traj;
    double t = 0.0;
    Signature state = cfg.nu0;
    traj.points.emplace_back(t, state);

    for (uint64_t step = 0; step < cfg.max_jumps; ++step) {
        GeneratorRow row = generator_row(cfg.p, cfg.N, state);
        std::vector<std::pair<Signature, double>> moves;
        double total = 0.0;
        for (const auto& [mu, q] : row.entries) {
            if (mu == state) continue;
            double r = q.re.get_d();
            if (r < 0) throw std::domain_error("simulate: negative jump rate encountered");
            moves.emplace_back(mu, r);
            total += r;
        }
        if (total <= 0.0) return traj;  // absorbing (cannot happen for admissible rates)
        double hold = -std::log(rng.uniform01()) / total;
        if (t + hold > cfg.horizon) return traj;
        t += hold;
        double u = rng.uniform01() * total;
        double cum = 0.0;
        const Signature* next = &moves.back().first;
        for (const auto& [mu, r] : moves) {
            cum += r;
            if (u <= cum) {
                next = &mu;
                break;
            }
        }
        state = *next;
        traj.points.emplace_back(t, state);
    }
    traj.truncated = true;
    return traj;
}

std::vector<Trajectory> simulate(const SimConfig& cfg, bool parallel) {
    validate_sim_config(cfg);  // reject here: exceptions cannot leave the worker loop
    std::vector<Trajectory> out(cfg.trajectories);
    parallel_for(cfg.trajectories, parallel,
                 [&](size_t i) { out[i] = simulate_one(cfg, static_cast<uint64_t>(i)); });
    return out;
}

void write_trajectories_csv(std::ostream& os, const SimConfig& cfg,
                            const std::vector<Trajectory>& trajs) {
    os << "# z=" << grat_to_string(cfg.p.z) << " z2=" << grat_to_string(cfg.p.zp)
       << " w=" << grat_to_string(cfg.p.w) << " w2=" << grat_to_string(cfg.p.wp)
       << " N=" << cfg.N << " horizon=" << cfg.horizon << " seed=" << cfg.seed << "\n";
    os << "trajectory,time";
    for (size_t i = 1; i <= cfg.N; ++i) os << ",nu_" << i;
    os << "\n";
    for (size_t k = 0; k < trajs.size(); ++k)
        for (const auto& [t, s] : trajs[k].points) {
            os << k << ',' << t;
            for (size_t i = 0; i < s.length(); ++i) os << ',' << s[i];
            os << "\n";
        }
}

namespace {
nlohmann::json grat_to_json(const GRat& g) {
    return {{"num", g.re.get_num().get_str()},
            {"den", g.re.get_den().get_str()},
            {"inum", g.im.get_num().get_str()},
            {"iden", g.im.get_den().get_str()}};
}

GRat grat_from_json(const nlohmann::json& j) {
    Rat re(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
    re.canonicalize();
    Rat im(0);
    if (j.contains("inum")) {
        im = Rat(Int(j.at("inum").get<std::string>()), Int(j.at("iden").get<std::string>()));
        im.canonicalize();
    }
    return {re, im};
}
}  // namespace

SimConfig sim_config_from_json(const nlohmann::json& j) {
    SimConfig cfg;
    cfg.p = {grat_from_json(j.at("z")), grat_from_json(j.at("z_prime")), grat_from_json(j.at("w")),
             grat_from_json(j.at("w_prime"))};
    cfg.N = j.at("N").get<size_t>();
    cfg.nu0 = Signature(j.at("nu0").get<std::vector<long long>>());
    cfg.horizon = j.at("horizon").get<double>();
    cfg.trajectories = j.at("trajectories").get<uint64_t>();
    cfg.seed = j.at("seed").get<uint64_t>();
    return cfg;
}

nlohmann::json sim_config_to_json(const SimConfig& cfg) {
    nlohmann::json j;
    j["z"] = grat_to_json(cfg.p.z);
    j["z_prime"] = grat_to_json(cfg.p.zp);
    j["w"] = grat_to_json(cfg.p.w);
    j["w_prime"] = grat_to_json(cfg.p.wp);
    j["N"] = cfg.N;
    j["nu0"] = cfg.nu0.parts();
    j["horizon"] = cfg.horizon;
    j["trajectories"] = cfg.trajectories;
    j["seed"] = cfg.seed;
    return j;
}

}  // namespace urep
