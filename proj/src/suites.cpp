#include "urep/suites.hpp"

#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "urep/parallel.hpp"
#include "urep/rng.hpp"

namespace urep {

void Report::tally() {
    passed = failed = 0;
    for (const auto& i : instances) (i.pass ? passed : failed)++;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["instances"] = nlohmann::json::array();
    for (const auto& i : instances) {
        nlohmann::json ji;
        ji["id"] = i.id;
        ji["params"] = i.params;
        ji["status"] = i.pass ? "pass" : "fail";
        if (!i.detail.empty()) ji["detail"] = i.detail;
        j["instances"].push_back(std::move(ji));
    }
    j["passed"] = passed;
    j["failed"] = failed;
    return j;
}

std::vector<ParameterQuadruple> default_quadruples() {
    return {
        quadruple_from_strings("1/2", "7/10", "1/2", "7/10"),
        quadruple_from_strings("1/3", "-2/5", "7/4", "1/6"),
        quadruple_from_strings("-3/2", "5/7", "2/9", "-1/3"),
        quadruple_from_strings("0", "1", "-1", "2"),
        quadruple_from_strings("5/2", "5/2", "1/2", "1/2"),
        quadruple_from_strings("1/2+1/1i", "1/2-1/1i", "1/2", "7/10"),
        quadruple_from_strings("1/3+2/5i", "-1/2+1/7i", "3/4-1/2i", "1/5+1/3i"),
    };
}

namespace {

using Job = std::function<Instance()>;

Report run_jobs(std::string suite, std::vector<Job> jobs, bool parallel) {
    Report rep;
    rep.suite = std::move(suite);
    rep.instances.resize(jobs.size());
    parallel_for(jobs.size(), parallel, [&](size_t i) { rep.instances[i] = jobs[i](); });
    rep.tally();
    return rep;
}

Instance make_instance(std::string id, std::string params, bool pass, std::string detail = "") {
    return Instance{std::move(id), std::move(params), pass, std::move(detail)};
}

RingElement shift_indices(const RingElement& e, long long m) {
    RingElement out(e.basis());
    for (const auto& [s, c] : e.terms()) {
        std::vector<long long> parts(s.parts());
        for (long long& x : parts) x += m;
        out.add_term(Signature(std::move(parts)), c);
    }
    return out;
}

}  // namespace

bool check_intertwining_rows(const ParameterQuadruple& p, size_t N, const Signature& lambda) {
    std::map<Signature, GRat> lhs, rhs;
    for (const auto& [kappa, q] : generator_row(p, N + 1, lambda).entries)
        for (const auto& [mu, l] : link_row(N, kappa).entries) {
            lhs[mu] += q * GRat(l);
        }
    for (const auto& [nu, l] : link_row(N, lambda).entries)
        for (const auto& [mu, q] : generator_row(p, N, nu).entries) {
            rhs[mu] += GRat(l) * q;
        }
    for (auto* m : {&lhs, &rhs})
        for (auto it = m->begin(); it != m->end();)
            it = it->second.is_zero() ? m->erase(it) : std::next(it);
    return lhs == rhs;
}

Report run_suite_main_theorem(const SuiteOptions& opt) {
    auto quads = opt.quadruples.empty() ? default_quadruples() : opt.quadruples;
    const Window w = opt.window;
    std::vector<Job> jobs;
    bool corrupt = opt.corrupt_rate;
    for (int N = 1; N <= opt.max_n; ++N)
        for (const Signature& mu : signatures_in_window(static_cast<size_t>(N), -2, 2))
            for (const auto& p : quads) {
                bool corrupt_this = corrupt && jobs.empty();
                jobs.push_back([=]() -> Instance {
                    std::string id = "main-theorem mu=" + sig_to_string(mu);
                    if (!corrupt_this) {
                        IdentityCheck c = verify_main_identity(p, mu, w);
                        return make_instance(id, p.to_string(), c.ok, c.discrepancy);
                    }
                    // test hook: rate operator evaluated at a shifted z
                    ParameterQuadruple bad = p;
                    bad.z += GRat(1);
                    RingElement lhsd = apply_D_windowed(p, sigma_to_phi(mu), w);
                    RingElement rhsd(Basis::phi);
                    RingElement acted = apply_A(bad, RingElement::monomial(Basis::sigma, mu));
                    for (const auto& [nu, c] : acted.terms()) {
                        RingElement t = truncate(sigma_to_phi(nu), w);
                        t.scale(c);
                        rhsd += t;
                    }
                    std::string d = RingElement::first_difference(lhsd, rhsd);
                    return make_instance(id + " (corrupted-rate hook)", p.to_string(), d.empty(), d);
                });
            }
    return run_jobs("main-theorem", std::move(jobs), opt.parallel);
}

Report run_suite_intertwine(const SuiteOptions& opt) {
    auto quads = opt.quadruples.empty() ? default_quadruples() : opt.quadruples;
    quads.push_back(quadruple_from_strings("3", "5/2", "3", "3/2"));  // degenerate z=n+, w=-n-
    std::vector<Job> jobs;
    for (int N = 1; N <= opt.max_n; ++N)
        for (const Signature& lam : signatures_in_window(static_cast<size_t>(N) + 1, -3, 3))
            for (const auto& p : quads)
                jobs.push_back([=]() -> Instance {
                    bool ok = check_intertwining_rows(p, static_cast<size_t>(N), lam);
                    return make_instance("intertwine N=" + std::to_string(N) +
                                             " lambda=" + sig_to_string(lam),
                                         p.to_string(), ok);
                });
    return run_jobs("intertwine", std::move(jobs), opt.parallel);
}

Report run_suite_section8(const SuiteOptions& opt) {
    auto quads = opt.quadruples.empty() ? default_quadruples() : opt.quadruples;
    std::vector<Job> jobs;
    const Window w6{-6, 6};
    const Window w8{-8, 8};
    for (const auto& p : quads)
        for (long long k1 = -2; k1 <= 2; ++k1)
            for (long long k2 = -2; k2 <= k1; ++k2)
                jobs.push_back([=]() -> Instance {
                    RingElement direct =
                        apply_D(p, RingElement::monomial(Basis::phi, Signature({k1, k2})), w6);
                    RingElement closed = degree2_closed_form(p, k1, k2, w6);
                    std::string d = RingElement::first_difference(direct, closed);
                    return make_instance("closed-form k=(" + std::to_string(k1) + "," +
                                             std::to_string(k2) + ")",
                                         p.to_string(), d.empty(), d);
                });
    for (long long n = -2; n <= 2; ++n)
        jobs.push_back([=]() -> Instance {
            bool ok = row_sum_A(n, w8).is_zero();
            return make_instance("A-cancellation n=" + std::to_string(n), "window [-8,8]", ok);
        });
    for (const auto& p : quads)
        jobs.push_back([=]() -> Instance {
            bool ok = sum_B(p, w8).is_zero();
            return make_instance("sum-B-telescopes", p.to_string(), ok);
        });
    // shift covariance of the parameter-dependent coefficient
    for (const auto& p : quads)
        for (long long m = -2; m <= 2; ++m)
            jobs.push_back([=]() -> Instance {
                bool ok = true;
                for (long long n = -2; n <= 2 && ok; ++n)
                    ok = shift_indices(coefficient_B(n, p), m) == coefficient_B(n + m, p.shifted(m));
                return make_instance("B-shift-covariance m=" + std::to_string(m), p.to_string(), ok);
            });
    // first-degree agreement: D phi_(n) = truncated B_n
    for (const auto& p : quads)
        jobs.push_back([=]() -> Instance {
            bool ok = true;
            for (long long n = -3; n <= 3 && ok; ++n)
                ok = apply_D(p, RingElement::monomial(Basis::phi, Signature({n})), Window{-5, 5}) ==
                     truncate(coefficient_B(n, p), Window{-5, 5});
            return make_instance("degree1-closed-form", p.to_string(), ok);
        });
    return run_jobs("section8", std::move(jobs), opt.parallel);
}

namespace {

std::vector<std::pair<Rat, Rat>> ab_pairs() {
    return {{Rat(1, 2), Rat(1, 3)},
            {Rat(0), Rat(0)},
            {Rat(-1, 2), Rat(1, 4)},
            {Rat(2), Rat(3, 2)},
            {Rat(1, 5), Rat(-2, 5)}};
}

// Hahn rates in complementary coordinates, as functions of the K-configuration.
Rat complementary_rate(const std::vector<long long>& K, size_t idx, int delta, long long M,
                       const Rat& a, const Rat& b) {
    std::vector<long long> moved(K);
    moved[idx] += delta;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    for (size_t i = 1; i < moved.size(); ++i)
        if (moved[i - 1] == moved[i]) return Rat(0);
    Rat ratio(vandermonde_int(moved), vandermonde_int(K));
    ratio.canonicalize();
    long long y = K[idx];
    if (delta < 0) return ratio * to_rat(y) * (to_rat(M + 1 - y) + a);
    return ratio * to_rat(M - y) * (b + to_rat(y + 1));
}

}  // namespace

Report run_suite_section9(const SuiteOptions& opt) {
    std::vector<Job> jobs;
    auto m_cap = [&](long long dflt) {
        return opt.max_m > 0 ? std::min<long long>(dflt, opt.max_m) : dflt;
    };

    // rectangle complement: partition property and the factorial identity
    for (long long m = 1; m <= m_cap(4); ++m)
        for (long long N = 1; N <= 4; ++N)
            jobs.push_back([=]() -> Instance {
                long long M = N + m - 1;
                Int staircase = 1;  // 0!1!...M!
                {
                    Int f = 1;
                    for (long long t = 1; t <= M; ++t) {
                        f *= to_int(t);
                        staircase *= f;
                    }
                }
                for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), 0, m)) {
                    RectangleComplement rc = complement_in_rectangle(lam, m, N);
                    std::vector<bool> seen(static_cast<size_t>(M) + 1, false);
                    for (long long v : rc.L.values) seen[static_cast<size_t>(v)] = true;
                    for (long long v : rc.K.values) {
                        if (seen[static_cast<size_t>(v)])
                            return make_instance("maya-partition", "m,N=" + std::to_string(m) + "," +
                                                                       std::to_string(N),
                                                 false, "overlap at " + std::to_string(v));
                        seen[static_cast<size_t>(v)] = true;
                    }
                    for (bool s : seen)
                        if (!s)
                            return make_instance("maya-partition",
                                                 "m,N=" + std::to_string(m) + "," + std::to_string(N),
                                                 false, "gap");
                    Int lhs = vandermonde_int(rc.L.values);
                    for (long long k : rc.K.values) {
                        Int f1 = 1, f2 = 1;
                        for (long long t = 1; t <= k; ++t) f1 *= to_int(t);
                        for (long long t = 1; t <= M - k; ++t) f2 *= to_int(t);
                        lhs *= f1 * f2;
                    }
                    Int rhs = staircase * vandermonde_int(rc.K.values);
                    if (lhs != rhs)
                        return make_instance("factorial-identity",
                                             "m,N=" + std::to_string(m) + "," + std::to_string(N),
                                             false, "lambda=" + sig_to_string(lam));
                }
                return make_instance("maya-and-factorial m=" + std::to_string(m) +
                                         " N=" + std::to_string(N),
                                     "all diagrams in the box", true);
            });

    // binomial transform Hahn -> Jacobi
    for (const auto& [a, b] : ab_pairs())
        for (long long M = 1; M <= 8; ++M)
            jobs.push_back([=, a = a, b = b]() -> Instance {
                HahnJacobiParams hp{a, b, M};
                for (long long n = 0; n <= M; ++n) {
                    Poly1 H = hahn_poly(n, hp);
                    Poly1 lhs;
                    Poly1 oneminus({Rat(1), Rat(-1)});
                    for (long long k = 0; k <= M; ++k) {
                        Int choose;
                        mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(M),
                                     static_cast<unsigned long>(k));
                        Poly1 t = Poly1::constant(Rat(choose) * H.evaluate(to_rat(k)));
                        for (long long q = 0; q < k; ++q) t = t * Poly1::x();
                        for (long long q = 0; q < M - k; ++q) t = t * oneminus;
                        lhs += t;
                    }
                    if (!(lhs == jacobi_poly(n, a, b)))
                        return make_instance("binomial-transform M=" + std::to_string(M),
                                             rat_to_string(a) + "," + rat_to_string(b), false,
                                             "n=" + std::to_string(n));
                }
                return make_instance("binomial-transform M=" + std::to_string(M),
                                     rat_to_string(a) + "," + rat_to_string(b), true);
            });

    // eigenrelations for both families
    for (const auto& [a, b] : ab_pairs())
        jobs.push_back([=, a = a, b = b]() -> Instance {
            HahnJacobiParams hp{a, b, 8};
            for (long long n = 0; n <= 8; ++n) {
                Rat eig = to_rat(-n) * (to_rat(n) + a + b + 1);
                Poly1 H = hahn_poly(n, hp);
                Poly1 scaled = H;
                scaled.scale(eig);
                if (!(apply_hahn_operator(hp, H) == scaled))
                    return make_instance("eigenrelation", rat_to_string(a) + "," + rat_to_string(b),
                                         false, "hahn n=" + std::to_string(n));
                Poly1 J = jacobi_poly(n, a, b);
                Poly1 scaledj = J;
                scaledj.scale(eig);
                if (!(apply_jacobi_operator(a, b, J) == scaledj))
                    return make_instance("eigenrelation", rat_to_string(a) + "," + rat_to_string(b),
                                         false, "jacobi n=" + std::to_string(n));
            }
            return make_instance("eigenrelations n<=8", rat_to_string(a) + "," + rat_to_string(b),
                                 true);
        });

    // rate transcription lambda <-> complementary configuration
    for (long long m = 1; m <= m_cap(3); ++m)
        for (long long N = 1; N <= 3; ++N)
            for (const auto& [a, b] : ab_pairs())
                jobs.push_back([=, a = a, b = b]() -> Instance {
                    long long M = N + m - 1;
                    ParameterQuadruple p{GRat(to_rat(m)), GRat(to_rat(m) + a), GRat(Rat(0)), GRat(b)};
                    for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), 0, m)) {
                        RectangleComplement rc = complement_in_rectangle(lam, m, N);
                        GeneratorRow row = generator_row(p, static_cast<size_t>(N), lam);
                        for (size_t i = 0; i < static_cast<size_t>(N); ++i)
                            for (int delta : {+1, -1}) {
                                auto mu = lam.neighbor(i, delta);
                                if (!mu || mu->max_part() > m || mu->min_part() < 0) continue;
                                // lattice move x -> x+delta corresponds to y=x+delta -> y-delta in K
                                long long x = rc.L.values[i];
                                long long y = x + delta;
                                auto it = std::find(rc.K.values.begin(), rc.K.values.end(), y);
                                if (it == rc.K.values.end())
                                    return make_instance("rate-transcription", "", false,
                                                         "missing complementary point");
                                size_t idx = static_cast<size_t>(it - rc.K.values.begin());
                                Rat expected = complementary_rate(rc.K.values, idx, -delta, M, a, b);
                                GRat got = row.entries.count(*mu) ? row.entries.at(*mu) : GRat(0);
                                if (got != GRat(expected))
                                    return make_instance(
                                        "rate-transcription m=" + std::to_string(m) +
                                            " N=" + std::to_string(N),
                                        rat_to_string(a) + "," + rat_to_string(b), false,
                                        "lambda=" + sig_to_string(lam));
                            }
                    }
                    return make_instance("rate-transcription m=" + std::to_string(m) +
                                             " N=" + std::to_string(N),
                                         rat_to_string(a) + "," + rat_to_string(b), true);
                });

    // the conjugated difference operator agrees with the jump form pointwise
    for (long long m = 1; m <= m_cap(3); ++m)
        for (long long N = 1; N <= 3; ++N)
            jobs.push_back([=]() -> Instance {
                auto [a, b] = ab_pairs()[0];
                long long M = N + m - 1;
                HahnJacobiParams hp{a, b, M};
                // configurations = strictly decreasing subsets of {0..M} of size m
                std::vector<Signature> diagrams = signatures_in_window(static_cast<size_t>(m), 0, N);
                for (const Signature& nu : signatures_in_window(static_cast<size_t>(m), 0, N)) {
                    MPoly f = monomial_symmetric(static_cast<size_t>(m), std::vector<int>(
                                                      nu.parts().begin(), nu.parts().end()));
                    MPoly conj = apply_multivariate_operator(Family::hahn, hp, static_cast<size_t>(m), f);
                    for (const Signature& kap : diagrams) {
                        std::vector<long long> K;
                        for (size_t j = 0; j < kap.length(); ++j)
                            K.push_back(kap[j] + m - 1 - static_cast<long long>(j));
                        std::vector<Rat> Kq = to_rat_vec(K);
                        Rat lhs = conj.evaluate(Kq);
                        Rat rhs = 0;
                        for (size_t idx = 0; idx < K.size(); ++idx)
                            for (int delta : {+1, -1}) {
                                if (K[idx] + delta < 0 || K[idx] + delta > M) continue;
                                Rat rate = complementary_rate(K, idx, delta, M, a, b);
                                if (rate == 0) continue;
                                std::vector<Rat> moved(Kq);
                                moved[idx] += delta;
                                std::sort(moved.begin(), moved.end(), std::greater<Rat>());
                                rhs += rate * (f.evaluate(moved) - f.evaluate(Kq));
                            }
                        if (lhs != rhs)
                            return make_instance("conjugated-vs-jump m=" + std::to_string(m) +
                                                     " N=" + std::to_string(N),
                                                 "a,b=" + rat_to_string(a) + "," + rat_to_string(b),
                                                 false,
                                                 "nu=" + sig_to_string(nu) + " K at " + sig_to_string(kap));
                    }
                }
                return make_instance("conjugated-vs-jump m=" + std::to_string(m) +
                                         " N=" + std::to_string(N),
                                     "monomial basis", true);
            });

    // the link takes Hahn polynomials to Jacobi polynomials, constant t-independent
    for (long long m = 1; m <= m_cap(2); ++m)
        for (long long N = 1; N <= 4; ++N)
            jobs.push_back([=]() -> Instance {
                auto [a, b] = ab_pairs()[0];
                long long M = N + m - 1;
                HahnJacobiParams hp{a, b, M};
                std::vector<std::vector<Rat>> tpoints;
                if (m == 1)
                    tpoints = {{Rat(1, 3)}, {Rat(2, 5)}, {Rat(5, 7)}};
                else
                    tpoints = {{Rat(1, 2), Rat(1, 3)}, {Rat(3, 4), Rat(1, 5)}, {Rat(6, 7), Rat(2, 7)}};
                for (const Signature& nu : signatures_in_window(static_cast<size_t>(m), 0, N)) {
                    MPoly H = multivariate_poly(Family::hahn, hp, nu, static_cast<size_t>(m));
                    MPoly J = multivariate_poly(Family::jacobi, hp, nu, static_cast<size_t>(m));
                    std::vector<Rat> lhs, rhs;
                    for (const auto& t : tpoints) {
                        Rat acc = 0;
                        for (const Signature& lam :
                             signatures_in_window(static_cast<size_t>(N), 0, m)) {
                            RectangleComplement rc = complement_in_rectangle(lam, m, N);
                            std::vector<Rat> K = to_rat_vec(rc.K.values);
                            acc += hahn_link_row(t, static_cast<size_t>(N), lam) * H.evaluate(K);
                        }
                        lhs.push_back(acc);
                        rhs.push_back(J.evaluate(t));
                    }
                    // proportionality with a t-independent constant, checked
                    // by cross-multiplication (division-free: J may vanish at
                    // an individual point)
                    bool some_nonzero = false;
                    for (size_t i = 0; i < tpoints.size(); ++i) {
                        some_nonzero = some_nonzero || rhs[i] != 0;
                        for (size_t j = i + 1; j < tpoints.size(); ++j)
                            if (lhs[i] * rhs[j] != lhs[j] * rhs[i])
                                return make_instance("hahn-to-jacobi m=" + std::to_string(m) +
                                                         " N=" + std::to_string(N),
                                                     "nu=" + sig_to_string(nu), false,
                                                     "constant depends on t");
                    }
                    if (!some_nonzero)
                        return make_instance("hahn-to-jacobi m=" + std::to_string(m) +
                                                 " N=" + std::to_string(N),
                                             "nu=" + sig_to_string(nu), false,
                                             "Jacobi polynomial vanished at every test point");
                }
                return make_instance("hahn-to-jacobi m=" + std::to_string(m) +
                                         " N=" + std::to_string(N),
                                     "3 rational t-points", true);
            });

    // link intertwines the two multivariate operators on the Hahn span
    for (long long m = 1; m <= m_cap(2); ++m)
        for (long long N = 1; N <= 4; ++N)
            jobs.push_back([=]() -> Instance {
                auto [a, b] = ab_pairs()[0];
                long long M = N + m - 1;
                HahnJacobiParams hp{a, b, M};
                for (const Signature& nu : signatures_in_window(static_cast<size_t>(m), 0, N)) {
                    MPoly H = multivariate_poly(Family::hahn, hp, nu, static_cast<size_t>(m));
                    MPoly DH = apply_multivariate_operator(Family::hahn, hp, static_cast<size_t>(m), H);
                    MPoly lhs(static_cast<size_t>(m));  // D_m (Link H)
                    MPoly rhs(static_cast<size_t>(m));  // Link (Delta_m H)
                    MPoly linkH(static_cast<size_t>(m));
                    MPoly linkDH(static_cast<size_t>(m));
                    for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), 0, m)) {
                        RectangleComplement rc = complement_in_rectangle(lam, m, N);
                        std::vector<Rat> K = to_rat_vec(rc.K.values);
                        MPoly lp = hahn_link_poly(static_cast<size_t>(m), static_cast<size_t>(N), lam);
                        MPoly t1 = lp;
                        t1.scale(H.evaluate(K));
                        linkH += t1;
                        MPoly t2 = lp;
                        t2.scale(DH.evaluate(K));
                        linkDH += t2;
                    }
                    lhs = apply_multivariate_operator(Family::jacobi, hp, static_cast<size_t>(m), linkH);
                    rhs = linkDH;
                    if (!(lhs == rhs))
                        return make_instance("link-intertwines m=" + std::to_string(m) +
                                                 " N=" + std::to_string(N),
                                             "nu=" + sig_to_string(nu), false, "");
                }
                return make_instance("link-intertwines m=" + std::to_string(m) +
                                         " N=" + std::to_string(N),
                                     "Hahn span", true);
            });

    // quotient realization of the rate operator = multivariate Jacobi operator
    {
        std::vector<std::pair<size_t, MPoly>> polys;
        polys.emplace_back(1, MPoly::variable(1, 0, 1) + MPoly::variable(1, 0, 3));
        polys.emplace_back(1, MPoly::variable(1, 0, 4));
        polys.emplace_back(2, elementary_symmetric(2, 1));
        polys.emplace_back(2, elementary_symmetric(2, 2) * elementary_symmetric(2, 1));
        {
            MPoly p22(2);
            p22.add_term({2, 2}, Rat(1));
            polys.emplace_back(2, p22 + monomial_symmetric(2, {3, 1}));
        }
        for (const auto& [a, b] : ab_pairs())
            for (const auto& [m, f] : polys)
                jobs.push_back([=, a = a, b = b, f = f]() -> Instance {
                    bool ok = verify_theorem_main_quotient(m, a, b, f);
                    return make_instance("quotient-jacobi m=" + std::to_string(m) + " deg=" +
                                             std::to_string(f.total_degree()),
                                         rat_to_string(a) + "," + rat_to_string(b), ok);
                });
    }

    // degenerate-parameter reduction of the differential operator
    {
        std::vector<std::tuple<long long, long long>> kls = {{1, 0}, {1, 1}, {2, 0}};
        for (const auto& [k, l] : kls)
            for (const auto& [a, b] : ab_pairs())
                jobs.push_back([=, k = k, l = l, a = a, b = b]() -> Instance {
                    size_t m = static_cast<size_t>(k + l);
                    MPoly f = elementary_symmetric(m, 1) * elementary_symmetric(m, 1);
                    if (m >= 2) f += monomial_symmetric(m, {2, 1});
                    bool ok = verify_degenerate_reduction(k, l, a, b, f);
                    return make_instance("degenerate-reduction k=" + std::to_string(k) +
                                             " l=" + std::to_string(l),
                                         rat_to_string(a) + "," + rat_to_string(b), ok);
                });
    }

    return run_jobs("section9", std::move(jobs), opt.parallel);
}

Report run_suite_ring(const SuiteOptions& opt) {
    std::vector<Job> jobs;

    // sigma -> phi -> sigma round trips
    for (int N = 1; N <= 3; ++N)
        jobs.push_back([=]() -> Instance {
            Window w{-2 - N + 1 - 1, 2 + N - 1 + 1};
            for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), -2, 2)) {
                RingElement back = phi_to_sigma_window(sigma_to_phi(lam), w);
                if (!(back == RingElement::monomial(Basis::sigma, lam)))
                    return make_instance("round-trip N=" + std::to_string(N), "", false,
                                         "lambda=" + sig_to_string(lam));
            }
            return make_instance("round-trip N=" + std::to_string(N), "window (2,-2)", true);
        });

    // determinant expansion has unit leading coefficient
    jobs.push_back([]() -> Instance {
        for (int N = 1; N <= 3; ++N)
            for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), -3, 3))
                if (sigma_to_phi(lam).coefficient(lam) != GRat(1))
                    return make_instance("unitriangular-expansion", "", false,
                                         "lambda=" + sig_to_string(lam));
        return make_instance("unitriangular-expansion", "GT_N(3,-3), N<=3", true);
    });

    // Kostka matrix is dominance-unitriangular
    jobs.push_back([]() -> Instance {
        for (int N = 1; N <= 3; ++N)
            for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), -2, 2)) {
                if (kostka_number(lam, lam) != 1)
                    return make_instance("kostka-unitriangular", "", false,
                                         "diagonal at " + sig_to_string(lam));
                for (const Signature& mu : signatures_in_window(static_cast<size_t>(N), -2, 2)) {
                    if (lam.sum() != mu.sum()) continue;
                    if (!dominance_leq(mu, lam) && kostka_number(lam, mu) != 0)
                        return make_instance("kostka-unitriangular", "", false,
                                             sig_to_string(lam) + "," + sig_to_string(mu));
                }
            }
        return make_instance("kostka-unitriangular", "GT_N(2,-2), N<=3", true);
    });

    // dimension counting through the structure constants
    for (int M = 1; M <= 3; ++M)
        for (int N = 1; M + N <= 4; ++N)
            jobs.push_back([=]() -> Instance {
                for (const Signature& lam :
                     signatures_in_window(static_cast<size_t>(M + N), -2, 2)) {
                    Int total = 0;
                    for (const Signature& mu : signatures_in_window(static_cast<size_t>(M), -2, 2))
                        for (const Signature& nu :
                             signatures_in_window(static_cast<size_t>(N), -2, 2)) {
                            if (mu.sum() + nu.sum() != lam.sum()) continue;
                            Int c = lr_coefficient(lam, mu, nu);
                            if (c != 0) total += c * weyl_dimension(mu) * weyl_dimension(nu);
                        }
                    if (total != weyl_dimension(lam))
                        return make_instance("dimension-counting M=" + std::to_string(M) +
                                                 " N=" + std::to_string(N),
                                             "", false, "lambda=" + sig_to_string(lam));
                }
                return make_instance("dimension-counting M=" + std::to_string(M) +
                                         " N=" + std::to_string(N),
                                     "GT(2,-2)", true);
            });

    // norm submultiplicativity on random pairs
    jobs.push_back([]() -> Instance {
        SplitMix64 rng(20240815);
        auto sigs1 = signatures_in_window(1, -2, 2);
        auto sigs2 = signatures_in_window(2, -2, 2);
        auto random_element = [&]() {
            RingElement e(Basis::sigma);
            size_t nterms = 1 + rng.next() % 3;
            for (size_t t = 0; t < nterms; ++t) {
                bool deg2 = rng.next() % 2;
                const auto& pool = deg2 ? sigs2 : sigs1;
                const Signature& s = pool[rng.next() % pool.size()];
                long num = static_cast<long>(rng.next() % 11) - 5;
                long den = 1 + static_cast<long>(rng.next() % 4);
                if (num == 0) num = 1;
                Rat c(num, den);
                c.canonicalize();
                e.add_term(s, GRat(c));
            }
            return e;
        };
        Window w{-8, 8};
        for (int trial = 0; trial < 100; ++trial) {
            RingElement a = random_element();
            RingElement b = random_element();
            if (a.is_zero() || b.is_zero()) continue;
            if (norm(multiply_sigma_window(a, b, w)) > norm(a) * norm(b))
                return make_instance("norm-submultiplicative", "", false,
                                     "trial " + std::to_string(trial));
        }
        return make_instance("norm-submultiplicative", "100 random pairs", true);
    });

    // sigma-basis multiplication agrees with the phi route inside a window
    jobs.push_back([]() -> Instance {
        Window w{-4, 4};
        for (int N = 1; N <= 2; ++N)
            for (const Signature& mu : signatures_in_window(static_cast<size_t>(N), -1, 1))
                for (const Signature& nu : signatures_in_window(static_cast<size_t>(N), -1, 1)) {
                    RingElement direct =
                        multiply_sigma_window(RingElement::monomial(Basis::sigma, mu),
                                              RingElement::monomial(Basis::sigma, nu), w);
                    RingElement viaphi =
                        phi_to_sigma_window(multiply(sigma_to_phi(mu), sigma_to_phi(nu)), w);
                    if (!(direct == viaphi))
                        return make_instance("multiply-two-routes", "", false,
                                             sig_to_string(mu) + " * " + sig_to_string(nu));
                }
        return make_instance("multiply-two-routes", "GT_N(1,-1), N<=2", true);
    });

    Report rep = run_jobs("ring", std::move(jobs), opt.parallel);
    return rep;
}

Report run_suite_boundary(const SuiteOptions& opt) {
    std::vector<Job> jobs;

    struct Pt {
        std::string name;
        BoundaryPoint omega;
        long long npos, nneg;
    };
    std::vector<Pt> points;
    points.push_back({"O(1,0)", make_simplex_point({Rat(1, 3)}, {}), 1, 0});
    points.push_back({"O(2,0)", make_simplex_point({Rat(2, 3), Rat(1, 4)}, {}), 2, 0});
    points.push_back({"O(1,-1)", make_simplex_point({Rat(1, 2)}, {Rat(1, 3)}), 1, -1});
    points.push_back(
        {"O(2,-2)", make_simplex_point({Rat(3, 5), Rat(1, 5)}, {Rat(1, 4), Rat(1, 8)}), 2, -2});
    points.push_back({"O(2,-1)", make_simplex_point({Rat(2, 3), Rat(1, 5)}, {Rat(1, 4)}), 2, -1});
    points.push_back({"zero", make_simplex_point({}, {}), 0, 0});

    for (const auto& pt : points)
        jobs.push_back([=]() -> Instance {
            Window w{pt.nneg - 4, pt.npos + 4};
            LaurentWindow lw = phi_hat_window(pt.omega, w);
            Rat total = 0;
            for (const auto& [n, c] : lw.coeffs) {
                if (n > pt.npos || n < pt.nneg)
                    if (c != 0)
                        return make_instance("phi-hat-support " + pt.name, "", false,
                                             "coefficient outside the simplex range");
                total += c;
            }
            if (total != 1)
                return make_instance("phi-hat-normalization " + pt.name, "", false,
                                     "sum = " + rat_to_string(total));
            return make_instance("phi-hat-normalization " + pt.name, "exact", true);
        });

    for (const auto& pt : points)
        for (size_t N = 1; N <= 3; ++N)
            jobs.push_back([=]() -> Instance {
                Window w{pt.nneg - 4, pt.npos + 4};
                Rat total = 0;
                for (const Signature& lam :
                     signatures_in_window(N, pt.nneg, pt.npos)) {
                    ScalarResult s = sigma_hat(pt.omega, lam, w);
                    if (s.value < 0)
                        return make_instance("sigma-hat-nonnegative " + pt.name, "", false,
                                             sig_to_string(lam));
                    total += Rat(weyl_dimension(lam)) * s.value;
                }
                if (total != 1)
                    return make_instance("link-row-normalization " + pt.name +
                                             " N=" + std::to_string(N),
                                         "", false, "sum = " + rat_to_string(total));
                return make_instance("link-row-normalization " + pt.name + " N=" + std::to_string(N),
                                     "exact", true);
            });

    // link tower consistency through one more level
    for (const auto& pt : points)
        for (size_t N = 1; N <= 2; ++N)
            jobs.push_back([=]() -> Instance {
                Window w{pt.nneg - 5, pt.npos + 5};
                for (const Signature& mu : signatures_in_window(N, pt.nneg, pt.npos)) {
                    Rat direct = link_infinity(pt.omega, N, mu, w).value;
                    Rat composed = 0;
                    for (const Signature& lam :
                         signatures_in_window(N + 1, pt.nneg, pt.npos)) {
                        Rat top = link_infinity(pt.omega, N + 1, lam, w).value;
                        if (top == 0) continue;
                        LinkRow lr = link_row(N, lam);
                        auto it = lr.entries.find(mu);
                        if (it != lr.entries.end()) composed += top * it->second;
                    }
                    if (direct != composed)
                        return make_instance("link-tower " + pt.name + " N=" + std::to_string(N), "",
                                             false, "mu=" + sig_to_string(mu));
                }
                return make_instance("link-tower " + pt.name + " N=" + std::to_string(N), "exact",
                                     true);
            });

    // vertex evaluations give the identity matrix
    for (long long m = 1; m <= 3; ++m)
        jobs.push_back([=]() -> Instance {
            Window w{-2, m + 2};
            for (long long k = 0; k <= m; ++k) {
                std::vector<Rat> t;
                for (long long i = 0; i < m - k; ++i) t.push_back(Rat(1));
                for (long long i = 0; i < k; ++i) t.push_back(Rat(0));
                BoundaryPoint omega = simplex_point_from_t(t);
                for (long long n = 0; n <= m; ++n) {
                    Rat v = phi_hat(omega, n, w).value;
                    if (v != ((n == k) ? 1 : 0))
                        return make_instance("vertex-delta m=" + std::to_string(m), "", false,
                                             "n,k=" + std::to_string(n) + "," + std::to_string(k));
                }
            }
            return make_instance("vertex-delta m=" + std::to_string(m), "exact", true);
        });

    // two independent routes to the link row
    for (size_t m = 1; m <= 2; ++m)
        for (size_t N = 1; N <= 4; ++N)
            jobs.push_back([=]() -> Instance {
                std::vector<Rat> t =
                    m == 1 ? std::vector<Rat>{Rat(2, 5)} : std::vector<Rat>{Rat(2, 3), Rat(1, 7)};
                BoundaryPoint omega = simplex_point_from_t(t);
                Window w{-static_cast<long long>(N) - 1, static_cast<long long>(m + N) + 1};
                for (const Signature& lam :
                     signatures_in_window(N, 0, static_cast<long long>(m))) {
                    Rat via_boundary = link_infinity(omega, N, lam, w).value;
                    Rat via_hahn = hahn_link_row(t, N, lam);
                    if (via_boundary != via_hahn)
                        return make_instance("link-two-routes m=" + std::to_string(m) +
                                                 " N=" + std::to_string(N),
                                             "", false, "lambda=" + sig_to_string(lam));
                }
                return make_instance("link-two-routes m=" + std::to_string(m) +
                                         " N=" + std::to_string(N),
                                     "exact", true);
            });

    // symmetries: conjugation is an involution, twist multiplies the series by u
    jobs.push_back([=]() -> Instance {
        BoundaryPoint omega = make_simplex_point({Rat(1, 2)}, {Rat(1, 3)});
        BoundaryPoint twice = symmetry(symmetry(omega, OmegaSymmetry::conjugate), OmegaSymmetry::conjugate);
        if (!(boundary_point_to_json(twice) == boundary_point_to_json(omega)))
            return make_instance("conjugate-involution", "", false, "");
        BoundaryPoint tw = symmetry(omega, OmegaSymmetry::twist);
        if (!tw.beta_minus.empty() || tw.beta_plus.size() != 2)
            return make_instance("twist-range", "", false, "twist of O(1,-1) should land in O(2,0)");
        Window w{-4, 4};
        LaurentWindow before = phi_hat_window(omega, w);
        LaurentWindow after = phi_hat_window(tw, w);
        for (const auto& [n, c] : before.coeffs) {
            auto it = after.coeffs.find(n + 1);
            Rat shifted = it == after.coeffs.end() ? Rat(0) : it->second;
            if (shifted != c)
                return make_instance("twist-multiplies-by-u", "", false, "n=" + std::to_string(n));
        }
        return make_instance("twist-and-conjugate", "O(1,-1) point", true);
    });

    return run_jobs("boundary", std::move(jobs), opt.parallel);
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "main-theorem") return run_suite_main_theorem(opt);
    if (name == "intertwine") return run_suite_intertwine(opt);
    if (name == "section8") return run_suite_section8(opt);
    if (name == "section9") return run_suite_section9(opt);
    if (name == "ring") return run_suite_ring(opt);
    if (name == "boundary") return run_suite_boundary(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace urep
