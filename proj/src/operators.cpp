#include "urep/operators.hpp"

#include <algorithm>
#include <sstream>

namespace urep {

ParameterQuadruple ParameterQuadruple::shifted(long long m) const {
    GRat d{to_rat(m)};
    return {z + d, zp + d, w - d, wp - d};
}

std::string ParameterQuadruple::to_string() const {
    std::ostringstream os;
    os << "(" << grat_to_string(z) << "," << grat_to_string(zp) << "," << grat_to_string(w) << ","
       << grat_to_string(wp) << ")";
    return os.str();
}

ParameterQuadruple quadruple_from_strings(const std::string& z, const std::string& zp,
                                          const std::string& w, const std::string& wp) {
    return {grat_from_string(z), grat_from_string(zp), grat_from_string(w), grat_from_string(wp)};
}

namespace {
Signature pair_key(long long a, long long b) {
    if (a < b) std::swap(a, b);
    return Signature({a, b});
}
}  // namespace

RingElement coefficient_A(long long n1, long long n2, const Window& w) {
    if (n1 < n2) throw std::invalid_argument("coefficient_A: requires n1 >= n2");
    const long long d = n1 - n2;
    RingElement out(Basis::phi);

    // (d+2p+1) [phi_{n1+p+1} phi_{n2-p} + phi_{n1+p} phi_{n2-p-1}], p >= 0
    {
        long long pmin = std::max<long long>({0, w.lo - n1 - 1, n2 - w.hi});
        long long pmax = std::min(w.hi - n1 - 1, n2 - w.lo);
        for (long long p = pmin; p <= pmax; ++p)
            out.add_term(pair_key(n1 + p + 1, n2 - p), GRat(to_rat(d + 2 * p + 1)));
    }
    {
        long long pmin = std::max<long long>({0, w.lo - n1, n2 - 1 - w.hi});
        long long pmax = std::min(w.hi - n1, n2 - 1 - w.lo);
        for (long long p = pmin; p <= pmax; ++p)
            out.add_term(pair_key(n1 + p, n2 - p - 1), GRat(to_rat(d + 2 * p + 1)));
    }
    // -(n1-n2) phi_{n1} phi_{n2}
    if (d != 0 && w.contains(n1) && w.contains(n2)) out.add_term(pair_key(n1, n2), GRat(to_rat(-d)));
    // -2 (d+2p) phi_{n1+p} phi_{n2-p}, p >= 1
    {
        long long pmin = std::max<long long>({1, w.lo - n1, n2 - w.hi});
        long long pmax = std::min(w.hi - n1, n2 - w.lo);
        for (long long p = pmin; p <= pmax; ++p)
            out.add_term(pair_key(n1 + p, n2 - p), GRat(to_rat(-2 * (d + 2 * p))));
    }
    return out;
}

RingElement coefficient_B(long long n, const ParameterQuadruple& p) {
    RingElement out(Basis::phi);
    GRat nn{to_rat(n)};
    GRat one{Rat(1)};
    out.add_term(Signature({n + 1}), (nn + p.w + one) * (nn + p.wp + one));
    out.add_term(Signature({n - 1}), (nn - p.z - one) * (nn - p.zp - one));
    out.add_term(Signature({n}), -((nn - p.z) * (nn - p.zp) + (nn + p.w) * (nn + p.wp)));
    return out;
}

RingElement mirror_element(const RingElement& e) {
    RingElement out(e.basis());
    for (const auto& [s, c] : e.terms()) out.add_term(s.negated_reversed(), c);
    return out;
}

RingElement apply_D_windowed(const ParameterQuadruple& p, const RingElement& e, const Window& w) {
    if (e.basis() != Basis::phi) throw std::invalid_argument("apply_D: element must be in phi basis");
    RingElement out(Basis::phi);
    for (const auto& [s, c] : e.terms()) {
        const auto& parts = s.parts();
        const size_t n = parts.size();
        // first-order part
        for (size_t i = 0; i < n; ++i) {
            std::vector<long long> residual;
            residual.reserve(n - 1);
            for (size_t t = 0; t < n; ++t)
                if (t != i) residual.push_back(parts[t]);
            RingElement bcoef = coefficient_B(parts[i], p);
            for (const auto& [bk, bc] : bcoef.terms()) {
                std::vector<long long> merged = residual;
                merged.push_back(bk[0]);
                std::sort(merged.begin(), merged.end(), std::greater<>());
                out.add_term(Signature(std::move(merged)), c * bc);
            }
        }
        // second-order part: one term per unordered position pair, weight 2
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                std::vector<long long> residual;
                residual.reserve(n - 2);
                for (size_t t = 0; t < n; ++t)
                    if (t != i && t != j) residual.push_back(parts[t]);
                GRat two_c = c * GRat(Rat(2));
                RingElement acoef = coefficient_A(parts[i], parts[j], w);
                for (const auto& [ak, ac] : acoef.terms()) {
                    std::vector<long long> merged = residual;
                    merged.push_back(ak[0]);
                    merged.push_back(ak[1]);
                    std::sort(merged.begin(), merged.end(), std::greater<>());
                    out.add_term(Signature(std::move(merged)), two_c * ac);
                }
            }
    }
    return truncate(out, w);
}

RingElement apply_D(const ParameterQuadruple& p, const RingElement& e, const Window& w) {
    for (const auto& [s, c] : e.terms())
        if (!w.shrunk(1).contains(s))
            throw std::domain_error("apply_D: support must keep distance 1 from the window edge");
    return apply_D_windowed(p, e, w);
}

GRat rate_up(const ParameterQuadruple& p, const Signature& nu, size_t i) {
    GRat t{to_rat(-nu[i] + static_cast<long long>(i))};
    return (p.z + t) * (p.zp + t);
}

GRat rate_down(const ParameterQuadruple& p, const Signature& nu, size_t i) {
    GRat t{to_rat(nu[i] + static_cast<long long>(nu.length()) - static_cast<long long>(i) - 1)};
    return (p.w + t) * (p.wp + t);
}

GRat diagonal_rate(const ParameterQuadruple& p, const Signature& nu) {
    const long long n = static_cast<long long>(nu.length());
    GRat acc = p.parameter_sum() * GRat(to_rat(n * (n - 1) / 2));
    acc += GRat(to_rat((2 * n - 1) * n * (n - 1) / 3));
    for (size_t i = 0; i < nu.length(); ++i) acc -= rate_up(p, nu, i) + rate_down(p, nu, i);
    return acc;
}

GRat jump_rate_step(const ParameterQuadruple& p, const Signature& nu, size_t i, int delta) {
    if (!nu.neighbor(i, delta)) return GRat(0);
    return delta > 0 ? rate_up(p, nu, i) : rate_down(p, nu, i);
}

GRat jump_rate(const ParameterQuadruple& p, size_t N, const Signature& nu, const Signature& mu) {
    if (nu.length() != N || mu.length() != N)
        throw std::invalid_argument("jump_rate: signatures must have length N");
    if (mu == nu) return diagonal_rate(p, nu);
    size_t where = N;
    int delta = 0;
    for (size_t i = 0; i < N; ++i) {
        if (nu[i] == mu[i]) continue;
        long long d = mu[i] - nu[i];
        if (where != N || (d != 1 && d != -1))
            throw std::invalid_argument("jump_rate: mu must be nu or nu +- e_i");
        where = i;
        delta = static_cast<int>(d);
    }
    if (where == N) throw std::invalid_argument("jump_rate: mu must differ from nu in one place");
    return delta > 0 ? rate_up(p, nu, where) : rate_down(p, nu, where);
}

RingElement apply_A(const ParameterQuadruple& p, const RingElement& e) {
    if (e.basis() != Basis::sigma) throw std::invalid_argument("apply_A: element must be in sigma basis");
    RingElement out(Basis::sigma);
    for (const auto& [mu, c] : e.terms()) {
        if (mu.empty()) continue;  // annihilates the unit
        out.add_term(mu, diagonal_rate(p, mu) * c);
        for (size_t i = 0; i < mu.length(); ++i)
            for (int delta : {+1, -1}) {
                auto nu = mu.neighbor(i, delta);
                if (!nu) continue;
                // coefficient of sigma_nu is the rate from nu back to mu
                GRat r = delta > 0 ? rate_down(p, *nu, i) : rate_up(p, *nu, i);
                out.add_term(*nu, r * c);
            }
    }
    return out;
}

namespace {

// The +1 component of the operator on phi_{(k1,k2)}: two boundary terms plus
// the arithmetic-progression series, window-truncated.
RingElement plus_one_component(const ParameterQuadruple& p, long long k1, long long k2,
                               const Window& w) {
    RingElement out(Basis::phi);
    GRat a1{to_rat(k1 + 1)};
    GRat a2{to_rat(k2 + 1)};
    RingElement x1(Basis::phi);
    x1.add_term(pair_key(k1 + 1, k2), (p.w + a1) * (p.wp + a1));
    x1.add_term(pair_key(k1, k2 + 1), (p.w + a2) * (p.wp + a2));
    out += truncate(x1, w);
    long long pmin = std::max<long long>({0, w.lo - k1 - 1, k2 - w.hi});
    long long pmax = std::min(w.hi - k1 - 1, k2 - w.lo);
    for (long long q = pmin; q <= pmax; ++q)
        out.add_term(pair_key(k1 + q + 1, k2 - q), GRat(to_rat(2 * (2 * q + 1 + k1 - k2))));
    return out;
}

RingElement zero_component(const ParameterQuadruple& p, long long k1, long long k2, const Window& w) {
    RingElement out(Basis::phi);
    GRat one{Rat(1)};
    GRat g1{to_rat(k1)};
    GRat g2{to_rat(k2)};
    GRat bracket = -((p.z - g1) * (p.zp - g1)) - ((p.w + g1 + one) * (p.wp + g1 + one)) -
                   ((p.z - g2 + one) * (p.zp - g2 + one)) - ((p.w + g2) * (p.wp + g2)) +
                   p.parameter_sum() + GRat(Rat(2));
    if (w.contains(k1) && w.contains(k2)) out.add_term(pair_key(k1, k2), bracket);
    // telescoping the diagonal rates along kappa + p*delta gives -4(k1-k2+2p)
    long long pmin = std::max<long long>({1, w.lo - k1, k2 - w.hi});
    long long pmax = std::min(w.hi - k1, k2 - w.lo);
    for (long long q = pmin; q <= pmax; ++q)
        out.add_term(pair_key(k1 + q, k2 - q), GRat(to_rat(-4 * (k1 - k2 + 2 * q))));
    return out;
}

}  // namespace

RingElement degree2_closed_form(const ParameterQuadruple& p, long long k1, long long k2,
                                const Window& w) {
    if (k1 < k2) throw std::invalid_argument("degree2_closed_form: requires k1 >= k2");
    RingElement out = plus_one_component(p, k1, k2, w);
    out += zero_component(p, k1, k2, w);
    out += mirror_element(plus_one_component(p.mirrored(), -k2, -k1, w.mirrored()));
    return out;
}

IdentityCheck verify_main_identity(const ParameterQuadruple& p, const Signature& mu,
                                   const Window& w) {
    RingElement e = sigma_to_phi(mu);
    for (const auto& [s, c] : e.terms())
        if (!w.shrunk(1).contains(s))
            throw std::domain_error("verify_main_identity: sigma expansion must keep margin 1");
    RingElement lhs = apply_D_windowed(p, e, w);
    RingElement rhs(Basis::phi);
    RingElement acted = apply_A(p, RingElement::monomial(Basis::sigma, mu));
    for (const auto& [nu, c] : acted.terms()) {
        RingElement t = truncate(sigma_to_phi(nu), w);
        t.scale(c);
        rhs += t;
    }
    IdentityCheck r;
    r.discrepancy = RingElement::first_difference(lhs, rhs);
    r.ok = r.discrepancy.empty();
    return r;
}

bool verify_phi_commutation(const ParameterQuadruple& p, const RingElement& e, const Window& w) {
    for (const auto& [s, c] : e.terms())
        if (!w.shrunk(2).contains(s))
            throw std::domain_error("verify_phi_commutation: support must keep margin 2");
    if (e.basis() == Basis::phi) {
        RingElement phiw(Basis::phi);
        for (long long n = w.lo; n <= w.hi; ++n) phiw.add_term(Signature({n}), GRat(1));
        RingElement lhs = apply_D_windowed(p, multiply(phiw, e), w);
        RingElement rhs = multiply(phiw, apply_D_windowed(p, e, w));
        return truncate(lhs - rhs, w.shrunk(1)).is_zero();
    }
    // sigma basis: the branching rule plays the role of multiplication by phi
    RingElement lhs(Basis::sigma);
    for (const auto& [mu, c] : e.terms()) {
        RingElement branched = phi_times_sigma(mu, w);
        branched.scale(c);
        lhs += apply_A(p, branched);
    }
    RingElement rhs(Basis::sigma);
    RingElement acted = apply_A(p, e);
    for (const auto& [mup, c] : acted.terms()) {
        RingElement branched = phi_times_sigma(mup, w);
        branched.scale(c);
        rhs += branched;
    }
    return truncate(lhs - rhs, w.shrunk(1)).is_zero();
}

RingElement row_sum_A(long long n, const Window& w) {
    RingElement acc = coefficient_A(n, n, w);
    for (long long n1 = n + 1; n1 <= w.hi; ++n1) acc += coefficient_A(n1, n, w);
    for (long long n2 = w.lo; n2 < n; ++n2) acc += coefficient_A(n, n2, w);
    return acc;
}

RingElement sum_B(const ParameterQuadruple& p, const Window& w) {
    RingElement acc(Basis::phi);
    for (long long n = w.lo - 1; n <= w.hi + 1; ++n) acc += truncate(coefficient_B(n, p), w);
    return acc;
}

}  // namespace urep
