#include "urep/boundary.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace urep {

namespace {
Rat list_sum(const std::vector<Rat>& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    return s;
}

void check_decreasing_nonneg(const std::vector<Rat>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw std::domain_error(std::string(name) + ": negative entry");
        if (i && v[i - 1] < v[i]) throw std::domain_error(std::string(name) + ": not weakly decreasing");
    }
}
}  // namespace

Rat BoundaryPoint::gamma_plus() const {
    Rat g = delta_plus - list_sum(alpha_plus) - list_sum(beta_plus);
    return g;
}

Rat BoundaryPoint::gamma_minus() const {
    Rat g = delta_minus - list_sum(alpha_minus) - list_sum(beta_minus);
    return g;
}

void BoundaryPoint::validate() const {
    check_decreasing_nonneg(alpha_plus, "alpha+");
    check_decreasing_nonneg(beta_plus, "beta+");
    check_decreasing_nonneg(alpha_minus, "alpha-");
    check_decreasing_nonneg(beta_minus, "beta-");
    if (gamma_plus() < 0) throw std::domain_error("delta+ smaller than sum of alpha+/beta+");
    if (gamma_minus() < 0) throw std::domain_error("delta- smaller than sum of alpha-/beta-");
    Rat b1p = beta_plus.empty() ? Rat(0) : beta_plus.front();
    Rat b1m = beta_minus.empty() ? Rat(0) : beta_minus.front();
    if (b1p + b1m > 1) throw std::domain_error("beta1+ + beta1- exceeds 1");
}

BoundaryPoint make_simplex_point(std::vector<Rat> beta_plus, std::vector<Rat> beta_minus) {
    BoundaryPoint p;
    p.beta_plus = std::move(beta_plus);
    p.beta_minus = std::move(beta_minus);
    p.delta_plus = list_sum(p.beta_plus);
    p.delta_minus = list_sum(p.beta_minus);
    p.validate();
    for (const Rat& b : p.beta_plus)
        if (b > 1) throw std::domain_error("beta+ entry exceeds 1");
    for (const Rat& b : p.beta_minus)
        if (b > 1) throw std::domain_error("beta- entry exceeds 1");
    return p;
}

BoundaryPoint simplex_point_from_t(const std::vector<Rat>& t) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] > 1) throw std::domain_error("t coordinates must lie in [0,1]");
        if (i && t[i - 1] < t[i]) throw std::domain_error("t coordinates must be weakly decreasing");
    }
    std::vector<Rat> beta;
    for (auto it = t.rbegin(); it != t.rend(); ++it) beta.push_back(Rat(1 - *it));
    return make_simplex_point(std::move(beta), {});
}

namespace {

// Convolve acc with a factor given on [flo, fhi]; keep [lo-reach_hi, hi-reach_lo]
// style bounds implicitly by keeping everything (factors are short) and
// trimming once at the end. All factor masses are <= 1 and nonnegative, so the
// dropped tail of a truncated geometric factor bounds the final coefficient error.
void convolve(std::map<long long, Rat>& acc, const std::map<long long, Rat>& factor) {
    std::map<long long, Rat> next;
    for (const auto& [i, a] : acc)
        for (const auto& [j, b] : factor) next[i + j] += a * b;
    acc = std::move(next);
}

}  // namespace

LaurentWindow phi_hat_window(const BoundaryPoint& omega, const Window& w, const Rat& tol) {
    omega.validate();
    if (omega.gamma_plus() != 0 || omega.gamma_minus() != 0)
        throw std::domain_error("phi_hat exact mode requires gamma+ = gamma- = 0");

    size_t nalpha = omega.alpha_plus.size() + omega.alpha_minus.size();
    if (nalpha > 0 && tol <= 0)
        throw std::domain_error("phi_hat exact mode with alpha > 0 needs a positive tolerance");

    LaurentWindow out;
    std::map<long long, Rat> acc;
    acc[0] = 1;
    for (const Rat& b : omega.beta_plus) convolve(acc, {{0, Rat(1 - b)}, {1, b}});
    for (const Rat& b : omega.beta_minus) convolve(acc, {{0, Rat(1 - b)}, {-1, b}});

    for (int side = 0; side < 2; ++side) {
        const auto& alphas = side == 0 ? omega.alpha_plus : omega.alpha_minus;
        const long long dir = side == 0 ? 1 : -1;
        for (const Rat& a : alphas) {
            if (a == 0) continue;
            // 1/(1-a(u-1)) = sum_k a^k/(1+a)^{k+1} u^k, ratio a/(1+a) < 1
            Rat ratio = a / (1 + a);
            Rat budget = tol / Rat(static_cast<long>(nalpha));
            std::map<long long, Rat> f;
            Rat coef = Rat(1) / (1 + a);
            Rat tail = 1;
            long long k = 0;
            while (true) {
                tail *= ratio;  // mass beyond degree k
                f[dir * k] = coef;
                if (tail <= budget) break;
                coef *= ratio;
                ++k;
                if (k > 100000) throw std::domain_error("phi_hat: tolerance unreachable");
            }
            out.err += tail;
            convolve(acc, f);
        }
    }
    for (const auto& [n, c] : acc)
        if (w.contains(n)) out.coeffs[n] = c;
    return out;
}

ScalarResult phi_hat(const BoundaryPoint& omega, long long n, const Window& w, const Rat& tol) {
    if (!w.contains(n)) throw std::invalid_argument("phi_hat: index outside window");
    LaurentWindow lw = phi_hat_window(omega, w, tol);
    ScalarResult r;
    auto it = lw.coeffs.find(n);
    if (it != lw.coeffs.end()) r.value = it->second;
    r.err = lw.err;
    return r;
}

double phi_hat_approx(const BoundaryPoint& omega, long long n, const Window& w, double tol) {
    omega.validate();
    if (!w.contains(n)) throw std::invalid_argument("phi_hat: index outside window");
    std::map<long long, double> acc;
    acc[0] = 1.0;
    auto convolve_d = [](std::map<long long, double>& a, const std::map<long long, double>& f) {
        std::map<long long, double> next;
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : f) next[i + j] += x * y;
        a = std::move(next);
    };
    size_t nfactors = omega.alpha_plus.size() + omega.alpha_minus.size() + 2;
    double budget = tol / static_cast<double>(nfactors);

    for (const Rat& b : omega.beta_plus)
        convolve_d(acc, {{0, 1.0 - b.get_d()}, {1, b.get_d()}});
    for (const Rat& b : omega.beta_minus)
        convolve_d(acc, {{0, 1.0 - b.get_d()}, {-1, b.get_d()}});
    for (int side = 0; side < 2; ++side) {
        const auto& alphas = side == 0 ? omega.alpha_plus : omega.alpha_minus;
        const Rat gamma = side == 0 ? omega.gamma_plus() : omega.gamma_minus();
        const long long dir = side == 0 ? 1 : -1;
        for (const Rat& ar : alphas) {
            double a = ar.get_d();
            if (a == 0.0) continue;
            double ratio = a / (1.0 + a);
            std::map<long long, double> f;
            double coef = 1.0 / (1.0 + a), tail = 1.0;
            long long k = 0;
            while (true) {
                tail *= ratio;
                f[dir * k] = coef;
                if (tail <= budget || k > 1000000) break;
                coef *= ratio;
                ++k;
            }
            convolve_d(acc, f);
        }
        double g = gamma.get_d();
        if (g > 0.0) {
            // e^{gamma(u-1)}: Poisson weights
            std::map<long long, double> f;
            double coef = std::exp(-g), mass = coef;
            long long k = 0;
            while (true) {
                f[dir * k] = coef;
                if (1.0 - mass <= budget || k > 1000000) break;
                ++k;
                coef *= g / static_cast<double>(k);
                mass += coef;
            }
            convolve_d(acc, f);
        }
    }
    auto it = acc.find(n);
    return it == acc.end() ? 0.0 : it->second;
}

ScalarResult sigma_hat(const BoundaryPoint& omega, const Signature& lambda, const Window& w) {
    const size_t n = lambda.length();
    if (n == 0) return {Rat(1), Rat(0)};
    long long need_lo = lambda.min_part() - static_cast<long long>(n) + 1;
    long long need_hi = lambda.max_part() + static_cast<long long>(n) - 1;
    if (need_lo < w.lo || need_hi > w.hi)
        throw std::domain_error("sigma_hat: window too small for the determinant entries");
    if (!omega.alpha_plus.empty() || !omega.alpha_minus.empty())
        throw std::domain_error("sigma_hat exact mode requires alpha = 0");
    LaurentWindow lw = phi_hat_window(omega, w);
    auto entry = [&](long long idx) -> Rat {
        auto it = lw.coeffs.find(idx);
        return it == lw.coeffs.end() ? Rat(0) : it->second;
    };
    // determinant by permutation expansion (desk-scale N)
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    Rat det = 0;
    do {
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rat prod = (inv % 2 == 0) ? Rat(1) : Rat(-1);
        for (size_t i = 0; i < n; ++i)
            prod *= entry(lambda[i] - static_cast<long long>(i) + perm[i]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {det, Rat(0)};
}

double sigma_hat_approx(const BoundaryPoint& omega, const Signature& lambda, const Window& w,
                        double tol) {
    const size_t n = lambda.length();
    if (n == 0) return 1.0;
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    double det = 0.0;
    double entry_tol = tol / static_cast<double>(n * n);
    std::map<long long, double> cache;
    auto entry = [&](long long idx) {
        if (!w.contains(idx)) return 0.0;
        auto it = cache.find(idx);
        if (it != cache.end()) return it->second;
        double v = phi_hat_approx(omega, idx, w, entry_tol);
        cache[idx] = v;
        return v;
    };
    do {
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        double prod = (inv % 2 == 0) ? 1.0 : -1.0;
        for (size_t i = 0; i < n; ++i)
            prod *= entry(lambda[i] - static_cast<long long>(i) + perm[i]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

ScalarResult link_infinity(const BoundaryPoint& omega, size_t N, const Signature& lambda,
                           const Window& w) {
    if (lambda.length() != N) throw std::invalid_argument("link_infinity: length(lambda) != N");
    ScalarResult r = sigma_hat(omega, lambda, w);
    r.value *= Rat(weyl_dimension(lambda));
    return r;
}

BoundaryPoint symmetry(const BoundaryPoint& omega, OmegaSymmetry which) {
    BoundaryPoint out = omega;
    if (which == OmegaSymmetry::conjugate) {
        std::swap(out.alpha_plus, out.alpha_minus);
        std::swap(out.beta_plus, out.beta_minus);
        std::swap(out.delta_plus, out.delta_minus);
        return out;
    }
    // twist: multiply the character by det(U)
    Rat b1m = omega.beta_minus.empty() ? Rat(0) : omega.beta_minus.front();
    out.beta_plus.insert(out.beta_plus.begin(), Rat(1 - b1m));
    if (!out.beta_minus.empty()) out.beta_minus.erase(out.beta_minus.begin());
    out.delta_plus += 1 - b1m;
    out.delta_minus -= b1m;
    out.validate();
    return out;
}

nlohmann::json boundary_point_to_json(const BoundaryPoint& omega) {
    auto list = [](const std::vector<Rat>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const Rat& x : v) a.push_back(rat_to_string(x));
        return a;
    };
    nlohmann::json j;
    j["alpha_plus"] = list(omega.alpha_plus);
    j["beta_plus"] = list(omega.beta_plus);
    j["alpha_minus"] = list(omega.alpha_minus);
    j["beta_minus"] = list(omega.beta_minus);
    j["delta_plus"] = rat_to_string(omega.delta_plus);
    j["delta_minus"] = rat_to_string(omega.delta_minus);
    return j;
}

BoundaryPoint boundary_point_from_json(const nlohmann::json& j) {
    auto list = [](const nlohmann::json& a) {
        std::vector<Rat> v;
        for (const auto& x : a) v.push_back(rat_from_string(x.get<std::string>()));
        return v;
    };
    BoundaryPoint p;
    p.alpha_plus = list(j.at("alpha_plus"));
    p.beta_plus = list(j.at("beta_plus"));
    p.alpha_minus = list(j.at("alpha_minus"));
    p.beta_minus = list(j.at("beta_minus"));
    p.delta_plus = rat_from_string(j.at("delta_plus").get<std::string>());
    p.delta_minus = rat_from_string(j.at("delta_minus").get<std::string>());
    p.validate();
    return p;
}

}  // namespace urep
