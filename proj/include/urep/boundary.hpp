#pragma once

#include <map>

#include "urep/ring.hpp"

#include <nlohmann/json_fwd.hpp>

namespace urep {

/// A point of the boundary parameter space: two decreasing alpha/beta lists
/// and the totals delta±. gamma± = delta± - sum(alpha±+beta±) >= 0.
struct BoundaryPoint {
    std::vector<Rat> alpha_plus, beta_plus, alpha_minus, beta_minus;
    Rat delta_plus{0}, delta_minus{0};

    Rat gamma_plus() const;
    Rat gamma_minus() const;
    void validate() const;  // throws std::domain_error on constraint violation
};

/// Simplex point: alphas empty, deltas equal to the beta sums (gamma = 0).
BoundaryPoint make_simplex_point(std::vector<Rat> beta_plus, std::vector<Rat> beta_minus);

/// The point of the (m,0) simplex with coordinates 1 >= t_1 >= ... >= t_m >= 0,
/// i.e. beta+ = (1-t_m, ..., 1-t_1).
BoundaryPoint simplex_point_from_t(const std::vector<Rat>& t);

/// Exact Laurent coefficients of the character generating function on a
/// window, with a certified nonnegative tail bound (zero when all alpha = 0).
struct LaurentWindow {
    std::map<long long, Rat> coeffs;
    Rat err{0};
};

/// Exact mode: requires gamma+ = gamma- = 0. With alphas present the
/// geometric factors are truncated so the dropped mass stays below tol, and
/// the result carries that bound; with alphas absent the result is exact.
LaurentWindow phi_hat_window(const BoundaryPoint& omega, const Window& w, const Rat& tol = Rat(0));

struct ScalarResult {
    Rat value{0};
    Rat err{0};
    bool exact() const { return err == 0; }
};

ScalarResult phi_hat(const BoundaryPoint& omega, long long n, const Window& w,
                     const Rat& tol = Rat(0));

/// Float mode: handles gamma > 0 through truncated exponential factors.
double phi_hat_approx(const BoundaryPoint& omega, long long n, const Window& w, double tol);

/// det[phi_hat_{lambda_i-i+j}]; exact and nonnegative on beta-only points.
ScalarResult sigma_hat(const BoundaryPoint& omega, const Signature& lambda, const Window& w);

/// Float-mode determinant over numerically expanded coefficients.
double sigma_hat_approx(const BoundaryPoint& omega, const Signature& lambda, const Window& w,
                        double tol);

/// Link row entry Dim_N(lambda) * sigma_hat_lambda(omega).
ScalarResult link_infinity(const BoundaryPoint& omega, size_t N, const Signature& lambda,
                           const Window& w);

enum class OmegaSymmetry { conjugate, twist };

/// conjugate: swap the ± triples. twist: multiply the character by det,
/// i.e. prepend 1-beta1^- to beta+, pop beta1^-, shift the deltas.
BoundaryPoint symmetry(const BoundaryPoint& omega, OmegaSymmetry which);

nlohmann::json boundary_point_to_json(const BoundaryPoint& omega);
BoundaryPoint boundary_point_from_json(const nlohmann::json& j);

}  // namespace urep
