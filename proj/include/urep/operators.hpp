#pragma once

#include "urep/ring.hpp"

namespace urep {

/// The four parameters (z, z', w, w') as Gaussian rationals.
struct ParameterQuadruple {
    GRat z, zp, w, wp;

    GRat parameter_sum() const { return z + zp + w + wp; }
    /// Swaps (z,z') <-> (w,w'); the involution behind the +1/-1 component symmetry.
    ParameterQuadruple mirrored() const { return {w, wp, z, zp}; }
    /// Simultaneous parameter shift matching phi_n -> phi_{n+m}.
    ParameterQuadruple shifted(long long m) const;
    std::string to_string() const;
};

ParameterQuadruple quadruple_from_strings(const std::string& z, const std::string& zp,
                                          const std::string& w, const std::string& wp);

/// Quadratic coefficient A_{n1 n2} of the second-order operator, truncated to
/// the window (only finitely many of its terms have all indices inside).
RingElement coefficient_A(long long n1, long long n2, const Window& w);

/// Linear coefficient B_n; the only parameter-dependent part of the operator.
RingElement coefficient_B(long long n, const ParameterQuadruple& p);

/// The image of phi_{(l_1..l_N)} under negating and reversing every monomial
/// key (coefficients untouched).
RingElement mirror_element(const RingElement& e);

/// Second-order operator applied to a finite phi-basis element, computed in
/// the window quotient. Requires support inside the open interior
/// [lo+1, hi-1]; apply_D_windowed skips that check and is exact as the
/// composition truncate(D(e)) for any e supported inside the window.
RingElement apply_D(const ParameterQuadruple& p, const RingElement& e, const Window& w);
RingElement apply_D_windowed(const ParameterQuadruple& p, const RingElement& e, const Window& w);

/// Birth rate r(nu, nu+e_i) = (z-nu_i+i-1)(z'-nu_i+i-1) and death rate
/// r(nu, nu-e_i) = (w+nu_i-i+N)(w'+nu_i-i+N), evaluated formally (no validity
/// check on the target vector). i is 0-based.
GRat rate_up(const ParameterQuadruple& p, const Signature& nu, size_t i);
GRat rate_down(const ParameterQuadruple& p, const Signature& nu, size_t i);

/// Closed form of the diagonal entry q(nu,nu): the quadratic Casimir-type
/// constant minus the formal sum of all 2N neighbor rates.
GRat diagonal_rate(const ParameterQuadruple& p, const Signature& nu);

/// r(nu,mu) for mu in {nu, nu±e_i}; 0 for a non-neighbor is a usage error.
/// jump_rate_step returns 0 when the stepped vector is not a signature.
GRat jump_rate(const ParameterQuadruple& p, size_t N, const Signature& nu, const Signature& mu);
GRat jump_rate_step(const ParameterQuadruple& p, const Signature& nu, size_t i, int delta);

/// The sigma-basis operator: sigma_mu -> q(mu,mu) sigma_mu + sum over valid
/// neighbors nu of r(nu,mu) sigma_nu; annihilates the unit.
RingElement apply_A(const ParameterQuadruple& p, const RingElement& e);

/// Independent closed form of the operator on a quadratic monomial
/// phi_{(k1,k2)}, assembled from the explicit +1/0 components and the mirror
/// image of the +1 component. Cross-check oracle for apply_D.
RingElement degree2_closed_form(const ParameterQuadruple& p, long long k1, long long k2,
                                const Window& w);

struct IdentityCheck {
    bool ok = false;
    std::string discrepancy;  // first differing monomial when !ok
};

/// Main identity: the differential-operator route and the jump-rate route
/// agree on sigma_mu after truncation to the window.
IdentityCheck verify_main_identity(const ParameterQuadruple& p, const Signature& mu,
                                   const Window& w);

/// Commutation with multiplication by phi for the differential operator
/// (checked on the window interior) and, for sigma-basis input, the
/// rate-operator version through the branching rule.
bool verify_phi_commutation(const ParameterQuadruple& p, const RingElement& e, const Window& w);

/// Window truncation of A_{nn} + sum_{n1>n} A_{n1,n} + sum_{n2<n} A_{n,n2};
/// cancels to zero exactly.
RingElement row_sum_A(long long n, const Window& w);

/// Window truncation of sum_n B_n (n running one step past the window);
/// telescopes to zero.
RingElement sum_B(const ParameterQuadruple& p, const Window& w);

}  // namespace urep
