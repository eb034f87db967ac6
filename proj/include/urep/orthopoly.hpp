#pragma once

#include "urep/mpoly.hpp"
#include "urep/operators.hpp"
#include "urep/ring.hpp"

namespace urep {

/// Dense univariate polynomial over Q.
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 constant(Rat v) { return Poly1({std::move(v)}); }
    static Poly1 x() { return Poly1({Rat(0), Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    Rat evaluate(const Rat& x) const;
    Poly1 derivative() const;
    /// Composition p(x + shift).
    Poly1 shifted(long long shift) const;
    MPoly as_mpoly(size_t nvars, size_t var) const;

    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    void scale(const Rat& v);
    std::string to_string(const std::string& var) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

struct HahnJacobiParams {
    Rat a, b;
    long long M = 0;  // Hahn only: lattice {0..M}

    void validate() const {
        if (!(a > -1) || !(b > -1)) throw std::domain_error("parameters a, b must exceed -1");
    }
};

/// (x)_p rising factorial.
Rat pochhammer(const Rat& x, long long p);

/// Terminating 3F2 series normalized to H_n(0) = 1; requires 0 <= n <= M.
Poly1 hahn_poly(long long n, const HahnJacobiParams& p);

/// Gauss 2F1 series normalized to J_n(0) = 1.
Poly1 jacobi_poly(long long n, const Rat& a, const Rat& b);

/// One-variable difference/differential operators attached to the families.
Poly1 apply_hahn_operator(const HahnJacobiParams& p, const Poly1& f);
Poly1 apply_jacobi_operator(const Rat& a, const Rat& b, const Poly1& f);

enum class Family { hahn, jacobi };

/// det[P_{nu_j+m-j}(x_i)] / Vandermonde, an exact symmetric polynomial.
MPoly multivariate_poly(Family which, const HahnJacobiParams& p, const Signature& nu, size_t m);

/// Vandermonde-conjugated sum of one-variable operators plus the constant
/// that kills constants.
MPoly apply_multivariate_operator(Family which, const HahnJacobiParams& p, size_t m,
                                  const MPoly& f);

/// sum_{n=0}^{m-1} n(n+a+b+1).
Rat conjugation_constant(const Rat& a, const Rat& b, size_t m);

/// Eigenvalue of the m-variate operator on the label nu.
Rat multivariate_eigenvalue(const Rat& a, const Rat& b, const Signature& nu, size_t m);

/// Coefficients P_0..P_m of prod_i (t_i + (1-t_i) u) as polynomials in t;
/// under the (k,l) split phi_n corresponds to P_{n+l}.
std::vector<MPoly> phi_t_polys(size_t m);

/// Symmetric polynomial from a phi-basis element: phi_n -> P_{n+l}(t).
MPoly sym_from_phi_element(const RingElement& e, size_t m, long long l);

/// Lift of a symmetric polynomial to a polynomial in phi_{-l},...,phi_k
/// (k+l = m) through the elementary-symmetric linear dictionary.
RingElement lift_to_phi(const MPoly& f, size_t m, long long k, long long l);

/// The jump-rate operator reduced to the (m,0) window quotient, realized on
/// symmetric polynomials in t. Parameters are z=m, z'=m+a, w=0, w'=b.
MPoly quotient_rate_operator(size_t m, const Rat& a, const Rat& b, const MPoly& f);

/// Exact link row value at a rational point t (coinciding coordinates handled
/// by confluent divided differences).
Rat hahn_link_row(const std::vector<Rat>& t, size_t N, const Signature& lambda);

/// The same link row as an exact polynomial in t.
MPoly hahn_link_poly(size_t m, size_t N, const Signature& lambda);

/// Main quotient identity: the rate operator equals the m-variate Jacobi
/// operator on f.
bool verify_theorem_main_quotient(size_t m, const Rat& a, const Rat& b, const MPoly& f);

/// Degenerate-parameter reduction of the differential operator to the
/// (k,-l) window agrees with the (k+l)-variate Jacobi operator with
/// a = z'-k, b = w'-l.
bool verify_degenerate_reduction(long long k, long long l, const Rat& a, const Rat& b,
                                 const MPoly& f);

}  // namespace urep
