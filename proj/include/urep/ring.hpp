#pragma once

#include <map>
#include <string>

#include "urep/rational.hpp"
#include "urep/signature.hpp"

#include <nlohmann/json_fwd.hpp>

namespace urep {

enum class Basis { phi, sigma };

/// Truncation window [lo, hi]: monomials with any index outside are killed.
struct Window {
    long long lo;
    long long hi;
    Window(long long l, long long h) : lo(l), hi(h) {
        if (l > h) throw std::invalid_argument("window lo > hi");
    }
    bool contains(long long n) const { return lo <= n && n <= hi; }
    bool contains(const Signature& s) const {
        return s.empty() || (s.min_part() >= lo && s.max_part() <= hi);
    }
    Window shrunk(long long by) const { return Window(lo + by, hi - by); }
    Window mirrored() const { return Window(-hi, -lo); }
};

/// Basis-tagged sparse linear combination of signatures (all lengths mixed;
/// the grading is read off from key lengths). Zero coefficients are never stored.
class RingElement {
  public:
    explicit RingElement(Basis b) : basis_(b) {}

    static RingElement unit(Basis b);  // the empty-signature monomial, i.e. 1
    static RingElement monomial(Basis b, Signature s, GRat c = GRat(1));

    Basis basis() const { return basis_; }
    const std::map<Signature, GRat>& terms() const& { return terms_; }
    // iterating the terms of an expiring element would dangle; move them out
    std::map<Signature, GRat> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Signature& s, const GRat& c);
    GRat coefficient(const Signature& s) const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    void scale(const GRat& c);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// First key (lexicographic) on which the two elements differ, rendered for
    /// discrepancy reports; empty string when equal.
    static std::string first_difference(const RingElement& a, const RingElement& b);

  private:
    Basis basis_;
    std::map<Signature, GRat> terms_;
};

std::string sig_to_string(const Signature& s);

/// Number of semistandard tableaux of shape lambda and content mu (signatures
/// of equal length and sum, handled through a uniform shift).
Int kostka_number(const Signature& lambda, const Signature& mu);

/// Structure constant c(lambda | mu, nu): coefficient of s_mu s_nu in the
/// split-variable expansion of the rational Schur function s_lambda.
/// Computed by the Littlewood-Richardson rule after a uniform shift.
Int lr_coefficient(const Signature& lambda, const Signature& mu, const Signature& nu);

/// Determinant expansion of the Schur-type basis element into monomials:
/// det[phi_{lambda_i - i + j}], indices of each product sorted and collected.
RingElement sigma_to_phi(const Signature& lambda);

/// Image of a phi-basis element in the window quotient, expressed in the
/// sigma basis restricted to signatures inside the window. Requires every
/// monomial of e to be supported inside w.
RingElement phi_to_sigma_window(const RingElement& e, const Window& w);

/// Product in a common basis: monomial concatenation (phi basis, always
/// finite), or scalar multiples in the sigma basis. A genuine sigma-basis
/// product is an infinite series along diagonal rays and is only available
/// window-relative below.
RingElement multiply(const RingElement& a, const RingElement& b);

/// Product in the window quotient expressed in its sigma basis:
/// sum over lambda inside w of c(lambda | mu, nu) via the
/// Littlewood-Richardson structure constants.
RingElement multiply_sigma_window(const RingElement& a, const RingElement& b, const Window& w);

/// phi * sigma_mu = sum of sigma_lambda over lambda interlacing mu, truncated
/// to lambda with all parts in w.
RingElement phi_times_sigma(const Signature& mu, const Window& w);

/// Drops every monomial with an index outside the window (phi basis); in the
/// sigma basis the quotient map kills exactly the keys outside the window.
RingElement truncate(const RingElement& e, const Window& w);

/// Sum over homogeneous components of max |a_lambda| / Dim lambda. Finite
/// support only; coefficients must be real rationals.
Rat norm(const RingElement& e);

nlohmann::json ring_element_to_json(const RingElement& e);
RingElement ring_element_from_json(const nlohmann::json& j);

}  // namespace urep
