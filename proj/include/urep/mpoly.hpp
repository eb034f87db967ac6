#pragma once

#include <map>
#include <vector>

#include "urep/rational.hpp"

namespace urep {

/// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
  public:
    explicit MPoly(size_t nvars = 0) : nvars_(nvars) {}
    static MPoly constant(size_t nvars, Rat c);
    static MPoly variable(size_t nvars, size_t i, int power = 1);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& expo, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    void scale(const Rat& c);

    MPoly derivative(size_t var) const;
    /// Substitution x_var -> x_var + shift.
    MPoly shifted(size_t var, long long shift) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    /// Collapses variable var to a constant value.
    MPoly partial_evaluate(size_t var, const Rat& value) const;

    /// Exact division by (x_i - x_j); throws std::logic_error on a nonzero
    /// remainder.
    MPoly divide_by_linear_difference(size_t i, size_t j) const;

    bool is_symmetric() const;
    int total_degree() const;

  private:
    size_t nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

/// prod_{i<j} (x_i - x_j) on nvars variables.
MPoly vandermonde_poly(size_t nvars);

/// Exact division by the full Vandermonde.
MPoly divide_by_vandermonde(const MPoly& p);

/// Elementary symmetric polynomial e_k.
MPoly elementary_symmetric(size_t nvars, size_t k);

/// Monomial symmetric polynomial m_kappa for a weakly decreasing exponent
/// vector (padded with zeros to nvars).
MPoly monomial_symmetric(size_t nvars, const std::vector<int>& kappa);

/// Writes a symmetric polynomial as a polynomial in e_1..e_m; keys are
/// exponent vectors of the e's.
std::map<std::vector<int>, Rat> decompose_in_elementary(const MPoly& f);

}  // namespace urep
