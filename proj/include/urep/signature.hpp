#pragma once

#include <optional>
#include <span>
#include <vector>

#include "urep/rational.hpp"

namespace urep {

/// Weakly decreasing integer vector; the highest weight of an irreducible
/// U(N) representation. Length 0 is the empty signature.
class Signature {
  public:
    Signature() = default;
    explicit Signature(std::vector<long long> parts);

    /// Returns nullopt instead of throwing when parts are not weakly decreasing.
    static std::optional<Signature> try_make(std::vector<long long> parts);

    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long sum() const;
    const std::vector<long long>& parts() const { return parts_; }
    long long operator[](size_t i) const { return parts_[i]; }
    long long max_part() const;  // requires non-empty
    long long min_part() const;

    /// nu with part i shifted by delta (+1/-1), if still a signature.
    std::optional<Signature> neighbor(size_t i, int delta) const;

    /// (-lambda_N, ..., -lambda_1): negation composed with reversal.
    Signature negated_reversed() const;

    friend bool operator==(const Signature& a, const Signature& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
    friend bool operator<(const Signature& a, const Signature& b) { return a.parts_ < b.parts_; }

  private:
    std::vector<long long> parts_;
};

/// Strictly decreasing nonnegative coordinates l_i = lambda_i + N - i.
struct MayaCoordinates {
    std::vector<long long> values;
};

MayaCoordinates maya_of(const Signature& s);

/// mu interlaces lambda: lambda_i >= mu_i >= lambda_{i+1}; requires
/// length(lambda) = length(mu) + 1.
bool interlaces(const Signature& mu, const Signature& lambda);

/// Dominance order on equal-length signatures: lambda - mu a nonnegative
/// combination of simple roots e_i - e_{i+1} (equal sums, prefix sums ordered).
bool dominance_leq(const Signature& mu, const Signature& lambda);

/// Weyl dimension formula: prod_{i<j} (l_i - l_j)/(j - i), exact integer.
Int weyl_dimension(const Signature& lambda);

/// Dimension extended by the Vandermonde-vanishing convention: 0 whenever the
/// shifted coordinates collide (i.e. the vector is not a signature).
Int dimension_or_zero(std::span<const long long> parts);

struct RectangleComplement {
    Signature kappa;        // complementary diagram inside (N^m)
    MayaCoordinates L;      // l_i = lambda_i + N - i
    MayaCoordinates K;      // k_j = kappa_j + m - j
};

/// Complement of a Young diagram lambda inside the rectangle (m^N); the two
/// coordinate sets partition {0, ..., N+m-1}.
RectangleComplement complement_in_rectangle(const Signature& lambda, long long m, long long N);

/// prod_{i<j} (x_i - x_j); zero when entries repeat.
Rat vandermonde(std::span<const Rat> xs);
Int vandermonde_int(std::span<const long long> xs);

/// All signatures of length n with parts in [lo, hi], in lexicographic order.
std::vector<Signature> signatures_in_window(size_t n, long long lo, long long hi);

/// All lambda of length(mu)+1 interlacing mu, with parts clamped to [lo, hi].
std::vector<Signature> interlacing_above(const Signature& mu, long long lo, long long hi);

}  // namespace urep
