#include "urep/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace urep {

Signature::Signature(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i]) throw std::invalid_argument("signature parts must be weakly decreasing");
}

std::optional<Signature> Signature::try_make(std::vector<long long> parts) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) return std::nullopt;
    Signature s;
    s.parts_ = std::move(parts);
    return s;
}

long long Signature::sum() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
}

long long Signature::max_part() const { return parts_.front(); }
long long Signature::min_part() const { return parts_.back(); }

std::optional<Signature> Signature::neighbor(size_t i, int delta) const {
    std::vector<long long> p = parts_;
    p[i] += delta;
    return try_make(std::move(p));
}

Signature Signature::negated_reversed() const {
    std::vector<long long> p(parts_.rbegin(), parts_.rend());
    for (long long& x : p) x = -x;
    return Signature(std::move(p));
}

MayaCoordinates maya_of(const Signature& s) {
    const long long n = static_cast<long long>(s.length());
    MayaCoordinates m;
    m.values.reserve(s.length());
    for (long long i = 0; i < n; ++i) m.values.push_back(s[i] + n - 1 - i);
    return m;
}

bool interlaces(const Signature& mu, const Signature& lambda) {
    if (lambda.length() != mu.length() + 1)
        throw std::invalid_argument("interlaces: length(lambda) must equal length(mu)+1");
    for (size_t i = 0; i < mu.length(); ++i)
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
    return true;
}

bool dominance_leq(const Signature& mu, const Signature& lambda) {
    if (lambda.length() != mu.length()) throw std::invalid_argument("dominance_leq: unequal lengths");
    long long pm = 0, pl = 0;
    for (size_t i = 0; i < mu.length(); ++i) {
        pm += mu[i];
        pl += lambda[i];
        if (pm > pl) return false;
    }
    return pm == pl;
}

Int weyl_dimension(const Signature& lambda) {
    return dimension_or_zero(lambda.parts());
}

Int dimension_or_zero(std::span<const long long> parts) {
    const long long n = static_cast<long long>(parts.size());
    Int num = 1, den = 1;
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j) {
            num *= to_int(parts[i] - parts[j] + j - i);
            den *= to_int(j - i);
        }
    if (num == 0) return 0;
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

RectangleComplement complement_in_rectangle(const Signature& lambda, long long m, long long N) {
    if (static_cast<long long>(lambda.length()) != N)
        throw std::invalid_argument("complement_in_rectangle: lambda must have length N");
    if (N < 1 || m < 1) throw std::domain_error("complement_in_rectangle: m, N must be positive");
    if (lambda.min_part() < 0 || lambda.max_part() > m)
        throw std::domain_error("complement_in_rectangle: lambda must fit inside (m^N)");

    // Conjugate by column counting, then rotate.
    std::vector<long long> conj(m, 0);
    for (long long j = 1; j <= m; ++j)
        for (size_t i = 0; i < lambda.length(); ++i)
            if (lambda[i] >= j) ++conj[j - 1];
    std::vector<long long> kappa(m);
    for (long long j = 0; j < m; ++j) kappa[j] = N - conj[m - 1 - j];

    RectangleComplement rc;
    rc.kappa = Signature(std::move(kappa));
    rc.L = maya_of(lambda);
    MayaCoordinates K;
    for (long long j = 0; j < m; ++j) K.values.push_back(rc.kappa[j] + m - 1 - j);
    rc.K = std::move(K);
    return rc;
}

Rat vandermonde(std::span<const Rat> xs) {
    Rat v = 1;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
    return v;
}

Int vandermonde_int(std::span<const long long> xs) {
    Int v = 1;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) v *= to_int(xs[i] - xs[j]);
    return v;
}

namespace {
void enumerate_rec(size_t n, long long lo, long long hi, std::vector<long long>& acc,
                   std::vector<Signature>& out) {
    if (acc.size() == n) {
        out.push_back(Signature(acc));
        return;
    }
    long long top = acc.empty() ? hi : acc.back();
    for (long long v = top; v >= lo; --v) {
        acc.push_back(v);
        enumerate_rec(n, lo, hi, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Signature> signatures_in_window(size_t n, long long lo, long long hi) {
    std::vector<Signature> out;
    if (lo > hi) return out;
    std::vector<long long> acc;
    enumerate_rec(n, lo, hi, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Signature> interlacing_above(const Signature& mu, long long lo, long long hi) {
    std::vector<Signature> out;
    std::vector<long long> acc;
    const size_t n = mu.length() + 1;
    // lambda_1 in [mu_1, hi], lambda_i in [mu_i, mu_{i-1}] for 1<i<=N, last in [lo, mu_N].
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            out.push_back(Signature(acc));
            return;
        }
        long long up, down;
        if (i == 0) {
            up = hi;
            down = mu.empty() ? lo : mu[0];
        } else if (i < mu.length()) {
            up = mu[i - 1];
            down = mu[i];
        } else {
            up = mu.empty() ? hi : mu[i - 1];
            down = lo;
        }
        up = std::min(up, hi);
        down = std::max(down, lo);
        if (!acc.empty()) up = std::min(up, acc.back());
        for (long long v = up; v >= down; --v) {
            acc.push_back(v);
            self(self, i + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace urep
