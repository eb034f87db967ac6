#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "urep/ring.hpp"

using namespace urep;

namespace {

RingElement phi(std::vector<long long> parts, Rat c = Rat(1)) {
    return RingElement::monomial(Basis::phi, Signature(std::move(parts)), GRat(std::move(c)));
}
RingElement sig(std::vector<long long> parts, Rat c = Rat(1)) {
    return RingElement::monomial(Basis::sigma, Signature(std::move(parts)), GRat(std::move(c)));
}

// Test-local expansion of det[phi_{lambda_i-i+j}] for N=3, written against the
// cofactor formula rather than the library's permutation loop.
RingElement det3_by_cofactors(const Signature& lam) {
    auto idx = [&](size_t i, size_t j) {
        return lam[i] - static_cast<long long>(i) + static_cast<long long>(j);
    };
    auto mono2 = [](long long a, long long b, Rat c) {
        std::vector<long long> v{a, b};
        std::sort(v.begin(), v.end(), std::greater<>());
        return RingElement::monomial(Basis::phi, Signature(std::move(v)), GRat(std::move(c)));
    };
    RingElement out(Basis::phi);
    for (size_t col = 0; col < 3; ++col) {
        size_t c1 = col == 0 ? 1 : 0;
        size_t c2 = col == 2 ? 1 : 2;
        RingElement minor = mono2(idx(1, c1), idx(2, c2), Rat(1)) - mono2(idx(1, c2), idx(2, c1), Rat(1));
        RingElement top = RingElement::monomial(Basis::phi, Signature({idx(0, col)}),
                                                GRat(Rat(col % 2 == 0 ? 1 : -1)));
        out += multiply(top, minor);
    }
    return out;
}

// Laurent polynomials in a few variables; Schur functions built from the
// branching recursion, an oracle independent of tableau counting.
using LPoly = std::map<std::vector<long long>, Rat>;

LPoly lp_mul(const LPoly& a, const LPoly& b) {
    LPoly out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            std::vector<long long> e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out[e] += c1 * c2;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

void lp_add_scaled(LPoly& a, const LPoly& b, const Rat& c) {
    for (const auto& [e, v] : b) {
        a[e] += v * c;
        if (a[e] == 0) a.erase(e);
    }
}

// s_lambda(u_1..u_n) embedded into nvars variables starting at offset.
LPoly schur_branching(const Signature& lam, size_t nvars, size_t offset) {
    const size_t n = lam.length();
    LPoly out;
    if (n == 0) {
        out[std::vector<long long>(nvars, 0)] = 1;
        return out;
    }
    std::vector<long long> acc;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i + 1 == n) {
            Signature mu{std::vector<long long>(acc)};
            LPoly lower = schur_branching(mu, nvars, offset);
            std::vector<long long> mono(nvars, 0);
            mono[offset + n - 1] = lam.sum() - mu.sum();
            LPoly top;
            top[mono] = 1;
            lp_add_scaled(out, lp_mul(lower, top), Rat(1));
            return;
        }
        long long up = std::min(lam[i], i ? acc.back() : lam[i]);
        for (long long v = up; v >= lam[i + 1]; --v) {
            acc.push_back(v);
            self(self, i + 1);
            acc.pop_back();
        }
    };
    if (n == 1) {
        std::vector<long long> mono(nvars, 0);
        mono[offset] = lam[0];
        out[mono] = 1;
        return out;
    }
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("sigma_to_phi small cases") {
    CHECK(sigma_to_phi(Signature({5})) == phi({5}));
    CHECK(sigma_to_phi(Signature()) == RingElement::unit(Basis::phi));
    // two-row formula
    for (long long a : {3LL, 1LL, 0LL})
        for (long long b : {0LL, -2LL})
            if (a >= b)
                CHECK(sigma_to_phi(Signature({a, b})) == phi({a, b}) - phi({a + 1, b - 1}));
}

TEST_CASE("sigma_to_phi three rows against cofactor expansion") {
    for (const Signature& lam : signatures_in_window(3, -2, 2)) {
        CHECK(sigma_to_phi(lam) == det3_by_cofactors(lam));
        CHECK(sigma_to_phi(lam).coefficient(lam) == GRat(1));
    }
    RingElement e = sigma_to_phi(Signature({1, 0, -1}));
    CHECK(e == det3_by_cofactors(Signature({1, 0, -1})));
}

TEST_CASE("phi_to_sigma_window examples") {
    Window w{-2, 2};
    RingElement got = phi_to_sigma_window(phi({1, -1}), w);
    CHECK(got == sig({1, -1}) + sig({2, -2}));

    Window w2{-3, 3};
    CHECK(phi_to_sigma_window(phi({2}), w2) == sig({2}));

    // phi_(1,1) expands with unit coefficients along the diagonal ray
    Window w3{0, 2};
    CHECK(phi_to_sigma_window(phi({1, 1}), w3) == sig({1, 1}) + sig({2, 0}));

    CHECK_THROWS_AS(phi_to_sigma_window(phi({5, 0}), w), std::domain_error);
}

TEST_CASE("phi monomial expands along the diagonal ray with unit coefficients") {
    Window w{-4, 4};
    RingElement e = phi_to_sigma_window(phi({2, -1}), w);
    RingElement expect(Basis::sigma);
    for (long long n = 0; n <= 2; ++n) expect.add_term(Signature({2 + n, -1 - n}), GRat(1));
    CHECK(e == expect);
}

TEST_CASE("round trip through the window quotient") {
    Window w{-5, 5};
    for (int n = 1; n <= 3; ++n)
        for (const Signature& lam : signatures_in_window(static_cast<size_t>(n), -2, 2))
            CHECK(phi_to_sigma_window(sigma_to_phi(lam), w) ==
                  RingElement::monomial(Basis::sigma, lam));
}

TEST_CASE("lr_coefficient examples") {
    CHECK(lr_coefficient(Signature({1, 1}), Signature({1}), Signature({1})) == 1);
    CHECK(lr_coefficient(Signature({2, 0}), Signature({1}), Signature({1})) == 1);
    CHECK(lr_coefficient(Signature({1, 1}), Signature({2}), Signature({1})) == 0);
    CHECK(lr_coefficient(Signature({0, -2}), Signature({-1}), Signature({-1})) == 1);
    CHECK_THROWS_AS(lr_coefficient(Signature({1, 1}), Signature({1}), Signature({1, 0})),
                    std::invalid_argument);
}

TEST_CASE("structure constants against the branching-rule Schur oracle") {
    // s_lambda(u1..u_{M+N}) == sum c(lambda|mu,nu) s_mu(u1..uM) s_nu(u_{M+1}..)
    auto check_split = [](const Signature& lam, size_t M, size_t N) {
        LPoly lhs = schur_branching(lam, M + N, 0);
        LPoly rhs;
        long long lo = lam.min_part(), hi = lam.max_part();
        for (const Signature& mu : signatures_in_window(M, lo, hi))
            for (const Signature& nu : signatures_in_window(N, lo, hi)) {
                if (mu.sum() + nu.sum() != lam.sum()) continue;
                Int c = lr_coefficient(lam, mu, nu);
                if (c == 0) continue;
                LPoly prod = lp_mul(schur_branching(mu, M + N, 0), schur_branching(nu, M + N, M));
                lp_add_scaled(rhs, prod, Rat(c));
            }
        return lhs == rhs;
    };
    for (const Signature& lam : signatures_in_window(3, -1, 2)) {
        CHECK(check_split(lam, 1, 2));
        CHECK(check_split(lam, 2, 1));
    }
    for (const Signature& lam : signatures_in_window(2, -2, 2)) CHECK(check_split(lam, 1, 1));
}

TEST_CASE("multiply") {
    CHECK(multiply(phi({1}), phi({0})) == phi({1, 0}));
    RingElement x = sig({2, 0}) + sig({1}, Rat(3, 2));
    CHECK(multiply(RingElement::unit(Basis::sigma), x) == x);
    CHECK_THROWS_AS(multiply(phi({1}), sig({1})), std::invalid_argument);
    // a genuine sigma product runs along an infinite diagonal ray
    CHECK_THROWS_AS(multiply(sig({1}), sig({1})), std::invalid_argument);
    CHECK(multiply_sigma_window(sig({1}), sig({1}), Window{0, 2}) == sig({1, 1}) + sig({2, 0}));
    RingElement wide = multiply_sigma_window(sig({1}), sig({1}), Window{-2, 4});
    CHECK(wide == sig({1, 1}) + sig({2, 0}) + sig({3, -1}) + sig({4, -2}));
}

TEST_CASE("window product is associative and commutative") {
    Window w{-3, 3};
    RingElement a = sig({1}) + sig({0}, Rat(2));
    RingElement b = sig({1, 0}) + sig({-1}, Rat(1, 3));
    RingElement c = sig({1, -1});
    CHECK(multiply_sigma_window(a, b, w) == multiply_sigma_window(b, a, w));
    CHECK(multiply_sigma_window(multiply_sigma_window(a, b, w), c, w) ==
          multiply_sigma_window(a, multiply_sigma_window(b, c, w), w));
}

TEST_CASE("phi_times_sigma") {
    Window w{-1, 1};
    CHECK(phi_times_sigma(Signature(), w) == sig({-1}) + sig({0}) + sig({1}));
    CHECK(phi_times_sigma(Signature({0}), w) ==
          sig({0, 0}) + sig({1, 0}) + sig({0, -1}) + sig({1, -1}));
    CHECK(phi_times_sigma(Signature({1, 1}), Window{1, 1}) == sig({1, 1, 1}));
}

TEST_CASE("truncate") {
    Window w{-2, 2};
    CHECK(truncate(phi({3, 0}), w).is_zero());
    CHECK(truncate(phi({1, 0}) + phi({5, 0}), Window{0, 2}) == phi({1, 0}));
    RingElement e = phi({2, 0}) + phi({4, -1}, Rat(7));
    CHECK(truncate(truncate(e, w), w) == truncate(e, w));
}

TEST_CASE("norm") {
    CHECK(norm(sig({2, 1, 0})) == Rat(1, 8));
    CHECK(norm(sig({1, 0}, Rat(2))) == 1);
    CHECK(norm(sig({1}) + sig({1, 0})) == Rat(3, 2));
    CHECK(norm(RingElement::unit(Basis::sigma)) == 1);
    CHECK_THROWS_AS(norm(phi({1})), std::invalid_argument);
    RingElement bad(Basis::sigma);
    bad.add_term(Signature({1}), GRat(Rat(1), Rat(1)));
    CHECK_THROWS_AS(norm(bad), std::invalid_argument);
}

TEST_CASE("json round trip") {
    RingElement e(Basis::sigma);
    e.add_term(Signature({2, -1}), GRat(Rat(3, 7)));
    e.add_term(Signature(), GRat(Rat(-1), Rat(2, 5)));
    nlohmann::json j = ring_element_to_json(e);
    CHECK(ring_element_from_json(j) == e);
    CHECK(j["basis"] == "sigma");
    CHECK(j["terms"][1]["sig"] == nlohmann::json::array({2, -1}));
    CHECK(j["terms"][1]["num"] == "3");
    CHECK(j["terms"][1]["den"] == "7");
}
