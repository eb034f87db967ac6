#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "urep/boundary.hpp"

using namespace urep;

TEST_CASE("simplex point construction") {
    BoundaryPoint zero = make_simplex_point({}, {});
    CHECK(zero.gamma_plus() == 0);
    Window w{-3, 3};
    for (long long n = -3; n <= 3; ++n)
        CHECK(phi_hat(zero, n, w).value == (n == 0 ? 1 : 0));

    CHECK_THROWS_AS(make_simplex_point({Rat(3, 2)}, {}), std::domain_error);
    CHECK_THROWS_AS(make_simplex_point({Rat(2, 3)}, {Rat(1, 2)}), std::domain_error);
    CHECK_THROWS_AS(make_simplex_point({Rat(1, 3), Rat(1, 2)}, {}), std::domain_error);
}

TEST_CASE("one beta factor") {
    Rat beta(1, 3);
    BoundaryPoint omega = make_simplex_point({beta}, {});
    Window w{-3, 3};
    CHECK(phi_hat(omega, 0, w).value == 1 - beta);
    CHECK(phi_hat(omega, 1, w).value == beta);
    CHECK(phi_hat(omega, 2, w).value == 0);
    CHECK(phi_hat(omega, 0, w).exact());

    BoundaryPoint det = make_simplex_point({Rat(1)}, {});
    CHECK(phi_hat(det, 1, w).value == 1);
    CHECK(phi_hat(det, 0, w).value == 0);
}

TEST_CASE("two-coordinate simplex in t coordinates") {
    Rat t1(2, 3), t2(1, 4);
    BoundaryPoint omega = simplex_point_from_t({t1, t2});
    Window w{-2, 4};
    CHECK(phi_hat(omega, 0, w).value == t1 * t2);
    CHECK(phi_hat(omega, 1, w).value == t1 + t2 - 2 * t1 * t2);
    CHECK(phi_hat(omega, 2, w).value == (1 - t1) * (1 - t2));
}

TEST_CASE("sigma_hat") {
    Window w{-4, 4};
    BoundaryPoint omega = make_simplex_point({Rat(1, 3)}, {});
    CHECK(sigma_hat(omega, Signature(), w).value == 1);
    CHECK(sigma_hat(omega, Signature({1, 0}), w).value == Rat(1, 3) * Rat(2, 3));
    // top row of the determinant dies above the simplex degree
    CHECK(sigma_hat(omega, Signature({2}), w).value == 0);
    CHECK(sigma_hat(omega, Signature({2, 1}), w).value == 0);
    CHECK_THROWS_AS(sigma_hat(omega, Signature({4, -4}), w), std::domain_error);
}

TEST_CASE("link_infinity rows") {
    Rat beta(1, 3);
    BoundaryPoint omega = make_simplex_point({beta}, {});
    Window w{-4, 4};
    CHECK(link_infinity(omega, 1, Signature({1}), w).value == beta);
    CHECK(link_infinity(omega, 1, Signature({0}), w).value == 1 - beta);

    Rat total = 0;
    for (const Signature& lam : signatures_in_window(2, 0, 1))
        total += link_infinity(omega, 2, lam, w).value;
    CHECK(total == 1);

    BoundaryPoint zero = make_simplex_point({}, {});
    CHECK(link_infinity(zero, 3, Signature({0, 0, 0}), w).value == 1);
}

TEST_CASE("symmetries") {
    BoundaryPoint omega = make_simplex_point({Rat(1, 2)}, {Rat(1, 3)});
    BoundaryPoint conj = symmetry(omega, OmegaSymmetry::conjugate);
    CHECK(conj.beta_plus == std::vector<Rat>{Rat(1, 3)});
    CHECK(conj.beta_minus == std::vector<Rat>{Rat(1, 2)});
    BoundaryPoint back = symmetry(conj, OmegaSymmetry::conjugate);
    CHECK(back.beta_plus == omega.beta_plus);
    CHECK(back.delta_minus == omega.delta_minus);

    BoundaryPoint tw = symmetry(omega, OmegaSymmetry::twist);
    CHECK(tw.beta_plus.size() == 2);
    CHECK(tw.beta_minus.empty());
    Window w{-4, 4};
    LaurentWindow before = phi_hat_window(omega, w);
    LaurentWindow after = phi_hat_window(tw, w);
    for (const auto& [n, c] : before.coeffs)
        CHECK(after.coeffs.count(n + 1) ? after.coeffs.at(n + 1) == c : c == 0);

    // twisting the empty minus side prepends a full beta
    BoundaryPoint unit = symmetry(make_simplex_point({}, {}), OmegaSymmetry::twist);
    CHECK(unit.beta_plus == std::vector<Rat>{Rat(1)});
}

TEST_CASE("exact mode limits") {
    BoundaryPoint omega;
    omega.alpha_plus = {Rat(1, 2)};
    omega.delta_plus = Rat(1, 2);
    CHECK_THROWS_AS(phi_hat_window(omega, Window{-2, 2}), std::domain_error);  // needs tol

    LaurentWindow lw = phi_hat_window(omega, Window{-2, 6}, Rat(1, 1000000));
    CHECK(lw.err > 0);
    CHECK(lw.err < Rat(1, 1000000));
    // geometric factor: coefficient of u^k is (1/3)(1/3)^k... with alpha=1/2:
    // a^k/(1+a)^{k+1} = (1/2)^k/(3/2)^{k+1} = (2/3)(1/3)^k
    CHECK(lw.coeffs.at(0) == Rat(2, 3));
    CHECK(lw.coeffs.at(1) == Rat(2, 9));

    BoundaryPoint gamma_pt;
    gamma_pt.delta_plus = Rat(1);
    CHECK_THROWS_AS(phi_hat_window(gamma_pt, Window{-2, 2}, Rat(1, 100)), std::domain_error);
    // float mode handles the exponential factor: coefficients are Poisson
    double p0 = phi_hat_approx(gamma_pt, 0, Window{-3, 10}, 1e-12);
    CHECK(std::abs(p0 - std::exp(-1.0)) < 1e-9);
    double p2 = phi_hat_approx(gamma_pt, 2, Window{-3, 14}, 1e-12);
    CHECK(std::abs(p2 - std::exp(-1.0) / 2) < 1e-9);
}

TEST_CASE("float mode agrees with exact on beta points") {
    BoundaryPoint omega = make_simplex_point({Rat(2, 3), Rat(1, 5)}, {Rat(1, 4)});
    Window w{-3, 4};
    LaurentWindow lw = phi_hat_window(omega, w);
    for (const auto& [n, c] : lw.coeffs)
        CHECK(std::abs(phi_hat_approx(omega, n, w, 1e-14) - c.get_d()) < 1e-12);
}

TEST_CASE("float sigma_hat tracks the exact determinant") {
    BoundaryPoint omega = make_simplex_point({Rat(2, 3), Rat(1, 5)}, {});
    Window w{-3, 5};
    for (const Signature& lam : signatures_in_window(2, 0, 2)) {
        double exact = sigma_hat(omega, lam, w).value.get_d();
        CHECK(std::abs(sigma_hat_approx(omega, lam, w, 1e-14) - exact) < 1e-10);
    }
}

TEST_CASE("boundary point json") {
    BoundaryPoint omega = make_simplex_point({Rat(2, 3)}, {Rat(1, 4)});
    omega.alpha_minus = {Rat(1, 9)};
    omega.delta_minus += Rat(1, 9);
    nlohmann::json j = boundary_point_to_json(omega);
    BoundaryPoint back = boundary_point_from_json(j);
    CHECK(back.beta_plus == omega.beta_plus);
    CHECK(back.alpha_minus == omega.alpha_minus);
    CHECK(back.delta_minus == omega.delta_minus);
}
