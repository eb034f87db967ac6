#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "urep/signature.hpp"

using namespace urep;

namespace {

// Independent dimension oracle: count Gelfand-Tsetlin patterns with top row
// lambda by recursing through interlacing rows.
Int gt_pattern_count(const Signature& lambda) {
    if (lambda.length() <= 1) return 1;
    Int total = 0;
    std::vector<long long> acc;
    const size_t n = lambda.length() - 1;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            total += gt_pattern_count(Signature(std::vector<long long>(acc)));
            return;
        }
        long long up = std::min(lambda[i], i ? acc.back() : lambda[i]);
        for (long long v = up; v >= lambda[i + 1]; --v) {
            acc.push_back(v);
            self(self, i + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace

TEST_CASE("signature validation and ordering") {
    CHECK_THROWS_AS(Signature({1, 2}), std::invalid_argument);
    CHECK(Signature({2, 1}).sum() == 3);
    CHECK(Signature().empty());
    CHECK_FALSE(Signature::try_make({0, 1}).has_value());
    CHECK(Signature({2, 1, 0}).negated_reversed() == Signature({0, -1, -2}));
    CHECK(Signature({1}).neighbor(0, 1).value() == Signature({2}));
    CHECK_FALSE(Signature({1, 1}).neighbor(1, 1).has_value());
}

TEST_CASE("interlacing") {
    CHECK(interlaces(Signature({1, 0}), Signature({2, 1, 0})));
    CHECK_FALSE(interlaces(Signature({3}), Signature({2, 1})));
    CHECK(interlaces(Signature(), Signature({-5})));
    CHECK_THROWS_AS(interlaces(Signature({1}), Signature({1})), std::invalid_argument);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Signature({1, 1}), Signature({2, 0})));
    CHECK_FALSE(dominance_leq(Signature({1, 0}), Signature({2, 0})));
    CHECK(dominance_leq(Signature({2, 0}), Signature({2, 0})));
    CHECK_THROWS_AS(dominance_leq(Signature({1}), Signature({1, 0})), std::invalid_argument);
}

TEST_CASE("Weyl dimension against pattern counting") {
    CHECK(weyl_dimension(Signature({0, 0, 0})) == 1);
    CHECK(weyl_dimension(Signature({1, 0})) == 2);
    CHECK(weyl_dimension(Signature({2, 1, 0})) == 8);
    CHECK(weyl_dimension(Signature()) == 1);
    CHECK(weyl_dimension(Signature({7})) == 1);
    for (int n = 1; n <= 4; ++n)
        for (const Signature& lam : signatures_in_window(static_cast<size_t>(n), -2, 2))
            CHECK(weyl_dimension(lam) == gt_pattern_count(lam));
}

TEST_CASE("Weyl dimension symmetries") {
    for (const Signature& lam : signatures_in_window(3, -2, 2)) {
        CHECK(weyl_dimension(lam) == weyl_dimension(lam.negated_reversed()));
        std::vector<long long> shifted(lam.parts());
        for (long long& x : shifted) x += 3;
        CHECK(weyl_dimension(lam) == weyl_dimension(Signature(shifted)));
    }
}

TEST_CASE("rectangle complement") {
    RectangleComplement rc = complement_in_rectangle(Signature({2, 0}), 2, 2);
    CHECK(rc.kappa == Signature({1, 1}));
    CHECK(rc.L.values == std::vector<long long>{3, 0});
    CHECK(rc.K.values == std::vector<long long>{2, 1});

    RectangleComplement zeros = complement_in_rectangle(Signature({0, 0, 0}), 2, 3);
    CHECK(zeros.kappa == Signature({3, 3}));
    RectangleComplement full = complement_in_rectangle(Signature({2, 2, 2}), 2, 3);
    CHECK(full.kappa == Signature({0, 0}));

    CHECK_THROWS_AS(complement_in_rectangle(Signature({3, 0}), 2, 2), std::domain_error);
}

TEST_CASE("complement coordinate sets partition the interval") {
    for (long long m = 1; m <= 4; ++m)
        for (long long N = 1; N <= 4; ++N)
            for (const Signature& lam : signatures_in_window(static_cast<size_t>(N), 0, m)) {
                RectangleComplement rc = complement_in_rectangle(lam, m, N);
                std::vector<long long> all(rc.L.values);
                all.insert(all.end(), rc.K.values.begin(), rc.K.values.end());
                std::sort(all.begin(), all.end());
                REQUIRE(all.size() == static_cast<size_t>(N + m));
                for (long long i = 0; i < N + m; ++i) REQUIRE(all[static_cast<size_t>(i)] == i);
            }
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde_int(std::vector<long long>{3, 0}) == 3);
    CHECK(vandermonde_int(std::vector<long long>{2, 1, 0}) == 2);
    CHECK(vandermonde_int(std::vector<long long>{5}) == 1);
    CHECK(vandermonde_int(std::vector<long long>{2, 2}) == 0);
    std::vector<Rat> xs{Rat(1, 2), Rat(1, 3)};
    CHECK(vandermonde(xs) == Rat(1, 6));
}

TEST_CASE("window enumeration") {
    CHECK(signatures_in_window(1, -1, 1).size() == 3);
    CHECK(signatures_in_window(2, -1, 1).size() == 6);
    CHECK(interlacing_above(Signature({0}), -1, 1).size() == 4);
    for (const Signature& lam : interlacing_above(Signature({0}), -1, 1))
        CHECK(interlaces(Signature({0}), lam));
}

TEST_CASE("scalar parsing") {
    CHECK(rat_from_string("-3/6") == Rat(-1, 2));
    CHECK(grat_from_string("1/2+1/3i") == GRat(Rat(1, 2), Rat(1, 3)));
    CHECK(grat_from_string("1/2-1/3i") == GRat(Rat(1, 2), Rat(-1, 3)));
    CHECK(grat_from_string("-2/5i") == GRat(Rat(0), Rat(-2, 5)));
    CHECK(grat_from_string("7/10") == GRat(Rat(7, 10)));
    CHECK(grat_to_string(GRat(Rat(1, 2), Rat(-1, 3))) == "1/2-1/3i");
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
}
