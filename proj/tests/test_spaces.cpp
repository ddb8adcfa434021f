#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace symwt;
using namespace testsupport;
using Catch::Approx;

TEST_CASE("k0 and |N(r)|") {
    CHECK(k0(24, 8, 5) == 1);
    CHECK(k0(24, 8, 3) == 8);
    CHECK(k0(7, 3, 3) == 1);
    CHECK(count_family_exact(3, 3, 1) == 1);
    CHECK(count_family_exact(3, 3, 3) == 3);

    // Brute force over all C(8,2) = 28 compositions of 6 into 3 parts.
    int brute = 0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b) brute += std::max({a, b, 6 - a - b}) == 3;
    CHECK(count_family_exact(6, 3, 3) == brute);

    for (int n = 1; n <= 12; ++n)
        for (int q = 1; q <= 6; ++q)
            for (int r = SpaceSpec{n, q, 1}.min_weight(); r <= n; ++r)
                REQUIRE(count_family_exact(n, q, r) == count_compositions(n, q, WeightFilter::exact(r)));
}

TEST_CASE("space size examples") {
    CHECK(size_constant_sw(3, 3, 1) == 6);
    CHECK(size_constant_sw(3, 3, 2) == 18);
    CHECK(size_constant_sw(3, 3, 3) == 3);
    CHECK(size_bounded_sw(3, 3, 2) == 24);
    CHECK(size_bounded_sw(4, 2, 2) == 6);
    CHECK(size_bounded_sw(5, 4, 5) == power(4, 5));
    CHECK(space_size({3, 3, 1, WeightMode::bounded}) == 6);
    CHECK_THROWS_AS(size_constant_sw(7, 2, 3), std::invalid_argument);
}

TEST_CASE("sizes agree with word scans") {
    for (int q = 1; q <= 6; ++q)
        for (int n = 1; n <= 7; ++n) {
            if (power(q, n) > 50000) continue;
            const auto census = weight_census(n, q);
            Count total = 0, prefix = 0;
            for (int r = 1; r <= n; ++r) {
                prefix += census[static_cast<std::size_t>(r)];
                REQUIRE(size_bounded_sw(n, q, r) == prefix);
                if (r >= SpaceSpec{n, q, 1}.min_weight()) {
                    INFO("n=" << n << " q=" << q << " r=" << r);
                    REQUIRE(size_constant_sw(n, q, r) == census[static_cast<std::size_t>(r)]);
                    REQUIRE(size_constant_sw_by_family(n, q, r) == census[static_cast<std::size_t>(r)]);
                    total += size_constant_sw(n, q, r);
                }
            }
            REQUIRE(total == power(q, n));
        }
}

TEST_CASE("the two size formulas agree beyond scan range") {
    for (const auto& [n, q] : std::vector<std::pair<int, int>>{{24, 8}, {20, 5}, {30, 3}, {16, 6}, {12, 12}}) {
        Count total = 0;
        for (int r = SpaceSpec{n, q, 1}.min_weight(); r <= n; ++r) {
            const auto e = size_constant_sw(n, q, r);
            REQUIRE(e == size_constant_sw_by_family(n, q, r));
            REQUIRE(e == space_size({n, q, r, WeightMode::exact}));
            REQUIRE(size_bounded_sw(n, q, r) == space_size({n, q, r, WeightMode::bounded}));
            total += e;
        }
        CHECK(total == power(q, n));
    }
}

TEST_CASE("sizes past the enumeration cap") {
    CHECK_THROWS_AS(size_bounded_sw(24, 16, 3), CapExceeded);
    CHECK(size_constant_sw(24, 16, 3) == space_size({24, 16, 3, WeightMode::exact}));
    // Partition identity through the dynamic program alone.
    Count total = 0;
    for (int r = 2; r <= 24; ++r) total += space_size({24, 16, r, WeightMode::exact});
    CHECK(total == power(16, 24));
    CHECK(space_size({24, 16, 1, WeightMode::bounded}) == 0);
    CHECK(space_size({24, 16, 24, WeightMode::bounded}) == power(16, 24));
    CHECK(count_words_bounded_dp(4, 2, 2) == 6);
}

TEST_CASE("entropy") {
    CHECK(entropy_q(0.0, 5) == 0.0);
    CHECK(entropy_q(0.5, 2) == Approx(1.0).margin(1e-15));
    for (const int q : {2, 3, 7, 16}) CHECK(entropy_q((q - 1.0) / q, q) == Approx(1.0).margin(1e-12));
    // h_3(1/3) = log_3(2)/3 + 1/3 + (2/3) log_3(3/2)
    const double h = std::log(2.0) / std::log(3.0) / 3 + 1.0 / 3 + 2.0 / 3 * std::log(1.5) / std::log(3.0);
    CHECK(entropy_q(1.0 / 3, 3) == Approx(h).epsilon(1e-14));
    CHECK(entropy_q(1.0 / 3, 3) == Approx(0.78969).margin(1e-5));
    CHECK_THROWS_AS(entropy_q(1.5, 3), std::domain_error);
    CHECK(entropy_large_q(0.3) == 0.3);
}

TEST_CASE("asymptotic rate") {
    CHECK(asymptotic_rate_constant_sw({3, 0, 1.0 / 3, 0}).rate == 1.0);
    CHECK(asymptotic_rate_constant_sw({3, 0, 1.0 / 3, 0}).optimal_weight);
    CHECK(asymptotic_rate_constant_sw({3, 0, 1.0, 0}).rate == 0.0);
    CHECK(asymptotic_rate_constant_sw({3, 0, 2.0 / 3, 0}).rate == Approx(entropy_q(1.0 / 3, 3)));
    CHECK(asymptotic_rate_constant_sw({1, 0.5, 0.4, 0}).rate == Approx(0.6));
    CHECK_THROWS_AS(asymptotic_rate_constant_sw({3, 0, 0.2, 0}), std::domain_error);
}

TEST_CASE("finite rates approach the entropy from below") {
    const double target = entropy_q(1.0 / 3, 3);
    double prev = 0;
    for (const int n : {15, 30, 45, 60, 90}) {
        const double rate = finite_rate_constant_sw(n, 3, 2 * n / 3);
        CHECK(rate < target);
        CHECK(rate > prev);
        prev = rate;
    }
    CHECK(target - prev < 0.05);
}

TEST_CASE("size rows") {
    const auto row = size_row({3, 3, 2, WeightMode::bounded});
    CHECK(row.size == 24);
    CHECK(row.rate == Approx(std::log(24.0) / std::log(3.0) / 3));
    CHECK(std::isnan(size_row({3, 3, 1, WeightMode::bounded}).rate) == false);
    CHECK_THROWS_AS(size_row({3, 3, 0, WeightMode::bounded}), std::invalid_argument);
    CHECK(weight_for_rho(30, 2.0 / 3).r == 20);
}

TEST_CASE("enumeration cap") {
    ScopedEnumerationCap cap(100);
    CHECK(enumeration_cap() == 100);
    CHECK_THROWS_AS(require_under_cap(Count(101), "test"), CapExceeded);
    CHECK_NOTHROW(require_under_cap(Count(100), "test"));
}
