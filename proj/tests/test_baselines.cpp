#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "nlkg/baselines.hpp"
#include "nlkg/lde.hpp"
#include "support/oracles.hpp"

namespace nlkg::baselines {
namespace {

using nlkg::testing::rel_err;

TEST(Bessel, Origin) {
    EXPECT_EQ(bessel_j(0, 0.0), 1.0);
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(bessel_j(n, 0.0), 0.0);
}

TEST(Bessel, FirstZeroOfJ0) {
    EXPECT_LT(std::abs(bessel_j(0, 2.404826)), 1e-6);
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bessel_j(0, mid) > 0.0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(lo, 2.4048255576957728, 1e-14);
}

TEST(Bessel, ThreeTermRecurrence) {
    for (double x : {0.5, 1.0, 2.0, 3.0})
        for (int n = 1; n <= 6; ++n)
            EXPECT_NEAR(bessel_j(n - 1, x) + bessel_j(n + 1, x), 2.0 * n / x * bessel_j(n, x), 1e-12)
                << "n=" << n << " x=" << x;
}

TEST(Bessel, SumOfSquares) {
    auto sum_sq = [](double x) {
        double s = bessel_j(0, x) * bessel_j(0, x);
        for (int n = 1; n <= 8; ++n)
            s += 2.0 * bessel_j(n, x) * bessel_j(n, x);
        return s;
    };
    for (double x : {0.5, 1.0, 1.5, 2.0})
        EXPECT_NEAR(sum_sq(x), 1.0, 1e-10) << x;
    // At x = 3 the truncated tail 2 sum_{n>=9} J_n(3)^2 is about 1.4e-8.
    EXPECT_NEAR(sum_sq(3.0), 1.0, 1e-7);
    EXPECT_LT(sum_sq(3.0), 1.0);
}

TEST(Bessel, Parity) {
    for (int n = 0; n <= 8; ++n)
        EXPECT_DOUBLE_EQ(bessel_j(n, -1.7), (n % 2 ? -1.0 : 1.0) * bessel_j(n, 1.7));
}

TEST(Bessel, Domain) {
    EXPECT_THROW(bessel_j(9, 1.0), std::domain_error);
    EXPECT_THROW(bessel_j(-1, 1.0), std::domain_error);
    EXPECT_THROW(bessel_j(0, 21.0), std::domain_error);
}

TEST(LimDuffing, Values) {
    EXPECT_DOUBLE_EQ(lim_duffing_omega(0.0, 1.0, 2).omega_cap, 1.0);
    EXPECT_LE(rel_err(lim_duffing_omega(1.0, 1.0, 2).omega_cap, std::sqrt((71.0 + std::sqrt(2917.0)) / 72.0)),
              1e-15);
    EXPECT_LE(rel_err(lim_duffing_omega(1.0, 1.0, 2).omega_cap, 1.3176644872313281), 1e-15);
}

TEST(LimDuffing, OrderOneEqualsLdeOrderZero) {
    for (double y : {-0.9, -0.2, 0.0, 0.4, 3.0, 250.0})
        EXPECT_LE(rel_err(lim_duffing_omega(y, 1.0, 1).omega_cap, lde::duffing_omega_lde(y, 1.0, 0).omega_cap),
                  1e-15);
}

TEST(LimDuffing, SecondOrderBranchFailsNearMinusOne) {
    // 1024 + 1472 y + 421 y^2 < 0 for y below about -0.958.
    EXPECT_NO_THROW(lim_duffing_omega(-0.95, 1.0, 2));
    EXPECT_THROW(lim_duffing_omega(-0.97, 1.0, 2), std::domain_error);
    EXPECT_THROW(lim_duffing_omega(1.0, 1.0, 3), std::out_of_range);
}

TEST(LimSineGordon, Values) {
    EXPECT_NEAR(lim_sine_gordon_omega(1e-4, 1).omega_cap, 1.0, 1e-8);
    EXPECT_NEAR(lim_sine_gordon_omega(1e-4, 2).omega_cap, 1.0, 1e-8);
    EXPECT_LE(rel_err(lim_sine_gordon_omega(std::numbers::pi / 2, 1).omega_cap, 0.84953095582411728), 1e-14);
}

TEST(LimSineGordon, DefinedAcrossTheWell) {
    for (double A = 0.05; A < std::numbers::pi; A += 0.05) {
        EXPECT_NO_THROW(lim_sine_gordon_omega(A, 1)) << A;
        EXPECT_NO_THROW(lim_sine_gordon_omega(A, 2)) << A;
    }
    EXPECT_THROW(lim_sine_gordon_omega(std::numbers::pi, 2), std::domain_error);
}

TEST(LimPureQuartic, Values) {
    EXPECT_DOUBLE_EQ(lim_pure_quartic_omega(2.0, 1).omega_cap, std::sqrt(3.0));
    EXPECT_LE(rel_err(lim_pure_quartic_omega(1.0, 2).omega_cap, 0.84589108611277157), 1e-15);
    for (int order : {1, 2})
        EXPECT_DOUBLE_EQ(lim_pure_quartic_omega(2.0, order).omega_cap, 2.0 * lim_pure_quartic_omega(1.0, order).omega_cap);
}

TEST(Lim, LinearLimit) {
    for (int order : {1, 2}) {
        EXPECT_NEAR(lim_duffing_omega(1.0, 1e-4, order).omega_cap, 1.0, 1e-6);
        EXPECT_NEAR(lim_sine_gordon_omega(1e-4, order).omega_cap, 1.0, 1e-6);
    }
}

}  // namespace
}  // namespace nlkg::baselines
