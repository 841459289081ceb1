#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "nlkg/model.hpp"

namespace nlkg {
namespace {

const std::vector<PotentialSpec> kPotentials{Duffing{1.0}, Duffing{-0.3}, Duffing{0.0}, SineGordon{},
                                             PureQuartic{1.0}, PureQuartic{2.5}};

TEST(Potential, Values) {
    EXPECT_EQ(eval_potential(Duffing{1.0}, 0.0), 0.0);
    EXPECT_EQ(eval_potential(SineGordon{}, 0.0), -1.0);
    EXPECT_EQ(eval_potential(PureQuartic{1.0}, 2.0), 4.0);
}

TEST(Potential, Force) {
    for (const auto& p : kPotentials)
        EXPECT_EQ(eval_force(p, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(eval_force(SineGordon{}, std::numbers::pi / 2), 1.0);
    EXPECT_EQ(eval_force(Duffing{2.0}, 1.0), 3.0);
}

TEST(Potential, ForceIsOdd) {
    for (const auto& p : kPotentials)
        for (double u = -3.0; u <= 3.0; u += 0.37)
            EXPECT_EQ(eval_force(p, -u), -eval_force(p, u)) << potential_name(p) << " u=" << u;
}

TEST(Potential, ForceIsDerivativeOfPotential) {
    for (const auto& p : kPotentials) {
        for (double h : {1e-4, 1e-5}) {
            for (double u = -2.0; u <= 2.0; u += 0.25) {
                const double fd = (eval_potential(p, u + h) - eval_potential(p, u - h)) / (2.0 * h);
                // O(h^2) truncation plus roundoff of V / h.
                EXPECT_LE(std::abs(eval_force(p, u) - fd), 10.0 * h * h + 1e-9) << potential_name(p) << " u=" << u;
            }
        }
    }
}

TEST(TurningEnergy, Values) {
    EXPECT_EQ(turning_energy(Duffing{1.0}, 1.0), 0.75);
    EXPECT_NEAR(turning_energy(SineGordon{}, std::numbers::pi / 2), 0.0, 1e-16);
    EXPECT_EQ(turning_energy(PureQuartic{1.0}, 1.0), 0.25);
}

TEST(TurningEnergy, EqualsPotentialAtAmplitude) {
    for (const auto& p : kPotentials)
        for (double A : {0.1, 0.5, 1.0, 1.5})
            EXPECT_EQ(turning_energy(p, A), eval_potential(p, A));
}

TEST(TurningEnergy, DomainErrors) {
    EXPECT_THROW(turning_energy(SineGordon{}, std::numbers::pi), std::domain_error);
    EXPECT_THROW(turning_energy(SineGordon{}, 4.0), std::domain_error);
    EXPECT_THROW(turning_energy(Duffing{-1.0}, 1.0), std::domain_error);  // 1 + mu A^2 = 0
    EXPECT_THROW(turning_energy(Duffing{-2.0}, 1.0), std::domain_error);
    EXPECT_THROW(turning_energy(PureQuartic{0.0}, 1.0), std::domain_error);
    EXPECT_THROW(turning_energy(Duffing{1.0}, 0.0), std::domain_error);
    EXPECT_THROW(turning_energy(Duffing{1.0}, -1.0), std::domain_error);
    EXPECT_THROW(turning_energy(Duffing{1.0}, NAN), std::domain_error);
    EXPECT_NO_THROW(turning_energy(Duffing{-0.99}, 1.0));
}

TEST(Wavenumber, Values) {
    EXPECT_EQ(omega_from_wavenumber(1.0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(omega_from_wavenumber(1.0, std::sqrt(3.0)), 2.0);
    EXPECT_DOUBLE_EQ(omega_from_wavenumber(0.5, 0.5), 0.7071067811865476);
    for (double w : {0.1, 0.7, 3.3})
        EXPECT_EQ(omega_from_wavenumber(w, 0.0), w);
    EXPECT_THROW(omega_from_wavenumber(0.0, 1.0), std::domain_error);
}

TEST(Method, Labels) {
    EXPECT_EQ(method_label(Exact{}), "exact");
    EXPECT_EQ(method_label(Lde{12}), "lde12");
    EXPECT_EQ(method_label(Lim{2}), "lim2");
    for (const MethodId& m : {MethodId{Exact{}}, MethodId{Lde{0}}, MethodId{Lde{30}}, MethodId{Lim{1}}})
        EXPECT_EQ(parse_method_label(method_label(m)), m);
    EXPECT_THROW(parse_method_label("lde"), std::invalid_argument);
    EXPECT_THROW(parse_method_label("lde-1"), std::invalid_argument);
    EXPECT_THROW(parse_method_label("rk4"), std::invalid_argument);
}

TEST(Method, Validation) {
    EXPECT_NO_THROW(require_valid_method(Lde{30}));
    EXPECT_THROW(require_valid_method(Lde{31}), std::out_of_range);
    EXPECT_NO_THROW(require_valid_method(Lde{40}, 40));
    EXPECT_THROW(require_valid_method(Lde{-1}), std::out_of_range);
    EXPECT_THROW(require_valid_method(Lim{3}), std::out_of_range);
    EXPECT_THROW(require_valid_method(Lim{0}), std::out_of_range);
}

}  // namespace
}  // namespace nlkg
