#pragma once

// Harmonic-balance dispersion relations of Lim et al. (orders 1 and 2) and the
// Bessel functions they need.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlkg/model.hpp"

namespace nlkg::baselines {

// J_n(x) = sum_s (-1)^s (x/2)^{n+2s} / (s! (n+s)!), for 0 <= n <= 8, |x| <= 20.
inline double bessel_j(int n, double x) {
    if (n < 0 || n > 8)
        throw std::domain_error("bessel_j: requires 0 <= n <= 8");
    if (!(std::abs(x) <= 20.0))
        throw std::domain_error("bessel_j: requires |x| <= 20");
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k)
        term *= half / k;
    double sum = term;
    double largest = std::abs(term);
    const double q = -half * half;
    for (int s = 1; s < 200; ++s) {
        term *= q / (static_cast<double>(s) * (n + s));
        sum += term;
        largest = std::max(largest, std::abs(term));
        if (std::abs(term) < 1e-17 * largest)
            break;
    }
    return sum;
}

struct LimCoefficients {
    double a1, a3, b0, b2, b4, b6;
};

inline LimCoefficients lim_coefficients(double A) {
    return {2.0 * bessel_j(1, A),  -2.0 * bessel_j(3, A), 2.0 * bessel_j(0, A),
            -2.0 * bessel_j(2, A), 2.0 * bessel_j(4, A),  -2.0 * bessel_j(6, A)};
}

inline void require_lim_order(int order) {
    if (order != 1 && order != 2)
        throw std::out_of_range("lim order must be 1 or 2");
}

inline DispersionResult lim_duffing_omega(double mu, double A, int order) {
    require_lim_order(order);
    const double y = mu * A * A;
    if (order == 1) {
        const double r = 1.0 + 0.75 * y;
        if (!(r >= 0.0))
            throw std::domain_error("lim_duffing_omega: negative radicand 1 + 3 mu A^2 / 4");
        return {std::sqrt(r), Lim{1}, std::nullopt};
    }
    const double inner = 1024.0 + 1472.0 * y + 421.0 * y * y;
    if (!(inner >= 0.0))
        throw std::domain_error("lim_duffing_omega: negative radicand 1024 + 1472 y + 421 y^2");
    const double outer = (40.0 + 31.0 * y + std::sqrt(inner)) / 72.0;
    if (!(outer >= 0.0))
        throw std::domain_error("lim_duffing_omega: negative outer radicand");
    return {std::sqrt(outer), Lim{2}, std::nullopt};
}

inline DispersionResult lim_sine_gordon_omega(double A, int order) {
    require_lim_order(order);
    if (!(A > 0.0 && A < std::numbers::pi))
        throw std::domain_error("lim_sine_gordon_omega: requires 0 < A < pi");
    if (order == 1) {
        const double r = 2.0 * bessel_j(1, A) / A;
        if (!(r >= 0.0))
            throw std::domain_error("lim_sine_gordon_omega: negative radicand 2 J1(A) / A");
        return {std::sqrt(r), Lim{1}, std::nullopt};
    }
    const LimCoefficients c = lim_coefficients(A);
    const double b = c.b0 - c.b2 - c.b4 + c.b6;
    const double g = (b * A + 18.0 * c.a1 + 2.0 * c.a3) / (36.0 * A);
    const double h = c.a1 * b / (18.0 * A);
    const double disc = g * g - h;
    if (!(disc >= 0.0))
        throw std::domain_error("lim_sine_gordon_omega: g^2 < h (complex branch)");
    const double r = g + std::sqrt(disc);
    if (!(r >= 0.0))
        throw std::domain_error("lim_sine_gordon_omega: negative radicand g + sqrt(g^2 - h)");
    return {std::sqrt(r), Lim{2}, std::nullopt};
}

inline DispersionResult lim_pure_quartic_omega(double A, int order, double mu = 1.0) {
    require_lim_order(order);
    if (!(A > 0.0) || !(mu > 0.0))
        throw std::domain_error("lim_pure_quartic_omega: requires A > 0 and mu > 0");
    const double scale = std::sqrt(mu) * A;
    if (order == 1)
        return {0.5 * std::sqrt(3.0) * scale, Lim{1}, std::nullopt};
    return {std::sqrt(62.0 + 2.0 * std::sqrt(421.0)) / 12.0 * scale, Lim{2}, std::nullopt};
}

}  // namespace nlkg::baselines
