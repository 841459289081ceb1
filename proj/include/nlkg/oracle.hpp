#pragma once

// Ground-truth Omega(A).
//
// Two independent routes to the period T of  u'' + V'(u) = 0,  u(0) = A,
// u'(0) = 0, plus the elliptic closed form for Sine-Gordon.  Omega = 2 pi / T.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlkg/elliptic.hpp"
#include "nlkg/model.hpp"

namespace nlkg::oracle {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    int max_refinements = 20;
};

struct OdeConfig {
    // Step as a fraction of the estimated period.
    double relative_step = 1e-4;
    std::size_t max_steps = 20'000'000;
};

struct PeriodResult {
    double T = 0.0;
    double estimated_error = 0.0;
};

namespace detail {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

inline GaussRule make_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

inline const GaussRule& gauss20() {
    static const GaussRule rule = make_gauss_legendre(20);
    return rule;
}

inline double sinc(double x) {
    if (std::abs(x) < 1e-4)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// (V(A) - V(u)) / (A^2 - u^2), factored analytically so that it stays
// accurate as u -> A.
inline double chord_ratio(const PotentialSpec& p, double A, double u) {
    return std::visit(overloaded{[&](const Duffing& d) { return 0.5 + 0.25 * d.mu * (A * A + u * u); },
                                 [&](const SineGordon&) {
                                     return 0.5 * sinc(0.5 * (A + u)) * sinc(0.5 * (A - u));
                                 },
                                 [&](const PureQuartic& q) { return 0.25 * q.mu * (A * A + u * u); }},
                      p);
}

template <class F>
double composite_gauss(F&& f, double a, double b, std::size_t panels) {
    const auto& rule = gauss20();
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double mid = a + (static_cast<double>(i) + 0.5) * h;
        double panel = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            panel += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        sum += 0.5 * h * panel;
    }
    return sum;
}

}  // namespace detail

// T = int_{-A}^{A} sqrt(2) / sqrt(V(A) - V(u)) du.  With V even and
// u = A sin(phi) this becomes  T = 2 sqrt(2) int_0^{pi/2} dphi / sqrt(G),
// G = (V(A) - V(u)) / (A^2 - u^2), whose integrand is bounded on [0, pi/2].
// Panels double until successive estimates agree to abs_tol * max(1, T).
inline PeriodResult period_quadrature(const PotentialSpec& p, double A, const QuadratureConfig& cfg = {}) {
    require_valid_amplitude(p, A);
    if (!(cfg.abs_tol > 0.0) || cfg.max_refinements < 1)
        throw std::invalid_argument("period_quadrature: abs_tol > 0 and max_refinements >= 1 required");

    auto integrand = [&](double phi) {
        const double g = detail::chord_ratio(p, A, A * std::sin(phi));
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::domain_error("period_quadrature: V(A) - V(u) <= 0 inside (-A, A)");
        return 1.0 / std::sqrt(g);
    };
    const double factor = 2.0 * std::numbers::sqrt2;
    const double half_pi = 0.5 * std::numbers::pi;

    double previous = factor * detail::composite_gauss(integrand, 0.0, half_pi, 1);
    std::size_t panels = 1;
    for (int level = 1; level <= cfg.max_refinements; ++level) {
        panels *= 2;
        const double current = factor * detail::composite_gauss(integrand, 0.0, half_pi, panels);
        const double diff = std::abs(current - previous);
        if (diff <= cfg.abs_tol * std::max(1.0, std::abs(current)))
            return {current, diff};
        previous = current;
    }
    throw non_convergence("period_quadrature: refinement limit reached");
}

inline DispersionResult omega_exact(const PotentialSpec& p, double A, const QuadratureConfig& cfg = {}) {
    const PeriodResult period = period_quadrature(p, A, cfg);
    return {2.0 * std::numbers::pi / period.T, Exact{}, std::nullopt};
}

// Omega = pi / (2 K(sin^2(A/2))).
inline DispersionResult omega_exact_sine_gordon(double A) {
    require_valid_amplitude(SineGordon{}, A);
    const double s = std::sin(0.5 * A);
    return {0.5 * std::numbers::pi / elliptic::agm_K(s * s), Exact{}, std::nullopt};
}

namespace detail {

struct OscState {
    double u;
    double v;
};

inline OscState rk4_step(const PotentialSpec& p, OscState y, double h) {
    auto acc = [&p](double u) { return -eval_force(p, u); };
    const double k1u = y.v;
    const double k1v = acc(y.u);
    const double k2u = y.v + 0.5 * h * k1v;
    const double k2v = acc(y.u + 0.5 * h * k1u);
    const double k3u = y.v + 0.5 * h * k2v;
    const double k3v = acc(y.u + 0.5 * h * k2u);
    const double k4u = y.v + h * k3v;
    const double k4v = acc(y.u + h * k3u);
    return {y.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
            y.v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

// Time of the first return to u' = 0 with u > 0, integrating with fixed step h.
inline double first_return_time(const PotentialSpec& p, double A, double h, std::size_t max_steps) {
    OscState y{A, 0.0};
    double t = 0.0;
    bool left_start = false;
    for (std::size_t step = 0; step < max_steps; ++step) {
        const OscState next = rk4_step(p, y, h);
        // u' runs negative on the way out and positive on the way back; the
        // period ends where it turns from positive to non-positive near u = A.
        if (y.v > 0.0 && next.v <= 0.0 && next.u > 0.0 && left_start) {
            // Root of u'(t0 + tau) on [0, h], u' evaluated through a single
            // RK4 substep from the bracket start.
            double lo = 0.0;
            double hi = h;
            double tau = 0.5 * h;
            for (int it = 0; it < 100; ++it) {
                const OscState s = rk4_step(p, y, tau);
                if (s.v > 0.0)
                    lo = tau;
                else
                    hi = tau;
                const double slope = -eval_force(p, s.u);
                double next_tau = slope != 0.0 ? tau - s.v / slope : 0.5 * (lo + hi);
                if (!(next_tau >= lo && next_tau <= hi))
                    next_tau = 0.5 * (lo + hi);
                const double delta = std::abs(next_tau - tau);
                tau = next_tau;
                if (delta <= 1e-15 * h || hi - lo <= 1e-15 * h)
                    break;
            }
            return t + tau;
        }
        if (next.v < 0.0)
            left_start = true;
        y = next;
        t += h;
    }
    throw non_convergence("period_ode: no period found within max_steps");
}

}  // namespace detail

// Integrates u'' = -V'(u) from rest at u = A with classical RK4 and measures
// the first return to the turning point.  The error estimate compares with a
// run at twice the step (RK4 error scales as h^4).
inline PeriodResult period_ode(const PotentialSpec& p, double A, const OdeConfig& cfg = {}) {
    require_valid_amplitude(p, A);
    if (!(cfg.relative_step > 0.0))
        throw std::invalid_argument("period_ode: relative_step must be > 0");
    const double stiffness = eval_force(p, A) / A;
    if (!(stiffness > 0.0))
        throw std::domain_error("period_ode: no restoring force at amplitude A");
    const double t_estimate = 2.0 * std::numbers::pi / std::sqrt(stiffness);
    const double h = cfg.relative_step * t_estimate;

    const double fine = detail::first_return_time(p, A, h, cfg.max_steps);
    const double coarse = detail::first_return_time(p, A, 2.0 * h, cfg.max_steps / 2 + 1);
    return {fine, std::abs(fine - coarse) / 15.0};
}

}  // namespace nlkg::oracle
