#pragma once

// Single entry point: evaluate any method for any potential.

#include <stdexcept>

#include "nlkg/baselines.hpp"
#include "nlkg/lde.hpp"
#include "nlkg/model.hpp"
#include "nlkg/oracle.hpp"

namespace nlkg {

// Exact Omega from the cheapest oracle: the AGM closed form for Sine-Gordon,
// quadrature otherwise.
inline DispersionResult exact_omega(const PotentialSpec& p, double A, double tol = 1e-12) {
    if (std::holds_alternative<SineGordon>(p))
        return oracle::omega_exact_sine_gordon(A);
    return oracle::omega_exact(p, A, oracle::QuadratureConfig{tol, 20});
}

inline DispersionResult evaluate(const DispersionQuery& q, int max_order = kDefaultMaxLdeOrder) {
    require_valid_amplitude(q.potential, q.A);
    require_valid_method(q.method, max_order);
    if (!(q.tol > 0.0))
        throw std::invalid_argument("tolerance must be > 0");

    const double A = q.A;
    return std::visit(
        overloaded{
            [&](const Exact&) { return exact_omega(q.potential, A, q.tol); },
            [&](const Lde& m) {
                return std::visit(
                    overloaded{[&](const Duffing& d) { return lde::duffing_omega_lde(d.mu, A, m.order, max_order); },
                               [&](const SineGordon&) { return lde::sine_gordon_omega_lde(A, m.order, max_order); },
                               [&](const PureQuartic& pq) {
                                   return lde::pure_quartic_omega_lde(pq.mu, A, m.order, max_order);
                               }},
                    q.potential);
            },
            [&](const Lim& m) {
                return std::visit(
                    overloaded{[&](const Duffing& d) { return baselines::lim_duffing_omega(d.mu, A, m.order); },
                               [&](const SineGordon&) { return baselines::lim_sine_gordon_omega(A, m.order); },
                               [&](const PureQuartic& pq) {
                                   return baselines::lim_pure_quartic_omega(A, m.order, pq.mu);
                               }},
                    q.potential);
            }},
        q.method);
}

}  // namespace nlkg
