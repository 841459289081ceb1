#pragma once

// LDE dispersion relations.
//
// The period integral is expanded around the harmonic potential
// V0(u) = (1 + lambda^2) u^2 / 2 and lambda is fixed by minimal sensitivity
// of the first-order period.  With that choice the odd orders of the delta
// expansion vanish and the remaining series resums to
//
//   T_N = 4 pi / sqrt(4 + 3 mu A^2)
//         * sum_{n=0}^{N} (-1)^n C(-1/2, n) C(-1/2, 2n) x^{2n},
//   x   = mu A^2 / (4 + 3 mu A^2),
//
// with Omega_N = 2 pi / T_N.  The public API takes the summation limit N.
// The customary "first/second/third order" labels correspond to N = 0, 2, 3
// for Duffing and N = 1, 2, 3 for the pure quartic potential.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nlkg/elliptic.hpp"
#include "nlkg/model.hpp"

namespace nlkg::lde {

// Generalized binomial C(-1/2, n) by C(-1/2, n) = C(-1/2, n-1) (-1/2 - n + 1) / n.
inline double binomial_minus_half(int n) {
    double c = 1.0;
    for (int k = 1; k <= n; ++k)
        c *= (-0.5 - k + 1.0) / k;
    return c;
}

inline void require_order(int N, int max_order) {
    if (N < 0 || N > max_order)
        throw std::out_of_range("lde order must be in [0, " + std::to_string(max_order) + "]");
}

// sum_{n=0}^{N} (-1)^n C(-1/2, n) C(-1/2, 2n) x^{2n}.  Every term is >= 0.
inline double period_series(double x, int N) {
    const double x2 = x * x;
    double sum = 1.0;
    double power = 1.0;
    double c_n = 1.0;   // C(-1/2, n)
    double c_2n = 1.0;  // C(-1/2, 2n)
    for (int n = 1; n <= N; ++n) {
        c_n *= (-0.5 - n + 1.0) / n;
        c_2n *= (-0.5 - (2 * n - 1) + 1.0) / (2 * n - 1);
        c_2n *= (-0.5 - 2 * n + 1.0) / (2 * n);
        power *= x2;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * c_n * c_2n * power;
    }
    return sum;
}

// lambda_PMS = sqrt(3 mu A^2) / 2.
inline double pms_lambda(double mu, double A) {
    const double muA2 = mu * A * A;
    if (!(muA2 >= 0.0))
        throw std::domain_error("pms_lambda: requires 3 mu A^2 >= 0");
    return 0.5 * std::sqrt(3.0 * muA2);
}

// The sufficient condition lambda > sqrt(mu A^2 / 2) sqrt(1 + 1/(mu A^2))
// simplifies to lambda^2 > (mu A^2 + 1) / 2.  Reported, never enforced: the
// series is accurate well inside the region where the bound fails.
inline ConvergenceReport convergence_check(double mu, double A) {
    if (!(mu > 0.0))
        throw std::domain_error("convergence_check: requires mu > 0");
    if (!(A > 0.0))
        throw std::domain_error("convergence_check: requires A > 0");
    const double muA2 = mu * A * A;
    ConvergenceReport r;
    r.lambda_pms = std::sqrt(0.75 * muA2);
    r.lambda_bound = std::sqrt(0.5 * muA2 + 0.5);
    r.margin = r.lambda_pms - r.lambda_bound;
    r.satisfied = r.margin > 0.0;
    return r;
}

inline double duffing_period_lde(double mu, double A, int N, int max_order = kDefaultMaxLdeOrder) {
    require_order(N, max_order);
    const double muA2 = mu * A * A;
    const double denom = 4.0 + 3.0 * muA2;
    if (!(denom > 0.0))
        throw std::domain_error("duffing_period_lde: requires 4 + 3 mu A^2 > 0");
    return 4.0 * std::numbers::pi / std::sqrt(denom) * period_series(muA2 / denom, N);
}

inline DispersionResult duffing_omega_lde(double mu, double A, int N, int max_order = kDefaultMaxLdeOrder) {
    DispersionResult r{2.0 * std::numbers::pi / duffing_period_lde(mu, A, N, max_order), Lde{N}, std::nullopt};
    if (mu > 0.0 && A > 0.0)
        r.diagnostics = convergence_check(mu, A);
    return r;
}

// Pure quartic: drop the harmonic part, x -> 1/3 and Omega is linear in A sqrt(mu).
inline DispersionResult pure_quartic_omega_lde(double mu, double A, int N, int max_order = kDefaultMaxLdeOrder) {
    require_order(N, max_order);
    const double muA2 = mu * A * A;
    if (!(muA2 > 0.0))
        throw std::domain_error("pure_quartic_omega_lde: requires mu A^2 > 0");
    const double T = 4.0 * std::numbers::pi / std::sqrt(3.0 * muA2) * period_series(1.0 / 3.0, N);
    return {2.0 * std::numbers::pi / T, Lde{N}, std::nullopt};
}

// Omega = pi / (2 K_N(sin^2(A/2))) with the Landen-improved series.
inline DispersionResult sine_gordon_omega_lde(double A, int N, int max_order = kDefaultMaxLdeOrder) {
    if (!(A > 0.0 && A < std::numbers::pi))
        throw std::domain_error("sine_gordon_omega_lde: requires 0 < A < pi");
    const double s = std::sin(0.5 * A);
    return {0.5 * std::numbers::pi / elliptic::K_lde_improved(s * s, N, max_order), Lde{N}, std::nullopt};
}

}  // namespace nlkg::lde
