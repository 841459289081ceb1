#pragma once

// Complete elliptic integral of the first kind
//
//   K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt
//
// by AGM, the Landen pair, and the LDE series around the mean value of
// 1 - m sin^2 t (interpolation parameter fixed at lambda = -m/2).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nlkg/model.hpp"

namespace nlkg::elliptic {

inline double agm_K(double m) {
    if (!(m < 1.0) || std::isnan(m))
        throw std::domain_error("agm_K: requires m < 1");
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-15 * a)
            break;
    }
    return std::numbers::pi / (a + b);
}

// m' = 4 sqrt(m) / (1 + sqrt(m))^2, so that K(m) = K(m') / (1 + sqrt(m)).
// 0 and 1 are fixed points.
inline double landen_ascend(double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw std::domain_error("landen_ascend: requires 0 <= m <= 1");
    const double r = std::sqrt(m);
    return 4.0 * r / ((1.0 + r) * (1.0 + r));
}

// Inverse of landen_ascend.  (-2 + 2 sqrt(1-m) + m)^2 / m^2 rewritten as
// (m / (1 + sqrt(1-m))^2)^2, which has no cancellation as m -> 0.
inline double landen_descend(double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw std::domain_error("landen_descend: requires 0 <= m <= 1");
    const double s = 1.0 + std::sqrt(1.0 - m);
    const double q = m / (s * s);
    return q * q;
}

// K_N(m) = (pi/2) sum_{k=0}^{N} (1 - m/2)^{-k-1/2} C(-1/2, k)
//          * sum_{j=0}^{k} C(k, j) w_j (-m)^j (m/2)^{k-j}
//
// with w_j = Gamma(j+1/2) / (sqrt(pi) j!) the mean of sin^{2j} t.  The inner
// sum is the k-th moment of (m/2) cos 2t, i.e. (m/2)^k w_{k/2} for even k and
// zero for odd k, so K_{2n+1} = K_{2n}.  Summing the moment directly avoids
// the cancellation of the binomial form at large k.
inline double K_lde_series(double m, int N, int max_order = kDefaultMaxLdeOrder) {
    if (!(m < 2.0) || std::isnan(m))
        throw std::domain_error("K_lde_series: requires m < 2");
    if (N < 0 || N > max_order)
        throw std::out_of_range("K_lde_series: order must be in [0, " + std::to_string(max_order) + "]");

    const double base = 1.0 - 0.5 * m;
    const double r = 0.5 * m / base;  // (m/2) / (1 - m/2)

    double total = 1.0;
    double binom_half = 1.0;  // C(-1/2, k)
    double r_pow = 1.0;       // r^k
    double w = 1.0;           // w_{k/2}
    for (int k = 1; k <= N; ++k) {
        binom_half *= (-0.5 - (k - 1)) / k;
        r_pow *= r;
        if (k % 2 == 0) {
            w *= (k - 1.0) / k;
            total += binom_half * r_pow * w;
        }
    }
    return 0.5 * std::numbers::pi * total / std::sqrt(base);
}

// One inverse-Landen step before the series:
//   K(m) = 2 (1 - sqrt(1-m)) / m * K(f^{-1}(m)),  prefactor = 2 / (1 + sqrt(1-m)).
inline double K_lde_improved(double m, int N, int max_order = kDefaultMaxLdeOrder) {
    if (!(m >= 0.0 && m < 1.0))
        throw std::domain_error("K_lde_improved: requires 0 <= m < 1");
    const double prefactor = 2.0 / (1.0 + std::sqrt(1.0 - m));
    return prefactor * K_lde_series(landen_descend(m), N, max_order);
}

}  // namespace nlkg::elliptic
