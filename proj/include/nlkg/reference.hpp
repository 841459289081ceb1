#pragma once

// Closed forms of the low orders, written out independently of the series
// code.  They are regression oracles for tests and `nlkg validate`; nothing in
// the evaluation path calls them.

#include <cmath>
#include <numbers>

#include "nlkg/elliptic.hpp"

namespace nlkg::reference {

// Duffing, y = mu A^2.

inline double duffing_first(double y) { return std::sqrt(1.0 + 0.75 * y); }

inline double duffing_second(double y) {
    const double d = 4.0 + 3.0 * y;
    const double d4 = d * d * d * d;
    return std::sqrt(d) / (2.0 * (1.0 + 3.0 * y * y * (1024.0 + y * (1536.0 + 611.0 * y)) / (1024.0 * d4)));
}

inline double duffing_third(double y) {
    const double d = 4.0 + 3.0 * y;
    const double d2 = d * d;
    const double num = 3.0 * y * y * (385.0 * y * y * y * y + 560.0 * y * y * d2 + 1024.0 * d2 * d2);
    return std::sqrt(d) / (2.0 * (1.0 + num / (16384.0 * d2 * d2 * d2)));
}

// Elliptic closed form of the exact Duffing dispersion relation (valid for
// 1 + y > 0, both signs of y).
inline double duffing_exact_elliptic(double y) {
    const double m = y / (2.0 * (1.0 + y));
    return std::numbers::pi * std::sqrt(1.0 + y) / (2.0 * elliptic::agm_K(m));
}

// Pure quartic, mu = 1.

inline double pure_quartic_first(double A) { return 24.0 * std::sqrt(3.0) * A / 49.0; }
inline double pure_quartic_second(double A) { return 13824.0 * std::sqrt(3.0) * A / 28259.0; }
inline double pure_quartic_third(double A) { return 1990656.0 * std::sqrt(3.0) * A / 4069681.0; }

// Sine-Gordon.

inline double K_first(double m) { return std::numbers::pi / std::sqrt(1.0 - 0.5 * m + 3.0 * std::sqrt(1.0 - m)); }

inline double sine_gordon_first(double A) {
    return 0.25 * std::sqrt(std::cos(A) + 12.0 * std::abs(std::cos(0.5 * A)) + 3.0);
}

inline double sine_gordon_second(double A) {
    const double c4 = std::cos(0.25 * A);
    const double c2 = std::cos(0.5 * A);
    const double sec4 = 1.0 / c4;
    const double a = 3.0 + 12.0 * c2 + std::cos(A);
    const double num = 16.0 * c4 * c4 * a * a * std::sqrt(2.0 + 2.0 * c2 * sec4 * sec4 * sec4 * sec4);
    const double den = 2713.0 + 2520.0 * c2 + 2580.0 * std::cos(A) + 360.0 * std::cos(1.5 * A) +
                       19.0 * std::cos(2.0 * A);
    return num / den;
}

}  // namespace nlkg::reference
