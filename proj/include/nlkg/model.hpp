#pragma once

// Potentials, wave kinematics and the query/result vocabulary shared by the
// rest of the library.
//
// A periodic traveling wave u(kx - wt) of u_tt - u_xx + V'(u) = 0 reduces to
// the oscillator  Omega^2 u'' + V'(u) = 0  in the phase theta = kx - wt, with
// Omega^2 = w^2 - k^2.  Everything downstream computes Omega as a function of
// the amplitude A for one of three even potentials:
//
//   Duffing       V(u) = u^2/2 + mu u^4/4
//   Sine-Gordon   V(u) = -cos u
//   Pure quartic  V(u) = mu u^4/4
//
// All quantities are dimensionless.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace nlkg {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Raised when an iterative oracle exhausts its refinement/step budget.
class non_convergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxLdeOrder = 30;

// ---------------------------------------------------------------------------
// Potentials

struct Duffing {
    double mu = 0.0;
    friend bool operator==(const Duffing&, const Duffing&) = default;
};

struct SineGordon {
    friend bool operator==(const SineGordon&, const SineGordon&) = default;
};

struct PureQuartic {
    double mu = 1.0;
    friend bool operator==(const PureQuartic&, const PureQuartic&) = default;
};

using PotentialSpec = std::variant<Duffing, SineGordon, PureQuartic>;

inline std::string potential_name(const PotentialSpec& p) {
    return std::visit(overloaded{[](const Duffing&) { return std::string("duffing"); },
                                 [](const SineGordon&) { return std::string("sine-gordon"); },
                                 [](const PureQuartic&) { return std::string("pure-quartic"); }},
                      p);
}

// Throws std::domain_error naming the violated condition when the potential
// has no oscillation of amplitude A between turning points +-A.
inline void require_valid_amplitude(const PotentialSpec& p, double A) {
    if (!std::isfinite(A) || !(A > 0.0))
        throw std::domain_error("amplitude must be finite and > 0");
    std::visit(overloaded{
                   [A](const Duffing& d) {
                       if (!std::isfinite(d.mu))
                           throw std::domain_error("duffing: mu must be finite");
                       if (!(1.0 + d.mu * A * A > 0.0))
                           throw std::domain_error("duffing: requires 1 + mu*A^2 > 0");
                   },
                   [A](const SineGordon&) {
                       if (!(A < std::numbers::pi))
                           throw std::domain_error("sine-gordon: requires 0 < A < pi");
                   },
                   [](const PureQuartic& q) {
                       if (!std::isfinite(q.mu) || !(q.mu > 0.0))
                           throw std::domain_error("pure-quartic: requires mu > 0");
                   }},
               p);
}

inline double eval_potential(const PotentialSpec& p, double u) {
    return std::visit(overloaded{[u](const Duffing& d) { return 0.5 * u * u + 0.25 * d.mu * u * u * u * u; },
                                 [u](const SineGordon&) { return -std::cos(u); },
                                 [u](const PureQuartic& q) { return 0.25 * q.mu * u * u * u * u; }},
                      p);
}

inline double eval_force(const PotentialSpec& p, double u) {
    return std::visit(overloaded{[u](const Duffing& d) { return u + d.mu * u * u * u; },
                                 [u](const SineGordon&) { return std::sin(u); },
                                 [u](const PureQuartic& q) { return q.mu * u * u * u; }},
                      p);
}

// Conserved energy E = V(A) of the oscillation with turning points +-A.
inline double turning_energy(const PotentialSpec& p, double A) {
    require_valid_amplitude(p, A);
    return eval_potential(p, A);
}

// Temporal frequency w = sqrt(Omega^2 + k^2).
inline double omega_from_wavenumber(double omega_cap, double k) {
    if (!(omega_cap > 0.0) || !std::isfinite(k))
        throw std::domain_error("omega_from_wavenumber: requires Omega > 0 and finite k");
    if (k == 0.0)
        return omega_cap;
    return std::sqrt(omega_cap * omega_cap + k * k);
}

struct WaveContext {
    double k = 0.0;
    double A = 1.0;
};

// ---------------------------------------------------------------------------
// Methods, queries, results

struct Exact {
    friend bool operator==(const Exact&, const Exact&) = default;
};

// LDE series truncated at summation limit N.
struct Lde {
    int order = 0;
    friend bool operator==(const Lde&, const Lde&) = default;
};

// Harmonic-balance baseline of order 1 or 2.
struct Lim {
    int order = 1;
    friend bool operator==(const Lim&, const Lim&) = default;
};

using MethodId = std::variant<Exact, Lde, Lim>;

inline void require_valid_method(const MethodId& m, int max_order = kDefaultMaxLdeOrder) {
    std::visit(overloaded{[](const Exact&) {},
                          [max_order](const Lde& l) {
                              if (l.order < 0 || l.order > max_order)
                                  throw std::out_of_range("lde order must be in [0, " +
                                                          std::to_string(max_order) + "]");
                          },
                          [](const Lim& l) {
                              if (l.order != 1 && l.order != 2)
                                  throw std::out_of_range("lim order must be 1 or 2");
                          }},
               m);
}

// Short label used in tables and CSV headers: exact, lde<N>, lim<k>.
inline std::string method_label(const MethodId& m) {
    return std::visit(overloaded{[](const Exact&) { return std::string("exact"); },
                                 [](const Lde& l) { return "lde" + std::to_string(l.order); },
                                 [](const Lim& l) { return "lim" + std::to_string(l.order); }},
                      m);
}

// Inverse of method_label. Throws std::invalid_argument on unknown labels.
inline MethodId parse_method_label(const std::string& s) {
    auto parse_order = [&s](std::size_t prefix) {
        const std::string digits = s.substr(prefix);
        if (digits.empty() || digits.size() > 3 ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad method label: " + s);
        return std::stoi(digits);
    };
    if (s == "exact")
        return Exact{};
    if (s.rfind("lde", 0) == 0)
        return Lde{parse_order(3)};
    if (s.rfind("lim", 0) == 0)
        return Lim{parse_order(3)};
    throw std::invalid_argument("bad method label: " + s);
}

// Outcome of comparing lambda_PMS with the sufficient bound for uniform
// convergence of the Duffing period series.  Here Delta(u) is the relative
// deviation of the interpolated potential from the harmonic one; the series
// converges uniformly when |Delta(u)| <= Delta0 < 1 on [-A, A].
struct ConvergenceReport {
    double lambda_pms = 0.0;
    double lambda_bound = 0.0;
    bool satisfied = false;
    double margin = 0.0;  // lambda_pms - lambda_bound
};

struct DispersionQuery {
    PotentialSpec potential;
    double A = 1.0;
    MethodId method;
    double tol = 1e-12;
};

struct DispersionResult {
    double omega_cap = 0.0;
    MethodId method;
    std::optional<ConvergenceReport> diagnostics;
};

}  // namespace nlkg
