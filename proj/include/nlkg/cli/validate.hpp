#pragma once

// Cross-oracle and regression checks run by `nlkg validate`.

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nlkg/baselines.hpp"
#include "nlkg/elliptic.hpp"
#include "nlkg/lde.hpp"
#include "nlkg/model.hpp"
#include "nlkg/oracle.hpp"
#include "nlkg/reference.hpp"

namespace nlkg::cli {

struct GroupResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first failure
};

namespace validate_detail {

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

class Group {
public:
    explicit Group(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    void expect_rel(double got, double want, double tol, const std::string& what) {
        const double r = rel(got, want);
        std::ostringstream os;
        os << what << ": rel err " << r << " > " << tol;
        expect(r <= tol, os.str());
    }

    // Runs body, converting an escaping exception into a failure.
    void run(const std::function<void(Group&)>& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            expect(false, std::string("exception: ") + e.what());
        }
    }

    GroupResult result() const { return result_; }

private:
    GroupResult result_;
};

struct OraclePair {
    PotentialSpec p;
    double A;
};

inline std::vector<OraclePair> oracle_pairs() {
    return {{Duffing{1.0}, 0.3},  {Duffing{1.0}, 1.0},  {Duffing{1.0}, 2.0},     {Duffing{1.0}, 5.0},
            {Duffing{0.0}, 1.0},  {Duffing{10.0}, 1.0}, {Duffing{-0.5}, 0.5},    {Duffing{-0.5}, 1.0},
            {Duffing{0.1}, 3.0},  {SineGordon{}, 0.5},  {SineGordon{}, 1.0},     {SineGordon{}, 1.5},
            {SineGordon{}, 2.0},  {SineGordon{}, 2.5},  {SineGordon{}, 3.0},     {PureQuartic{1.0}, 0.5},
            {PureQuartic{1.0}, 1.0}, {PureQuartic{1.0}, 2.0}, {PureQuartic{2.5}, 1.3}, {PureQuartic{2.5}, 0.7}};
}

}  // namespace validate_detail

inline std::vector<GroupResult> run_validation(double quad_tol = 1e-12) {
    using validate_detail::Group;
    const oracle::QuadratureConfig qcfg{quad_tol, 20};
    std::vector<GroupResult> out;

    Group oracles("oracle agreement");
    oracles.run([&](Group& g) {
        for (const auto& [p, A] : validate_detail::oracle_pairs()) {
            const double tq = oracle::period_quadrature(p, A, qcfg).T;
            const double to = oracle::period_ode(p, A).T;
            g.expect_rel(to, tq, 1e-6, "quadrature vs ode, " + potential_name(p) + " A=" + std::to_string(A));
        }
        for (double A : {0.5, 1.0, 2.0, 3.0}) {
            const double q = oracle::omega_exact(SineGordon{}, A, qcfg).omega_cap;
            const double e = oracle::omega_exact_sine_gordon(A).omega_cap;
            g.expect_rel(q, e, 1e-9, "quadrature vs elliptic, sine-gordon A=" + std::to_string(A));
        }
        for (double y : {-0.9, -0.5, 1.0, 100.0}) {
            const double q = oracle::omega_exact(Duffing{y}, 1.0, qcfg).omega_cap;
            g.expect_rel(q, reference::duffing_exact_elliptic(y), 1e-9,
                         "quadrature vs elliptic, duffing muA2=" + std::to_string(y));
        }
    });
    out.push_back(oracles.result());

    Group landen("landen identities");
    landen.run([](Group& g) {
        for (int i = 1; i <= 9; ++i) {
            const double m = 0.1 * i;
            const double k = elliptic::agm_K(m);
            const double via = elliptic::agm_K(elliptic::landen_ascend(m)) / (1.0 + std::sqrt(m));
            g.expect_rel(via, k, 1e-12, "ascending landen m=" + std::to_string(m));
            const double k_desc = 2.0 / (1.0 + std::sqrt(1.0 - m)) * elliptic::agm_K(elliptic::landen_descend(m));
            g.expect_rel(k_desc, k, 1e-12, "descending landen m=" + std::to_string(m));
        }
        for (double m : {1e-6, 1e-3, 0.2, 0.5, 0.9, 0.999, 1.0 - 1e-6}) {
            const double back = elliptic::landen_ascend(elliptic::landen_descend(m));
            g.expect(std::abs(back - m) <= 1e-12, "landen round trip m=" + std::to_string(m));
        }
    });
    out.push_back(landen.result());

    Group closed("closed-form regressions");
    closed.run([](Group& g) {
        for (double y : {0.1, 1.0, 10.0, 100.0}) {
            const std::string at = " muA2=" + std::to_string(y);
            g.expect_rel(lde::duffing_omega_lde(y, 1.0, 0).omega_cap, reference::duffing_first(y), 1e-12,
                         "duffing N=0" + at);
            g.expect_rel(lde::duffing_omega_lde(y, 1.0, 2).omega_cap, reference::duffing_second(y), 1e-12,
                         "duffing N=2" + at);
            g.expect_rel(lde::duffing_omega_lde(y, 1.0, 3).omega_cap, reference::duffing_third(y), 1e-12,
                         "duffing N=3" + at);
        }
        g.expect_rel(lde::pure_quartic_omega_lde(1.0, 1.0, 1).omega_cap, reference::pure_quartic_first(1.0), 1e-14,
                     "pure quartic N=1");
        g.expect_rel(lde::pure_quartic_omega_lde(1.0, 1.0, 2).omega_cap, reference::pure_quartic_second(1.0), 1e-14,
                     "pure quartic N=2");
        g.expect_rel(lde::pure_quartic_omega_lde(1.0, 1.0, 3).omega_cap, reference::pure_quartic_third(1.0), 1e-14,
                     "pure quartic N=3");
        for (double A : {0.5, 1.0, 2.0, 3.0}) {
            const std::string at = " A=" + std::to_string(A);
            g.expect_rel(lde::sine_gordon_omega_lde(A, 1).omega_cap, reference::sine_gordon_first(A), 1e-12,
                         "sine-gordon N=1" + at);
            g.expect_rel(lde::sine_gordon_omega_lde(A, 2).omega_cap, reference::sine_gordon_second(A), 1e-12,
                         "sine-gordon N=2" + at);
        }
        for (int i = 0; i <= 20; ++i) {
            const double m = 0.049 * i;
            g.expect_rel(elliptic::K_lde_improved(m, 1), reference::K_first(m), 1e-13,
                         "improved K N=1 m=" + std::to_string(m));
        }
    });
    out.push_back(closed.result());

    Group pairing("pairing property");
    pairing.run([](Group& g) {
        for (double A : {0.5, 1.5, 2.5, 3.0}) {
            const std::string at = " A=" + std::to_string(A);
            g.expect_rel(lde::sine_gordon_omega_lde(A, 3).omega_cap, lde::sine_gordon_omega_lde(A, 2).omega_cap,
                         1e-12, "N=3 vs N=2" + at);
            g.expect_rel(lde::sine_gordon_omega_lde(A, 5).omega_cap, lde::sine_gordon_omega_lde(A, 4).omega_cap,
                         1e-12, "N=5 vs N=4" + at);
        }
    });
    out.push_back(pairing.result());

    Group ordering("error ordering");
    ordering.run([&](Group& g) {
        for (double y : {1.0, 10.0, 100.0, 1e4}) {
            const double ex = oracle::omega_exact(Duffing{y}, 1.0, qcfg).omega_cap;
            const double e2 = std::abs(lde::duffing_omega_lde(y, 1.0, 2).omega_cap - ex);
            const double e3 = std::abs(lde::duffing_omega_lde(y, 1.0, 3).omega_cap - ex);
            const double el = std::abs(baselines::lim_duffing_omega(y, 1.0, 2).omega_cap - ex);
            const std::string at = " muA2=" + std::to_string(y);
            g.expect(e2 < el, "duffing lde2 not better than lim2" + at);
            g.expect(e3 < e2, "duffing lde3 not better than lde2" + at);
        }
        for (int i = 0; i <= 30; ++i) {
            const double A = 0.1 + 0.1 * i;
            const double ex = oracle::omega_exact_sine_gordon(A).omega_cap;
            const double e2 = std::abs(lde::sine_gordon_omega_lde(A, 2).omega_cap - ex);
            const double el = std::abs(baselines::lim_sine_gordon_omega(A, 2).omega_cap - ex);
            g.expect(e2 < el, "sine-gordon lde2 not better than lim2 at A=" + std::to_string(A));
        }
        const double ex = oracle::omega_exact(PureQuartic{1.0}, 1.0, qcfg).omega_cap;
        const double r1 = validate_detail::rel(lde::pure_quartic_omega_lde(1.0, 1.0, 1).omega_cap, ex);
        const double r2 = validate_detail::rel(lde::pure_quartic_omega_lde(1.0, 1.0, 2).omega_cap, ex);
        const double r3 = validate_detail::rel(lde::pure_quartic_omega_lde(1.0, 1.0, 3).omega_cap, ex);
        const double l2 = validate_detail::rel(baselines::lim_pure_quartic_omega(1.0, 2).omega_cap, ex);
        g.expect(r3 <= 5e-5, "pure quartic lde3 error above 5e-5");
        g.expect(r2 <= 2e-4, "pure quartic lde2 error above 2e-4");
        g.expect(r2 < l2, "pure quartic lde2 not better than lim2");
        g.expect(std::abs(std::log10(r1) - std::log10(l2)) <= 1.0, "pure quartic lde1 not within a decade of lim2");
    });
    out.push_back(ordering.result());

    return out;
}

}  // namespace nlkg::cli
