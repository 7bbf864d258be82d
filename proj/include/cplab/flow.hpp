// Planar fixed-point / limit-cycle flows: dr/dt = r(1-r), dphi/dt = 1.
// The radial equation has the closed form
//
//     r(t) = r0 / (r0 + (1 - r0) e^{-t})
//
// so the RK4 integration can be checked against an analytic solution; the
// circle r = 1 is the attracting limit cycle.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cplab {

inline double logistic_analytic(double r0, double t) {
    if (r0 <= 0) throw std::invalid_argument("logistic flow: r0 must be positive");
    return r0 / (r0 + (1.0 - r0) * std::exp(-t));
}

inline double logistic_rk4(double r0, double t, double dt = 1e-3) {
    if (r0 <= 0) throw std::invalid_argument("logistic flow: r0 must be positive");
    if (dt <= 0) throw std::invalid_argument("logistic flow: dt must be positive");
    auto f = [](double r) { return r * (1.0 - r); };
    double r = r0;
    auto step = [&](double h) {
        double k1 = f(r);
        double k2 = f(r + 0.5 * h * k1);
        double k3 = f(r + 0.5 * h * k2);
        double k4 = f(r + h * k3);
        r += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    };
    long long n = static_cast<long long>(t / dt);
    for (long long i = 0; i < n; ++i) step(dt);
    double rem = t - double(n) * dt;
    if (rem > 0) step(rem);
    return r;
}

struct LogisticFlowResult {
    double analytic = 0;
    double rk4 = 0;

    double abs_diff() const { return std::fabs(analytic - rk4); }
};

inline LogisticFlowResult logistic_flow(double r0, double t, double dt = 1e-3) {
    return {logistic_analytic(r0, t), logistic_rk4(r0, t, dt)};
}

struct FlowState {
    double r = 1.0;
    double phi = 0.0;  // in [0, 2*pi)
};

// Radial part follows the analytic logistic solution; phase advances
// linearly mod 2*pi.
inline FlowState limit_cycle_flow(const FlowState& s, double t) {
    if (s.r <= 0) throw std::invalid_argument("limit_cycle_flow: r must be positive");
    const double two_pi = 2.0 * std::numbers::pi;
    double phi = std::fmod(s.phi + t, two_pi);
    if (phi < 0) phi += two_pi;
    return {logistic_analytic(s.r, t), phi};
}

}  // namespace cplab
