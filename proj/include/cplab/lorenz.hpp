// Lorenz system with fixed-step RK4 (bit-reproducible for identical
// inputs), tangent-space volume tracking, and lobe symbolic dynamics.
//
// The velocity-field divergence is the constant -(sigma + 1 + beta), so an
// infinitesimal volume contracts at that exact exponential rate; the
// tangent-space determinant gives a numeric cross-check. Lobe symbols are
// emitted at local maxima of Z: L for X < 0, R for X > 0, with a dead band
// |X| < 1e-6 skipped.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplab {

struct LorenzParams {
    double sigma = 10.0;
    double rho = 28.0;   // the Rayleigh parameter, not a probability density
    double beta = 8.0 / 3.0;
};

struct LorenzState {
    double x = 0, y = 0, z = 0;

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline LorenzState lorenz_rhs(const LorenzState& s, const LorenzParams& p) {
    return {p.sigma * (s.y - s.x), s.x * (p.rho - s.z) - s.y, s.x * s.y - p.beta * s.z};
}

inline LorenzState step_lorenz(const LorenzState& s, const LorenzParams& p, double dt) {
    if (dt <= 0) throw std::invalid_argument("step_lorenz: dt must be positive");
    if (!s.finite()) throw std::invalid_argument("step_lorenz: non-finite state");
    auto ax = [](const LorenzState& a, const LorenzState& b, double c) {
        return LorenzState{a.x + c * b.x, a.y + c * b.y, a.z + c * b.z};
    };
    LorenzState k1 = lorenz_rhs(s, p);
    LorenzState k2 = lorenz_rhs(ax(s, k1, dt / 2), p);
    LorenzState k3 = lorenz_rhs(ax(s, k2, dt / 2), p);
    LorenzState k4 = lorenz_rhs(ax(s, k3, dt), p);
    return {s.x + dt / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
            s.y + dt / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
            s.z + dt / 6 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z)};
}

struct TrajectorySegment {
    double t0 = 0;
    double dt = 1e-3;        // time between recorded states
    std::vector<LorenzState> states;

    double time_at(std::size_t i) const { return t0 + double(i) * dt; }
};

inline TrajectorySegment integrate(const LorenzState& start, const LorenzParams& p, double dt,
                                   std::size_t steps, std::size_t record_every = 1) {
    if (record_every == 0) throw std::invalid_argument("integrate: record_every must be >= 1");
    TrajectorySegment traj;
    traj.dt = dt * double(record_every);
    traj.states.reserve(steps / record_every + 1);
    LorenzState s = start;
    traj.states.push_back(s);
    for (std::size_t i = 1; i <= steps; ++i) {
        s = step_lorenz(s, p, dt);
        if (!s.finite()) throw std::runtime_error("integrate: state became non-finite");
        if (i % record_every == 0) traj.states.push_back(s);
    }
    return traj;
}

// Analytic trace of the Jacobian; constant over state space.
inline double divergence(const LorenzParams& p) { return -(p.sigma + 1.0 + p.beta); }

namespace detail {

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 jacobian(const LorenzState& s, const LorenzParams& p) {
    return {{{-p.sigma, p.sigma, 0.0},
             {p.rho - s.z, -1.0, -s.x},
             {s.y, s.x, -p.beta}}};
}

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Mat3 axpy(const Mat3& a, const Mat3& b, double c) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + c * b[i][j];
    return r;
}

inline double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace detail

struct ContractionReport {
    double rate = 0;       // measured d(log V)/dt from the tangent determinant
    double analytic = 0;   // divergence(params)
    double rel_error = 0;
};

// Tangent-space volume contraction. The cloud supplies a base point and a
// simplex: columns of M(0) are the edges cloud[i] - cloud[0], i = 1..3.
// M evolves by the variational equation dM/dt = J(x(t)) M coupled to the
// trajectory of the base point, and the report compares
// (log det M(t) - log det M(0))/t against the analytic divergence.
inline ContractionReport volume_contraction(const std::vector<LorenzState>& cloud,
                                            const LorenzParams& p, double t, double dt = 1e-3) {
    if (cloud.size() < 4) throw std::invalid_argument("volume_contraction: need >= 4 points");
    if (t <= 0 || dt <= 0) throw std::invalid_argument("volume_contraction: t and dt must be positive");

    detail::Mat3 m{};
    for (int c = 0; c < 3; ++c) {
        m[0][c] = cloud[c + 1].x - cloud[0].x;
        m[1][c] = cloud[c + 1].y - cloud[0].y;
        m[2][c] = cloud[c + 1].z - cloud[0].z;
    }
    double det0 = detail::det3(m);
    if (det0 == 0) throw std::invalid_argument("volume_contraction: degenerate simplex");

    LorenzState s = cloud[0];
    long long n = static_cast<long long>(std::llround(t / dt));
    for (long long i = 0; i < n; ++i) {
        // coupled RK4 on (state, tangent matrix)
        auto ax = [](const LorenzState& a, const LorenzState& b, double c) {
            return LorenzState{a.x + c * b.x, a.y + c * b.y, a.z + c * b.z};
        };
        LorenzState k1 = lorenz_rhs(s, p);
        detail::Mat3 q1 = detail::matmul(detail::jacobian(s, p), m);
        LorenzState s2 = ax(s, k1, dt / 2);
        detail::Mat3 m2 = detail::axpy(m, q1, dt / 2);
        LorenzState k2 = lorenz_rhs(s2, p);
        detail::Mat3 q2 = detail::matmul(detail::jacobian(s2, p), m2);
        LorenzState s3 = ax(s, k2, dt / 2);
        detail::Mat3 m3 = detail::axpy(m, q2, dt / 2);
        LorenzState k3 = lorenz_rhs(s3, p);
        detail::Mat3 q3 = detail::matmul(detail::jacobian(s3, p), m3);
        LorenzState s4 = ax(s, k3, dt);
        detail::Mat3 m4 = detail::axpy(m, q3, dt);
        LorenzState k4 = lorenz_rhs(s4, p);
        detail::Mat3 q4 = detail::matmul(detail::jacobian(s4, p), m4);
        s = LorenzState{s.x + dt / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
                        s.y + dt / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
                        s.z + dt / 6 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z)};
        for (int i2 = 0; i2 < 3; ++i2)
            for (int j = 0; j < 3; ++j)
                m[i2][j] += dt / 6 * (q1[i2][j] + 2 * q2[i2][j] + 2 * q3[i2][j] + q4[i2][j]);
    }

    double dett = detail::det3(m);
    ContractionReport rep;
    rep.analytic = divergence(p);
    rep.rate = (std::log(std::fabs(dett)) - std::log(std::fabs(det0))) / (double(n) * dt);
    rep.rel_error = std::fabs(rep.rate - rep.analytic) / std::fabs(rep.analytic);
    return rep;
}

inline constexpr double kLobeEpsilon = 1e-6;

struct SymbolString {
    std::string symbols;        // over {L, R}
    std::vector<double> times;  // emission time per symbol, strictly increasing
};

// Lobe symbols at local maxima of Z within [t_start, t_end]; events with
// |X| < kLobeEpsilon are skipped.
inline SymbolString symbolize(const TrajectorySegment& traj,
                              double t_start = -std::numeric_limits<double>::infinity(),
                              double t_end = std::numeric_limits<double>::infinity()) {
    if (traj.states.empty()) throw std::invalid_argument("symbolize: empty trajectory");
    SymbolString out;
    for (std::size_t i = 1; i + 1 < traj.states.size(); ++i) {
        double t = traj.time_at(i);
        if (t < t_start || t > t_end) continue;
        const auto& prev = traj.states[i - 1];
        const auto& cur = traj.states[i];
        const auto& next = traj.states[i + 1];
        if (cur.z > prev.z && cur.z >= next.z) {
            if (std::fabs(cur.x) < kLobeEpsilon) continue;
            out.symbols.push_back(cur.x < 0 ? 'L' : 'R');
            out.times.push_back(t);
        }
    }
    return out;
}

inline LorenzState mirror(const LorenzState& s) { return {-s.x, -s.y, s.z}; }

inline void trajectory_csv(const TrajectorySegment& traj, std::ostream& os,
                           const std::string& json_header = "") {
    if (!json_header.empty()) os << "# " << json_header << "\n";
    os << "t,x,y,z\n";
    char buf[160];
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const auto& s = traj.states[i];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", traj.time_at(i), s.x, s.y, s.z);
        os << buf;
    }
}

// Decorrelated attractor samples for dimension estimation: integrate past
// the transient, then record one point every sample_dt.
inline std::vector<std::array<double, 3>> lorenz_attractor_points(
    std::size_t count, const LorenzParams& p = {}, double sample_dt = 0.25,
    double transient = 20.0, double dt = 1e-3, LorenzState start = {1, 1, 1}) {
    LorenzState s = start;
    auto settle = static_cast<std::size_t>(std::llround(transient / dt));
    for (std::size_t i = 0; i < settle; ++i) s = step_lorenz(s, p, dt);
    auto stride = static_cast<std::size_t>(std::llround(sample_dt / dt));
    std::vector<std::array<double, 3>> pts;
    pts.reserve(count);
    while (pts.size() < count) {
        for (std::size_t i = 0; i < stride; ++i) s = step_lorenz(s, p, dt);
        pts.push_back({s.x, s.y, s.z});
    }
    return pts;
}

}  // namespace cplab
