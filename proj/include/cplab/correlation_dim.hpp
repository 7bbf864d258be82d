// Grassberger-Procaccia correlation dimension. The correlation sum
//
//     C(r) = #{pairs (i, j), i < j : |x_i - x_j| <= r} / (N(N-1)/2)
//
// scales as r^D on a self-similar set; the estimate is the least-squares
// slope of log C against log r over a configured radius decade, reported
// with fit diagnostics.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace cplab {

struct CorrDimFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;                        // coefficient of determination
    std::vector<std::array<double, 2>> bins;     // (r, C(r)) for each radius
    std::uint64_t pairs_total = 0;
    std::size_t points = 0;
};

inline std::vector<double> log_spaced_radii(double rmin, double rmax, std::size_t nbins) {
    if (!(rmin > 0) || !(rmax > rmin)) throw std::invalid_argument("radii: need 0 < rmin < rmax");
    if (nbins < 4) throw std::invalid_argument("radii: need at least 4 bins");
    std::vector<double> r(nbins);
    double step = std::log(rmax / rmin) / double(nbins - 1);
    for (std::size_t k = 0; k < nbins; ++k) r[k] = rmin * std::exp(step * double(k));
    return r;
}

inline CorrDimFit correlation_dimension(const std::vector<std::array<double, 3>>& pts,
                                        double rmin, double rmax, std::size_t nbins = 16) {
    if (pts.size() < 10000)
        throw std::invalid_argument("correlation_dimension: too few points (need >= 10^4)");
    std::vector<double> radii = log_spaced_radii(rmin, rmax, nbins);
    std::vector<double> r2(nbins);
    for (std::size_t k = 0; k < nbins; ++k) r2[k] = radii[k] * radii[k];

    // histogram over the first radius bin each pair fits into
    std::vector<std::uint64_t> hist(nbins, 0);
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = pts[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& b = pts[j];
            double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
            double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 > r2[nbins - 1]) continue;
            std::size_t k = std::lower_bound(r2.begin(), r2.end(), d2) - r2.begin();
            ++hist[k];
        }
    }

    CorrDimFit fit;
    fit.points = n;
    fit.pairs_total = std::uint64_t(n) * (n - 1) / 2;

    std::uint64_t cum = 0;
    std::vector<double> lx, ly;
    fit.bins.reserve(nbins);
    for (std::size_t k = 0; k < nbins; ++k) {
        cum += hist[k];
        double c = double(cum) / double(fit.pairs_total);
        fit.bins.push_back({radii[k], c});
        if (cum > 0) {
            lx.push_back(std::log(radii[k]));
            ly.push_back(std::log(c));
        }
    }
    if (lx.size() < 2)
        throw std::invalid_argument("correlation_dimension: degenerate radius range (no pairs)");

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double cnt = double(lx.size());
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    double denom = cnt * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("correlation_dimension: degenerate radius range");
    fit.slope = (cnt * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / cnt;
    double ss_tot = syy - sy * sy / cnt;
    double ss_res = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ss_res += e * e;
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

// Deterministic reference sets with known dimension.
inline std::vector<std::array<double, 3>> line_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::array<double, 3>> pts(n);
    for (auto& p : pts) p = {u(rng), 0.0, 0.0};
    return pts;
}

inline std::vector<std::array<double, 3>> square_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::array<double, 3>> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng), 0.0};
    return pts;
}

}  // namespace cplab
