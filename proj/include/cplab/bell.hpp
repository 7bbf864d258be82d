// CHSH engine and the statistical-independence audit.
//
// Correlations live on the cosine grid cos(theta) = 1 - 2m/p: a singlet
// ensemble with m agreements out of p rows has correlation 2m/p - 1
// exactly, so on-grid CHSH values are exact rationals and the optimal
// configuration is approached with per-correlation error at most 1/p.
//
// Hidden variables are truncated p-adic addresses. The two coarse digits
// decode (by parity) to the world tag (X, Y) - the setting pair realized in
// that world; the remaining digits are the payload carrying the
// experimenter-visible statistics. The state-space measure mu(lambda, X, Y)
// is positive exactly when
//
//   (1) the world tag equals the queried settings, and
//   (2) each setting's angle relative to the model frame has a cosine on
//       the 1 - 2m/p grid (a rational cosine, by the classifier).
//
// Flipping either setting away from the tag leaves the invariant set, so
// mu vanishes on every counterfactual. The experimenter density rho is
// defined over payload digits alone; sub-ensembles partitioned by realized
// settings are therefore identically distributed (statistical independence
// at the rho level) even though mu depends on the settings for every
// admissible lambda (violation at the mu level).

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "cplab/ensemble.hpp"
#include "cplab/niven.hpp"
#include "cplab/numeric.hpp"
#include "cplab/padic.hpp"

namespace cplab {

// ---------------------------------------------------------------------------
// Settings and the cosine grid
// ---------------------------------------------------------------------------

struct Setting {
    enum class Party { alice, bob };
    Party party = Party::alice;
    int choice = 0;        // X or Y in {0, 1}
    Rational angle_turn;   // orientation as a turn
};

struct ExperimentAngles {
    Rational a0, a1, b0, b1;  // Alice and Bob setting turns

    Rational alice(int x) const { return x ? a1 : a0; }
    Rational bob(int y) const { return y ? b1 : b0; }
};

// Optimal CHSH configuration: relative turns 1/8 for three pairs, 3/8 for
// the fourth, giving S -> -2*sqrt(2) on the grid.
inline ExperimentAngles tsirelson_angles() {
    return {Rational(0), Rational(1, 4), Rational(1, 8), Rational(7, 8)};
}

struct GridCosine {
    std::uint64_t m = 0;
    std::uint64_t p = 1;

    Rational value() const { return 1 - Rational(2 * BigInt(m), BigInt(p)); }
};

// Exact test: does cos(2*pi*dturn) lie on the 1 - 2m/p grid?
inline std::optional<GridCosine> grid_cosine_from_turn(std::uint64_t p, const Rational& dturn) {
    CosineClass cc = niven_classify(dturn);
    if (!cc.is_rational()) return std::nullopt;
    Rational m = (1 - cc.value) * Rational(BigInt(p), 2);
    if (denominator(m) != 1) return std::nullopt;
    return GridCosine{static_cast<std::uint64_t>(numerator(m)), p};
}

// Nearest grid point to cos(2*pi*dturn), half-ties to even m.
inline GridCosine snap_turn_to_grid(std::uint64_t p, const Rational& dturn) {
    Rational c = rational_from_float50(cos_turn50(dturn));
    BigInt m = round_half_even(Rational(BigInt(p)) * (1 - c) / 2);
    if (m < 0) m = 0;
    if (m > p) m = p;
    return GridCosine{static_cast<std::uint64_t>(m), p};
}

// ---------------------------------------------------------------------------
// CHSH values
// ---------------------------------------------------------------------------

inline constexpr double kTsirelsonBound = 2.8284271247461903;  // 2*sqrt(2)

struct CHSHResult {
    std::array<Rational, 4> correlations{};  // C(0,0), C(0,1), C(1,0), C(1,1)
    Rational S;
    bool exceeds_local_bound = false;  // |S| > 2
    bool exceeds_tsirelson = false;    // |S| > 2*sqrt(2), numeric annotation

    // grid experiment annotations (run_bell_experiment only)
    std::uint64_t p = 0;
    std::array<std::uint64_t, 4> m{};
    bool snapped = false;
};

inline CHSHResult chsh_value(const std::array<Rational, 4>& corrs) {
    for (const Rational& c : corrs)
        if (c < -1 || c > 1) throw std::invalid_argument("chsh_value: correlation outside [-1, 1]");
    CHSHResult r;
    r.correlations = corrs;
    r.S = corrs[0] + corrs[1] + corrs[2] - corrs[3];
    Rational absS = r.S < 0 ? -r.S : r.S;
    r.exceeds_local_bound = absS > 2;
    r.exceeds_tsirelson = to_float50(absS) > Float50(kTsirelsonBound);
    return r;
}

enum class GridPolicy { strict, snap };

// Exact singlet-grid CHSH run. Each setting pair's relative turn must land
// on the cosine grid (strict) or is rounded to the nearest grid point
// (snap); correlations are then exact counts over singlet ensembles.
inline CHSHResult run_bell_experiment(std::uint64_t p, const ExperimentAngles& angles,
                                      GridPolicy policy = GridPolicy::strict) {
    if (p == 0 || p > (std::uint64_t(1) << 26))
        throw std::invalid_argument("run_bell_experiment: p out of supported range");
    CHSHResult r;
    r.p = p;
    r.snapped = (policy == GridPolicy::snap);
    std::array<Rational, 4> corrs;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            Rational dturn = angles.alice(x) - angles.bob(y);
            GridCosine g{0, p};
            if (auto exact = grid_cosine_from_turn(p, dturn)) {
                g = *exact;
            } else if (policy == GridPolicy::snap) {
                g = snap_turn_to_grid(p, dturn);
            } else {
                GridCosine near = snap_turn_to_grid(p, dturn);
                std::ostringstream os;
                os << "run_bell_experiment: relative turn " << mod1(dturn)
                   << " for settings (X=" << x << ", Y=" << y
                   << ") is off the cosine grid; nearest grid angle has cos = 1 - 2m/p with m = "
                   << near.m << " (cos = " << near.value().convert_to<double>() << ")";
                throw std::invalid_argument(os.str());
            }
            SingletPairEnsemble se = singlet_ensemble(static_cast<std::size_t>(p),
                                                      static_cast<std::size_t>(g.m));
            corrs[2 * x + y] = correlation(se);
            r.m[2 * x + y] = g.m;
        }
    }
    CHSHResult v = chsh_value(corrs);
    v.p = r.p;
    v.m = r.m;
    v.snapped = r.snapped;
    return v;
}

// The sixteen deterministic local strategies (A0, A1, B0, B1 each +-1).
inline std::vector<CHSHResult> deterministic_strategy_scan() {
    std::vector<CHSHResult> out;
    for (int bits = 0; bits < 16; ++bits) {
        int a0 = (bits & 1) ? 1 : -1, a1 = (bits & 2) ? 1 : -1;
        int b0 = (bits & 4) ? 1 : -1, b1 = (bits & 8) ? 1 : -1;
        out.push_back(chsh_value({Rational(a0 * b0), Rational(a0 * b1),
                                  Rational(a1 * b0), Rational(a1 * b1)}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hidden variables and the measure
// ---------------------------------------------------------------------------

struct HiddenVariable {
    PadicInt lambda;

    std::pair<int, int> world_tag() const {
        if (lambda.depth() < 2) throw std::invalid_argument("world_tag: depth must be >= 2");
        return {int(lambda.digits[0] % 2), int(lambda.digits[1] % 2)};
    }

    std::vector<std::uint32_t> payload() const {
        return {lambda.digits.begin() + 2, lambda.digits.end()};
    }
};

using TagDecoder = std::function<std::pair<int, int>(const PadicInt&)>;
using MuFn = std::function<Rational(const PadicInt&, int, int)>;

inline TagDecoder parity_tag_decoder() {
    return [](const PadicInt& x) { return HiddenVariable{x}.world_tag(); };
}

struct BellModel {
    std::uint32_t p = 4;
    std::size_t depth = 2;
    ExperimentAngles angles{Rational(0), Rational(1, 4), Rational(0), Rational(1, 4)};
    Rational frame_turn = 0;
    TagDecoder tag = parity_tag_decoder();
    Rational mu_scale = 1;
};

inline Rational mu_value(const BellModel& model, const PadicInt& lambda, int x, int y) {
    if (model.tag(lambda) != std::make_pair(x, y)) return 0;
    if (!grid_cosine_from_turn(model.p, model.angles.alice(x) - model.frame_turn)) return 0;
    if (!grid_cosine_from_turn(model.p, model.angles.bob(y) - model.frame_turn)) return 0;
    return model.mu_scale;
}

inline MuFn make_mu(const BellModel& model) {
    return [model](const PadicInt& l, int x, int y) { return mu_value(model, l, x, y); };
}

inline MuFn trivial_mu() {
    return [](const PadicInt&, int, int) { return Rational(1); };
}

inline std::uint64_t grid_size(std::uint32_t p, std::size_t depth) {
    BigInt n = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(depth));
    if (n > 1'000'000) throw std::invalid_argument("exhaustive lambda grid too large");
    return n.convert_to<std::uint64_t>();
}

inline std::vector<PadicInt> make_exhaustive_ensemble(std::uint32_t p, std::size_t depth) {
    std::uint64_t n = grid_size(p, depth);
    std::vector<PadicInt> out;
    out.reserve(n);
    for (std::uint64_t code = 0; code < n; ++code)
        out.push_back(PadicInt::from_integer(BigInt(code), p, depth));
    return out;
}

inline std::vector<PadicInt> sample_ensemble(std::uint32_t p, std::size_t depth, std::size_t n,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    std::vector<PadicInt> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> ds(depth);
        for (auto& d : ds) d = digit(rng);
        out.push_back(PadicInt::make(p, std::move(ds)));
    }
    return out;
}

// Negative control: the first payload digit copies the world tag, breaking
// payload/tag independence on purpose.
inline std::vector<PadicInt> sample_ensemble_adversarial(std::uint32_t p, std::size_t depth,
                                                         std::size_t n, std::uint64_t seed) {
    if (depth < 3) throw std::invalid_argument("adversarial ensemble needs depth >= 3");
    auto out = sample_ensemble(p, depth, n, seed);
    for (auto& l : out) {
        auto [x, y] = HiddenVariable{l}.world_tag();
        l.digits[2] = static_cast<std::uint32_t>(2 * x + y) % p;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

struct MeasureTable {
    std::uint32_t p = 4;
    std::size_t depth = 2;
    std::vector<Rational> rho;                       // experimenter density per lambda
    std::array<std::vector<Rational>, 4> mu;         // per setting pair 2X+Y
    std::array<std::vector<Rational>, 4> rho_bell;   // normalized rho*mu per setting pair
};

inline MeasureTable build_measure_table(const BellModel& model) {
    MeasureTable t;
    t.p = model.p;
    t.depth = model.depth;
    const std::uint64_t n = grid_size(model.p, model.depth);
    t.rho.assign(n, Rational(1, BigInt(n)));
    MuFn mu = make_mu(model);
    for (int s = 0; s < 4; ++s) {
        t.mu[s].resize(n);
        t.rho_bell[s].resize(n);
        Rational total = 0;
        for (std::uint64_t code = 0; code < n; ++code) {
            PadicInt l = PadicInt::from_integer(BigInt(code), model.p, model.depth);
            t.mu[s][code] = mu(l, s / 2, s % 2);
            t.rho_bell[s][code] = t.rho[code] * t.mu[s][code];
            total += t.rho_bell[s][code];
        }
        if (total != 0)
            for (auto& v : t.rho_bell[s]) v /= total;
    }
    return t;
}

struct CounterfactualReport {
    std::uint64_t lambdas = 0;
    std::uint64_t triples = 0;            // (lambda, X, Y) combinations examined
    std::uint64_t admissible = 0;         // mu > 0 among them
    std::uint64_t flip_checks = 0;        // counterfactual flips tested
    std::uint64_t violations = 0;         // flips with mu != 0
    Rational compliance = 1;              // 1 - violations/flip_checks
};

inline CounterfactualReport counterfactual_audit(std::uint32_t p, std::size_t depth,
                                                 const MuFn& mu) {
    CounterfactualReport rep;
    for (const PadicInt& l : make_exhaustive_ensemble(p, depth)) {
        ++rep.lambdas;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                ++rep.triples;
                if (mu(l, x, y) == 0) continue;
                ++rep.admissible;
                for (auto [fx, fy] : {std::pair{1 - x, y}, {x, 1 - y}, {1 - x, 1 - y}}) {
                    ++rep.flip_checks;
                    if (mu(l, fx, fy) != 0) ++rep.violations;
                }
            }
        }
    }
    if (rep.flip_checks > 0)
        rep.compliance = 1 - Rational(rep.violations, rep.flip_checks);
    return rep;
}

// Setting pairs (X, Y) at which mu(lambda, X, Y) > 0.
inline std::vector<std::pair<int, int>> admissible_settings(const PadicInt& lambda, const MuFn& mu) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if (mu(lambda, x, y) > 0) out.emplace_back(x, y);
    return out;
}

struct SiMuReport {
    std::uint64_t lambdas = 0;
    std::uint64_t setting_dependent = 0;  // lambdas whose mu varies with (X, Y)
    Rational dependence_fraction = 0;
    bool example_found = false;
    BigInt example_lambda;                // integer code of an exhibit
    std::pair<int, int> example_setting{0, 0};
    std::pair<int, int> example_flip{0, 0};
};

// Does mu depend on the settings? For the supermeasured model every
// admissible lambda has mu positive at its tag and zero at the flips, so
// the dependence fraction is 1; for the trivial control it is 0.
inline SiMuReport check_SI_mu(std::uint32_t p, std::size_t depth, const MuFn& mu) {
    SiMuReport rep;
    for (const PadicInt& l : make_exhaustive_ensemble(p, depth)) {
        ++rep.lambdas;
        std::array<Rational, 4> v;
        for (int s = 0; s < 4; ++s) v[s] = mu(l, s / 2, s % 2);
        bool varies = !(v[0] == v[1] && v[1] == v[2] && v[2] == v[3]);
        if (varies) {
            ++rep.setting_dependent;
            if (!rep.example_found) {
                // exhibit a single-coordinate flip with differing mu
                for (int x = 0; x < 2 && !rep.example_found; ++x)
                    for (int y = 0; y < 2 && !rep.example_found; ++y)
                        if (v[2 * x + y] != v[2 * (1 - x) + y]) {
                            rep.example_found = true;
                            rep.example_lambda = l.to_integer();
                            rep.example_setting = {x, y};
                            rep.example_flip = {1 - x, y};
                        }
            }
        }
    }
    if (rep.lambdas > 0)
        rep.dependence_fraction = Rational(rep.setting_dependent, rep.lambdas);
    return rep;
}

struct SiRhoReport {
    bool exact_mode = true;
    bool equal = false;                       // exact-mode verdict
    std::array<std::uint64_t, 4> subensemble_sizes{};
    double chi_square = 0.0;                  // sampling mode
    std::uint64_t dof = 0;
    double p_value = 1.0;
};

namespace detail {

inline std::array<std::map<std::vector<std::uint32_t>, std::uint64_t>, 4>
payload_counts(const std::vector<PadicInt>& ensemble, const TagDecoder& tag) {
    std::array<std::map<std::vector<std::uint32_t>, std::uint64_t>, 4> counts;
    for (const PadicInt& l : ensemble) {
        auto [x, y] = tag(l);
        ++counts[2 * x + y][HiddenVariable{l}.payload()];
    }
    return counts;
}

}  // namespace detail

// Exact mode: the payload distributions of the four sub-ensembles
// (partitioned by realized settings = world tag) must be identical as
// rational distributions.
inline SiRhoReport check_SI_rho_exact(const std::vector<PadicInt>& ensemble,
                                      const TagDecoder& tag = parity_tag_decoder()) {
    auto counts = detail::payload_counts(ensemble, tag);
    SiRhoReport rep;
    rep.exact_mode = true;
    for (int s = 0; s < 4; ++s) {
        for (const auto& [k, c] : counts[s]) rep.subensemble_sizes[s] += c;
        if (rep.subensemble_sizes[s] == 0)
            throw std::invalid_argument("check_SI_rho: empty sub-ensemble");
    }
    rep.equal = true;
    for (int s = 1; s < 4 && rep.equal; ++s) {
        // compare normalized distributions exactly
        auto keys = counts[0];
        for (const auto& [k, c] : counts[s]) keys[k] += 0 * c;  // union of supports
        for (const auto& [k, unused] : keys) {
            (void)unused;
            auto it0 = counts[0].find(k);
            auto its = counts[s].find(k);
            Rational f0 = it0 == counts[0].end() ? Rational(0)
                                                 : Rational(it0->second, rep.subensemble_sizes[0]);
            Rational fs = its == counts[s].end() ? Rational(0)
                                                 : Rational(its->second, rep.subensemble_sizes[s]);
            if (f0 != fs) { rep.equal = false; break; }
        }
    }
    return rep;
}

// Sampling mode: chi-square homogeneity test of the payload distribution
// across the four sub-ensembles.
inline SiRhoReport check_SI_rho_sampled(const std::vector<PadicInt>& ensemble,
                                        const TagDecoder& tag = parity_tag_decoder()) {
    auto counts = detail::payload_counts(ensemble, tag);
    SiRhoReport rep;
    rep.exact_mode = false;

    std::map<std::vector<std::uint32_t>, std::uint64_t> pooled;
    std::uint64_t total = 0;
    for (int s = 0; s < 4; ++s) {
        for (const auto& [k, c] : counts[s]) {
            pooled[k] += c;
            rep.subensemble_sizes[s] += c;
        }
        if (rep.subensemble_sizes[s] == 0)
            throw std::invalid_argument("check_SI_rho: empty sub-ensemble");
        total += rep.subensemble_sizes[s];
    }

    double chi2 = 0.0;
    for (const auto& [k, pc] : pooled) {
        for (int s = 0; s < 4; ++s) {
            double expect = double(pc) * double(rep.subensemble_sizes[s]) / double(total);
            auto it = counts[s].find(k);
            double obs = it == counts[s].end() ? 0.0 : double(it->second);
            chi2 += (obs - expect) * (obs - expect) / expect;
        }
    }
    rep.chi_square = chi2;
    rep.dof = (pooled.size() - 1) * 3;
    if (rep.dof == 0) {
        rep.p_value = 1.0;
    } else {
        boost::math::chi_squared dist(static_cast<double>(rep.dof));
        rep.p_value = boost::math::cdf(boost::math::complement(dist, chi2));
    }
    rep.equal = rep.p_value > 0.01;
    return rep;
}

}  // namespace cplab
