#include <cmath>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "cplab/bell.hpp"
#include "cplab/serialize.hpp"

using namespace cplab;

namespace {

BellModel default_model(std::uint32_t p = 4, std::size_t depth = 2) {
    BellModel m;
    m.p = p;
    m.depth = depth;
    return m;  // on-grid angles (0, 1/4) for both parties
}

PadicInt lambda_with_tag(std::uint32_t p, std::size_t depth, int x, int y) {
    std::vector<std::uint32_t> ds(depth, 0);
    ds[0] = static_cast<std::uint32_t>(x);
    ds[1] = static_cast<std::uint32_t>(y);
    return PadicInt::make(p, std::move(ds));
}

}  // namespace

TEST_CASE("grid cosines: exact recognition and snapping") {
    // relative turn 1/6: cos = 1/2 = 1 - 2m/p needs m = p/4
    auto g = grid_cosine_from_turn(8, Rational(1, 6));
    REQUIRE(g.has_value());
    REQUIRE(g->m == 2);
    REQUIRE(g->value() == Rational(1, 2));

    // p = 2: 1/2 = 1 - 2m/2 would need m = 1/2, off grid
    REQUIRE(!grid_cosine_from_turn(2, Rational(1, 6)).has_value());

    // irrational cosine is never on the grid
    REQUIRE(!grid_cosine_from_turn(1 << 20, Rational(1, 8)).has_value());

    // snapping the Tsirelson turn: m = round(p (1 - cos(pi/4)) / 2)
    GridCosine s = snap_turn_to_grid(1 << 20, Rational(1, 8));
    double target = (1u << 20) * (1.0 - std::sqrt(0.5)) / 2.0;
    REQUIRE(std::llround(target) == std::int64_t(s.m));
}

TEST_CASE("mu is positive only at the world tag with on-grid settings") {
    BellModel model = default_model();
    PadicInt l = lambda_with_tag(4, 2, 0, 1);
    REQUIRE(mu_value(model, l, 0, 1) > 0);
    REQUIRE(mu_value(model, l, 1, 1) == 0);  // X flipped
    REQUIRE(mu_value(model, l, 0, 0) == 0);  // Y flipped
    REQUIRE(mu_value(model, l, 1, 0) == 0);  // both flipped
}

TEST_CASE("off-grid settings zero out mu") {
    BellModel model = default_model();
    model.angles.a0 = Rational(1, 8);  // cos(pi/4) irrational
    PadicInt l = lambda_with_tag(4, 2, 0, 1);
    REQUIRE(mu_value(model, l, 0, 1) == 0);
}

TEST_CASE("counterfactual audit: exhaustive compliance at p = 4, depth 2") {
    BellModel model = default_model();
    CounterfactualReport rep = counterfactual_audit(4, 2, make_mu(model));
    REQUIRE(rep.lambdas == 16);
    REQUIRE(rep.triples == 64);
    REQUIRE(rep.admissible == 16);  // every lambda admissible exactly once
    REQUIRE(rep.violations == 0);
    REQUIRE(rep.compliance == 1);

    // any single lambda is admissible at exactly one setting pair
    for (int code = 0; code < 16; ++code) {
        PadicInt l = PadicInt::from_integer(code, 4, 2);
        REQUIRE(admissible_settings(l, make_mu(model)).size() == 1);
    }
}

TEST_CASE("degenerate tag decoder concentrates admissibility on one pair") {
    BellModel model = default_model();
    model.tag = [](const PadicInt&) { return std::make_pair(0, 0); };
    MuFn mu = make_mu(model);
    for (int code = 0; code < 16; ++code) {
        PadicInt l = PadicInt::from_integer(code, 4, 2);
        auto adm = admissible_settings(l, mu);
        REQUIRE(adm.size() == 1);
        REQUIRE(adm[0] == std::make_pair(0, 0));
    }
}

TEST_CASE("SI at the mu level fails for every lambda; trivial mu passes") {
    BellModel model = default_model();
    SiMuReport rep = check_SI_mu(4, 2, make_mu(model));
    REQUIRE(rep.lambdas == 16);
    REQUIRE(rep.dependence_fraction == 1);
    REQUIRE(rep.example_found);
    // the exhibit is a genuine single-coordinate flip
    PadicInt l = PadicInt::from_integer(rep.example_lambda, 4, 2);
    MuFn mu = make_mu(model);
    REQUIRE(mu(l, rep.example_setting.first, rep.example_setting.second) !=
            mu(l, rep.example_flip.first, rep.example_flip.second));

    SiMuReport ctrl = check_SI_mu(4, 2, trivial_mu());
    REQUIRE(ctrl.dependence_fraction == 0);
}

TEST_CASE("SI at the rho level holds exactly on the exhaustive grid") {
    auto ensemble = make_exhaustive_ensemble(4, 3);
    SiRhoReport rep = check_SI_rho_exact(ensemble);
    REQUIRE(rep.equal);
    for (auto n : rep.subensemble_sizes) REQUIRE(n == 16);  // 64 lambdas over 4 tags

    // depth 2: empty payloads, still exactly equal
    SiRhoReport rep2 = check_SI_rho_exact(make_exhaustive_ensemble(4, 2));
    REQUIRE(rep2.equal);
}

TEST_CASE("sampled SI-rho audit passes for the independent generator") {
    auto ensemble = sample_ensemble(4, 3, 100000, 12345);
    SiRhoReport rep = check_SI_rho_sampled(ensemble);
    REQUIRE(rep.p_value > 0.01);
    REQUIRE(rep.equal);
}

TEST_CASE("adversarial payload correlation is caught by both modes") {
    auto ensemble = sample_ensemble_adversarial(4, 3, 20000, 999);
    SiRhoReport exact = check_SI_rho_exact(ensemble);
    REQUIRE(!exact.equal);
    SiRhoReport sampled = check_SI_rho_sampled(ensemble);
    REQUIRE(sampled.p_value < 1e-6);
}

TEST_CASE("empty sub-ensembles are an error") {
    std::vector<PadicInt> only_one_tag;
    for (int i = 0; i < 8; ++i) only_one_tag.push_back(lambda_with_tag(4, 3, 0, 0));
    REQUIRE_THROWS_AS(check_SI_rho_exact(only_one_tag), std::invalid_argument);
}

TEST_CASE("chsh_value arithmetic and flags") {
    CHSHResult r = chsh_value({Rational(-1), Rational(-1), Rational(-1), Rational(1)});
    REQUIRE(r.S == -4);
    REQUIRE(r.exceeds_local_bound);
    REQUIRE(r.exceeds_tsirelson);  // |S| = 4 beyond the quantum value

    r = chsh_value({Rational(0), Rational(0), Rational(0), Rational(0)});
    REQUIRE(r.S == 0);
    REQUIRE(!r.exceeds_local_bound);

    REQUIRE_THROWS_AS(chsh_value({Rational(3, 2), Rational(0), Rational(0), Rational(0)}),
                      std::invalid_argument);
}

TEST_CASE("equal settings give the boundary CHSH value") {
    ExperimentAngles angles{Rational(0), Rational(0), Rational(0), Rational(0)};
    CHSHResult r = run_bell_experiment(16, angles);
    for (const auto& c : r.correlations) REQUIRE(c == -1);
    REQUIRE(r.S == -2);
    REQUIRE(!r.exceeds_local_bound);
}

TEST_CASE("on-grid angles give exact -cos(theta) correlations") {
    // relative turns 1/6 (cos 1/2) between every pair: a0 = a1 = 1/6, b = 0
    ExperimentAngles angles{Rational(1, 6), Rational(1, 6), Rational(0), Rational(0)};
    CHSHResult r = run_bell_experiment(8, angles);
    for (const auto& c : r.correlations) REQUIRE(c == Rational(-1, 2));
    REQUIRE(r.m[0] == 2);
}

TEST_CASE("strict mode rejects off-grid angles naming the nearest grid point") {
    ExperimentAngles angles = tsirelson_angles();
    try {
        run_bell_experiment(1 << 12, angles, GridPolicy::strict);
        FAIL("expected an off-grid error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("nearest grid angle") != std::string::npos);
        REQUIRE(msg.find("m = ") != std::string::npos);
    }
}

TEST_CASE("snapped Tsirelson runs approach 2 sqrt 2 within 8/p") {
    for (int k = 8; k <= 16; k += 2) {
        std::uint64_t p = std::uint64_t(1) << k;
        CHSHResult r = run_bell_experiment(p, tsirelson_angles(), GridPolicy::snap);
        double absS = std::fabs(to_float50(r.S).convert_to<double>());
        REQUIRE(absS > 2.0);
        REQUIRE(std::fabs(absS - kTsirelsonBound) <= 8.0 / double(p));
    }
}

TEST_CASE("all sixteen deterministic strategies respect the local bound") {
    auto scan = deterministic_strategy_scan();
    REQUIRE(scan.size() == 16);
    bool attained = false;
    for (const auto& r : scan) {
        Rational absS = r.S < 0 ? -r.S : r.S;
        REQUIRE(absS <= 2);
        if (absS == 2) attained = true;
    }
    REQUIRE(attained);
}

TEST_CASE("measure table normalizes rho_bell per setting pair") {
    MeasureTable t = build_measure_table(default_model());
    for (int s = 0; s < 4; ++s) {
        Rational total = 0;
        for (const auto& v : t.rho_bell[s]) total += v;
        REQUIRE(total == 1);
    }
    // rho itself is the uniform experimenter density
    Rational rho_total = 0;
    for (const auto& v : t.rho) rho_total += v;
    REQUIRE(rho_total == 1);
}

TEST_CASE("report JSON has the documented schema") {
    CHSHResult r = run_bell_experiment(16, tsirelson_angles(), GridPolicy::snap);
    Json j = to_json(r);
    REQUIRE(j.contains("correlations"));
    REQUIRE(j.at("correlations").size() == 4);
    REQUIRE(j.at("S").contains("num"));
    REQUIRE(j.at("S").contains("den"));
    REQUIRE(j.at("p") == 16);

    Json audit = to_json(counterfactual_audit(4, 2, make_mu(default_model())));
    REQUIRE(audit.at("violations") == 0);
}
