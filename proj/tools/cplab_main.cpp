// Batch experiment front end. Every subcommand validates its flags, runs a
// lab routine, and writes a deterministic JSON or CSV artifact: identical
// flags (and seed) produce byte-identical output. Exit codes: 0 success,
// 2 usage or validation error, 3 unwritable output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cplab/bell.hpp"
#include "cplab/bit_roots.hpp"
#include "cplab/correlation_dim.hpp"
#include "cplab/exact_polar.hpp"
#include "cplab/flow.hpp"
#include "cplab/lorenz.hpp"
#include "cplab/padic.hpp"
#include "cplab/serialize.hpp"
#include "cplab/version.hpp"

namespace {

using namespace cplab;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output path: " + path);
    f << content;
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

Json report_header(const std::string& command, Json params, std::uint64_t seed = 0) {
    return Json{{"tool", kToolName},
                {"version", kVersion},
                {"command", command},
                {"params", std::move(params)},
                {"seed", seed}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an integer or num/den rational, got '" + s + "'");
    }
}

ExactPolar parse_triple(const std::string& s) {
    std::vector<BigInt> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.emplace_back(item);
    if (parts.size() != 3) throw CLI::ValidationError("expected m,n,p triple, got '" + s + "'");
    return make_cp(parts[0], parts[1], parts[2]);
}

std::vector<std::uint32_t> parse_digits(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    if (out.empty()) throw CLI::ValidationError("expected comma-separated digits, got '" + s + "'");
    return out;
}

BitString parse_bits(const std::string& s) {
    BitString b;
    for (char c : s) {
        if (c == '+')
            b.entries.push_back(+1);
        else if (c == '-')
            b.entries.push_back(-1);
        else
            throw CLI::ValidationError("bit strings use '+' and '-' only");
    }
    return b;
}

std::string bits_to_string(const BitString& b) {
    std::string s;
    for (auto e : b.entries) s.push_back(e == 1 ? '+' : '-');
    return s;
}

// ---------------------------------------------------------------------------

void setup_cp(CLI::App& app) {
    auto* cp = app.add_subcommand("cp", "exact rational-complex arithmetic");
    cp->require_subcommand(1);

    {
        auto* c = cp->add_subcommand("mul", "multiply two values given as m,n,p triples");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        c->add_option("--a", *a, "left operand m,n,p")->required();
        c->add_option("--b", *b, "right operand m,n,p")->required();
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            ExactPolar x = parse_triple(*a), y = parse_triple(*b), prod = mul(x, y);
            Json j = report_header("cp mul", Json{{"a", *a}, {"b", *b}});
            j["a_value"] = to_json(x);
            j["b_value"] = to_json(y);
            j["product"] = to_json(prod);
            j["minimal_p"] = json_int(minimal_p(prod));
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = cp->add_subcommand("add", "Euler-form addition with a closure verdict");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        c->add_option("--a", *a, "left operand m,n,p")->required();
        c->add_option("--b", *b, "right operand m,n,p")->required();
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            AddResult r = try_add(parse_triple(*a), parse_triple(*b));
            Json j = report_header("cp add", Json{{"a", *a}, {"b", *b}});
            j["result"] = to_json(r.value);
            j["verdict"] = to_json(r.verdict);
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = cp->add_subcommand("member", "test membership of a value in C_p");
        auto a = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        c->add_option("--a", *a, "value m,n,p")->required();
        c->add_option("--p", *p, "candidate p")->required();
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            ExactPolar x = parse_triple(*a);
            BigInt pp(*p);
            Json j = report_header("cp member", Json{{"a", *a}, {"p", *p}});
            j["value"] = to_json(x);
            j["member"] = is_member(x, pp);
            j["minimal_p"] = json_int(minimal_p(x));
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = cp->add_subcommand("momentum", "central-difference momentum amplitude");
        auto kturn = std::make_shared<std::string>();
        auto dx = std::make_shared<std::string>("1");
        auto out = std::make_shared<std::string>();
        c->add_option("--k-turn", *kturn, "k*dx as a turn (rational)")->required();
        c->add_option("--dx", *dx, "grid spacing dx (positive rational)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            MomentumResult m = momentum_difference(parse_rational(*kturn), parse_rational(*dx));
            Json j = report_header("cp momentum", Json{{"k_turn", *kturn}, {"dx", *dx}});
            j["sine_degree"] = json_int(m.sine_class.degree);
            j["sine_rational"] = m.sine_class.is_rational();
            if (m.sine_class.is_rational()) j["sine_value"] = rational_json(m.sine_class.value);
            j["amplitude_factor"] = to_json(m.amplitude_factor);
            j["verdict"] = to_json(m.verdict);
            write_output(*out, dump(j));
        });
    }
}

void setup_bits(CLI::App& app) {
    auto* bits = app.add_subcommand("bits", "bit-string phase operators");
    bits->require_subcommand(1);

    {
        auto* c = bits->add_subcommand("apply", "apply Omega_p^n to a bit string");
        auto s = std::make_shared<std::string>();
        auto n = std::make_shared<std::int64_t>(1);
        auto out = std::make_shared<std::string>();
        c->add_option("--bits", *s, "string over +- of length p (a power of 2)")->required();
        c->add_option("--n", *n, "power of the operator (default 1)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            BitString in = parse_bits(*s);
            BitString result = apply_phase(in, *n);
            Json j = report_header("bits apply", Json{{"bits", *s}, {"n", *n}});
            j["p"] = in.p();
            j["input"] = bits_to_string(in);
            j["output"] = bits_to_string(result);
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = bits->add_subcommand("order", "multiplicative order of Omega_p");
        auto p = std::make_shared<std::uint64_t>();
        auto out = std::make_shared<std::string>();
        c->add_option("--p", *p, "bit-string length, a power of 2")->required();
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            Json j = report_header("bits order", Json{{"p", *p}});
            j["order"] = order_of(static_cast<std::size_t>(*p));
            write_output(*out, dump(j));
        });
    }
}

void setup_padic(CLI::App& app) {
    auto* pad = app.add_subcommand("padic", "p-adic disk-address geometry");
    pad->require_subcommand(1);

    {
        auto* c = pad->add_subcommand("dist", "ultrametric distance");
        auto p = std::make_shared<std::uint32_t>();
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto conv = std::make_shared<std::string>("standard");
        auto out = std::make_shared<std::string>();
        c->add_option("--p", *p, "base p >= 2")->required();
        c->add_option("--x", *x, "digits of x, coarsest level first")->required();
        c->add_option("--y", *y, "digits of y, coarsest level first")->required();
        c->add_option("--conv", *conv, "metric convention: standard | paper")
            ->check(CLI::IsMember({"standard", "paper"}));
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            PadicInt a = PadicInt::make(*p, parse_digits(*x));
            PadicInt b = PadicInt::make(*p, parse_digits(*y));
            auto mc = *conv == "paper" ? MetricConvention::paper : MetricConvention::standard;
            Json j = report_header("padic dist",
                                   Json{{"p", *p}, {"x", *x}, {"y", *y}, {"conv", *conv}});
            j["distance"] = rational_json(distance(a, b, mc));
            write_output(*out, dump(j));
        });
    }
    for (const char* op : {"add", "mul"}) {
        auto* c = pad->add_subcommand(op, std::string("digit ") + op + " with carries");
        auto p = std::make_shared<std::uint32_t>();
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        std::string opname = op;
        c->add_option("--p", *p, "base p >= 2")->required();
        c->add_option("--x", *x, "digits of x, coarsest level first")->required();
        c->add_option("--y", *y, "digits of y, coarsest level first")->required();
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            PadicInt a = PadicInt::make(*p, parse_digits(*x));
            PadicInt b = PadicInt::make(*p, parse_digits(*y));
            PadicInt r = opname == "add" ? add(a, b) : mul(a, b);
            Json j = report_header("padic " + opname, Json{{"p", *p}, {"x", *x}, {"y", *y}});
            j["result"] = to_json(r);
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = pad->add_subcommand("label", "cluster label of a digit level");
        auto p = std::make_shared<std::uint32_t>();
        auto x = std::make_shared<std::string>();
        auto level = std::make_shared<std::size_t>(0);
        auto out = std::make_shared<std::string>();
        c->add_option("--p", *p, "base p >= 2")->required();
        c->add_option("--x", *x, "digits, coarsest level first")->required();
        c->add_option("--level", *level, "fractal level to label (default 0)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            PadicInt a = PadicInt::make(*p, parse_digits(*x));
            LevelColoring coloring = parity_coloring();
            std::string label =
                cluster_label(a, *level, [&](std::uint32_t d) { return coloring(*level, d); });
            Json j = report_header("padic label", Json{{"p", *p}, {"x", *x}, {"level", *level}});
            j["label"] = label;
            write_output(*out, dump(j));
        });
    }
}

void setup_bell(CLI::App& app) {
    auto* bell = app.add_subcommand("bell", "CHSH engine and independence audits");
    bell->require_subcommand(1);

    {
        auto* c = bell->add_subcommand("chsh", "exact grid CHSH experiment");
        auto p = std::make_shared<std::uint64_t>(std::uint64_t(1) << 20);
        auto a0 = std::make_shared<std::string>("0");
        auto a1 = std::make_shared<std::string>("1/4");
        auto b0 = std::make_shared<std::string>("1/8");
        auto b1 = std::make_shared<std::string>("7/8");
        auto strict = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        c->add_option("--p", *p, "grid resolution (default 2^20)");
        c->add_option("--a0", *a0, "Alice setting 0, turn");
        c->add_option("--a1", *a1, "Alice setting 1, turn");
        c->add_option("--b0", *b0, "Bob setting 0, turn");
        c->add_option("--b1", *b1, "Bob setting 1, turn");
        c->add_flag("--strict", *strict, "reject off-grid relative angles instead of snapping");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            ExperimentAngles angles{parse_rational(*a0), parse_rational(*a1),
                                    parse_rational(*b0), parse_rational(*b1)};
            CHSHResult r = run_bell_experiment(*p, angles,
                                               *strict ? GridPolicy::strict : GridPolicy::snap);
            Json j = report_header("bell chsh",
                                   Json{{"p", *p},
                                        {"a0", *a0},
                                        {"a1", *a1},
                                        {"b0", *b0},
                                        {"b1", *b1},
                                        {"strict", *strict}});
            j["settings"] = Json::array({*a0, *a1, *b0, *b1});
            Json rj = to_json(r);
            for (auto& [k, v] : rj.items()) j[k] = v;
            j["audits"] = nullptr;
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = bell->add_subcommand("audit", "supermeasured statistical-independence audit");
        auto p = std::make_shared<std::uint32_t>(4);
        auto depth = std::make_shared<std::size_t>(2);
        auto a0 = std::make_shared<std::string>("0");
        auto a1 = std::make_shared<std::string>("1/4");
        auto b0 = std::make_shared<std::string>("0");
        auto b1 = std::make_shared<std::string>("1/4");
        auto samples = std::make_shared<std::uint64_t>(0);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto out = std::make_shared<std::string>();
        c->add_option("--p", *p, "padic base / grid resolution (default 4)");
        c->add_option("--depth", *depth, "lambda digit depth (default 2)");
        c->add_option("--a0", *a0, "Alice setting 0, turn");
        c->add_option("--a1", *a1, "Alice setting 1, turn");
        c->add_option("--b0", *b0, "Bob setting 0, turn");
        c->add_option("--b1", *b1, "Bob setting 1, turn");
        c->add_option("--samples", *samples, "additionally run the sampled SI-rho audit");
        c->add_option("--seed", *seed, "sampling seed (default 1)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            BellModel model;
            model.p = *p;
            model.depth = *depth;
            model.angles = {parse_rational(*a0), parse_rational(*a1), parse_rational(*b0),
                            parse_rational(*b1)};
            MuFn mu = make_mu(model);
            Json j = report_header("bell audit",
                                   Json{{"p", *p},
                                        {"depth", *depth},
                                        {"a0", *a0},
                                        {"a1", *a1},
                                        {"b0", *b0},
                                        {"b1", *b1},
                                        {"samples", *samples}},
                                   *seed);
            j["settings"] = Json::array({*a0, *a1, *b0, *b1});
            Json audits;
            audits["si_rho"] = to_json(check_SI_rho_exact(make_exhaustive_ensemble(*p, *depth)));
            if (*samples > 0)
                audits["si_rho_sampled"] =
                    to_json(check_SI_rho_sampled(sample_ensemble(*p, *depth, *samples, *seed)));
            audits["si_mu"] = to_json(check_SI_mu(*p, *depth, mu));
            audits["counterfactual"] = to_json(counterfactual_audit(*p, *depth, mu));
            j["audits"] = audits;
            write_output(*out, dump(j));
        });
    }
}

void setup_lorenz(CLI::App& app) {
    auto* lor = app.add_subcommand("lorenz", "chaotic attractor laboratory");
    lor->require_subcommand(1);

    {
        auto* c = lor->add_subcommand("integrate", "fixed-step RK4 trajectory as CSV");
        auto x = std::make_shared<double>(1), y = std::make_shared<double>(1),
             z = std::make_shared<double>(1);
        auto sigma = std::make_shared<double>(10), rho = std::make_shared<double>(28),
             beta = std::make_shared<double>(8.0 / 3.0);
        auto dt = std::make_shared<double>(1e-3);
        auto steps = std::make_shared<std::uint64_t>(10000);
        auto every = std::make_shared<std::uint64_t>(1);
        auto out = std::make_shared<std::string>();
        c->add_option("--x", *x, "initial X");
        c->add_option("--y", *y, "initial Y");
        c->add_option("--z", *z, "initial Z");
        c->add_option("--sigma", *sigma, "sigma (default 10)");
        c->add_option("--rho", *rho, "rho (default 28)");
        c->add_option("--beta", *beta, "beta (default 8/3)");
        c->add_option("--dt", *dt, "time step (default 1e-3)");
        c->add_option("--steps", *steps, "number of steps");
        c->add_option("--every", *every, "record every k-th step (default 1)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            LorenzParams params{*sigma, *rho, *beta};
            TrajectorySegment traj = integrate({*x, *y, *z}, params, *dt,
                                               static_cast<std::size_t>(*steps),
                                               static_cast<std::size_t>(*every));
            Json hdr = report_header("lorenz integrate",
                                     Json{{"x", *x}, {"y", *y}, {"z", *z}, {"sigma", *sigma},
                                          {"rho", *rho}, {"beta", *beta}, {"dt", *dt},
                                          {"steps", *steps}, {"every", *every}});
            std::ostringstream os;
            trajectory_csv(traj, os, hdr.dump());
            write_output(*out, os.str());
        });
    }
    {
        auto* c = lor->add_subcommand("divergence", "analytic state-space divergence");
        auto sigma = std::make_shared<double>(10), rho = std::make_shared<double>(28),
             beta = std::make_shared<double>(8.0 / 3.0);
        auto out = std::make_shared<std::string>();
        c->add_option("--sigma", *sigma, "sigma (default 10)");
        c->add_option("--rho", *rho, "rho (default 28)");
        c->add_option("--beta", *beta, "beta (default 8/3)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            Json j = report_header("lorenz divergence",
                                   Json{{"sigma", *sigma}, {"rho", *rho}, {"beta", *beta}});
            j["divergence"] = divergence({*sigma, *rho, *beta});
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = lor->add_subcommand("symbolize", "lobe symbol string of a trajectory window");
        auto x = std::make_shared<double>(1), y = std::make_shared<double>(1),
             z = std::make_shared<double>(1);
        auto sigma = std::make_shared<double>(10), rho = std::make_shared<double>(28),
             beta = std::make_shared<double>(8.0 / 3.0);
        auto dt = std::make_shared<double>(1e-3);
        auto t0 = std::make_shared<double>(20), t1 = std::make_shared<double>(60);
        auto out = std::make_shared<std::string>();
        c->add_option("--x", *x, "initial X");
        c->add_option("--y", *y, "initial Y");
        c->add_option("--z", *z, "initial Z");
        c->add_option("--sigma", *sigma, "sigma (default 10)");
        c->add_option("--rho", *rho, "rho (default 28)");
        c->add_option("--beta", *beta, "beta (default 8/3)");
        c->add_option("--dt", *dt, "time step (default 1e-3)");
        c->add_option("--t0", *t0, "window start (default 20)");
        c->add_option("--t1", *t1, "window end (default 60)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            LorenzParams params{*sigma, *rho, *beta};
            auto steps = static_cast<std::size_t>(std::llround(*t1 / *dt));
            TrajectorySegment traj = integrate({*x, *y, *z}, params, *dt, steps);
            SymbolString s = symbolize(traj, *t0, *t1);
            Json j = report_header("lorenz symbolize",
                                   Json{{"x", *x}, {"y", *y}, {"z", *z}, {"sigma", *sigma},
                                        {"rho", *rho}, {"beta", *beta}, {"dt", *dt},
                                        {"t0", *t0}, {"t1", *t1}});
            j["symbols"] = s.symbols;
            j["times"] = s.times;
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = lor->add_subcommand("dimension", "Grassberger-Procaccia correlation dimension");
        auto points = std::make_shared<std::uint64_t>(20000);
        auto sample_dt = std::make_shared<double>(0.25);
        auto transient = std::make_shared<double>(20.0);
        auto dt = std::make_shared<double>(1e-3);
        auto rmin = std::make_shared<double>(1.0), rmax = std::make_shared<double>(10.0);
        auto bins = std::make_shared<std::uint64_t>(16);
        auto out = std::make_shared<std::string>();
        c->add_option("--points", *points, "number of attractor samples (default 20000)");
        c->add_option("--sample-dt", *sample_dt, "time between samples (default 0.25)");
        c->add_option("--transient", *transient, "transient cutoff (default 20)");
        c->add_option("--dt", *dt, "integration step (default 1e-3)");
        c->add_option("--rmin", *rmin, "smallest radius (default 1)");
        c->add_option("--rmax", *rmax, "largest radius (default 10)");
        c->add_option("--bins", *bins, "radius bins (default 16)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            auto pts = lorenz_attractor_points(static_cast<std::size_t>(*points), {}, *sample_dt,
                                               *transient, *dt);
            CorrDimFit fit =
                correlation_dimension(pts, *rmin, *rmax, static_cast<std::size_t>(*bins));
            Json j = report_header("lorenz dimension",
                                   Json{{"points", *points}, {"sample_dt", *sample_dt},
                                        {"transient", *transient}, {"dt", *dt}, {"rmin", *rmin},
                                        {"rmax", *rmax}, {"bins", *bins}});
            j["slope"] = fit.slope;
            j["intercept"] = fit.intercept;
            j["r_squared"] = fit.r_squared;
            Json bj = Json::array();
            for (const auto& [r, cv] : fit.bins) bj.push_back(Json{{"r", r}, {"C", cv}});
            j["bins"] = bj;
            write_output(*out, dump(j));
        });
    }
}

void setup_flow(CLI::App& app) {
    auto* flow = app.add_subcommand("flow", "fixed-point and limit-cycle flows");
    flow->require_subcommand(1);

    {
        auto* c = flow->add_subcommand("logistic", "radial flow dr/dt = r(1-r)");
        auto r0 = std::make_shared<double>(0.5);
        auto t = std::make_shared<double>(1.0);
        auto dt = std::make_shared<double>(1e-3);
        auto out = std::make_shared<std::string>();
        c->add_option("--r0", *r0, "initial radius (positive)");
        c->add_option("--t", *t, "elapsed time");
        c->add_option("--dt", *dt, "RK4 step (default 1e-3)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            LogisticFlowResult r = logistic_flow(*r0, *t, *dt);
            Json j = report_header("flow logistic", Json{{"r0", *r0}, {"t", *t}, {"dt", *dt}});
            j["analytic"] = r.analytic;
            j["rk4"] = r.rk4;
            j["abs_diff"] = r.abs_diff();
            write_output(*out, dump(j));
        });
    }
    {
        auto* c = flow->add_subcommand("cycle", "limit-cycle flow in (r, phi)");
        auto r = std::make_shared<double>(0.5);
        auto phi = std::make_shared<double>(0.0);
        auto t = std::make_shared<double>(1.0);
        auto out = std::make_shared<std::string>();
        c->add_option("--r", *r, "initial radius (positive)");
        c->add_option("--phi", *phi, "initial phase");
        c->add_option("--t", *t, "elapsed time");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=]() {
            FlowState s = limit_cycle_flow({*r, *phi}, *t);
            Json j = report_header("flow cycle", Json{{"r", *r}, {"phi", *phi}, {"t", *t}});
            j["r"] = s.r;
            j["phi"] = s.phi;
            write_output(*out, dump(j));
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cplab: exact-arithmetic laboratory for granular complex numbers,\n"
                 "p-adic disk geometry, CHSH experiments, and attractor dynamics"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.set_config("--config", "", "key-value config file merged under explicit flags");
    app.require_subcommand(1);

    setup_cp(app);
    setup_bits(app);
    setup_padic(app);
    setup_bell(app);
    setup_lorenz(app);
    setup_flow(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
