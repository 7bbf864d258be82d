// JSON wire formats. Key order is fixed (ordered_json) so identical inputs
// serialize to identical bytes. Big integers are emitted as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise.

#pragma once

#include <string>

#include <json.hpp>

#include "cplab/bell.hpp"
#include "cplab/exact_polar.hpp"
#include "cplab/numeric.hpp"
#include "cplab/padic.hpp"
#include "cplab/ensemble.hpp"
#include "cplab/version.hpp"

namespace cplab {

using Json = nlohmann::ordered_json;

inline Json json_int(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

inline Json rational_json(const Rational& q) {
    return Json{{"num", json_int(numerator(q))}, {"den", json_int(denominator(q))}};
}

inline Rational rational_from_json(const Json& j) {
    return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

inline Json to_json(const ExactPolar& x) {
    return Json{{"amp2_num", json_int(numerator(x.amp2))},
                {"amp2_den", json_int(denominator(x.amp2))},
                {"turn_num", json_int(numerator(x.turn))},
                {"turn_den", json_int(denominator(x.turn))}};
}

inline ExactPolar exact_polar_from_json(const Json& j) {
    Rational amp2(bigint_from_json(j.at("amp2_num")), bigint_from_json(j.at("amp2_den")));
    Rational turn(bigint_from_json(j.at("turn_num")), bigint_from_json(j.at("turn_den")));
    return ExactPolar::from_amp2_turn(amp2, turn);
}

inline Json to_json(const ClosureVerdict& v) {
    Json j;
    switch (v.tag) {
        case Closure::Member: j["tag"] = "member"; j["p"] = json_int(v.p); break;
        case Closure::NonMember: j["tag"] = "non_member"; break;
        case Closure::Indeterminate: j["tag"] = "indeterminate"; break;
    }
    if (v.exact_amp2) j["exact_amp2"] = rational_json(*v.exact_amp2);
    if (v.surd_amp2) j["surd_amp2"] = v.surd_amp2->str();
    j["reason"] = v.reason;
    j["numeric_amp2"] = v.numeric_amp2;
    return j;
}

inline Json to_json(const PadicInt& x) {
    Json j{{"p", x.p}, {"depth", x.depth()}, {"digits", x.digits}};
    return j;
}

inline PadicInt padic_from_json(const Json& j) {
    std::vector<std::uint32_t> ds = j.at("digits").get<std::vector<std::uint32_t>>();
    if (ds.size() != j.at("depth").get<std::size_t>())
        throw std::invalid_argument("PadicInt json: depth/digits mismatch");
    return PadicInt::make(j.at("p").get<std::uint32_t>(), std::move(ds));
}

inline Json to_json(const QubitEnsemble& q) {
    return Json{{"p", q.p}, {"m", q.count(+1)}, {"phase_exponent", q.phase_exponent}};
}

inline Json to_json(const CHSHResult& r) {
    Json j;
    if (r.p) j["p"] = r.p;
    Json corrs = Json::array();
    for (const auto& c : r.correlations) corrs.push_back(rational_json(c));
    j["correlations"] = corrs;
    j["S"] = rational_json(r.S);
    j["abs_S"] = to_float50(r.S < 0 ? -r.S : r.S).convert_to<double>();
    j["exceeds_local_bound"] = r.exceeds_local_bound;
    j["exceeds_tsirelson"] = r.exceeds_tsirelson;
    j["tsirelson_reference"] = kTsirelsonBound;
    if (r.p) {
        j["m"] = r.m;
        j["snapped"] = r.snapped;
    }
    return j;
}

inline Json to_json(const CounterfactualReport& r) {
    return Json{{"lambdas", r.lambdas},
                {"triples", r.triples},
                {"admissible", r.admissible},
                {"flip_checks", r.flip_checks},
                {"violations", r.violations},
                {"compliance", rational_json(r.compliance)}};
}

inline Json to_json(const SiMuReport& r) {
    Json j{{"lambdas", r.lambdas},
           {"setting_dependent", r.setting_dependent},
           {"dependence_fraction", rational_json(r.dependence_fraction)}};
    if (r.example_found) {
        j["example"] = Json{{"lambda", json_int(r.example_lambda)},
                            {"setting", {r.example_setting.first, r.example_setting.second}},
                            {"flip", {r.example_flip.first, r.example_flip.second}}};
    }
    return j;
}

inline Json to_json(const SiRhoReport& r) {
    Json j{{"mode", r.exact_mode ? "exact" : "sampled"},
           {"equal", r.equal},
           {"subensemble_sizes", r.subensemble_sizes}};
    if (!r.exact_mode) {
        j["chi_square"] = r.chi_square;
        j["dof"] = r.dof;
        j["p_value"] = r.p_value;
    }
    return j;
}

}  // namespace cplab
