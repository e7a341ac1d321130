#pragma once

// JSON encodings of the domain types. Rationals travel as strings "p" or
// "p/q"; objects keep insertion order so output is canonical.

#include <string>
#include <vector>

#include "json.hpp"

#include "fibprod/bundles.hpp"
#include "fibprod/cones.hpp"
#include "fibprod/error.hpp"
#include "fibprod/numring.hpp"
#include "fibprod/rational.hpp"
#include "fibprod/seshadri.hpp"

namespace fibprod::json_io {

using Json = nlohmann::ordered_json;

inline Error schema_error(const std::string& what) { return Error(ErrorKind::parse, what); }

inline const Json& require(const Json& obj, const char* key) {
    if (!obj.is_object()) throw schema_error(std::string("expected an object holding '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end()) throw schema_error(std::string("missing field '") + key + "'");
    return *it;
}

inline long to_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw schema_error(std::string(what) + " must be an integer");
    return j.get<long>();
}

inline Json to_json(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw schema_error("rational must be a string \"p/q\" or an integer");
}

inline Json to_json(const Triple& t) { return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

inline Triple triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw schema_error("coords must be an array of 3 rationals");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

// ----- numring ---------------------------------------------------------------

inline Json to_json(const SpaceSpec& s) {
    return Json{{"r1", s.r1()},          {"r2", s.r2()},          {"d1", s.d1()},
                {"d2", s.d2()},          {"mu11", to_json(s.mu11())}, {"mu21", to_json(s.mu21())}};
}

// mu11 / mu21 default to d_i / r_i (semistable bundles).
inline SpaceSpec space_from_json(const Json& j, int max_rank = kDefaultMaxRank) {
    const long r1 = to_long(require(j, "r1"), "r1");
    const long r2 = to_long(require(j, "r2"), "r2");
    const long d1 = to_long(require(j, "d1"), "d1");
    const long d2 = to_long(require(j, "d2"), "d2");
    if (r1 < 2 || r2 < 2) throw Error(ErrorKind::invalid_space, "both ranks must be at least 2");
    if (r1 > max_rank || r2 > max_rank)
        throw Error(ErrorKind::rank_bound,
                    "rank exceeds the configured bound of " + std::to_string(max_rank));
    Rational mu11 = j.contains("mu11") ? rational_from_json(j["mu11"]) : make_rational(d1, r1);
    Rational mu21 = j.contains("mu21") ? rational_from_json(j["mu21"]) : make_rational(d2, r2);
    return SpaceSpec::make(static_cast<int>(r1), static_cast<int>(r2), d1, d2, std::move(mu11),
                           std::move(mu21), max_rank);
}

inline Json to_json(const RingClass& x) {
    Json out = Json::array();
    for (const auto& [m, c] : x.terms())
        out.push_back(Json{{"e", m.e}, {"a", m.a}, {"b", m.b}, {"c", to_json(c)}});
    return out;
}

// Exponents default to 0 and the coefficient to 1.
inline std::vector<RawTerm> raw_terms_from_json(const Json& j) {
    if (!j.is_array()) throw schema_error("class must be an array of terms");
    std::vector<RawTerm> out;
    for (const auto& t : j) {
        if (!t.is_object()) throw schema_error("term must be an object");
        RawTerm raw;
        raw.e = t.contains("e") ? to_long(t["e"], "e") : 0;
        raw.a = t.contains("a") ? to_long(t["a"], "a") : 0;
        raw.b = t.contains("b") ? to_long(t["b"], "b") : 0;
        if (raw.e < 0 || raw.a < 0 || raw.b < 0) throw schema_error("exponents must be nonnegative");
        raw.coeff = t.contains("c") ? rational_from_json(t["c"]) : Rational(1);
        out.push_back(std::move(raw));
    }
    return out;
}

// ----- bundles ---------------------------------------------------------------

inline Json to_json(const HNData& e) {
    Json hn = Json::array();
    for (const auto& q : e.quotients) hn.push_back(Json{{"rank", q.rank}, {"degree", q.degree}});
    Json out{{"hn", std::move(hn)}};
    if (e.normalized) out["normalized"] = true;
    if (e.genus) out["genus"] = *e.genus;
    return out;
}

// {"hn": [...], "normalized"?, "genus"?} or {"split_degrees": [...]}. Not validated.
inline HNData hn_from_json(const Json& j) {
    if (!j.is_object()) throw schema_error("bundle must be an object");
    HNData out;
    if (j.contains("split_degrees")) {
        const auto& list = j["split_degrees"];
        if (!list.is_array()) throw schema_error("split_degrees must be an array");
        std::vector<long> degrees;
        for (const auto& d : list) degrees.push_back(to_long(d, "split degree"));
        out = hn_from_split(degrees);
    } else {
        const auto& list = require(j, "hn");
        if (!list.is_array()) throw schema_error("hn must be an array");
        for (const auto& q : list)
            out.quotients.push_back({to_long(require(q, "rank"), "rank"),
                                     to_long(require(q, "degree"), "degree")});
    }
    if (j.contains("normalized")) {
        if (!j["normalized"].is_boolean()) throw schema_error("normalized must be a boolean");
        out.normalized = j["normalized"].get<bool>();
    }
    if (j.contains("genus")) out.genus = to_long(j["genus"], "genus");
    return out;
}

// ----- cones -----------------------------------------------------------------

inline Json to_json(const DivisorClass& d) {
    return Json{{"basis", std::string(to_string(d.basis))}, {"coords", to_json(d.coords)}};
}

inline Json to_json(const CurveClass& c) {
    return Json{{"basis", std::string(to_string(c.basis))}, {"coords", to_json(c.coords)}};
}

inline DivisorClass divisor_from_json(const Json& j) {
    const auto& basis = require(j, "basis");
    DivisorClass d;
    if (basis == "eta") d.basis = DivisorBasis::eta;
    else if (basis == "tau") d.basis = DivisorBasis::tau;
    else throw schema_error("divisor basis must be \"eta\" or \"tau\"");
    d.coords = triple_from_json(require(j, "coords"));
    return d;
}

inline CurveClass curve_from_json(const Json& j) {
    const auto& basis = require(j, "basis");
    CurveClass c;
    if (basis == "delta") c.basis = CurveBasis::delta;
    else if (basis == "delta-bar") c.basis = CurveBasis::delta_bar;
    else throw schema_error("curve basis must be \"delta\" or \"delta-bar\"");
    c.coords = triple_from_json(require(j, "coords"));
    return c;
}

// ----- seshadri --------------------------------------------------------------

inline Json to_json(const SeshadriResult& r) {
    Json out{{"kind", r.is_exact() ? "exact" : "interval"}};
    if (r.is_exact()) {
        out["value"] = to_json(r.lower);
    } else {
        out["lower"] = to_json(r.lower);
        out["upper"] = to_json(r.upper);
    }
    out["justification"] = std::string(to_string(r.justification));
    out["hypotheses_used"] = r.hypotheses_used;
    return out;
}

inline SeshadriResult seshadri_result_from_json(const Json& j) {
    const auto& kind = require(j, "kind");
    const auto& why = require(j, "justification");
    if (!why.is_string()) throw schema_error("justification must be a string");
    auto tag = case_tag_from_string(why.get<std::string>());
    if (!tag) throw schema_error("unknown justification tag");
    std::vector<std::string> hyps;
    if (j.contains("hypotheses_used")) hyps = j["hypotheses_used"].get<std::vector<std::string>>();
    if (kind == "exact")
        return SeshadriResult::exact(rational_from_json(require(j, "value")), *tag, std::move(hyps));
    if (kind == "interval")
        return SeshadriResult::interval(rational_from_json(require(j, "lower")),
                                        rational_from_json(require(j, "upper")), *tag,
                                        std::move(hyps));
    throw schema_error("kind must be \"exact\" or \"interval\"");
}

} // namespace fibprod::json_io
