#pragma once

#include <string>

#include <json.hpp>

#include "gca/bracket_ring.hpp"
#include "gca/errors.hpp"
#include "gca/exterior.hpp"
#include "gca/rational.hpp"
#include "gca/step_value.hpp"
#include "gca/symbolic_eval.hpp"
#include "gca/verify.hpp"

namespace gca {

using Json = nlohmann::json;

inline Json to_json(const HomogeneousPoint& p) {
    return Json::array({to_string(p.x[0]), to_string(p.x[1]), to_string(p.x[2])});
}

/// Schema 1: {"schema":1, "points": {"a": ["0","0","1"], ...},
/// "provenance": {"generator": ..., "seed": ...}} with every coordinate a
/// "p" or "p/q" string.
inline Json to_json(const Configuration& config) {
    Json points = Json::object();
    for (const auto& [name, point] : config.points) points[name] = to_json(point);
    Json out{{"schema", 1}, {"points", std::move(points)}};
    if (!config.generator.empty()) out["provenance"] = Json{{"generator", config.generator}, {"seed", config.seed}};
    return out;
}

inline Configuration config_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidConfigError("configuration must be a JSON object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
        throw InvalidConfigError("configuration requires \"schema\": 1");
    if (!j.contains("points") || !j["points"].is_object())
        throw InvalidConfigError("configuration requires a \"points\" object");
    Configuration config;
    for (const auto& [name, coords] : j["points"].items()) {
        if (!coords.is_array() || coords.size() != 3)
            throw InvalidConfigError("point '" + name + "' must be an array of three rational strings");
        HomogeneousPoint p;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!coords[i].is_string())
                throw InvalidConfigError("point '" + name + "' must use rational strings like \"2/3\"");
            try {
                p.x[i] = rational_from_string(coords[i].get<std::string>());
            } catch (const std::exception& e) {
                throw InvalidConfigError("point '" + name + "': " + e.what());
            }
        }
        config.points.emplace(name, std::move(p));
    }
    if (j.contains("provenance") && j["provenance"].is_object()) {
        const auto& prov = j["provenance"];
        if (prov.contains("generator") && prov["generator"].is_string())
            config.generator = prov["generator"].get<std::string>();
        if (prov.contains("seed") && prov["seed"].is_number_unsigned())
            config.seed = prov["seed"].get<std::uint64_t>();
    }
    return config;
}

/// A bracket polynomial renders as a list of terms, each
/// {"coefficient": "p/q", "factors": [["a","b","c"], ...]}, in monomial
/// order. Bit-exact deterministic.
inline Json to_json(const BracketPolynomial& poly, const PointSet& points) {
    Json terms = Json::array();
    for (const auto& [monomial, coeff] : poly.terms()) {
        Json factors = Json::array();
        for (const Bracket& b : monomial.factors)
            factors.push_back(Json::array({points.name(b.points[0]), points.name(b.points[1]), points.name(b.points[2])}));
        terms.push_back(Json{{"coefficient", to_string(coeff)}, {"factors", std::move(factors)}});
    }
    return terms;
}

inline Json to_json(const StepValue& value, const PointSet& points) {
    Json out{{"schema", 1}, {"step", step_of(value)}};
    switch (step_of(value)) {
    case 0: out["terms"] = to_json(std::get<Step0>(value).value, points); break;
    case 3: out["terms"] = to_json(std::get<Step3>(value).value, points); break;
    case 1: {
        Json coeffs = Json::array();
        for (const auto& [p, c] : std::get<Step1>(value).coeffs)
            coeffs.push_back(Json{{"point", points.name(p)}, {"terms", to_json(c, points)}});
        out["coefficients"] = std::move(coeffs);
        break;
    }
    default: {
        Json coeffs = Json::array();
        for (const auto& [pq, c] : std::get<Step2>(value).coeffs)
            coeffs.push_back(Json{{"points", Json::array({points.name(pq.first), points.name(pq.second)})},
                                  {"terms", to_json(c, points)}});
        out["coefficients"] = std::move(coeffs);
        break;
    }
    }
    return out;
}

inline Json to_json(const RawTerm& term, const PointSet& points) {
    Json brackets = Json::array();
    for (const RawBracket& b : term.brackets)
        brackets.push_back(Json::array({points.name(b.args[0]), points.name(b.args[1]), points.name(b.args[2])}));
    Json out{{"sign", term.sign}, {"brackets", std::move(brackets)}};
    if (!term.points.empty()) {
        Json pts = Json::array();
        for (const FormalPoint p : term.points) pts.push_back(points.name(p));
        out["points"] = std::move(pts);
    }
    return out;
}

/// Schema 1: {"schema":1, "verdict", "mode", "seed", "details", "witness"?}.
inline Json to_json(const CheckReport& report) {
    Json details = Json::object();
    for (const auto& [k, v] : report.details) details[k] = v;
    Json out{{"schema", 1}, {"verdict", report.verdict()}, {"mode", report.mode}, {"seed", report.seed},
             {"details", std::move(details)}};
    if (report.witness) out["witness"] = to_json(*report.witness);
    return out;
}

inline Json to_json(const PermScanResult& result, const PointSet& points) {
    Json rows = Json::array();
    for (const PermScanRow& row : result.rows) {
        Json images = Json::array();
        for (int i = 0; i < points.size(); ++i) images.push_back(points.name(row.sigma(FormalPoint{i})));
        rows.push_back(Json{{"perm", std::move(images)}, {"sign", row.sign}});
    }
    return Json{{"schema", 1},
                {"rows", std::move(rows)},
                {"summary",
                 Json{{"plus", result.plus_count},
                      {"minus", result.minus_count},
                      {"fail", result.fail_count},
                      {"multiplicative", result.multiplicative},
                      {"multiplicative_samples", result.multiplicative_samples}}}};
}

inline Json to_json(const PappusReport& report) {
    static constexpr const char* kAxisNames[3] = {"ab' ^ a'b", "bc' ^ b'c", "ca' ^ c'a"};
    Json out{{"schema", 1}, {"config", to_json(report.config)}};
    if (report.degenerate) {
        out["verdict"] = "DEGENERATE";
        out["detail"] = report.degenerate_detail;
        return out;
    }
    Json meets = Json::array();
    for (std::size_t i = 0; i < 3; ++i)
        meets.push_back(Json{{"lines", kAxisNames[i]}, {"point", to_json(display_normalize(report.intersections[i]))}});
    out["intersections"] = std::move(meets);
    out["bracket"] = to_string(report.final_bracket);
    out["verdict"] = report.pass ? "PASS" : "FAIL";
    return out;
}

} // namespace gca
