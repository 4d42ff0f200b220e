#pragma once

#include "json.hpp"

#include <optional>
#include <string>

namespace tourlab {

using Json = nlohmann::json;

/// Result of an exhaustive scan over canonical tournaments. Serialization is
/// deterministic apart from wall_time_seconds.
struct SearchReport {
    std::string scan;
    Json parameters = Json::object();
    Json corpus = Json::object();       // family, n_min, n_max, count, numberings
    std::string outcome = "exhausted";  // "exhausted" or "witness"
    std::optional<Json> witness;        // payload; "tournament" is compact format
    Json counters = Json::array();      // one object per n, ascending
    Json results = Json::object();      // scan-specific tables
    double wall_time_seconds = 0.0;

    bool found() const { return outcome == "witness"; }
};

inline Json to_json(const SearchReport& r) {
    Json j;
    j["scan"] = r.scan;
    j["parameters"] = r.parameters;
    j["corpus"] = r.corpus;
    j["outcome"] = r.outcome;
    j["witness"] = r.witness ? *r.witness : Json(nullptr);
    j["counters"] = r.counters;
    j["results"] = r.results;
    j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

inline SearchReport report_from_json(const Json& j) {
    SearchReport r;
    r.scan = j.at("scan").get<std::string>();
    r.parameters = j.at("parameters");
    r.corpus = j.at("corpus");
    r.outcome = j.at("outcome").get<std::string>();
    if (r.outcome != "exhausted" && r.outcome != "witness") throw std::invalid_argument("report: unknown outcome " + r.outcome);
    if (!j.at("witness").is_null()) r.witness = j.at("witness");
    if (r.found() != r.witness.has_value()) throw std::invalid_argument("report: outcome and witness disagree");
    r.counters = j.at("counters");
    r.results = j.value("results", Json::object());
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return r;
}

inline std::string report_text(const SearchReport& r) { return to_json(r).dump(2); }

/// Report text with the wall-time field zeroed, for determinism checks.
inline std::string report_text_stable(SearchReport r) {
    r.wall_time_seconds = 0.0;
    return report_text(r);
}

} // namespace tourlab
