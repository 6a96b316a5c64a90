#pragma once

#include <json.hpp>

#include "lmn/chains.hpp"
#include "lmn/ohara.hpp"
#include "lmn/rank_sequence.hpp"
#include "lmn/report.hpp"

namespace lmn {

/// Insertion-ordered JSON, so serialized output is byte-deterministic.
using Json = nlohmann::ordered_json;

/// Coefficients serialize as decimal strings: they outgrow every fixed-width
/// integer type long before the library runs out of patience.
inline Json to_json(const RankSequence& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    Json j = Json::object();
    j["offset"] = s.offset();
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json to_json(const QPiece& p) {
    Json j = Json::object();
    j["d"] = p.composition.d();
    j["offset"] = p.seq.offset();
    Json coeffs = Json::array();
    for (const auto& c : p.seq.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    j["signature"] = p.expected_signature;
    return j;
}

inline Json to_json(const Chain& c) {
    Json j = Json::array();
    for (const auto& e : c.elements()) j.push_back(e);
    return j;
}

inline Json to_json(const VerificationReport& r) {
    Json j = Json::object();
    j["claim"] = r.claim;
    j["outcome"] = r.passed ? "pass" : "fail";
    j["cases_checked"] = r.cases_checked;
    if (!r.passed) {
        j["message"] = r.message;
        Json w = Json::object();
        for (const auto& [key, value] : r.witness) w[key] = value;
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace lmn
