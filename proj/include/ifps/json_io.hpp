#pragma once

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ifps_set.hpp"

namespace ifps {
namespace detail {

// Decimal places a number token spells out, exponent included: "0.15" has
// 2, "2.5e-9" has 10. Degrees are only meaningful to 1e-9, so longer
// tokens are rejected instead of silently rounded.
inline long decimal_places(const std::string& token) {
    std::size_t dot = token.find('.');
    std::size_t exp = token.find_first_of("eE");
    long frac = 0;
    if (dot != std::string::npos)
        frac = static_cast<long>((exp == std::string::npos ? token.size() : exp) - dot - 1);
    long exp10 = 0;
    if (exp != std::string::npos)
        exp10 = std::strtol(token.c_str() + exp + 1, nullptr, 10);
    long places = frac - exp10;
    return places < 0 ? 0 : places;
}

// Second pass over the raw text for rules the DOM cannot express: number
// token precision and duplicate object keys.
struct StrictnessSax : nlohmann::json_sax<nlohmann::json> {
    struct Failure {
        std::string message;
        std::optional<std::size_t> byte;
    };
    std::optional<Failure> failure;
    std::vector<std::set<std::string>> object_keys;

    bool null() override { return true; }
    bool boolean(bool) override { return true; }
    bool number_integer(number_integer_t) override { return true; }
    bool number_unsigned(number_unsigned_t) override { return true; }
    bool number_float(number_float_t, const string_t& raw) override {
        if (decimal_places(raw) > 9) {
            failure = Failure{"number " + raw + " has more than 9 decimal places", std::nullopt};
            return false;
        }
        return true;
    }
    bool string(string_t&) override { return true; }
    bool binary(binary_t&) override { return true; }
    bool start_object(std::size_t) override {
        object_keys.emplace_back();
        return true;
    }
    bool key(string_t& k) override {
        if (!object_keys.back().insert(k).second) {
            failure = Failure{"duplicate key \"" + k + "\"", std::nullopt};
            return false;
        }
        return true;
    }
    bool end_object() override {
        object_keys.pop_back();
        return true;
    }
    bool start_array(std::size_t) override { return true; }
    bool end_array() override { return true; }
    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        failure = Failure{ex.what(), position};
        return false;
    }
};

inline std::vector<std::string> parse_id_array(const nlohmann::json& value, const std::string& what) {
    if (!value.is_array())
        throw ifps::parse_error(what + " must be an array of strings");
    std::vector<std::string> ids;
    ids.reserve(value.size());
    for (const auto& v : value) {
        if (!v.is_string())
            throw ifps::parse_error(what + " must contain only strings");
        ids.push_back(v.get<std::string>());
    }
    return ids;
}

} // namespace detail

// Accepts exactly the canonical schema: {"universe": [...], "parameters":
// [...], "entries": {param: {"alpha": a, "beta": b, "support": [...]}}}.
// Unknown keys, duplicate keys and over-precise numbers are rejected;
// value-level constraints are enforced by IFPSSet::make and surface as
// domain errors naming the offending entry.
inline IFPSSet parse_ifps(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
    detail::StrictnessSax sax;
    nlohmann::json::sax_parse(text, &sax);
    if (sax.failure)
        throw parse_error(sax.failure->message, sax.failure->byte);

    if (!doc.is_object())
        throw parse_error("top-level value must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "universe" && key != "parameters" && key != "entries")
            throw parse_error("unknown top-level key \"" + key + "\"");
    }
    for (const char* required : {"universe", "parameters", "entries"})
        if (!doc.contains(required))
            throw parse_error("missing top-level key \"" + std::string(required) + "\"");

    std::vector<std::string> universe = detail::parse_id_array(doc["universe"], "\"universe\"");
    std::vector<std::string> parameters = detail::parse_id_array(doc["parameters"], "\"parameters\"");

    const nlohmann::json& entries = doc["entries"];
    if (!entries.is_object())
        throw parse_error("\"entries\" must be an object");
    IFPSSet::EntryMap entry_map;
    for (const auto& [x, value] : entries.items()) {
        if (!value.is_object())
            throw parse_error("entry \"" + x + "\" must be an object");
        for (const auto& [key, field] : value.items()) {
            (void)field;
            if (key != "alpha" && key != "beta" && key != "support")
                throw parse_error("entry \"" + x + "\": unknown key \"" + key + "\"");
        }
        for (const char* required : {"alpha", "beta", "support"})
            if (!value.contains(required))
                throw parse_error("entry \"" + x + "\": missing key \"" + std::string(required) + "\"");
        if (!value["alpha"].is_number() || !value["beta"].is_number())
            throw parse_error("entry \"" + x + "\": alpha and beta must be numbers");
        IFPSSet::Entry e;
        e.degrees = DegreePair{value["alpha"].get<double>(), value["beta"].get<double>()};
        e.support = detail::parse_id_array(value["support"], "entry \"" + x + "\": support");
        entry_map.emplace(x, std::move(e));
    }
    return IFPSSet::make(std::move(universe), std::move(parameters), std::move(entry_map));
}

namespace detail {

inline std::string json_token(const nlohmann::json& v) { return v.dump(); }

} // namespace detail

// Canonical text: fixed key order, sorted ids, shortest round-trip number
// tokens, two-space layout, trailing newline. Serializing the same value
// always yields the same bytes, and parse(serialize(k)) == k.
inline std::string serialize_ifps(const IFPSSet& k) {
    std::string out;
    out += "{\n";
    out += "  \"universe\": " + detail::json_token(k.universe()) + ",\n";
    out += "  \"parameters\": " + detail::json_token(k.parameters()) + ",\n";
    out += "  \"entries\": {";
    if (k.entries().empty()) {
        out += "}\n";
    } else {
        bool first = true;
        for (const auto& [x, e] : k.entries()) {
            out += first ? "\n" : ",\n";
            first = false;
            out += "    " + detail::json_token(x) + ": {\"alpha\": " + detail::json_token(e.degrees.alpha) +
                   ", \"beta\": " + detail::json_token(e.degrees.beta) +
                   ", \"support\": " + detail::json_token(e.support) + "}";
        }
        out += "\n  }\n";
    }
    out += "}\n";
    return out;
}

} // namespace ifps
