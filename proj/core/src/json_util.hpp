#pragma once

// Shared helpers for the JSON-facing translation units. Internal to the
// library; never installed.

#include <string>
#include <utility>

#include <json.hpp>

#include "greymadm/errors.hpp"

namespace greymadm::jsonutil {

using json = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& path, const std::string& message) {
    throw ValidationError(path.empty() ? message : path + ": " + message);
}

inline const json& require_field(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing required field '") + key + "'");
    return *it;
}

inline double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, std::string("expected a number, got ") + j.type_name());
    return j.get<double>();
}

inline bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, std::string("expected a boolean, got ") + j.type_name());
    return j.get<bool>();
}

inline std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, std::string("expected a string, got ") + j.type_name());
    return j.get<std::string>();
}

inline const json& as_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, std::string("expected an array, got ") + j.type_name());
    return j;
}

inline const json& as_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, std::string("expected an object, got ") + j.type_name());
    return j;
}

inline std::pair<double, double> as_number_pair(const json& j, const std::string& path) {
    as_array(j, path);
    if (j.size() != 2) fail(path, "expected exactly 2 entries, got " + std::to_string(j.size()));
    return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]")};
}

inline std::string element_path(const std::string& path, std::size_t index) {
    return path + "[" + std::to_string(index) + "]";
}

} // namespace greymadm::jsonutil
