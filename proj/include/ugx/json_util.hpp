#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ugx/errors.hpp"

namespace ugx {

using json = nlohmann::json;

// Shortest-faithful decimal for doubles: %.17g always round-trips, and we
// write it ourselves so files are byte-stable across json-library versions.
inline std::string fmt_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("invalid JSON in " + what);
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
    if (!out) throw input_error("write failed: " + path);
}

inline const json& require_field(const json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error(what + ": missing field \"" + key + "\"");
    return *it;
}

inline int require_int(const json& j, const char* key, const std::string& what) {
    const json& f = require_field(j, key, what);
    if (!f.is_number_integer()) throw input_error(what + ": field \"" + key + "\" must be an integer");
    return f.get<int>();
}

}  // namespace ugx
