#pragma once

// Uniform result envelope for the command-line tool. Every command produces
// a Report; the renderers below serialize it deterministically (ordered
// JSON, flattened TSV, or indented text), so identical invocations are
// byte-identical.

#include <parahoric/rational.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/subset.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace parahoric {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "parahoric";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, tsv, text };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "tsv") return OutputFormat::tsv;
  if (s == "text") return OutputFormat::text;
  throw InvalidSpec("unknown output format '" + s + "'");
}

// One named check with a pass flag and, on failure, a structured payload
// describing the counterexample.
struct VerificationStamp {
  std::string name;
  bool pass = true;
  Json counterexample;  // null when passing
};

struct Report {
  std::string command;
  std::string spec;  // canonical root system string
  Json results = Json::object();
  std::vector<VerificationStamp> stamps;

  bool all_pass() const {
    for (const auto& s : stamps)
      if (!s.pass) return false;
    return true;
  }
};

inline Json to_json(const Report& r) {
  Json j = Json::object();
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["spec"] = r.spec;
  j["results"] = r.results;
  Json stamps = Json::array();
  for (const auto& s : r.stamps) {
    Json e = Json::object();
    e["name"] = s.name;
    e["pass"] = s.pass;
    e["counterexample"] = s.pass ? Json(nullptr) : s.counterexample;
    stamps.push_back(std::move(e));
  }
  j["stamps"] = std::move(stamps);
  return j;
}

namespace detail {

inline std::string scalar_to_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// "results.classes[1].size" style paths, depth-first in insertion order.
inline void flatten_json(const Json& v, const std::string& path,
                         std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    if (v.empty()) out.emplace_back(path, "{}");
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten_json(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(path, "[]");
    for (std::size_t k = 0; k < v.size(); ++k)
      flatten_json(v[k], path + "[" + std::to_string(k) + "]", out);
  } else {
    out.emplace_back(path, scalar_to_string(v));
  }
}

inline void render_text_node(const Json& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out += indent + it.key() + ":\n";
        render_text_node(it.value(), indent + "  ", out);
      } else {
        out += indent + it.key() + ": " + scalar_to_string(it.value()) + "\n";
      }
    }
  } else if (v.is_array()) {
    bool all_scalar = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) all_scalar = false;
    if (all_scalar) {
      std::string line;
      for (const auto& e : v) {
        if (!line.empty()) line += " ";
        line += scalar_to_string(e);
      }
      out += indent + "- " + (v.empty() ? "(none)" : line) + "\n";
    } else {
      for (const auto& e : v) {
        out += indent + "-\n";
        render_text_node(e, indent + "  ", out);
      }
    }
  } else {
    out += indent + scalar_to_string(v) + "\n";
  }
}

}  // namespace detail

inline std::string render(const Report& r, OutputFormat fmt) {
  Json j = to_json(r);
  switch (fmt) {
    case OutputFormat::json:
      return j.dump(2) + "\n";
    case OutputFormat::tsv: {
      std::vector<std::pair<std::string, std::string>> rows;
      detail::flatten_json(j, "", rows);
      std::string out;
      for (const auto& [k, v] : rows) out += k + "\t" + v + "\n";
      return out;
    }
    case OutputFormat::text: {
      std::string out;
      out += std::string(kToolName) + " " + r.command + " " + r.spec + "\n";
      detail::render_text_node(j["results"], "", out);
      for (const auto& s : r.stamps) {
        out += std::string(s.pass ? "[pass] " : "[FAIL] ") + s.name + "\n";
        if (!s.pass) {
          std::string inner;
          detail::render_text_node(s.counterexample, "  ", inner);
          out += inner;
        }
      }
      return out;
    }
  }
  return {};
}

// Exit codes: 0 success, 1 a verification stamp failed, 2 usage or parse
// error, 3 a resource cap refused the computation.
inline int exit_code_for(const Report& r) { return r.all_pass() ? 0 : 1; }

}  // namespace parahoric
