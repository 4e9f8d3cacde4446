#pragma once

// Minimal JSON-Schema (draft-07 subset) validator, enough to check the CLI
// report schema: type (string or array of strings), required, properties,
// additional free-form keys, items, enum, const.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace minischema {

using Json = nlohmann::json;

inline bool type_matches(const Json& value, const std::string& t) {
  if (t == "object") return value.is_object();
  if (t == "array") return value.is_array();
  if (t == "string") return value.is_string();
  if (t == "boolean") return value.is_boolean();
  if (t == "integer") return value.is_number_integer();
  if (t == "number") return value.is_number();
  if (t == "null") return value.is_null();
  return false;
}

inline bool validate(const Json& value, const Json& schema, std::string& error,
                     const std::string& path = "$") {
  if (schema.contains("const")) {
    if (value != schema["const"]) {
      error = path + ": expected const " + schema["const"].dump() + ", got " + value.dump();
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const Json& option : schema["enum"])
      if (value == option) hit = true;
    if (!hit) {
      error = path + ": " + value.dump() + " not in enum";
      return false;
    }
  }
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else if (t.is_array()) {
      for (const Json& option : t)
        if (type_matches(value, option.get<std::string>())) ok = true;
    }
    if (!ok) {
      error = path + ": type mismatch, value " + value.dump().substr(0, 80);
      return false;
    }
  }
  if (schema.contains("required") && value.is_object()) {
    for (const Json& key : schema["required"]) {
      if (!value.contains(key.get<std::string>())) {
        error = path + ": missing required key '" + key.get<std::string>() + "'";
        return false;
      }
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
      if (value.contains(it.key())) {
        if (!validate(value.at(it.key()), it.value(), error, path + "." + it.key())) return false;
      }
    }
  }
  if (schema.contains("items") && value.is_array()) {
    int i = 0;
    for (const Json& element : value) {
      if (!validate(element, schema["items"], error, path + "[" + std::to_string(i) + "]"))
        return false;
      ++i;
    }
  }
  return true;
}

}  // namespace minischema
