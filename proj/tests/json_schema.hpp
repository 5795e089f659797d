#pragma once

// Validator for the subset of JSON Schema used by the shipped schemas:
// type, required, properties, additionalProperties (boolean), items,
// minItems, maxItems.

#include <fstream>
#include <string>

#include <json.hpp>

namespace schema {

using nlohmann::json;

inline bool validate(const json& sch, const json& value, const std::string& path,
                     std::string* err) {
  auto failure = [&](const std::string& what) {
    if (err) *err = path + ": " + what;
    return false;
  };

  if (sch.contains("type")) {
    const std::string type = sch["type"];
    bool ok = (type == "object" && value.is_object()) ||
              (type == "array" && value.is_array()) ||
              (type == "string" && value.is_string()) ||
              (type == "integer" && value.is_number_integer()) ||
              (type == "number" && value.is_number()) ||
              (type == "boolean" && value.is_boolean());
    if (!ok) return failure("expected " + type + ", got " + std::string(value.type_name()));
  }
  if (value.is_object()) {
    if (sch.contains("required"))
      for (const auto& key : sch["required"])
        if (!value.contains(key.get<std::string>()))
          return failure("missing required key " + key.get<std::string>());
    const json props = sch.value("properties", json::object());
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        if (!validate(props[key], sub, path + "." + key, err)) return false;
      } else if (sch.contains("additionalProperties") &&
                 sch["additionalProperties"] == false) {
        return failure("unexpected key " + key);
      }
    }
  }
  if (value.is_array()) {
    if (sch.contains("minItems") && value.size() < sch["minItems"].get<std::size_t>())
      return failure("too few items");
    if (sch.contains("maxItems") && value.size() > sch["maxItems"].get<std::size_t>())
      return failure("too many items");
    if (sch.contains("items")) {
      int i = 0;
      for (const auto& item : value) {
        if (!validate(sch["items"], item, path + "[" + std::to_string(i) + "]", err))
          return false;
        ++i;
      }
    }
  }
  return true;
}

inline json load(const std::string& schema_dir, const std::string& name) {
  std::ifstream in(schema_dir + "/" + name);
  if (!in.good()) throw std::runtime_error("cannot open schema " + name);
  return json::parse(in);
}

inline bool validate_against(const std::string& schema_dir, const std::string& name,
                             const std::string& payload, std::string* err) {
  json value = json::parse(payload, nullptr, false);
  if (value.is_discarded()) {
    if (err) *err = "payload is not valid JSON";
    return false;
  }
  return validate(load(schema_dir, name), value, "$", err);
}

}  // namespace schema
