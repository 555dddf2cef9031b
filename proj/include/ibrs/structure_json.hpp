#pragma once

#include <string>

#include "ibrs/structure.hpp"
#include "json.hpp"

namespace ibrs {

using json = nlohmann::ordered_json;

inline json ref_to_json(const Ref& r) {
  if (r.is_arrow) return json{{"arrow", r.name}};
  return json{{"point", json::array({r.name, r.copy})}};
}

inline json to_json(const Structure& s) {
  json j;
  j["carrier"] = s.carrier();
  json copies = json::array();
  for (const auto& c : s.copy_specs()) copies.push_back(json::array({c.point, c.copy}));
  j["copies"] = copies;
  json arrows = json::array();
  for (const auto& a : s.arrow_specs()) {
    json aj;
    aj["id"] = a.id;
    aj["base"] = a.base;
    aj["copy"] = a.copy;
    aj["origin"] = json::array({a.origin.name, a.origin.copy});
    aj["target"] = ref_to_json(a.target);
    arrows.push_back(aj);
  }
  j["arrows"] = arrows;
  j["level_bound"] = s.level_bound();
  return j;
}

namespace detail {

inline Ref parse_ref(const json& j, const char* what) {
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_number_integer())
    return Ref::point(j[0].get<std::string>(), j[1].get<int>());
  if (j.is_object() && j.contains("point")) return parse_ref(j["point"], what);
  if (j.is_object() && j.contains("arrow") && j["arrow"].is_string()) return Ref::arrow(j["arrow"].get<std::string>());
  throw Error(ErrorKind::InvalidInput, std::string("malformed ") + what + ": " + j.dump());
}

}  // namespace detail

inline Structure structure_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("carrier")) throw Error(ErrorKind::InvalidInput, "structure needs a carrier");
    std::vector<std::string> carrier = j.at("carrier").get<std::vector<std::string>>();
    std::vector<CopyRef> copies;
    if (j.contains("copies")) {
      for (const auto& c : j.at("copies")) {
        auto r = detail::parse_ref(c, "copy");
        if (r.is_arrow) throw Error(ErrorKind::InvalidInput, "copy must be a point copy");
        copies.push_back({r.name, r.copy});
      }
    } else {
      for (const auto& p : carrier) copies.push_back({p, 0});
    }
    std::vector<ArrowSpec> arrows;
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        ArrowSpec s;
        s.id = a.at("id").get<std::string>();
        s.base = a.value("base", s.id);
        s.copy = a.value("copy", 0);
        s.origin = detail::parse_ref(a.at("origin"), "origin");
        s.target = detail::parse_ref(a.at("target"), "target");
        arrows.push_back(s);
      }
    }
    int bound = j.value("level_bound", kDefaultLevelBound);
    return build_structure(carrier, copies, arrows, bound);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

inline std::string serialize(const Structure& s) { return to_json(s).dump(2) + "\n"; }

inline Structure parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
  return structure_from_json(j);
}

}  // namespace ibrs
