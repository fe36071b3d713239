#pragma once

// Pass/fail reports shared by the theorem checks and the CLI.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace weylres {

struct Claim {
  std::string id;
  bool pass = false;
  std::string statement;
  nlohmann::json detail = nlohmann::json::object();  // merged into the claim's JSON
};

struct Report {
  std::string theorem;
  nlohmann::json subject = nlohmann::json::object();  // e.g. {"type":"D","k":5,"n":4}
  std::vector<Claim> claims;

  Claim& add(std::string id, bool pass, std::string statement,
             nlohmann::json detail = nlohmann::json::object()) {
    claims.push_back({std::move(id), pass, std::move(statement), std::move(detail)});
    return claims.back();
  }

  bool pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }

  const Claim* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }
};

inline nlohmann::json to_json(const Claim& c) {
  nlohmann::json j{{"id", c.id}, {"pass", c.pass}, {"statement", c.statement}};
  for (const auto& [key, value] : c.detail.items()) j[key] = value;
  return j;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json j{{"theorem", r.theorem}};
  for (const auto& [key, value] : r.subject.items()) j[key] = value;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c));
  j["claims"] = claims;
  j["pass"] = r.pass();
  return j;
}

inline std::string label(const std::string& name, int k, int nu) {
  return name + "_{" + std::to_string(k) + "," + std::to_string(nu) + "}";
}

}  // namespace weylres
