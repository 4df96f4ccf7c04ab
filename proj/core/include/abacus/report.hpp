#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace abacus {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string identity;
  int g = 0;
  bool pass = false;
  Json witness = nullptr;  // null when passing
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string identity, int g, bool pass, Json witness = nullptr) {
    checks.push_back({std::move(identity), g, pass, pass ? Json(nullptr) : std::move(witness)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

Json to_json(const CheckResult& c);
Json to_json(const Report& r);

}  // namespace abacus
