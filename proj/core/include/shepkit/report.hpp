#pragma once

#include <string>
#include <utility>
#include <vector>

namespace shepkit {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Flat list of named pass/fail checks, used by the certifiers.
struct Report {
  std::string title;
  std::string checks_version;
  std::vector<CheckEntry> checks;

  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  bool pass() const {
    for (const CheckEntry& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace shepkit
