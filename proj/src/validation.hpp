#pragma once
#include <string>
#include <utility>
#include <vector>

namespace kg {

struct Issue {
  std::string code;  // "NoSourceAt", "MissingSquare", ...
  std::string detail;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string code, std::string detail) {
    issues.push_back({std::move(code), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
  bool has(const std::string& code) const {
    for (const auto& i : issues)
      if (i.code == code) return true;
    return false;
  }
  std::string str() const {
    if (issues.empty()) return "ok";
    std::string s;
    for (const auto& i : issues) {
      s += i.code;
      s += ": ";
      s += i.detail;
      s += '\n';
    }
    return s;
  }
};

}  // namespace kg
