// check_report.hpp
// Named pass/fail lines produced by the verification suites.
#pragma once

#include <string>
#include <vector>

namespace irrbase {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, std::string detail = std::string()) {
    lines.push_back(CheckLine{std::move(name), pass, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  int fail_count() const {
    int c = 0;
    for (const auto& l : lines)
      if (!l.pass) ++c;
    return c;
  }
};

}  // namespace irrbase
