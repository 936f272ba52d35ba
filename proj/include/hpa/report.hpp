#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace hpa {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // offending basis tuple or a short diagnostic on failure
};

/// Ordered list of named pass/fail entries. Verifiers fill it instead of throwing.
class VerificationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }

  /// Appends every entry of other, prefixing names with "prefix.".
  void merge(const std::string& prefix, const VerificationReport& other) {
    for (const auto& c : other.checks_)
      checks_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.detail});
  }

  [[nodiscard]] bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] std::vector<Check> failures() const {
    std::vector<Check> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
    return out;
  }
  [[nodiscard]] const Check* find(const std::string& name) const {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
  }
  [[nodiscard]] bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }

 private:
  std::vector<Check> checks_;
};

/// Tracks the first failing tuple while scanning basis tuples for one axiom.
class AxiomScan {
 public:
  explicit AxiomScan(std::string name) : name_(std::move(name)) {}
  void fail_once(const std::string& tuple) {
    if (ok_) detail_ = "fails at " + tuple;
    ok_ = false;
  }
  [[nodiscard]] bool ok() const { return ok_; }
  void record(VerificationReport& r) const { r.add(name_, ok_, detail_); }

 private:
  std::string name_;
  bool ok_ = true;
  std::string detail_;
};

}  // namespace hpa
