#include "synlab/report.hpp"

#include <algorithm>

namespace synlab {

Check& Report::slot(const std::string& name) {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  if (it != checks_.end()) return *it;
  checks_.push_back(Check{name, true, {}});
  return checks_.back();
}

void Report::pass(const std::string& name) { slot(name); }

void Report::fail(const std::string& name, std::string witness) {
  Check& c = slot(name);
  if (c.passed) {
    c.passed = false;
    c.witness = std::move(witness);
  }
}

void Report::note(const std::string& name, bool passed, std::string witness) {
  if (passed)
    pass(name);
  else
    fail(name, std::move(witness));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    if (c.passed)
      pass(prefix + c.name);
    else
      fail(prefix + c.name, c.witness);
  }
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c.passed;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject_;
  j["ok"] = ok();
  auto arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e{{"law", c.name}, {"passed", c.passed}};
    if (!c.passed) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string Report::to_text() const {
  std::string out = subject_ + ": " + (ok() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : checks_) {
    out += "  [" + std::string(c.passed ? "ok  " : "FAIL") + "] " + c.name;
    if (!c.passed) out += "  -- " + c.witness;
    out += "\n";
  }
  return out;
}

}  // namespace synlab
