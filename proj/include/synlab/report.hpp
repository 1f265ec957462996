#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace synlab {

/// One named law or axiom, with the first counterexample found.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Itemized result of a validator or checker. Failures are data, not exceptions.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }

  /// Registers a law as passing unless it already failed.
  void pass(const std::string& name);
  /// Records a failure; only the first witness per law is kept.
  void fail(const std::string& name, std::string witness);
  void note(const std::string& name, bool passed, std::string witness = {});
  /// Appends every check of `other`, prefixing names.
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  const Check* first_failure() const;
  bool passed(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  Check& slot(const std::string& name);

  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace synlab
