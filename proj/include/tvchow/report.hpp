#pragma once

#include <string>
#include <vector>

namespace tvchow {

/// Outcome of a validation pass; failures make it fail, warnings do not.
struct ValidationReport {
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  void warn(std::string message) { warnings.push_back(std::move(message)); }
  void note(std::string message) { notes.push_back(std::move(message)); }
  void merge(const ValidationReport& other, const std::string& prefix = {});
};

}  // namespace tvchow
