#include "tvchow/report.hpp"

namespace tvchow {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& m : other.failures) failures.push_back(prefix + m);
  for (const auto& m : other.warnings) warnings.push_back(prefix + m);
  for (const auto& m : other.notes) notes.push_back(prefix + m);
}

}  // namespace tvchow
