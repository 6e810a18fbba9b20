#include "tvchow/fvector.hpp"

#include <sstream>

namespace tvchow {

FVector::FVector(std::vector<Integer> counts) : counts_(std::move(counts)) { trim(); }

Integer FVector::operator[](long k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= counts_.size()) return 0;
  return counts_[static_cast<std::size_t>(k)];
}

void FVector::add(std::size_t k, const Integer& amount) {
  if (counts_.size() <= k) counts_.resize(k + 1, 0);
  counts_[k] += amount;
  trim();
}

Integer FVector::total() const {
  Integer s = 0;
  for (const auto& c : counts_) s += c;
  return s;
}

FVector FVector::convolve(const FVector& other) const {
  if (counts_.empty() || other.counts_.empty()) return FVector();
  std::vector<Integer> out(counts_.size() + other.counts_.size() - 1, 0);
  for (std::size_t i = 0; i < counts_.size(); ++i)
    for (std::size_t j = 0; j < other.counts_.size(); ++j) out[i + j] += counts_[i] * other.counts_[j];
  return FVector(std::move(out));
}

bool FVector::operator==(const FVector& other) const { return counts_ == other.counts_; }

std::string FVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
  os << ')';
  return os.str();
}

void FVector::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

}  // namespace tvchow
