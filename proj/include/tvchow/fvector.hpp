#pragma once

#include <string>
#include <vector>

#include "tvchow/rational.hpp"

namespace tvchow {

/// Face counts indexed by dimension.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<Integer> counts);

  /// Zero outside the stored range.
  Integer operator[](long k) const;
  void add(std::size_t k, const Integer& amount = 1);
  std::size_t size() const { return counts_.size(); }
  const std::vector<Integer>& counts() const { return counts_; }
  Integer total() const;

  FVector convolve(const FVector& other) const;

  bool operator==(const FVector& other) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> counts_;
};

}  // namespace tvchow
