#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "tvchow/bundle.hpp"
#include "tvchow/divisorial.hpp"
#include "tvchow/downgrade.hpp"
#include "tvchow/rational.hpp"

namespace testing {

inline tvchow::Vector V(std::initializer_list<long> xs) {
  tvchow::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline tvchow::Vector Q(std::initializer_list<const char*> xs) {
  tvchow::Vector v;
  for (const char* x : xs) v.push_back(tvchow::parse_rational(x));
  return v;
}

inline tvchow::Vector random_vector(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  tvchow::Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
  return v;
}

/// Twist on the P^2 fan keyed by the rays (1,0), (0,1), (-1,-1).
inline tvchow::Twist twist_of(long c1, long c2, long c0) {
  return {{V({1, 0}), c1}, {V({0, 1}), c2}, {V({-1, -1}), c0}};
}

inline tvchow::Fan bundle_E() { return tvchow::projectivized_bundle_fan(tvchow::p2_fan(), twist_of(1, 0, 0)); }
inline tvchow::Fan bundle_F() { return tvchow::projectivized_bundle_fan(tvchow::p2_fan(), twist_of(-1, -1, 1)); }

/// No special points, tail fan = fan of P^1.
inline tvchow::MarkedFansyDivisor trivial_p1() { return tvchow::MarkedFansyDivisor(tvchow::p1_fan(), {}, {}, {}); }

}  // namespace testing
