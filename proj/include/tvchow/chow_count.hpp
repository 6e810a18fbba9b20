#pragma once

#include <string>
#include <vector>

#include "tvchow/divisorial.hpp"
#include "tvchow/fvector.hpp"

namespace tvchow {

/// Generator counts |R_k|, |V_k|, |T_k| for k = 0..d+1 of a fansy divisor over P^1.
struct CountProfile {
  std::size_t d = 0;
  std::vector<Integer> R, V, T;
  std::size_t num_special_points = 0;

  static CountProfile zero(std::size_t d, std::size_t num_special_points);
  /// Non-negative, length d+2, vanishing at k = d+1, and |P| >= 2.
  ValidationReport validate() const;
  Integer total(std::size_t k) const;

  bool operator==(const CountProfile&) const = default;
};

CountProfile operator+(const CountProfile& a, const CountProfile& b);

struct EquivariantCounts {
  std::size_t N = 0;
  std::size_t d = 0;
  std::vector<Integer> r, v, t;  // k = 0..d+1

  Integer total(std::size_t k) const { return r.at(k) + v.at(k) + t.at(k); }
  bool operator==(const EquivariantCounts&) const = default;
};

EquivariantCounts operator+(const EquivariantCounts& a, const EquivariantCounts& b);

/// How R, V and T are read off a marked fansy divisor.
///   example_table: R_k slice faces of dim d-k with unmarked tail, V_k marked cones of dim d-k,
///                T_k unmarked tail cones of dim d+1-k.
///   textbook:    R_k unmarked tail cones of dim d+1-k, V_k slice faces of dim d-k,
///                T_k marked cones of dim d-k.
/// Both agree on contraction-free input.
enum class CountStrategy { example_table, textbook };

std::string to_string(CountStrategy s);
CountStrategy parse_strategy(const std::string& text);

/// Pads P to two points with the first of 0, infinity, 1 not present; the new slices
/// are the tail fan.
MarkedFansyDivisor ensure_min_P(const MarkedFansyDivisor& X);

/// Counts after ensure_min_P. Entries at k = d+1 are zero.
CountProfile enumerate_RVT(const MarkedFansyDivisor& X, CountStrategy strategy = CountStrategy::example_table);

/// #Sigma(d-i+1) + 2 #Sigma(d-i) for i < d, #Sigma(1) + #P for i = d, 0 beyond.
Integer S_closed_form(const FVector& tail_fvector, std::size_t num_P, std::size_t d, std::size_t i);
/// R'_{Nd-d-i} of Sigma_E for i <= Nd-d, 0 beyond.
Integer Sprime_closed_form(std::size_t N, std::size_t d, std::size_t i);

/// r_k = sum_{m<=k} R'_{Nd-d-(k-m)} R_m and likewise for v, t.
EquivariantCounts convolve_counts(const CountProfile& p, std::size_t N);

bool S_check(const CountProfile& p, const FVector& tail_fvector, std::size_t i);
/// Warnings for every i <= d+1 where S_check fails.
ValidationReport check_profile(const CountProfile& p, const FVector& tail_fvector);

struct SumIdentity {
  Integer lhs;  // r_k + v_k + t_k
  Integer rhs;  // sum_i S'_i S_{k-i} from the closed forms
  bool holds() const { return lhs == rhs; }
};

SumIdentity sum_identity(const CountProfile& p, const FVector& tail_fvector, std::size_t N, std::size_t k);

/// Generator counts of the presentation Z^{V_k} + Z^{R_k} + Z^{T_k} -> A_k.
struct GeneratorReport {
  std::size_t k = 0;
  Integer V, R, T;
  std::string disclaimer;

  Integer total() const { return V + R + T; }
};

GeneratorReport generator_report(const CountProfile& p, std::size_t k);

}  // namespace tvchow
