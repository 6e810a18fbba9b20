#pragma once

#include <cstdint>
#include <vector>

#include "tvchow/complex.hpp"
#include "tvchow/config.hpp"

namespace tvchow {

/// A cone of Sigma_E: one proper face of theta = cone(e_1..e_N) per factor,
/// each face given by the bitmask of the e_j it contains.
struct SigmaECone {
  std::vector<std::uint64_t> masks;

  std::size_t dimension() const;
  bool operator==(const SigmaECone&) const = default;
  auto operator<=>(const SigmaECone&) const = default;
};

/// Sparse description of the fan of (A^N minus 0)^d in Q^{Nd}.
class SparseSigmaE {
 public:
  SparseSigmaE(std::size_t N, std::size_t d);

  std::size_t N() const { return N_; }
  std::size_t d() const { return d_; }
  std::size_t ambient_rank() const { return N_ * d_; }

  /// The N^d maximal cones sigma^{i_1} x ... x sigma^{i_d}, lexicographic in (i_1..i_d).
  std::vector<SigmaECone> maximal_cones() const;
  /// Every face of every maximal cone, each once.
  std::vector<SigmaECone> all_cones() const;
  /// The faces of c, c included.
  std::vector<SigmaECone> faces_of(const SigmaECone& c) const;

  /// Counts by enumerating all (2^N - 1)^d cones.
  FVector f_vector(Execution exec = Execution::parallel) const;

  Cone materialize(const SigmaECone& c) const;

 private:
  std::size_t N_, d_;
};

/// Sigma_E materialized as a Fan; ResourceCapError when N*d exceeds caps.geometric_rank.
Fan build_sigma_E(std::size_t N, std::size_t d, const ResourceCaps& caps = ResourceCaps::from_environment());

/// Coefficient of x^k in (sum_{j<N} C(N,j) x^j)^d.
Integer sigma_E_fvector_closed_form(std::size_t N, std::size_t d, long k);
FVector sigma_E_fvector_closed_form(std::size_t N, std::size_t d);

}  // namespace tvchow
