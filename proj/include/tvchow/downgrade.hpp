#pragma once

#include <map>
#include <vector>

#include "tvchow/config.hpp"
#include "tvchow/divisorial.hpp"
#include "tvchow/sigma_e.hpp"

namespace tvchow {

/// Split exact sequences for T inside T x T_E.
///   0 -> M_E --iota--> M + M_E --pi--> M -> 0,   sections tau, sigma_star
///   0 -> N --alpha--> N + N_E --rho--> N_E -> 0
/// Coordinates of N + N_E are (a_1..a_d, b_1..b_Nd); block i of b is b_{iN+1..iN+N}.
struct SplitData {
  std::size_t N = 0;
  std::size_t d = 0;
  LatticeMap I_map;  // M_E -> M, d x Nd
  LatticeMap J_map;  // N -> N_E, Nd x d
  LatticeMap iota;   // b -> (-I b, b)
  LatticeMap pi;     // (a, b) -> a + I b
  LatticeMap alpha;  // a -> (a, J a)
  LatticeMap rho;    // (a, b) -> b - J a
  LatticeMap sigma_star;  // m -> (m, 0)
  LatticeMap tau;         // (a, b) -> b

  /// Exactness, section identities, kernel(rho) = image(alpha) and the entrywise formulas.
  ValidationReport verify() const;
};

/// Throws InconsistencyError if the assembled maps fail verify().
SplitData build_split(std::size_t N, std::size_t d);

/// D x sigma: coefficients product(Delta_p, sigma), tail tail(D) x sigma.
PolyhedralDivisor product_divisor(const PolyhedralDivisor& D, const Cone& sigma);

/// {D x sigma_I : D in S, sigma_I maximal in Sigma_E} before closure.
std::vector<PolyhedralDivisor> product_generators(const DivisorialFan& S, std::size_t N);
DivisorialFan product_with_ET(const DivisorialFan& S, std::size_t N,
                              const ResourceCaps& caps = ResourceCaps::from_environment());
DivisorialFan product_with_ET(const MarkedFansyDivisor& X, std::size_t N,
                              const ResourceCaps& caps = ResourceCaps::from_environment());

struct SliceImage {
  Polyhedron image;
  PolyhedralComplex faces;  // {rho(F) : F face of delta x sigma_I}
  FaceBijectionCertificate certificate;
};

/// rho(delta x sigma_I) with its face complex; InconsistencyError when rho is not
/// a face bijection on the product.
SliceImage downgrade_slice(const Polyhedron& delta, const Cone& sigma_I, const SplitData& split);

/// Source pair of a cell rho(F x delta) of a Y_C slice.
struct CellProvenance {
  PointOnLine point;
  std::size_t source_cell;  // index into X.slice(point).cells()
  SigmaECone sigma;

  bool operator==(const CellProvenance&) const = default;
};

/// Source pair of a cone rho(tau x delta) of the Y_C tail fan or marked set.
struct ConeProvenance {
  std::size_t source_cone;  // index into X.tail_fan.cones() or X.marked
  SigmaECone sigma;

  bool operator==(const ConeProvenance&) const = default;
};

struct QuotientFansyDivisor {
  std::size_t N = 0;
  std::size_t d = 0;
  MarkedFansyDivisor fansy;
  /// Parallel to fansy.slice(p).cells() for every special point p.
  std::map<PointOnLine, std::vector<CellProvenance>> slice_provenance;
  std::vector<ConeProvenance> tail_provenance;    // parallel to fansy.tail_fan.cones()
  std::vector<ConeProvenance> marked_provenance;  // parallel to fansy.marked
  ValidationReport report;
};

/// Y_C in geometric mode. X must be valid; special points are padded to two.
/// ResourceCapError when N*d exceeds caps.geometric_rank; InconsistencyError on a
/// failed face-bijection or completeness certificate.
QuotientFansyDivisor build_YC(const MarkedFansyDivisor& X, std::size_t N,
                              Execution exec = Execution::parallel,
                              const ResourceCaps& caps = ResourceCaps::from_environment());

/// Per-dimension cell counts of Y_C.
struct QuotientCounts {
  std::size_t N = 0;
  std::size_t d = 0;
  std::map<PointOnLine, FVector> slices;
  FVector tail;
  FVector marked;

  bool operator==(const QuotientCounts&) const = default;
};

/// Counting-only mode: convolutions with the Sigma_E f-vector, no geometry.
QuotientCounts build_YC_counts(const MarkedFansyDivisor& X, std::size_t N,
                               const ResourceCaps& caps = ResourceCaps::from_environment());
/// Counts read off a geometric Y_C.
QuotientCounts cell_counts(const QuotientFansyDivisor& Y);

/// Slices of a complete fan in rank n+1 along the last coordinate q: slice at 0 is
/// sigma cap {q = 1}, slice at infinity is sigma cap {q = -1}, tail fan sigma cap {q = 0};
/// marked cones come from cones meeting both open half-spaces.
MarkedFansyDivisor toric_downgrade(const Fan& big_fan);

}  // namespace tvchow
