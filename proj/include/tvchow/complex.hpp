#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tvchow/config.hpp"
#include "tvchow/fvector.hpp"
#include "tvchow/polyhedron.hpp"
#include "tvchow/report.hpp"

namespace tvchow {

class Fan;

/// Finite set of polyhedra closed under taking faces. Cells are sorted by
/// dimension and then canonically, so equal complexes have equal cell lists.
class PolyhedralComplex {
 public:
  PolyhedralComplex(std::size_t rank, const std::vector<Polyhedron>& generators);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  const std::vector<std::size_t>& maximal_cells() const { return maximal_; }
  /// Indices of all faces of cell i, including i itself.
  const std::vector<std::size_t>& faces_of(std::size_t i) const { return faces_[i]; }
  std::optional<std::size_t> index_of(const Polyhedron& p) const;
  int dimension() const;
  FVector f_vector() const;

  /// Pairwise intersections of maximal cells must be faces of both.
  ValidationReport validate() const;
  /// {tail_cone(cell)}; throws ValidityError when these do not form a fan.
  Fan tail_fan() const;

  bool operator==(const PolyhedralComplex& other) const {
    return rank_ == other.rank_ && cells_ == other.cells_;
  }

 private:
  std::size_t rank_;
  std::vector<Polyhedron> cells_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::size_t> maximal_;
  std::map<Polyhedron, std::size_t> index_;
};

/// A complex all of whose cells are cones.
class Fan {
 public:
  Fan(std::size_t rank, const std::vector<Cone>& generators);
  explicit Fan(PolyhedralComplex complex);

  std::size_t ambient_rank() const { return complex_.ambient_rank(); }
  const std::vector<Cone>& cones() const { return cones_; }
  std::vector<Cone> maximal_cones() const;
  /// Primitive generators of the one-dimensional cones.
  std::vector<Vector> rays() const;
  const PolyhedralComplex& as_complex() const { return complex_; }
  FVector f_vector() const { return complex_.f_vector(); }
  ValidationReport validate() const { return complex_.validate(); }

  bool operator==(const Fan& other) const { return complex_ == other.complex_; }

 private:
  PolyhedralComplex complex_;
  std::vector<Cone> cones_;
};

struct CompletenessCertificate {
  bool full_dimensional = false;  // every maximal cell
  bool ridges_paired = false;     // every ridge in exactly two maximal cells
  bool connected = false;         // adjacency graph of maximal cells
  std::size_t samples = 0;
  std::size_t covered = 0;
  std::optional<Vector> uncovered;

  bool complete() const {
    return full_dimensional && ridges_paired && connected && covered == samples;
  }
};

inline constexpr std::size_t kCompletenessSamples = 100;

CompletenessCertificate is_complete(const PolyhedralComplex& c, Execution exec = Execution::parallel);
inline CompletenessCertificate is_complete(const Fan& f, Execution exec = Execution::parallel) {
  return is_complete(f.as_complex(), exec);
}

/// Deterministic pseudo-random rational sample points used by the completeness witness.
std::vector<Vector> completeness_samples(std::size_t rank, std::size_t count);

Fan product_fan(const Fan& a, const Fan& b);

}  // namespace tvchow
