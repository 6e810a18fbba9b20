#pragma once

#include <utility>
#include <vector>

#include "tvchow/fvector.hpp"
#include "tvchow/polyhedron.hpp"

namespace tvchow {

/// Non-empty faces of a polyhedron sorted by dimension, with covering relations.
class FaceLattice {
 public:
  struct Face {
    int dimension;
    Polyhedron face;
  };

  explicit FaceLattice(const Polyhedron& p);

  const std::vector<Face>& faces() const { return faces_; }
  /// (smaller, larger) index pairs with dimensions differing by one.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  FVector f_vector() const;
  /// Faces of codimension one in p.
  std::vector<std::size_t> facets() const;

 private:
  std::vector<Face> faces_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

FaceLattice faces(const Polyhedron& p);

/// The face of p spanned by the given generator indices (vertices first, then rays).
Polyhedron face_of(const Polyhedron& p, const std::vector<std::size_t>& generators);

}  // namespace tvchow
