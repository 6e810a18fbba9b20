#pragma once

#include <vector>

#include "tvchow/rational.hpp"

namespace tvchow {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Z-linear map Z^source -> Z^target stored as a target x source matrix.
class LatticeMap {
 public:
  LatticeMap(std::size_t source_rank, std::size_t target_rank, IntegerMatrix matrix);

  static LatticeMap identity(std::size_t n);
  static LatticeMap zero(std::size_t source_rank, std::size_t target_rank);

  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  const IntegerMatrix& matrix() const { return matrix_; }
  const Integer& entry(std::size_t row, std::size_t col) const { return matrix_[row][col]; }

  Vector apply(const Vector& v) const;
  /// (*this) o inner
  LatticeMap compose(const LatticeMap& inner) const;
  LatticeMap transpose() const;

  bool is_zero() const;
  std::size_t rank() const;

  /// Z-basis of the kernel lattice, computed by integer row reduction.
  IntegerMatrix integer_kernel() const;
  /// Columns of the matrix, i.e. generators of the image lattice.
  IntegerMatrix image_generators() const;

  bool operator==(const LatticeMap& other) const = default;

 private:
  std::size_t source_rank_;
  std::size_t target_rank_;
  IntegerMatrix matrix_;
};

/// Echelon basis of the lattice generated by the given integer vectors.
IntegerMatrix lattice_basis(IntegerMatrix generators);

/// True when both generator sets span the same sublattice of Z^n.
bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

bool in_lattice(const std::vector<Integer>& v, const IntegerMatrix& echelon_basis);

}  // namespace tvchow
