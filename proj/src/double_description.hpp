#pragma once

#include <vector>

#include "tvchow/rational.hpp"

namespace tvchow::detail {

using IntVec = std::vector<Integer>;

struct ConeGenerators {
  std::vector<IntVec> rays;   // extreme rays modulo the lineality space
  std::vector<IntVec> lines;  // basis of the lineality space
};

/// Generators of {x in Q^dim : c . x >= 0 for every c in constraints}
/// by the double description method with the combinatorial adjacency test.
ConeGenerators cone_from_inequalities(const std::vector<IntVec>& constraints, std::size_t dim);

/// Positive multiple of v with coprime integer entries (v nonzero).
IntVec integer_direction(const Vector& v);
Vector to_vector(const IntVec& v);

}  // namespace tvchow::detail
