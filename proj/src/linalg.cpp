#include "tvchow/linalg.hpp"

#include "tvchow/errors.hpp"

namespace tvchow {

Matrix row_reduce(Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    Rational inv = 1 / rows[lead][c];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[lead][k];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t rank(const Matrix& rows) { return row_reduce(rows).size(); }

Matrix nullspace(const Matrix& rows, std::size_t columns) {
  Matrix rref = row_reduce(rows);
  std::vector<long> pivot_of_col(columns, -1);
  for (std::size_t r = 0; r < rref.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (sgn(rref[r][c]) != 0) {
        pivot_of_col[c] = static_cast<long>(r);
        break;
      }
    }
  }
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vector v = zero_vector(columns);
    v[free] = 1;
    for (std::size_t c = 0; c < columns; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -rref[pivot_of_col[c]][free];
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

Vector project_out(const Vector& v, const Matrix& basis) {
  if (basis.empty()) return v;
  // Gram-Schmidt on the basis, then subtract the components.
  Matrix ortho;
  for (const auto& b : basis) {
    Vector w = b;
    for (const auto& o : ortho) w = w - (dot(w, o) / dot(o, o)) * o;
    if (!is_zero(w)) ortho.push_back(w);
  }
  Vector r = v;
  for (const auto& o : ortho) r = r - (dot(r, o) / dot(o, o)) * o;
  return r;
}

Matrix transpose(const Matrix& m, std::size_t columns) {
  Matrix t(columns, zero_vector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < columns; ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace tvchow
