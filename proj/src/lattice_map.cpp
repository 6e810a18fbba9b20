#include "tvchow/lattice_map.hpp"

#include "tvchow/errors.hpp"
#include "tvchow/linalg.hpp"

namespace tvchow {

namespace {

// Unimodular row reduction over Z on the first `columns` columns. Returns the
// number of nonzero (pivot) rows, which are moved to the front.
std::size_t integer_echelon(IntegerMatrix& rows, std::size_t columns) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < columns && lead < rows.size(); ++c) {
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Integer a = rows[lead][c], b = rows[r][c], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      for (std::size_t k = 0; k < rows[lead].size(); ++k) {
        Integer x = rows[lead][k], y = rows[r][k];
        rows[lead][k] = s * x + t * y;
        rows[r][k] = bg * x - ag * y;
      }
    }
    if (rows[lead][c] != 0) {
      if (rows[lead][c] < 0)
        for (auto& x : rows[lead]) x = -x;
      ++lead;
    }
  }
  return lead;
}

}  // namespace

LatticeMap::LatticeMap(std::size_t source_rank, std::size_t target_rank, IntegerMatrix matrix)
    : source_rank_(source_rank), target_rank_(target_rank), matrix_(std::move(matrix)) {
  if (matrix_.size() != target_rank_) throw DimensionError("LatticeMap: row count != target rank");
  for (const auto& row : matrix_)
    if (row.size() != source_rank_) throw DimensionError("LatticeMap: column count != source rank");
}

LatticeMap LatticeMap::identity(std::size_t n) {
  IntegerMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return LatticeMap(n, n, std::move(m));
}

LatticeMap LatticeMap::zero(std::size_t source_rank, std::size_t target_rank) {
  return LatticeMap(source_rank, target_rank,
                    IntegerMatrix(target_rank, std::vector<Integer>(source_rank, 0)));
}

Vector LatticeMap::apply(const Vector& v) const {
  if (v.size() != source_rank_) throw DimensionError("LatticeMap::apply: rank mismatch");
  Vector out = zero_vector(target_rank_);
  for (std::size_t r = 0; r < target_rank_; ++r)
    for (std::size_t c = 0; c < source_rank_; ++c)
      if (matrix_[r][c] != 0) out[r] += Rational(matrix_[r][c]) * v[c];
  return out;
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
  if (inner.target_rank_ != source_rank_) throw DimensionError("LatticeMap::compose: rank mismatch");
  IntegerMatrix m(target_rank_, std::vector<Integer>(inner.source_rank_, 0));
  for (std::size_t r = 0; r < target_rank_; ++r)
    for (std::size_t k = 0; k < source_rank_; ++k) {
      if (matrix_[r][k] == 0) continue;
      for (std::size_t c = 0; c < inner.source_rank_; ++c) m[r][c] += matrix_[r][k] * inner.matrix_[k][c];
    }
  return LatticeMap(inner.source_rank_, target_rank_, std::move(m));
}

LatticeMap LatticeMap::transpose() const {
  IntegerMatrix m(source_rank_, std::vector<Integer>(target_rank_, 0));
  for (std::size_t r = 0; r < target_rank_; ++r)
    for (std::size_t c = 0; c < source_rank_; ++c) m[c][r] = matrix_[r][c];
  return LatticeMap(target_rank_, source_rank_, std::move(m));
}

bool LatticeMap::is_zero() const {
  for (const auto& row : matrix_)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

std::size_t LatticeMap::rank() const {
  Matrix rows;
  for (const auto& row : matrix_) {
    Vector v;
    for (const auto& x : row) v.emplace_back(x);
    rows.push_back(std::move(v));
  }
  return tvchow::rank(rows);
}

IntegerMatrix LatticeMap::integer_kernel() const {
  // Rows of [A^T | I]; after reduction the rows with zero A^T part span ker A.
  IntegerMatrix aug(source_rank_, std::vector<Integer>(target_rank_ + source_rank_, 0));
  for (std::size_t c = 0; c < source_rank_; ++c) {
    for (std::size_t r = 0; r < target_rank_; ++r) aug[c][r] = matrix_[r][c];
    aug[c][target_rank_ + c] = 1;
  }
  std::size_t pivots = integer_echelon(aug, target_rank_);
  IntegerMatrix kernel;
  for (std::size_t r = pivots; r < aug.size(); ++r)
    kernel.emplace_back(aug[r].begin() + static_cast<long>(target_rank_), aug[r].end());
  return lattice_basis(std::move(kernel));
}

IntegerMatrix LatticeMap::image_generators() const {
  IntegerMatrix cols(source_rank_, std::vector<Integer>(target_rank_, 0));
  for (std::size_t r = 0; r < target_rank_; ++r)
    for (std::size_t c = 0; c < source_rank_; ++c) cols[c][r] = matrix_[r][c];
  return cols;
}

IntegerMatrix lattice_basis(IntegerMatrix generators) {
  if (generators.empty()) return generators;
  std::size_t n = generators.front().size();
  std::size_t pivots = integer_echelon(generators, n);
  generators.resize(pivots);
  return generators;
}

bool in_lattice(const std::vector<Integer>& v, const IntegerMatrix& echelon_basis) {
  std::vector<Integer> rest = v;
  for (const auto& row : echelon_basis) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    for (std::size_t k = 0; k < c; ++k)
      if (rest[k] != 0) return false;
    if (rest[c] % row[c] != 0) return false;
    Integer f = rest[c] / row[c];
    for (std::size_t k = 0; k < row.size(); ++k) rest[k] -= f * row[k];
  }
  for (const auto& x : rest)
    if (x != 0) return false;
  return true;
}

bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix ea = lattice_basis(a), eb = lattice_basis(b);
  for (const auto& v : a)
    if (!in_lattice(v, eb)) return false;
  for (const auto& v : b)
    if (!in_lattice(v, ea)) return false;
  return true;
}

}  // namespace tvchow
