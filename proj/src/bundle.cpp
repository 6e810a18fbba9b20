#include "tvchow/bundle.hpp"

#include "tvchow/errors.hpp"
#include "tvchow/lattice_map.hpp"
#include "tvchow/linalg.hpp"

namespace tvchow {

namespace {

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// gcd of the maximal minors of the rows equals 1.
bool unimodular_rows(const Matrix& rows, std::size_t columns) {
  const std::size_t k = rows.size();
  if (k == 0) return true;
  Integer g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Matrix sub(k, Vector(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub[r][c] = rows[r][pick[c]];
    Rational det = determinant(sub);
    g = gcd(g, Integer(det.get_num()));
    if (g == 1) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == columns - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g == 1;
}

}  // namespace

Fan p1_fan() {
  return Fan(1, {Cone(1, {Vector{1}}), Cone(1, {Vector{-1}})});
}

Fan p2_fan() {
  Vector u1{1, 0}, u2{0, 1}, u0{-1, -1};
  return Fan(2, {Cone(2, {u1, u2}), Cone(2, {u2, u0}), Cone(2, {u0, u1})});
}

bool is_smooth(const Fan& f) {
  for (const auto& c : f.maximal_cones()) {
    if (!c.lines().empty()) return false;
    if (c.rays().size() != static_cast<std::size_t>(c.dimension())) return false;
    if (!unimodular_rows(c.rays(), f.ambient_rank())) return false;
  }
  return true;
}

Fan projectivized_bundle_fan(const Fan& base, const Twist& twist) {
  const std::size_t n = base.ambient_rank();
  if (!is_smooth(base)) throw ValidityError("projectivized bundle: base fan is not smooth");
  if (!is_complete(base).complete()) throw ValidityError("projectivized bundle: base fan is not complete");
  auto lift = [&](const Vector& u) {
    auto it = twist.find(u);
    if (it == twist.end()) throw ValidityError("projectivized bundle: no twist for ray " + to_string(u));
    return concat(u, Vector{Rational(it->second)});
  };
  for (const auto& [ray, _] : twist) {
    bool found = false;
    for (const auto& u : base.rays()) found = found || u == ray;
    if (!found) throw ValidityError("projectivized bundle: twist names a non-ray " + to_string(ray));
  }
  Vector up = unit_vector(n + 1, n), down = -up;
  std::vector<Cone> cones;
  for (const auto& sigma : base.maximal_cones()) {
    std::vector<Vector> gens;
    for (const auto& u : sigma.rays()) gens.push_back(lift(u));
    auto with_up = gens, with_down = gens;
    with_up.push_back(up);
    with_down.push_back(down);
    cones.emplace_back(n + 1, with_up);
    cones.emplace_back(n + 1, with_down);
  }
  Fan fan(n + 1, cones);
  if (!is_smooth(fan) || !is_complete(fan).complete())
    throw InconsistencyError("projectivized bundle: result is not a smooth complete fan");
  return fan;
}

}  // namespace tvchow
