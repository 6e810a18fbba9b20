#include <algorithm>

#include "tvchow/divisorial.hpp"
#include "tvchow/errors.hpp"

namespace tvchow {

namespace {

std::vector<Vector> generators_of(const Polyhedron& cone) {
  std::vector<Vector> g = cone.rays();
  for (const auto& l : cone.lines()) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

const std::vector<AffinePiece>& pieces_at(const DivisorialPolyhedron& dp, const PointOnLine& p) {
  static const std::vector<AffinePiece> none;
  auto it = dp.L.find(p);
  return it == dp.L.end() ? none : it->second;
}

// Regions of box on which piece j attains the minimum.
std::vector<Polyhedron> regions(const Polyhedron& box, const std::vector<AffinePiece>& pieces) {
  std::vector<Polyhedron> out;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    auto ineq = box.inequalities();
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (i != j) ineq.push_back({pieces[i].slope - pieces[j].slope, pieces[j].constant - pieces[i].constant});
    Polyhedron r = Polyhedron::from_constraints(box.ambient_rank(), ineq, box.equations());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Rational evaluate_L(const std::vector<AffinePiece>& pieces, const Vector& u) {
  if (pieces.empty()) return 0;
  Rational best = dot(pieces.front().slope, u) + pieces.front().constant;
  for (const auto& piece : pieces) best = std::min(best, Rational(dot(piece.slope, u) + piece.constant));
  return best;
}

Rational lin(const std::vector<AffinePiece>& pieces, const Vector& w) {
  if (pieces.empty()) return 0;
  Rational best = dot(pieces.front().slope, w);
  for (const auto& piece : pieces) best = std::min(best, dot(piece.slope, w));
  return best;
}

bool is_identically_zero(const DivisorialPolyhedron& dp, const PointOnLine& p) {
  const auto& pieces = pieces_at(dp, p);
  if (pieces.empty()) return true;
  for (const auto& r : regions(dp.box, pieces)) {
    if (r.is_empty()) continue;
    for (const auto& x : r.vertices())
      if (evaluate_L(pieces, x) != 0) return false;
    for (const auto& w : generators_of(tail_cone(r).polyhedron()))
      if (lin(pieces, w) != 0) return false;
  }
  return true;
}

DualizedDivpoly dualize_divpoly(const DivisorialPolyhedron& dp, const PointOnLine& p) {
  const Polyhedron& box = dp.box;
  const std::size_t n = box.ambient_rank();
  if (box.is_empty()) throw EmptyOperandError("dualize_divpoly: EMPTY box");
  if (!box.is_pointed()) throw ValidityError("dualize_divpoly: box must be pointed");
  std::vector<AffinePiece> pieces = pieces_at(dp, p);
  if (pieces.empty()) pieces.push_back({zero_vector(n), 0});
  for (const auto& piece : pieces)
    if (piece.slope.size() != n) throw DimensionError("dualize_divpoly: affine piece of wrong rank");

  std::vector<Polyhedron> rs = regions(box, pieces);
  std::vector<Vector> X;
  for (const auto& r : rs)
    for (const auto& x : r.vertices()) X.push_back(x);
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());

  // box* = {v : <v,w> >= Lin(w) for w in tail(box)}, tested on the generators of the
  // linearity cones of Lin.
  const Polyhedron tail = tail_cone(box).polyhedron();
  std::vector<Constraint> star;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    auto ineq = tail.inequalities();
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (i != j) ineq.push_back({pieces[i].slope - pieces[j].slope, 0});
    Polyhedron K = Polyhedron::from_constraints(n, ineq, tail.equations());
    for (const auto& w : generators_of(K)) star.push_back({w, dot(pieces[j].slope, w)});
  }
  Polyhedron box_star = Polyhedron::from_constraints(n, star);
  if (box_star.is_empty()) throw InconsistencyError("dualize_divpoly: box* is EMPTY");

  for (std::size_t j = 0; j < rs.size(); ++j) {
    if (rs[j].is_empty()) continue;
    for (const auto& r : generators_of(tail_cone(rs[j]).polyhedron())) {
      bool bounded = true;
      for (const auto& v : box_star.vertices()) bounded = bounded && dot(v - pieces[j].slope, r) >= 0;
      for (const auto& g : box_star.rays()) bounded = bounded && dot(g, r) >= 0;
      for (const auto& g : box_star.lines()) bounded = bounded && dot(g, r) == 0;
      if (!bounded) throw InconsistencyError("dualize_divpoly: L* is unbounded below on box*");
    }
  }

  std::vector<Polyhedron> cells;
  for (const auto& x : X) {
    const Rational lx = evaluate_L(pieces, x);
    auto ineq = box_star.inequalities();
    for (const auto& y : X)
      if (!(y == x)) ineq.push_back({y - x, evaluate_L(pieces, y) - lx});
    Polyhedron cell = Polyhedron::from_constraints(n, ineq, box_star.equations());
    if (!cell.is_empty() && cell.dimension() == box_star.dimension()) cells.push_back(std::move(cell));
  }
  return DualizedDivpoly{box_star, PolyhedralComplex(n, cells), X};
}

DivisorialFan divpoly_to_divfan(const DivisorialPolyhedron& dp) {
  std::vector<PointOnLine> K;
  for (const auto& [p, _] : dp.L)
    if (!is_identically_zero(dp, p)) K.push_back(p);
  if (K.empty()) throw ValidityError("divpoly_to_divfan: L is identically zero, no nontrivial data");
  const std::size_t n = dp.box.ambient_rank();
  std::vector<PolyhedralDivisor> gens;
  for (const auto& p : K) {
    auto dual = dualize_divpoly(dp, p);
    for (const auto& cell : dual.subdivision.cells()) {
      std::map<PointOnLine, Polyhedron> coefficients;
      for (const auto& q : K) coefficients.emplace(q, q == p ? cell : Polyhedron::empty(n));
      gens.emplace_back(tail_cone(cell), std::move(coefficients));
    }
  }
  return DivisorialFan(std::move(gens));
}

}  // namespace tvchow
