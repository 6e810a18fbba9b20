#include "tvchow/divisorial.hpp"

#include <algorithm>

#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"

namespace tvchow {

namespace {

bool is_face(const Polyhedron& f, const Polyhedron& p) {
  if (f.is_empty() || p.is_empty() || !p.contains(f)) return false;
  const FaceLattice lattice(p);
  for (const auto& face : lattice.faces())
    if (face.face == f) return true;
  return false;
}

Polyhedron dual_cone(const Cone& sigma) {
  std::vector<Constraint> ineq, eq;
  const std::size_t n = sigma.ambient_rank();
  for (const auto& r : sigma.rays()) ineq.push_back({r, 0});
  for (const auto& l : sigma.lines()) eq.push_back({l, 0});
  return Polyhedron::from_constraints(n, ineq, eq);
}

bool in_relative_interior(const Polyhedron& p, const Vector& x) {
  if (!p.contains(x)) return false;
  for (const auto& c : p.inequalities())
    if (dot(c.normal, x) == c.rhs) return false;
  return true;
}

}  // namespace

std::string PointOnLine::to_string() const { return infinite_ ? "inf" : tvchow::to_string(value_); }

bool PointOnLine::operator<(const PointOnLine& o) const {
  if (infinite_ != o.infinite_) return !infinite_;
  return value_ < o.value_;
}

PointOnLine parse_point(const std::string& text) {
  if (text == "inf" || text == "infinity") return PointOnLine::infinity();
  return PointOnLine::finite(parse_rational(text));
}

PolyhedralDivisor::PolyhedralDivisor(Cone tail, std::map<PointOnLine, Polyhedron> coefficients)
    : tail_(std::move(tail)) {
  for (auto& [p, delta] : coefficients) {
    if (delta.ambient_rank() != tail_.ambient_rank())
      throw DimensionError("polyhedral divisor: coefficient at " + p.to_string() + " has wrong rank");
    if (!delta.is_empty()) {
      if (!(tail_cone(delta) == tail_))
        throw ValidityError("polyhedral divisor: coefficient at " + p.to_string() + " has the wrong tail cone");
      if (delta == tail_.polyhedron()) continue;
    }
    coefficients_.emplace(p, std::move(delta));
  }
}

Polyhedron PolyhedralDivisor::coefficient(const PointOnLine& p) const {
  auto it = coefficients_.find(p);
  return it == coefficients_.end() ? tail_.polyhedron() : it->second;
}

std::vector<PointOnLine> PolyhedralDivisor::empty_points() const {
  std::vector<PointOnLine> out;
  for (const auto& [p, delta] : coefficients_)
    if (delta.is_empty()) out.push_back(p);
  return out;
}

bool PolyhedralDivisor::operator<(const PolyhedralDivisor& o) const {
  return std::tie(tail_, coefficients_) < std::tie(o.tail_, o.coefficients_);
}

PolyhedralDivisor intersect(const PolyhedralDivisor& a, const PolyhedralDivisor& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("divisor intersection: rank mismatch");
  Cone tail(intersect(a.tail().polyhedron(), b.tail().polyhedron()));
  std::map<PointOnLine, Polyhedron> coefficients;
  for (const auto* d : {&a, &b})
    for (const auto& [p, _] : d->coefficients())
      if (!coefficients.count(p)) coefficients.emplace(p, intersect(a.coefficient(p), b.coefficient(p)));
  return PolyhedralDivisor(std::move(tail), std::move(coefficients));
}

bool is_face_of(const PolyhedralDivisor& small, const PolyhedralDivisor& big) {
  if (!is_face(small.tail().polyhedron(), big.tail().polyhedron())) return false;
  for (const auto* d : {&small, &big}) {
    for (const auto& [p, _] : d->coefficients()) {
      Polyhedron s = small.coefficient(p);
      if (s.is_empty()) continue;
      if (!is_face(s, big.coefficient(p))) return false;
    }
  }
  return true;
}

PolyhedralDivisor linear_image(const LatticeMap& m, const PolyhedralDivisor& D) {
  std::map<PointOnLine, Polyhedron> coefficients;
  for (const auto& [p, delta] : D.coefficients()) coefficients.emplace(p, linear_image(m, delta));
  return PolyhedralDivisor(Cone(linear_image(m, D.tail().polyhedron())), std::move(coefficients));
}

QDivisorOnLine evaluate(const PolyhedralDivisor& D, const Vector& u) {
  if (!min_pairing(u, D.tail().polyhedron()))
    throw EvaluationError("evaluate: u = " + to_string(u) + " pairs to minus infinity at generic points");
  QDivisorOnLine out;
  for (const auto& [p, delta] : D.coefficients()) {
    if (delta.is_empty()) continue;
    auto m = min_pairing(u, delta);
    if (!m) throw EvaluationError("evaluate: minus infinity at point " + p.to_string());
    if (*m != 0) out.emplace(p, *m);
  }
  return out;
}

Rational total_degree(const QDivisorOnLine& q) {
  Rational s = 0;
  for (const auto& [_, c] : q) s += c;
  return s;
}

Polyhedron degree(const PolyhedralDivisor& D) {
  if (D.has_empty_coefficient())
    throw EmptyOperandError("degree: undefined across the EMPTY coefficient at " + D.empty_points().front().to_string());
  Polyhedron deg = D.tail().polyhedron();
  for (const auto& [_, delta] : D.coefficients()) deg = minkowski_sum(deg, delta);
  return deg;
}

ValidationReport validate_pp(const PolyhedralDivisor& D) {
  ValidationReport report;
  const std::size_t n = D.ambient_rank();
  if (!D.tail().lines().empty()) report.warn("tail cone is not pointed");
  if (D.has_empty_coefficient()) {
    report.note("affine locus (EMPTY coefficient at " + D.empty_points().front().to_string() +
                "); semiample and big hold on an affine curve");
    return report;
  }
  const Polyhedron deg = degree(D);
  const Polyhedron dual = dual_cone(D.tail());
  bool semiample = true;
  std::vector<std::pair<Vector, std::pair<std::vector<Constraint>, std::vector<Constraint>>>> domains;
  for (const auto& v : deg.vertices()) {
    std::vector<Constraint> ineq, eq;
    for (const auto& w : deg.vertices())
      if (!(w == v)) ineq.push_back({w - v, 0});
    for (const auto& r : deg.rays()) ineq.push_back({r, 0});
    for (const auto& l : deg.lines()) eq.push_back({l, 0});
    Polyhedron domain = Polyhedron::from_constraints(n, ineq, eq);
    Cone cone(domain);
    for (const auto& g : cone.generators()) {
      Rational h = dot(g, v);
      report.note("u = " + to_string(g) + ": deg D(u) = " + to_string(h));
      if (h < 0) {
        semiample = false;
        report.fail("not semiample: deg D(u) = " + to_string(h) + " < 0 at u = " + to_string(g));
      }
    }
    if (domain.dimension() == static_cast<int>(n)) domains.push_back({v, {ineq, eq}});
  }
  if (!semiample) return report;
  for (auto& [v, cons] : domains) {
    auto eq = cons.second;
    eq.push_back({v, 0});
    Polyhedron zero_face = Polyhedron::from_constraints(n, cons.first, eq);
    Vector u = zero_face.relative_interior_point();
    if (in_relative_interior(dual, u))
      report.fail("not big: deg D(u) = 0 at the interior point u = " + to_string(u));
  }
  return report;
}

DivisorialFan::DivisorialFan(std::vector<PolyhedralDivisor> generators) {
  if (generators.empty()) throw ValidityError("divisorial fan: no members");
  rank_ = generators.front().ambient_rank();
  std::set<PolyhedralDivisor> all;
  std::vector<PolyhedralDivisor> queue;
  for (auto& g : generators) {
    if (g.ambient_rank() != rank_) throw DimensionError("divisorial fan: member of wrong rank");
    if (all.insert(g).second) queue.push_back(std::move(g));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t other = 0; other < head; ++other) {
      PolyhedralDivisor x = intersect(queue[head], queue[other]);
      if (all.insert(x).second) queue.push_back(std::move(x));
    }
  }
  members_.assign(all.begin(), all.end());
}

std::set<PointOnLine> DivisorialFan::special_points() const {
  std::set<PointOnLine> out;
  for (const auto& m : members_)
    for (const auto& [p, _] : m.coefficients()) out.insert(p);
  return out;
}

ValidationReport DivisorialFan::validate() const {
  ValidationReport report;
  std::set<PolyhedralDivisor> all(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    report.merge(validate_pp(members_[i]), "member " + std::to_string(i) + ": ");
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      PolyhedralDivisor x = intersect(members_[i], members_[j]);
      const std::string tag = "members " + std::to_string(i) + " and " + std::to_string(j);
      if (!all.count(x)) report.fail(tag + ": intersection missing from the fan");
      if (!is_face_of(x, members_[i]) || !is_face_of(x, members_[j]))
        report.fail(tag + ": intersection is not a face of both");
    }
  }
  report.notes.clear();
  return report;
}

PolyhedralComplex slice(const DivisorialFan& S, const PointOnLine& p) {
  std::vector<Polyhedron> cells;
  for (const auto& m : S.members()) {
    Polyhedron c = m.coefficient(p);
    if (!c.is_empty()) cells.push_back(std::move(c));
  }
  PolyhedralComplex complex(S.ambient_rank(), cells);
  if (!complex.validate().ok()) throw ValidityError("slice at " + p.to_string() + ": cells overlap");
  return complex;
}

bool is_contraction_free(const DivisorialFan& S) {
  return std::all_of(S.members().begin(), S.members().end(),
                     [](const PolyhedralDivisor& m) { return m.has_empty_coefficient(); });
}

MarkedFansyDivisor::MarkedFansyDivisor(Fan tail, std::map<PointOnLine, PolyhedralComplex> slices_,
                                       std::vector<Cone> marked_, std::set<PointOnLine> special)
    : rank(tail.ambient_rank()),
      tail_fan(std::move(tail)),
      slices(std::move(slices_)),
      marked(std::move(marked_)),
      special_points(std::move(special)) {
  for (const auto& [p, s] : slices) {
    if (s.ambient_rank() != rank) throw DimensionError("fansy divisor: slice at " + p.to_string() + " has wrong rank");
    special_points.insert(p);
  }
  for (const auto& c : marked)
    if (c.ambient_rank() != rank) throw DimensionError("fansy divisor: marked cone of wrong rank");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
}

PolyhedralComplex MarkedFansyDivisor::slice(const PointOnLine& p) const {
  auto it = slices.find(p);
  if (it != slices.end()) return it->second;
  return tail_fan.as_complex();
}

bool MarkedFansyDivisor::is_marked(const Cone& c) const {
  return std::binary_search(marked.begin(), marked.end(), c);
}

PolyhedralDivisor MarkedFansyDivisor::divisor_of(const Cone& sigma) const {
  std::map<PointOnLine, Polyhedron> coefficients;
  for (const auto& p : special_points) {
    std::vector<Polyhedron> hits;
    const PolyhedralComplex s = slice(p);
    for (const auto& cell : s.cells())
      if (tail_cone(cell) == sigma) hits.push_back(cell);
    if (hits.size() != 1)
      throw ValidityError("fansy divisor: slice at " + p.to_string() + " has " + std::to_string(hits.size()) +
                          " cells with tail " + to_string(sigma.relative_interior_point()));
    coefficients.emplace(p, hits.front());
  }
  return PolyhedralDivisor(sigma, std::move(coefficients));
}

bool MarkedFansyDivisor::operator==(const MarkedFansyDivisor& o) const {
  return rank == o.rank && tail_fan == o.tail_fan && slices == o.slices && marked == o.marked &&
         special_points == o.special_points;
}

ValidationReport validate_marked_fansy(const MarkedFansyDivisor& X) {
  ValidationReport report;
  const auto& tail = X.tail_fan.as_complex();
  if (!is_complete(tail).complete()) report.fail("tail fan is not complete");
  for (const auto& p : X.special_points) {
    const std::string at = "slice at " + p.to_string();
    PolyhedralComplex s = X.slice(p);
    if (!s.validate().ok()) report.fail(at + ": cells overlap");
    auto cert = is_complete(s);
    if (!cert.complete())
      report.fail(at + ": not complete" + (cert.uncovered ? ", uncovered point " + to_string(*cert.uncovered) : ""));
    try {
      if (!(s.tail_fan() == X.tail_fan)) report.fail(at + ": tail cones differ from the tail fan");
    } catch (const ValidityError& e) {
      report.fail(at + ": " + e.what());
    }
  }

  bool downward_differs = false;
  for (const auto& tau : X.marked) {
    auto ti = tail.index_of(tau.polyhedron());
    if (!ti) {
      report.fail("marked cone " + to_string(tau.relative_interior_point()) + " is not in the tail fan");
      continue;
    }
    for (std::size_t s = 0; s < tail.cells().size(); ++s) {
      const auto& fs = tail.faces_of(s);
      if (!std::binary_search(fs.begin(), fs.end(), *ti)) continue;
      Cone sigma(tail.cells()[s]);
      if (!X.is_marked(sigma))
        report.fail("marked set not closed: " + to_string(tau.relative_interior_point()) + " is marked but the cone through " +
                    to_string(sigma.relative_interior_point()) + " is not");
    }
    for (std::size_t f : tail.faces_of(*ti))
      if (!X.is_marked(Cone(tail.cells()[f]))) downward_differs = true;
  }
  if (downward_differs) report.warn("marked set is not closed under taking faces; the inverse closure rule would differ");

  for (const auto& sigma : X.marked) {
    if (sigma.dimension() != static_cast<int>(X.rank)) continue;
    const std::string tag = "marked cone through " + to_string(sigma.relative_interior_point()) + ": ";
    try {
      PolyhedralDivisor D = X.divisor_of(sigma);
      report.merge(validate_pp(D), tag);
      Polyhedron deg = degree(D);
      auto si = tail.index_of(sigma.polyhedron());
      if (!si) continue;
      for (std::size_t f : tail.faces_of(*si)) {
        Cone tau(tail.cells()[f]);
        bool meets = !intersect(deg, tau.polyhedron()).is_empty();
        if (meets != X.is_marked(tau))
          report.fail(tag + "face through " + to_string(tau.relative_interior_point()) +
                      (meets ? " meets deg D but is not marked" : " is marked but misses deg D"));
      }
    } catch (const Error& e) {
      report.fail(tag + e.what());
    }
  }
  report.notes.clear();
  return report;
}

std::vector<PolyhedralDivisor> fansy_generators(const MarkedFansyDivisor& X) {
  std::vector<PolyhedralDivisor> gens;
  for (const auto& p : X.special_points) {
    const PolyhedralComplex s = X.slice(p);
    for (std::size_t i : s.maximal_cells()) {
      Cone tail = tail_cone(s.cells()[i]);
      if (X.is_marked(tail)) continue;
      std::map<PointOnLine, Polyhedron> coefficients;
      for (const auto& q : X.special_points)
        coefficients.emplace(q, q == p ? s.cells()[i] : Polyhedron::empty(X.rank));
      gens.emplace_back(tail, std::move(coefficients));
    }
  }
  for (const auto& sigma : X.marked)
    if (sigma.dimension() == static_cast<int>(X.rank)) gens.push_back(X.divisor_of(sigma));
  return gens;
}

DivisorialFan to_divisorial_fan(const MarkedFansyDivisor& X) { return DivisorialFan(fansy_generators(X)); }

}  // namespace tvchow
