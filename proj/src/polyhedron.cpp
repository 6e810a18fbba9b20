#include "tvchow/polyhedron.hpp"

#include <algorithm>

#include "double_description.hpp"
#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"
#include "tvchow/linalg.hpp"

namespace tvchow {

namespace {

using detail::IntVec;

void check_rank(std::size_t rank, const std::vector<Vector>& vs, const char* what) {
  for (const auto& v : vs)
    if (v.size() != rank) throw DimensionError(std::string("polyhedron: ") + what + " of wrong rank");
}

Vector tail_of(const IntVec& v) {
  Vector r;
  for (std::size_t i = 1; i < v.size(); ++i) r.emplace_back(v[i]);
  return r;
}

struct HRep {
  std::vector<Constraint> inequalities;
  std::vector<Constraint> equations;
};

HRep h_from_v(std::size_t rank, const std::vector<Vector>& vertices, const std::vector<Vector>& rays,
              const std::vector<Vector>& lines) {
  std::vector<IntVec> gens;
  for (const auto& v : vertices) gens.push_back(detail::integer_direction(concat(Vector{1}, v)));
  for (const auto& r : rays) gens.push_back(detail::integer_direction(concat(Vector{0}, r)));
  for (const auto& l : lines) {
    gens.push_back(detail::integer_direction(concat(Vector{0}, l)));
    gens.push_back(detail::integer_direction(concat(Vector{0}, -l)));
  }
  auto dual = detail::cone_from_inequalities(gens, rank + 1);
  HRep h;
  for (const auto& y : dual.rays) {
    Vector a = tail_of(y);
    if (is_zero(a)) continue;
    h.inequalities.push_back({std::move(a), Rational(-y[0])});
  }
  for (const auto& y : dual.lines) {
    Vector a = tail_of(y);
    if (is_zero(a)) throw InconsistencyError("polyhedron: degenerate equation");
    h.equations.push_back({std::move(a), Rational(-y[0])});
  }
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const Constraint& x, const Constraint& y) {
              return std::tie(x.normal, x.rhs) < std::tie(y.normal, y.rhs);
            });
  return h;
}

struct VRep {
  bool empty = true;
  std::vector<Vector> vertices, rays, lines;
};

VRep v_from_h(std::size_t rank, const std::vector<Constraint>& inequalities,
              const std::vector<Constraint>& equations) {
  std::vector<IntVec> rows;
  IntVec far(rank + 1, 0);
  far[0] = 1;
  rows.push_back(far);
  auto homogenize = [](const Constraint& c, bool negate) {
    Vector row = concat(Vector{-c.rhs}, c.normal);
    if (negate) row = -row;
    if (is_zero(row)) return IntVec(row.size(), 0);
    return detail::integer_direction(row);
  };
  for (const auto& c : inequalities) rows.push_back(homogenize(c, false));
  for (const auto& c : equations) {
    rows.push_back(homogenize(c, false));
    rows.push_back(homogenize(c, true));
  }
  auto cone = detail::cone_from_inequalities(rows, rank + 1);
  VRep out;
  for (const auto& g : cone.rays) {
    if (g[0] > 0) {
      Vector x = tail_of(g);
      Rational s(1, 1);
      s /= Rational(g[0]);
      out.vertices.push_back(s * x);
      out.empty = false;
    } else {
      out.rays.push_back(tail_of(g));
    }
  }
  for (const auto& g : cone.lines) out.lines.push_back(tail_of(g));
  return out;
}

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

int affine_dimension(const std::vector<Vector>& vertices, const std::vector<Vector>& rays,
                     const std::vector<Vector>& lines) {
  Matrix dirs;
  for (std::size_t i = 1; i < vertices.size(); ++i) dirs.push_back(vertices[i] - vertices[0]);
  for (const auto& r : rays) dirs.push_back(r);
  for (const auto& l : lines) dirs.push_back(l);
  return static_cast<int>(rank(dirs));
}

}  // namespace

Polyhedron Polyhedron::empty(std::size_t rank) { return Polyhedron(rank); }

Polyhedron Polyhedron::point(Vector v) {
  std::size_t n = v.size();
  return from_irredundant(n, {std::move(v)}, {}, {});
}

Polyhedron Polyhedron::whole_space(std::size_t rank) {
  std::vector<Vector> lines;
  for (std::size_t i = 0; i < rank; ++i) lines.push_back(unit_vector(rank, i));
  return from_irredundant(rank, {zero_vector(rank)}, {}, std::move(lines));
}

Polyhedron Polyhedron::from_generators(std::size_t rank, std::vector<Vector> vertices,
                                       std::vector<Vector> rays, std::vector<Vector> lines) {
  check_rank(rank, vertices, "vertex");
  check_rank(rank, rays, "ray");
  check_rank(rank, lines, "line");
  if (vertices.empty()) return empty(rank);
  auto h = h_from_v(rank, vertices, rays, lines);
  auto v = v_from_h(rank, h.inequalities, h.equations);
  if (v.empty) throw InconsistencyError("polyhedron: generator round trip lost all vertices");
  return from_irredundant(rank, std::move(v.vertices), std::move(v.rays), std::move(v.lines));
}

Polyhedron Polyhedron::from_constraints(std::size_t rank, std::vector<Constraint> inequalities,
                                        std::vector<Constraint> equations) {
  for (const auto& c : inequalities)
    if (c.normal.size() != rank) throw DimensionError("polyhedron: constraint of wrong rank");
  for (const auto& c : equations)
    if (c.normal.size() != rank) throw DimensionError("polyhedron: constraint of wrong rank");
  auto v = v_from_h(rank, inequalities, equations);
  if (v.empty) return empty(rank);
  return from_irredundant(rank, std::move(v.vertices), std::move(v.rays), std::move(v.lines));
}

Polyhedron Polyhedron::from_irredundant(std::size_t rank, std::vector<Vector> vertices,
                                        std::vector<Vector> rays, std::vector<Vector> lines) {
  Polyhedron p(rank);
  p.empty_ = false;
  Matrix basis = row_reduce(std::move(lines));
  for (auto& l : basis) l = primitive(l);
  for (auto& v : vertices) v = project_out(v, basis);
  std::vector<Vector> prays;
  for (auto& r : rays) {
    Vector q = project_out(r, basis);
    if (!is_zero(q)) prays.push_back(primitive(q));
  }
  sort_unique(vertices);
  sort_unique(prays);
  std::sort(basis.begin(), basis.end());
  p.vertices_ = std::move(vertices);
  p.rays_ = std::move(prays);
  p.lines_ = std::move(basis);
  p.dim_ = affine_dimension(p.vertices_, p.rays_, p.lines_);
  auto h = h_from_v(rank, p.vertices_, p.rays_, p.lines_);
  p.inequalities_ = std::move(h.inequalities);
  p.equations_ = std::move(h.equations);
  return p;
}

bool Polyhedron::is_cone() const {
  return !empty_ && vertices_.size() == 1 && is_zero(vertices_.front());
}

bool Polyhedron::contains(const Vector& x) const {
  if (x.size() != rank_) throw DimensionError("contains: point of wrong rank");
  if (empty_) return false;
  for (const auto& c : equations_)
    if (dot(c.normal, x) != c.rhs) return false;
  for (const auto& c : inequalities_)
    if (dot(c.normal, x) < c.rhs) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.rank_ != rank_) throw DimensionError("contains: polyhedron of wrong rank");
  if (other.empty_) return true;
  if (empty_) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : other.rays_) {
    for (const auto& c : equations_)
      if (dot(c.normal, r) != 0) return false;
    for (const auto& c : inequalities_)
      if (dot(c.normal, r) < 0) return false;
  }
  for (const auto& l : other.lines_) {
    for (const auto& c : equations_)
      if (dot(c.normal, l) != 0) return false;
    for (const auto& c : inequalities_)
      if (dot(c.normal, l) != 0) return false;
  }
  return true;
}

Vector Polyhedron::relative_interior_point() const {
  if (empty_) throw EmptyOperandError("relative interior of EMPTY");
  Vector x = zero_vector(rank_);
  for (const auto& v : vertices_) x = x + v;
  x = Rational(1, static_cast<unsigned long>(vertices_.size())) * x;
  for (const auto& r : rays_) x = x + r;
  return x;
}

bool Polyhedron::operator==(const Polyhedron& other) const {
  return rank_ == other.rank_ && empty_ == other.empty_ && vertices_ == other.vertices_ &&
         rays_ == other.rays_ && lines_ == other.lines_;
}

bool Polyhedron::operator<(const Polyhedron& other) const {
  return std::tie(rank_, empty_, dim_, vertices_, rays_, lines_) <
         std::tie(other.rank_, other.empty_, other.dim_, other.vertices_, other.rays_, other.lines_);
}

Cone::Cone(Polyhedron p) : p_(std::move(p)) {
  if (!p_.is_cone()) throw ValidityError("cone: polyhedron is not a cone");
}

Cone::Cone(std::size_t rank, const std::vector<Vector>& generators)
    : p_(Polyhedron::from_generators(rank, {zero_vector(rank)}, generators)) {}

Cone Cone::zero(std::size_t rank) { return Cone(Polyhedron::point(zero_vector(rank))); }

std::vector<Vector> Cone::generators() const {
  std::vector<Vector> g = rays();
  for (const auto& l : lines()) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("minkowski_sum: rank mismatch");
  if (a.is_empty() || b.is_empty()) throw EmptyOperandError("minkowski_sum: EMPTY operand");
  std::vector<Vector> vertices;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) vertices.push_back(x + y);
  std::vector<Vector> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  std::vector<Vector> lines = a.lines();
  lines.insert(lines.end(), b.lines().begin(), b.lines().end());
  return Polyhedron::from_generators(a.ambient_rank(), std::move(vertices), std::move(rays),
                                     std::move(lines));
}

Cone tail_cone(const Polyhedron& p) {
  if (p.is_empty()) throw EmptyOperandError("tail_cone: EMPTY operand");
  const std::size_t n = p.ambient_rank();
  Cone tail(Polyhedron::from_generators(n, {zero_vector(n)}, p.rays(), p.lines()));
  for (const auto& g : tail.generators())
    for (const auto& v : p.vertices())
      if (!p.contains(v + g)) throw InconsistencyError("tail_cone: ray does not recede");
  return tail;
}

Polyhedron product(const Polyhedron& a, const Polyhedron& b) {
  const std::size_t n = a.ambient_rank() + b.ambient_rank();
  if (a.is_empty() || b.is_empty()) return Polyhedron::empty(n);
  const Vector za = zero_vector(a.ambient_rank());
  const Vector zb = zero_vector(b.ambient_rank());
  std::vector<Vector> vertices, rays, lines;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) vertices.push_back(concat(x, y));
  for (const auto& r : a.rays()) rays.push_back(concat(r, zb));
  for (const auto& r : b.rays()) rays.push_back(concat(za, r));
  for (const auto& l : a.lines()) lines.push_back(concat(l, zb));
  for (const auto& l : b.lines()) lines.push_back(concat(za, l));
  return Polyhedron::from_generators(n, std::move(vertices), std::move(rays), std::move(lines));
}

Cone product(const Cone& a, const Cone& b) { return Cone(product(a.polyhedron(), b.polyhedron())); }

Polyhedron linear_image(const LatticeMap& m, const Polyhedron& p) {
  if (m.source_rank() != p.ambient_rank()) throw DimensionError("linear_image: rank mismatch");
  if (p.is_empty()) return Polyhedron::empty(m.target_rank());
  std::vector<Vector> vertices, rays, lines;
  for (const auto& v : p.vertices()) vertices.push_back(m.apply(v));
  for (const auto& r : p.rays()) {
    Vector x = m.apply(r);
    if (!is_zero(x)) rays.push_back(std::move(x));
  }
  for (const auto& l : p.lines()) {
    Vector x = m.apply(l);
    if (!is_zero(x)) lines.push_back(std::move(x));
  }
  return Polyhedron::from_generators(m.target_rank(), std::move(vertices), std::move(rays),
                                     std::move(lines));
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("intersect: rank mismatch");
  if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_rank());
  std::vector<Constraint> ineq = a.inequalities();
  ineq.insert(ineq.end(), b.inequalities().begin(), b.inequalities().end());
  std::vector<Constraint> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Polyhedron::from_constraints(a.ambient_rank(), std::move(ineq), std::move(eq));
}

std::optional<Rational> min_pairing(const Vector& u, const Polyhedron& p) {
  if (u.size() != p.ambient_rank()) throw DimensionError("min_pairing: rank mismatch");
  if (p.is_empty()) throw EvaluationError("min_pairing: undefined on EMPTY");
  for (const auto& l : p.lines())
    if (dot(u, l) != 0) return std::nullopt;
  for (const auto& r : p.rays())
    if (dot(u, r) < 0) return std::nullopt;
  Rational best = dot(u, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::min(best, dot(u, v));
  return best;
}

bool injective_on(const LatticeMap& m, const Polyhedron& p) {
  if (p.is_empty()) return true;
  Matrix dirs, images;
  const auto& vs = p.vertices();
  auto add = [&](const Vector& d) {
    dirs.push_back(d);
    images.push_back(m.apply(d));
  };
  for (std::size_t i = 1; i < vs.size(); ++i) add(vs[i] - vs[0]);
  for (const auto& r : p.rays()) add(r);
  for (const auto& l : p.lines()) add(l);
  return rank(dirs) == rank(images);
}

FaceBijectionCertificate certify_face_bijection(const LatticeMap& m, const Polyhedron& source,
                                                const Polyhedron& image) {
  FaceBijectionCertificate c;
  c.injective = injective_on(m, source);
  c.dimension_preserved = source.dimension() == image.dimension();
  if (c.injective && c.dimension_preserved && !source.is_empty())
    c.face_counts_agree = faces(source).f_vector() == faces(image).f_vector();
  else
    c.face_counts_agree = source.is_empty() && image.is_empty();
  return c;
}

}  // namespace tvchow
