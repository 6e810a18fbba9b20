#pragma once

#include <optional>
#include <vector>

#include "tvchow/lattice_map.hpp"
#include "tvchow/rational.hpp"

namespace tvchow {

/// normal . x >= rhs (inequality) or normal . x == rhs (equation).
struct Constraint {
  Vector normal;
  Rational rhs;

  bool operator==(const Constraint&) const = default;
};

/// Exact rational polyhedron conv(vertices) + cone(rays) + span(lines), or EMPTY.
/// The V-representation is canonical: lines in reduced echelon form with primitive rows,
/// vertices and rays projected orthogonally to the lines, rays primitive, both sorted.
/// The H-representation is irredundant and derived at construction.
class Polyhedron {
 public:
  static Polyhedron empty(std::size_t rank);
  static Polyhedron point(Vector v);
  static Polyhedron whole_space(std::size_t rank);
  static Polyhedron from_generators(std::size_t rank, std::vector<Vector> vertices,
                                    std::vector<Vector> rays = {}, std::vector<Vector> lines = {});
  static Polyhedron from_constraints(std::size_t rank, std::vector<Constraint> inequalities,
                                     std::vector<Constraint> equations = {});

  std::size_t ambient_rank() const { return rank_; }
  bool is_empty() const { return empty_; }
  /// -1 for EMPTY.
  int dimension() const { return dim_; }
  bool is_bounded() const { return rays_.empty() && lines_.empty(); }
  bool is_pointed() const { return lines_.empty(); }
  /// Single vertex at the origin.
  bool is_cone() const;

  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Vector>& rays() const { return rays_; }
  const std::vector<Vector>& lines() const { return lines_; }
  const std::vector<Constraint>& inequalities() const { return inequalities_; }
  const std::vector<Constraint>& equations() const { return equations_; }

  bool contains(const Vector& x) const;
  bool contains(const Polyhedron& other) const;
  /// Barycenter of the vertices plus the sum of the rays.
  Vector relative_interior_point() const;

  bool operator==(const Polyhedron& other) const;
  bool operator<(const Polyhedron& other) const;

 private:
  explicit Polyhedron(std::size_t rank) : rank_(rank) {}
  static Polyhedron from_irredundant(std::size_t rank, std::vector<Vector> vertices,
                                     std::vector<Vector> rays, std::vector<Vector> lines);
  friend class FaceLattice;
  friend Polyhedron face_of(const Polyhedron&, const std::vector<std::size_t>&);

  std::size_t rank_;
  bool empty_ = true;
  int dim_ = -1;
  std::vector<Vector> vertices_;
  std::vector<Vector> rays_;
  std::vector<Vector> lines_;
  std::vector<Constraint> inequalities_;
  std::vector<Constraint> equations_;
};

/// A polyhedral cone: a non-EMPTY polyhedron whose only vertex is the origin.
class Cone {
 public:
  explicit Cone(Polyhedron p);
  Cone(std::size_t rank, const std::vector<Vector>& generators);
  static Cone zero(std::size_t rank);

  const Polyhedron& polyhedron() const { return p_; }
  std::size_t ambient_rank() const { return p_.ambient_rank(); }
  int dimension() const { return p_.dimension(); }
  const std::vector<Vector>& rays() const { return p_.rays(); }
  const std::vector<Vector>& lines() const { return p_.lines(); }
  /// Rays followed by both orientations of every line.
  std::vector<Vector> generators() const;
  bool contains(const Vector& x) const { return p_.contains(x); }
  Vector relative_interior_point() const { return p_.relative_interior_point(); }

  bool operator==(const Cone& other) const { return p_ == other.p_; }
  bool operator<(const Cone& other) const { return p_ < other.p_; }

 private:
  Polyhedron p_;
};

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);
Cone tail_cone(const Polyhedron& p);
Polyhedron product(const Polyhedron& a, const Polyhedron& b);
Cone product(const Cone& a, const Cone& b);
Polyhedron linear_image(const LatticeMap& m, const Polyhedron& p);
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
/// nullopt stands for minus infinity.
std::optional<Rational> min_pairing(const Vector& u, const Polyhedron& p);

/// Evidence that m maps the faces of p bijectively onto the faces of m(p).
struct FaceBijectionCertificate {
  bool injective = false;
  bool dimension_preserved = false;
  bool face_counts_agree = false;

  bool holds() const { return injective && dimension_preserved && face_counts_agree; }
};

/// True when m is injective on the affine hull of p.
bool injective_on(const LatticeMap& m, const Polyhedron& p);
FaceBijectionCertificate certify_face_bijection(const LatticeMap& m, const Polyhedron& source,
                                                const Polyhedron& image);

}  // namespace tvchow
