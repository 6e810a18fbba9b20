#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tvchow/complex.hpp"
#include "tvchow/report.hpp"

namespace tvchow {

/// A point of P^1: a finite rational coordinate or infinity. Finite points sort first.
class PointOnLine {
 public:
  static PointOnLine finite(Rational t) { return PointOnLine(false, std::move(t)); }
  static PointOnLine infinity() { return PointOnLine(true, Rational(0)); }

  bool is_infinity() const { return infinite_; }
  const Rational& value() const { return value_; }
  std::string to_string() const;

  bool operator==(const PointOnLine& o) const { return infinite_ == o.infinite_ && value_ == o.value_; }
  bool operator<(const PointOnLine& o) const;

 private:
  PointOnLine(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) { value_.canonicalize(); }
  bool infinite_;
  Rational value_;
};

/// "0", "inf", "3/2", ...
PointOnLine parse_point(const std::string& text);

using QDivisorOnLine = std::map<PointOnLine, Rational>;

/// sum Delta_p (x) p over P^1. Coefficients equal to the tail are not stored;
/// EMPTY coefficients are stored as EMPTY polyhedra.
class PolyhedralDivisor {
 public:
  PolyhedralDivisor(Cone tail, std::map<PointOnLine, Polyhedron> coefficients);

  const Cone& tail() const { return tail_; }
  std::size_t ambient_rank() const { return tail_.ambient_rank(); }
  const std::map<PointOnLine, Polyhedron>& coefficients() const { return coefficients_; }
  Polyhedron coefficient(const PointOnLine& p) const;
  std::vector<PointOnLine> empty_points() const;
  bool has_empty_coefficient() const { return !empty_points().empty(); }

  bool operator==(const PolyhedralDivisor& o) const {
    return tail_ == o.tail_ && coefficients_ == o.coefficients_;
  }
  bool operator<(const PolyhedralDivisor& o) const;

 private:
  Cone tail_;
  std::map<PointOnLine, Polyhedron> coefficients_;
};

/// Coefficient-wise intersection.
PolyhedralDivisor intersect(const PolyhedralDivisor& a, const PolyhedralDivisor& b);
/// Coefficient-wise face containment: every coefficient of small is EMPTY or a face of big's.
bool is_face_of(const PolyhedralDivisor& small, const PolyhedralDivisor& big);
/// Coefficient-wise linear image; EMPTY stays EMPTY.
PolyhedralDivisor linear_image(const LatticeMap& m, const PolyhedralDivisor& D);

/// Points of EMPTY coefficients are skipped (outside the locus).
QDivisorOnLine evaluate(const PolyhedralDivisor& D, const Vector& u);
Rational total_degree(const QDivisorOnLine& q);
/// Minkowski sum of the coefficients.
Polyhedron degree(const PolyhedralDivisor& D);

/// Semiample and big checks with the P^1 degree criterion on the linearity domains
/// of u -> deg D(u), i.e. the normal cones of deg D.
ValidationReport validate_pp(const PolyhedralDivisor& D);

/// Finite, intersection-closed set of polyhedral divisors on P^1.
class DivisorialFan {
 public:
  explicit DivisorialFan(std::vector<PolyhedralDivisor> generators);

  const std::vector<PolyhedralDivisor>& members() const { return members_; }
  std::size_t ambient_rank() const { return rank_; }
  std::set<PointOnLine> special_points() const;

  /// Intersections present and coefficient-wise faces of both members.
  ValidationReport validate() const;

 private:
  std::size_t rank_;
  std::vector<PolyhedralDivisor> members_;
};

/// {Delta_p(D) : D in S} closed under faces; ValidityError when the cells overlap.
PolyhedralComplex slice(const DivisorialFan& S, const PointOnLine& p);
bool is_contraction_free(const DivisorialFan& S);

/// Slices over P^1 with a tail fan and a set of marked (contracted) cones.
struct MarkedFansyDivisor {
  std::size_t rank = 0;
  Fan tail_fan;
  std::map<PointOnLine, PolyhedralComplex> slices;
  std::vector<Cone> marked;  // sorted
  std::set<PointOnLine> special_points;

  MarkedFansyDivisor(Fan tail, std::map<PointOnLine, PolyhedralComplex> slices,
                     std::vector<Cone> marked, std::set<PointOnLine> special_points);

  /// The stored slice, or the tail fan as a complex.
  PolyhedralComplex slice(const PointOnLine& p) const;
  bool is_marked(const Cone& c) const;
  /// D^sigma assembled from the unique cell with tail sigma in each slice.
  PolyhedralDivisor divisor_of(const Cone& sigma) const;

  bool operator==(const MarkedFansyDivisor& o) const;
};

ValidationReport validate_marked_fansy(const MarkedFansyDivisor& X);

/// One generator per maximal slice cell with unmarked tail (EMPTY at the other
/// special points) plus D^sigma for each full-dimensional marked sigma.
std::vector<PolyhedralDivisor> fansy_generators(const MarkedFansyDivisor& X);
/// The intersection closure of fansy_generators(X).
DivisorialFan to_divisorial_fan(const MarkedFansyDivisor& X);

/// min_j (<slope_j, u> + constant_j).
struct AffinePiece {
  Vector slope;
  Rational constant;

  bool operator==(const AffinePiece&) const = default;
};

/// (L, box) with L_P concave piecewise affine, given as a minimum of affine pieces.
struct DivisorialPolyhedron {
  Polyhedron box;
  std::map<PointOnLine, std::vector<AffinePiece>> L;
};

Rational evaluate_L(const std::vector<AffinePiece>& pieces, const Vector& u);
/// Recession slope lim L(u + t w)/t for w in tail(box).
Rational lin(const std::vector<AffinePiece>& pieces, const Vector& w);
bool is_identically_zero(const DivisorialPolyhedron& dp, const PointOnLine& p);

struct DualizedDivpoly {
  Polyhedron box_star;
  PolyhedralComplex subdivision;  // linearity domains of L*_p
  std::vector<Vector> breakpoints;  // vertex set X of the subdivision of box induced by L_p
};

DualizedDivpoly dualize_divpoly(const DivisorialPolyhedron& dp, const PointOnLine& p);
DivisorialFan divpoly_to_divfan(const DivisorialPolyhedron& dp);

}  // namespace tvchow
