#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"
#include "tvchow/lattice_map.hpp"
#include "tvchow/linalg.hpp"
#include "tvchow/polyhedron.hpp"

using namespace tvchow;
using testing::Q;
using testing::V;

namespace {

Polyhedron interval(long a, long b) { return Polyhedron::from_generators(1, {V({a}), V({b})}); }

Polyhedron unit_square() {
  return Polyhedron::from_generators(2, {V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})});
}

// Andrew's monotone chain; strict turns only, so collinear points are dropped.
std::vector<Vector> hull_2d(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vector& o, const Vector& a, const Vector& b) -> Rational {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  std::sort(h.begin(), h.end());
  return h;
}

Polyhedron random_polyhedron_2d(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 5), coin(0, 2);
  std::vector<Vector> vs;
  for (int i = 0, n = count(rng); i < n; ++i) vs.push_back(testing::random_vector(rng, 2, -3, 3));
  std::vector<Vector> rs;
  int nr = coin(rng);
  for (int i = 0; i < nr; ++i) {
    Vector r = testing::random_vector(rng, 2, 0, 2);
    if (!is_zero(r)) rs.push_back(r);
  }
  return Polyhedron::from_generators(2, vs, rs);
}

}  // namespace

TEST_CASE("minkowski sums") {
  CHECK(minkowski_sum(interval(0, 1), interval(0, 2)) == interval(0, 3));

  auto a = Polyhedron::from_generators(2, {V({0, 0}), V({1, 0})});
  auto b = Polyhedron::from_generators(2, {V({0, 0}), V({0, 1})});
  CHECK(minkowski_sum(a, b) == unit_square());
  CHECK(minkowski_sum(a, b).vertices().size() == 4);

  auto delta = Polyhedron::from_generators(2, {V({0, 0}), V({2, 1})}, {V({1, 0}), V({0, 1})});
  CHECK(minkowski_sum(delta, tail_cone(delta).polyhedron()) == delta);

  CHECK_THROWS_AS(minkowski_sum(interval(0, 1), unit_square()), DimensionError);
  CHECK_THROWS_AS(minkowski_sum(Polyhedron::empty(1), interval(0, 1)), EmptyOperandError);
}

TEST_CASE("vertex pruning agrees with a planar hull oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vector> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(testing::random_vector(rng, 2, -4, 4));
    auto p = Polyhedron::from_generators(2, pts);
    auto expected = hull_2d(pts);
    if (p.dimension() == 2) CHECK(p.vertices() == expected);
    for (const auto& x : pts) CHECK(p.contains(x));
  }
}

TEST_CASE("double description round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<Vector> vs, rs, ls;
    for (int i = 0; i < 5; ++i) vs.push_back(testing::random_vector(rng, n, -3, 3));
    for (int i = 0; i < trial % 3; ++i) rs.push_back(testing::random_vector(rng, n, -1, 2));
    if (trial % 7 == 0) ls.push_back(unit_vector(n, 0));
    rs.erase(std::remove_if(rs.begin(), rs.end(), [](const Vector& r) { return is_zero(r); }),
             rs.end());
    auto p = Polyhedron::from_generators(n, vs, rs, ls);
    auto q = Polyhedron::from_constraints(n, p.inequalities(), p.equations());
    CHECK(p == q);
    CHECK(p.contains(q));
    CHECK(q.contains(p));
    for (const auto& r : p.rays()) CHECK(r == primitive(r));
    for (const auto& c : p.inequalities()) {
      Matrix tight;
      for (const auto& v : p.vertices())
        if (dot(c.normal, v) == c.rhs) tight.push_back(v);
      CHECK(!tight.empty());
    }
  }
}

TEST_CASE("tail cones") {
  auto p = Polyhedron::from_generators(2, {V({0, 0}), V({1, 0})}, {V({0, 1})});
  CHECK(tail_cone(p) == Cone(2, {V({0, 1})}));
  CHECK(tail_cone(unit_square()) == Cone::zero(2));
  CHECK_THROWS_AS(tail_cone(Polyhedron::empty(2)), EmptyOperandError);

  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto a = random_polyhedron_2d(rng);
    auto b = random_polyhedron_2d(rng);
    auto lhs = tail_cone(minkowski_sum(a, b));
    auto rhs = minkowski_sum(tail_cone(a).polyhedron(), tail_cone(b).polyhedron());
    CHECK(lhs.polyhedron() == rhs);
  }
}

TEST_CASE("minkowski monoid laws") {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto a = random_polyhedron_2d(rng), b = random_polyhedron_2d(rng), c = random_polyhedron_2d(rng);
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    CHECK(minkowski_sum(tail_cone(a).polyhedron(), a) == a);
  }
}

TEST_CASE("face lattices") {
  CHECK(faces(unit_square()).f_vector() == FVector({4, 4, 1}));
  Cone theta(3, {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  CHECK(faces(theta.polyhedron()).f_vector() == FVector({1, 3, 3, 1}));

  auto lattice = faces(unit_square());
  for (auto [lo, hi] : lattice.covers()) {
    CHECK(lattice.faces()[hi].dimension == lattice.faces()[lo].dimension + 1);
    CHECK(lattice.faces()[hi].face.contains(lattice.faces()[lo].face));
  }
  CHECK(lattice.covers().size() == 8 + 4);

  auto halfplane = Polyhedron::from_generators(2, {V({0, 0})}, {V({0, 1})}, {V({1, 0})});
  CHECK(faces(halfplane).f_vector() == FVector({0, 1, 1}));
}

TEST_CASE("face lattice of a product is the product of face lattices") {
  auto triangle = Polyhedron::from_generators(2, {V({0, 0}), V({2, 0}), V({0, 1})});
  Cone sigma(2, {V({1, 0}), V({1, 3})});
  auto prod = product(triangle, sigma.polyhedron());
  auto lp = faces(prod);
  auto la = faces(triangle), lb = faces(sigma.polyhedron());
  CHECK(lp.f_vector() == la.f_vector().convolve(lb.f_vector()));
  CHECK(lp.f_vector() == FVector({3, 9, 10, 5, 1}));

  std::vector<Polyhedron> expected;
  for (const auto& f : la.faces())
    for (const auto& g : lb.faces()) expected.push_back(product(f.face, g.face));
  std::sort(expected.begin(), expected.end());
  std::vector<Polyhedron> actual;
  for (const auto& f : lp.faces()) actual.push_back(f.face);
  std::sort(actual.begin(), actual.end());
  CHECK(actual == expected);
}

TEST_CASE("products") {
  CHECK(product(interval(0, 1), interval(0, 1)) == unit_square());
  auto delta = interval(2, 5);
  auto p = product(delta, Cone::zero(0).polyhedron());
  CHECK(p == delta);
  CHECK(product(Polyhedron::empty(1), delta).is_empty());
  CHECK(product(Polyhedron::empty(1), delta).ambient_rank() == 2);
}

TEST_CASE("linear images") {
  auto sq = unit_square();
  CHECK(linear_image(LatticeMap::identity(2), sq) == sq);
  LatticeMap first(2, 1, {{1, 0}});
  CHECK(linear_image(first, sq) == interval(0, 1));

  LatticeMap rho(3, 2, {{-1, 1, 0}, {-1, 0, 1}});
  Cone sigma(2, {V({1, 0})});
  auto source = product(interval(0, 1), sigma.polyhedron());
  auto image = linear_image(rho, source);
  CHECK(image == Polyhedron::from_generators(2, {V({0, 0}), V({-1, -1})}, {V({1, 0})}));
  auto cert = certify_face_bijection(rho, source, image);
  CHECK(cert.holds());
  CHECK(faces(image).f_vector() == FVector({2, 3, 1}));

  auto collapsed = linear_image(first, Polyhedron::from_generators(2, {V({0, 0}), V({0, 1})}));
  CHECK_FALSE(certify_face_bijection(first, Polyhedron::from_generators(2, {V({0, 0}), V({0, 1})}),
                                     collapsed)
                  .holds());
}

TEST_CASE("intersections") {
  auto sq = unit_square();
  CHECK(intersect(sq, sq) == sq);
  auto far = Polyhedron::from_generators(2, {V({5, 5}), V({6, 5}), V({5, 6}), V({6, 6})});
  CHECK(intersect(sq, far).is_empty());
  Cone a(2, {V({1, 0}), V({0, 1})}), b(2, {V({1, 0}), V({0, -1})});
  CHECK(intersect(a.polyhedron(), b.polyhedron()) == Cone(2, {V({1, 0})}).polyhedron());
  auto shifted = Polyhedron::from_generators(2, {Q({"1/2", "1/2"}), Q({"3/2", "1/2"}),
                                                 Q({"1/2", "3/2"}), Q({"3/2", "3/2"})});
  auto quarter = Polyhedron::from_generators(2, {Q({"1/2", "1/2"}), Q({"1", "1/2"}),
                                                 Q({"1/2", "1"}), Q({"1", "1"})});
  CHECK(intersect(sq, shifted) == quarter);
}

TEST_CASE("min pairing") {
  auto ray = Polyhedron::from_generators(1, {V({1})}, {V({1})});
  CHECK(min_pairing(V({2}), ray) == Rational(2));
  CHECK_FALSE(min_pairing(V({-1}), ray).has_value());
  CHECK_THROWS_AS(min_pairing(V({1}), Polyhedron::empty(1)), EvaluationError);

  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    auto a = random_polyhedron_2d(rng), b = random_polyhedron_2d(rng);
    Vector u = testing::random_vector(rng, 2, -3, 3);
    auto ma = min_pairing(u, a), mb = min_pairing(u, b), ms = min_pairing(u, minkowski_sum(a, b));
    if (ma && mb) {
      REQUIRE(ms.has_value());
      CHECK(*ms == *ma + *mb);
    } else {
      CHECK_FALSE(ms.has_value());
    }
  }
}

TEST_CASE("injective images preserve face counts") {
  std::mt19937 rng(29);
  LatticeMap m(2, 3, {{1, 0}, {0, 1}, {1, 1}});
  for (int i = 0; i < 20; ++i) {
    auto p = random_polyhedron_2d(rng);
    auto img = linear_image(m, p);
    CHECK(certify_face_bijection(m, p, img).holds());
  }
}
