#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tvchow/chow_count.hpp"
#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"

using namespace tvchow;
using testing::V;

namespace {

// P^2 viewed over P^1 through its second coordinate; one straddling cone.
MarkedFansyDivisor p2_downgrade() { return toric_downgrade(p2_fan()); }

std::set<Polyhedron> face_set(const Polyhedron& p) {
  std::set<Polyhedron> out;
  const FaceLattice lattice(p);
  for (const auto& f : lattice.faces()) out.insert(f.face);
  return out;
}

}  // namespace

TEST_CASE("split data") {
  SUBCASE("d=1, N=2") {
    const SplitData s = build_split(2, 1);
    CHECK(s.J_map.apply(V({1})) == V({1, 1}));
    CHECK(s.rho.apply(V({5, 2, 3})) == V({-3, -2}));
    CHECK(s.alpha.apply(V({4})) == V({4, 4, 4}));
    CHECK(s.rho.compose(s.alpha).is_zero());
  }
  SUBCASE("d=2, N=3") {
    const SplitData s = build_split(3, 2);
    CHECK(s.I_map.matrix() == IntegerMatrix{{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}});
    for (std::size_t j = 0; j < 8; ++j) {
      const Vector x = unit_vector(8, j);
      const Vector a(x.begin(), x.begin() + 2), b(x.begin() + 2, x.end());
      CHECK(s.pi.apply(x) == a + s.I_map.apply(b));
    }
  }
  for (auto [N, d] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 2}}) {
    const SplitData s = build_split(N, d);
    CHECK(s.rho.rank() == N * d);
    CHECK(same_lattice(s.rho.integer_kernel(), s.alpha.image_generators()));
  }
  for (std::size_t N = 1; N <= 4; ++N)
    for (std::size_t d = 1; d <= 3; ++d) {
      const SplitData s = build_split(N, d);
      CHECK(s.verify().ok());
      CHECK(s.pi.compose(s.iota).is_zero());
      CHECK(s.rho.compose(s.alpha).is_zero());
    }
  CHECK_THROWS_AS(build_split(0, 1), DimensionError);
}

TEST_CASE("downgrade_slice") {
  const SplitData s = build_split(2, 1);
  const Cone e1(2, {V({1, 0})});

  const SliceImage apex = downgrade_slice(Polyhedron::point(V({0})), e1, s);
  CHECK(apex.image == e1.polyhedron());

  const auto segment = Polyhedron::from_generators(1, {V({0}), V({1})});
  const SliceImage img = downgrade_slice(segment, e1, s);
  CHECK(img.image == Polyhedron::from_generators(2, {V({0, 0}), V({-1, -1})}, {V({1, 0})}));
  CHECK(img.certificate.holds());
  CHECK(img.faces.f_vector() == FVector({2, 3, 1}));
  CHECK(img.faces.f_vector() == faces(segment).f_vector().convolve(faces(e1.polyhedron()).f_vector()));

  SplitData broken = s;
  broken.rho = LatticeMap::zero(3, 2);
  CHECK_THROWS_AS(downgrade_slice(segment, e1, broken), InconsistencyError);
  CHECK_THROWS_AS(downgrade_slice(Polyhedron::empty(1), e1, s), EmptyOperandError);
  CHECK_THROWS_AS(downgrade_slice(segment, Cone(3, {V({1, 0, 0})}), s), DimensionError);
}

TEST_CASE("face lattice of a product is the product of face lattices") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Vector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(testing::random_vector(rng, 2, -4, 4));
    const auto delta = Polyhedron::from_generators(2, pts, {testing::random_vector(rng, 2, 0, 3)});
    const SparseSigmaE sigma_E(2, 2);
    const auto maximal = sigma_E.maximal_cones();
    const Cone sigma = sigma_E.materialize(maximal[static_cast<std::size_t>(trial) % maximal.size()]);

    std::set<Polyhedron> expected;
    for (const auto& f : face_set(delta))
      for (const auto& g : face_set(sigma.polyhedron())) expected.insert(product(f, g));
    CHECK(face_set(product(delta, sigma.polyhedron())) == expected);

    const SliceImage img = downgrade_slice(delta, sigma, build_split(2, 2));
    CHECK(img.faces.cells().size() == expected.size());
  }
}

TEST_CASE("product with E_T") {
  const DivisorialFan S = to_divisorial_fan(ensure_min_P(testing::trivial_p1()));
  CHECK(product_generators(S, 2).size() == S.members().size() * 2);
  CHECK(product_generators(S, 3).size() == S.members().size() * 3);

  const DivisorialFan one = product_with_ET(S, 1);
  CHECK(one.ambient_rank() == 2);
  CHECK(one.members().size() == S.members().size());
  std::set<Cone> before, after;
  for (const auto& D : S.members()) before.insert(product(D.tail(), Cone::zero(1)));
  for (const auto& D : one.members()) after.insert(D.tail());
  CHECK(before == after);

  const DivisorialFan two = product_with_ET(S, 2);
  CHECK(two.ambient_rank() == 3);
  CHECK(two.validate().ok());
  const FVector expected = slice(S, PointOnLine::finite(0)).f_vector().convolve(sigma_E_fvector_closed_form(2, 1));
  CHECK(slice(two, PointOnLine::finite(0)).f_vector() == expected);
  CHECK(expected == FVector({1, 4, 4}));

  CHECK_THROWS_AS(product_with_ET(S, 4, ResourceCaps{3, 16}), ResourceCapError);
}

TEST_CASE("degree identity for a full-locus divisor") {
  const SplitData s = build_split(2, 1);
  const Cone tail(1, {V({1})});
  const PolyhedralDivisor D(tail, {{PointOnLine::finite(0), Polyhedron::from_generators(1, {V({1})}, {V({1})})},
                                   {PointOnLine::infinity(), Polyhedron::from_generators(1, {V({0})}, {V({1})})},
                                   {PointOnLine::finite(1), Polyhedron::from_generators(1, {testing::Q({"-1/2"})}, {V({1})})}});
  const SparseSigmaE sigma_E(2, 1);
  for (const auto& c : sigma_E.maximal_cones()) {
    const PolyhedralDivisor product = product_divisor(D, sigma_E.materialize(c));
    const PolyhedralDivisor image = linear_image(s.rho, product);
    CHECK(degree(image) == linear_image(s.rho, degree(product)));
    CHECK(image.tail().polyhedron().contains(degree(image)));
    CHECK_FALSE(degree(image) == image.tail().polyhedron());
    for (long u1 = 0; u1 < 3; ++u1)
      for (long u2 = 0; u2 < 3; ++u2) {
        const Vector u = V({u1, u2});
        if (!min_pairing(u, image.tail().polyhedron())) continue;
        CHECK(evaluate(image, u) == evaluate(product, s.rho.transpose().apply(u)));
      }
  }
}

TEST_CASE("toric downgrade") {
  SUBCASE("P1 x P1") {
    const MarkedFansyDivisor X = toric_downgrade(product_fan(p1_fan(), p1_fan()));
    CHECK(X.tail_fan == p1_fan());
    CHECK(X.slice(PointOnLine::finite(0)) == p1_fan().as_complex());
    CHECK(X.slice(PointOnLine::infinity()) == p1_fan().as_complex());
    CHECK(X.marked.empty());
    CHECK(validate_marked_fansy(X).ok());
  }
  SUBCASE("P2 x P1") {
    const MarkedFansyDivisor X = toric_downgrade(product_fan(p2_fan(), p1_fan()));
    CHECK(X.tail_fan == p2_fan());
    CHECK(X.slice(PointOnLine::finite(0)) == X.slice(PointOnLine::infinity()));
    CHECK(X.marked.empty());
  }
  SUBCASE("P2") {
    const MarkedFansyDivisor X = p2_downgrade();
    CHECK(X.marked.size() == 1);
    CHECK(X.marked.front() == Cone(1, {V({-1})}));
    CHECK(validate_marked_fansy(X).ok());
  }
  SUBCASE("bundles over P2") {
    const MarkedFansyDivisor E = toric_downgrade(testing::bundle_E());
    CHECK(E.tail_fan.f_vector() == FVector({1, 3, 3}));
    CHECK(E.special_points.size() == 2);
    CHECK_FALSE(E.marked.empty());
    CHECK(validate_marked_fansy(E).ok());

    const MarkedFansyDivisor F = toric_downgrade(testing::bundle_F());
    CHECK(validate_marked_fansy(F).ok());
    // The straddling cones of P(F) are marked as well.
    CHECK_FALSE(F.marked.empty());
  }
  CHECK_THROWS_AS(toric_downgrade(Fan(2, {Cone(2, {V({1, 0}), V({0, 1})})})), ValidityError);
}

TEST_CASE("build_YC on the trivial fansy divisor, N=2") {
  const MarkedFansyDivisor X = testing::trivial_p1();
  const QuotientFansyDivisor Y = build_YC(X, 2);
  CHECK(Y.fansy.rank == 2);
  CHECK(Y.fansy.special_points.size() == 2);
  CHECK(Y.fansy.marked.empty());
  CHECK(Y.report.ok());
  CHECK_FALSE(Y.report.warnings.empty());
  for (const auto& p : Y.fansy.special_points) {
    const PolyhedralComplex s = Y.fansy.slice(p);
    CHECK(is_complete(s).complete());
    CHECK(s.f_vector() == FVector({1, 4, 4}));
    CHECK(Y.slice_provenance.at(p).size() == s.cells().size());
  }
  CHECK(Y.tail_provenance.size() == Y.fansy.tail_fan.cones().size());
  CHECK(cell_counts(Y) == build_YC_counts(X, 2));

  const QuotientFansyDivisor serial = build_YC(X, 2, Execution::serial);
  CHECK(serial.fansy == Y.fansy);
  CHECK(serial.slice_provenance == Y.slice_provenance);
}

TEST_CASE("build_YC with a marked cone") {
  const MarkedFansyDivisor X = p2_downgrade();
  const QuotientFansyDivisor Y = build_YC(X, 2);
  CHECK(Y.report.ok());
  CHECK(Y.fansy.marked.size() == 3);
  CHECK(cell_counts(Y) == build_YC_counts(X, 2));
  for (const auto& tag : Y.marked_provenance) CHECK(tag.source_cone == 0);
  for (const auto& p : Y.fansy.special_points) CHECK(is_complete(Y.fansy.slice(p)).complete());
}

TEST_CASE("build_YC with N=1 keeps the combinatorics") {
  const MarkedFansyDivisor X = p2_downgrade();
  const QuotientFansyDivisor Y = build_YC(X, 1);
  for (const auto& p : X.special_points) CHECK(Y.fansy.slice(p).f_vector() == X.slice(p).f_vector());
  CHECK(Y.fansy.tail_fan.f_vector() == X.tail_fan.f_vector());
  CHECK(Y.fansy.marked.size() == X.marked.size());
}

TEST_CASE("build_YC caps") {
  CHECK_THROWS_AS(build_YC(testing::trivial_p1(), 4, Execution::parallel, ResourceCaps{3, 16}), ResourceCapError);
  CHECK_THROWS_AS(build_YC_counts(testing::trivial_p1(), 17, ResourceCaps{8, 16}), ResourceCapError);
  const QuotientCounts q = build_YC_counts(toric_downgrade(testing::bundle_E()), 3);
  CHECK(q.tail == FVector({1, 3, 3}).convolve(FVector({1, 6, 15, 18, 9})));
}
