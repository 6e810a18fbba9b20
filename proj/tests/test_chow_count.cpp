#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tvchow/errors.hpp"

using namespace tvchow;
using testing::V;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const FVector kP2({1, 3, 3});

// (r_2, v_2, t_2, r_1, v_1, t_1)
std::vector<Integer> table_row(const EquivariantCounts& c) {
  return {c.r[2], c.v[2], c.t[2], c.r[1], c.v[1], c.t[1]};
}

}  // namespace

TEST_CASE("ensure_min_P") {
  const MarkedFansyDivisor trivial = testing::trivial_p1();
  const MarkedFansyDivisor padded = ensure_min_P(trivial);
  CHECK(padded.special_points == std::set<PointOnLine>{PointOnLine::finite(0), PointOnLine::infinity()});
  for (const auto& p : padded.special_points) CHECK(padded.slice(p) == p1_fan().as_complex());
  CHECK(ensure_min_P(padded) == padded);

  const MarkedFansyDivisor single(p1_fan(), {}, {}, {PointOnLine::finite(5)});
  const MarkedFansyDivisor grown = ensure_min_P(single);
  CHECK(grown.special_points.size() == 2);
  CHECK(grown.special_points.count(PointOnLine::finite(0)) == 1);
  // The single slice contributes #Sigma(d-k) faces and the appended one as many again.
  const CountProfile counts = enumerate_RVT(single, CountStrategy::textbook);
  const FVector tail = p1_fan().f_vector();
  CHECK(counts.V[0] == 2 * tail[1]);
  CHECK(counts.V[1] == 2 * tail[0]);
}

TEST_CASE("enumerate_RVT on the trivial fansy divisor") {
  const MarkedFansyDivisor X = testing::trivial_p1();
  const CountProfile table = enumerate_RVT(X);
  CHECK(table.R == ints({4, 2, 0}));
  CHECK(table.V == ints({0, 0, 0}));
  CHECK(table.T == ints({0, 2, 0}));
  CHECK(table.num_special_points == 2);
  CHECK(table.validate().ok());

  const CountProfile book = enumerate_RVT(X, CountStrategy::textbook);
  CHECK(book.R == ints({0, 2, 0}));
  CHECK(book.V == ints({4, 2, 0}));
  CHECK(book.T == ints({0, 0, 0}));
  for (std::size_t i = 0; i <= 2; ++i) {
    CHECK(S_check(table, p1_fan().f_vector(), i));
    CHECK(S_check(book, p1_fan().f_vector(), i));
  }
  CHECK(S_closed_form(p1_fan().f_vector(), 2, 1, 1) == 4);
}

TEST_CASE("closed forms") {
  CHECK(S_closed_form(kP2, 2, 2, 0) == 6);
  CHECK(S_closed_form(kP2, 2, 2, 1) == 9);
  CHECK(S_closed_form(kP2, 2, 2, 2) == 5);
  CHECK(S_closed_form(kP2, 2, 2, 3) == 0);

  std::vector<Integer> sp;
  for (std::size_t i = 0; i <= 5; ++i) sp.push_back(Sprime_closed_form(3, 2, i));
  CHECK(sp == ints({9, 18, 15, 6, 1, 0}));
  CHECK(Sprime_closed_form(1, 2, 0) == 1);
  CHECK(Sprime_closed_form(1, 2, 1) == 0);
}

TEST_CASE("example table") {
  const MarkedFansyDivisor E = toric_downgrade(testing::bundle_E());
  const MarkedFansyDivisor F = toric_downgrade(testing::bundle_F());
  const CountProfile pe = enumerate_RVT(E);
  const CountProfile pf = enumerate_RVT(F);

  CHECK(pe.R == ints({4, 7, 3, 0}));
  CHECK(pe.V == ints({2, 1, 0, 0}));
  CHECK(pe.T == ints({0, 1, 2, 0}));
  CHECK(pf.R == ints({1, 4, 5, 0}));
  CHECK(pf.V == ints({5, 5, 0, 0}));
  CHECK(pf.T == ints({0, 0, 0, 0}));

  CHECK(table_row(convolve_counts(pe, 3)) == ints({213, 48, 36, 135, 45, 9}));
  CHECK(table_row(convolve_counts(pf, 3)) == ints({132, 165, 0, 54, 135, 0}));

  for (const auto* p : {&pe, &pf}) {
    for (std::size_t i = 0; i <= 2; ++i) CHECK(S_check(*p, kP2, i));
    CHECK(check_profile(*p, kP2).warnings.empty());
    const auto k0 = sum_identity(*p, kP2, 3, 0);
    const auto k1 = sum_identity(*p, kP2, 3, 1);
    const auto k2 = sum_identity(*p, kP2, 3, 2);
    CHECK(k0.holds());
    CHECK(k0.rhs == 9 * 6);
    CHECK(k1.holds());
    CHECK(k1.lhs == 189);
    CHECK(k2.holds());
    CHECK(k2.lhs == 297);
  }

  const GeneratorReport g = generator_report(pe, 1);
  CHECK(g.total() == 9);
  CHECK(g.V == 1);
  CHECK(generator_report(pe, 5).total() == 0);
  CHECK_FALSE(g.disclaimer.empty());
}

TEST_CASE("the textbook reading differs once cones are contracted") {
  const CountProfile pe = enumerate_RVT(toric_downgrade(testing::bundle_E()), CountStrategy::textbook);
  CHECK_FALSE(S_check(pe, kP2, 0));
  CHECK_FALSE(check_profile(pe, kP2).warnings.empty());
}

TEST_CASE("convolution properties") {
  const CountProfile zero = CountProfile::zero(2, 2);
  const EquivariantCounts z = convolve_counts(zero, 3);
  for (std::size_t k = 0; k < z.r.size(); ++k) CHECK(z.total(k) == 0);

  const CountProfile pe = enumerate_RVT(toric_downgrade(testing::bundle_E()));
  const CountProfile pf = enumerate_RVT(toric_downgrade(testing::bundle_F()));
  for (std::size_t N = 1; N <= 4; ++N) CHECK(convolve_counts(pe + pf, N) == convolve_counts(pe, N) + convolve_counts(pf, N));

  for (const auto* p : {&pe, &pf})
    for (std::size_t N = 2; N < 4; ++N) {
      const EquivariantCounts a = convolve_counts(*p, N), b = convolve_counts(*p, N + 1);
      for (std::size_t k = 0; k <= 2; ++k) {
        CHECK(a.r[k] <= b.r[k]);
        CHECK(a.v[k] <= b.v[k]);
        CHECK(a.t[k] <= b.t[k]);
      }
    }

  CountProfile bad = pe;
  bad.T[3] = 1;
  CHECK_FALSE(bad.validate().ok());
  CHECK_THROWS_AS(pe + CountProfile::zero(1, 2), DimensionError);
  CHECK(parse_strategy("textbook") == CountStrategy::textbook);
  CHECK_THROWS_AS(parse_strategy("other"), Error);
}

TEST_CASE("geometric Y_C reproduces the convolution counts") {
  for (const auto& X : {testing::trivial_p1(), toric_downgrade(p2_fan())}) {
    const QuotientFansyDivisor Y = build_YC(X, 2);
    CHECK(testing::bucket_counts(X, Y) == testing::truncated(convolve_counts(enumerate_RVT(X), 2)));
  }
}
