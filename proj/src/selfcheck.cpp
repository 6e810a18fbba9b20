#include "tvchow/selfcheck.hpp"

#include <functional>
#include <random>
#include <set>
#include <tuple>

#include "tvchow/chow_count.hpp"
#include "tvchow/document.hpp"
#include "tvchow/downgrade.hpp"
#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"
#include "tvchow/sigma_e.hpp"

namespace tvchow {

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Integer> to_integers(const std::vector<long>& xs) { return {xs.begin(), xs.end()}; }

std::string row_text(const std::vector<Integer>& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + row[i].get_str();
  return out + ")";
}

std::set<Polyhedron> face_set(const Polyhedron& p) {
  std::set<Polyhedron> out;
  const FaceLattice lattice(p);
  for (const auto& f : lattice.faces()) out.insert(f.face);
  return out;
}

MarkedFansyDivisor example(const Twist& twist) { return toric_downgrade(projectivized_bundle_fan(p2_fan(), twist)); }

using Check = std::pair<bool, std::string>;

Check split_identities() {
  for (std::size_t N = 1; N <= 4; ++N)
    for (std::size_t d = 1; d <= 3; ++d) {
      const SplitData s = build_split(N, d);
      const ValidationReport r = s.verify();
      if (!r.ok()) return {false, "N=" + std::to_string(N) + ", d=" + std::to_string(d) + ": " + r.failures.front()};
    }
  return {true, "N <= 4, d <= 3"};
}

Check sigma_E_closed_form(Execution exec) {
  for (std::size_t N = 1; N <= 3; ++N)
    for (std::size_t d = 1; d <= 2; ++d) {
      const FVector closed = sigma_E_fvector_closed_form(N, d);
      if (!(build_sigma_E(N, d).f_vector() == closed) || !(SparseSigmaE(N, d).f_vector(exec) == closed))
        return {false, "N=" + std::to_string(N) + ", d=" + std::to_string(d)};
    }
  return {sigma_E_fvector_closed_form(3, 2) == FVector({1, 6, 15, 18, 9}), "N <= 3, d <= 2"};
}

Check product_face_law() {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> coord(-4, 4), dir(0, 3);
  const SparseSigmaE sigma_E(2, 2);
  const auto maximal = sigma_E.maximal_cones();
  const SplitData split = build_split(2, 2);
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Vector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(vec({coord(rng), coord(rng)}));
    const Polyhedron delta = Polyhedron::from_generators(2, pts, {vec({dir(rng), dir(rng)})});
    const Cone sigma = sigma_E.materialize(maximal[static_cast<std::size_t>(trial) % maximal.size()]);
    std::set<Polyhedron> expected;
    for (const auto& f : face_set(delta))
      for (const auto& g : face_set(sigma.polyhedron())) expected.insert(product(f, g));
    if (face_set(product(delta, sigma.polyhedron())) != expected) return {false, "trial " + std::to_string(trial)};
    const SliceImage img = downgrade_slice(delta, sigma, split);
    if (!img.certificate.holds() || img.faces.cells().size() != expected.size())
      return {false, "rho-image, trial " + std::to_string(trial)};
  }
  return {true, std::to_string(trials) + " instances"};
}

Check quotient(const MarkedFansyDivisor& X, std::size_t N, Execution exec) {
  const QuotientFansyDivisor Y = build_YC(X, N, exec);
  if (!Y.report.ok()) return {false, Y.report.failures.front()};
  for (const auto& p : Y.fansy.special_points) {
    const CompletenessCertificate cert = is_complete(Y.fansy.slice(p), exec);
    if (!cert.complete()) return {false, "slice at " + p.to_string() + " is not complete"};
    if (cert.samples < kCompletenessSamples) return {false, "too few completeness samples"};
  }
  if (!(cell_counts(Y) == build_YC_counts(X, N))) return {false, "geometric and counting-only cell counts differ"};
  return {true, "N = " + std::to_string(N)};
}

Check deterministic_quotient() {
  const MarkedFansyDivisor X = toric_downgrade(p2_fan());
  const QuotientFansyDivisor a = build_YC(X, 2, Execution::serial), b = build_YC(X, 2, Execution::parallel);
  return {a.fansy == b.fansy && a.slice_provenance == b.slice_provenance && a.tail_provenance == b.tail_provenance,
          "serial and parallel build_YC"};
}

Check table(const Twist& twist, const std::vector<long>& expected) {
  const std::vector<Integer> row = example_row(twist);
  return {row == to_integers(expected), row_text(row)};
}

Check identities() {
  const FVector ref = p2_fan().f_vector();
  for (const Twist& tw : {example_twist_E(), example_twist_F()}) {
    const CountProfile p = enumerate_RVT(example(tw));
    for (std::size_t i = 0; i <= p.d + 1; ++i)
      if (!S_check(p, ref, i)) return {false, "S_" + std::to_string(i)};
    for (std::size_t k = 0; k <= p.d; ++k)
      if (!sum_identity(p, ref, 3, k).holds()) return {false, "sum identity at k = " + std::to_string(k)};
    if (sum_identity(p, ref, 3, 1).lhs != 189 || sum_identity(p, ref, 3, 2).lhs != 297) return {false, "row sums"};
  }
  return {true, "S_i and sum identity, N = 3"};
}

Check mutation() {
  // P(F) with the twist on (-1,-1) flipped. Flipping either of the other two signs, or all
  // three, yields a fan with the same counts, so those mutations go unnoticed.
  const Twist mutated = p2_twist(-1, -1, -1);
  const std::vector<Integer> row = example_row(mutated);
  return {row != to_integers(expected_row_F()), "flipped twist gives " + row_text(row)};
}

Check round_trip() {
  for (const Twist& tw : {example_twist_E(), example_twist_F()}) {
    ComputationDocument doc;
    doc.label = "round trip";
    doc.variety = example(tw);
    doc.bundle = BundleSpec{p2_fan(), tw};
    doc.N = 3;
    doc.k_range = KRange{1, 2};
    doc.profile = enumerate_RVT(*doc.variety);
    if (!(parse_document(serialize(doc)) == doc)) return {false, "fixture document"};
  }
  const QuotientFansyDivisor Y = build_YC(toric_downgrade(p2_fan()), 2);
  const QuotientFansyDivisor back = quotient_from_document(parse_document(serialize(quotient_document(Y))));
  if (!(back.fansy == Y.fansy) || back.slice_provenance != Y.slice_provenance || back.tail_provenance != Y.tail_provenance ||
      back.marked_provenance != Y.marked_provenance)
    return {false, "quotient document"};
  const QuotientCounts q = build_YC_counts(example(example_twist_E()), 3);
  if (!(parse_document(serialize(counts_document(q))).counts == q)) return {false, "counts document"};
  return {true, "documents, quotients and counts"};
}

}  // namespace

Twist p2_twist(long c1, long c2, long c0) {
  return {{vec({1, 0}), c1}, {vec({0, 1}), c2}, {vec({-1, -1}), c0}};
}

Twist example_twist_E() { return p2_twist(1, 0, 0); }
Twist example_twist_F() { return p2_twist(-1, -1, 1); }

std::vector<long> expected_row_E() { return {213, 48, 36, 135, 45, 9}; }
std::vector<long> expected_row_F() { return {132, 165, 0, 54, 135, 0}; }

std::vector<Integer> example_row(const Twist& twist) {
  const EquivariantCounts c = convolve_counts(enumerate_RVT(example(twist)), 3);
  return {c.r[2], c.v[2], c.t[2], c.r[1], c.v[1], c.t[1]};
}

std::vector<CheckResult> run_selfcheck(Execution exec) {
  std::vector<std::pair<std::string, std::function<Check()>>> suite = {
      {"split data: rho o alpha = 0, pi o iota = 0, exactness", split_identities},
      {"Sigma_E f-vector matches the closed form", [exec] { return sigma_E_closed_form(exec); }},
      {"face lattice of a product, rho-image face counts", product_face_law},
      {"Y_C of the trivial fansy divisor, N = 2", [exec] { return quotient(MarkedFansyDivisor(p1_fan(), {}, {}, {}), 2, exec); }},
      {"Y_C of P^2 over P^1, N = 2", [exec] { return quotient(toric_downgrade(p2_fan()), 2, exec); }},
      {"build_YC is independent of the execution order", deterministic_quotient},
      {"example table, P(E)", [] { return table(example_twist_E(), expected_row_E()); }},
      {"example table, P(F)", [] { return table(example_twist_F(), expected_row_F()); }},
      {"closed forms S_i and the sum identity", identities},
      {"mutation: flipped twist sign is detected", mutation},
      {"document round trip", round_trip},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, run] : suite) {
    CheckResult c{name, false, {}};
    try {
      std::tie(c.passed, c.detail) = run();
    } catch (const Error& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tvchow
