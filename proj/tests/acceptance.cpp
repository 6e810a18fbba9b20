// One PASS/FAIL line per acceptance criterion. With an argument, only that criterion runs.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "tvchow/commands.hpp"
#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"
#include "tvchow/sigma_e.hpp"

using namespace tvchow;
using testing::V;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TVCHOW_FIXTURES) + "/" + name);
  if (!in) throw Error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// CSV rows of cmd_count keyed by k: {r, v, t, sum, rhs}.
std::map<std::size_t, std::vector<Integer>> count_rows(const std::string& doc, int& code) {
  CommandOptions opts;
  opts.format = OutputFormat::csv;
  opts.k = KRange{0, 2};
  std::ostringstream out, err;
  code = cmd_count(doc, opts, out, err);
  std::map<std::size_t, std::vector<Integer>> rows;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) f.push_back(cell);
    if (f.size() != 10) continue;
    rows[std::stoul(f[2])] = {Integer(f[3]), Integer(f[4]), Integer(f[5]), Integer(f[6]), Integer(f[7])};
  }
  return rows;
}

std::set<Polyhedron> face_set(const Polyhedron& p) {
  std::set<Polyhedron> out;
  const FaceLattice lattice(p);
  for (const auto& f : lattice.faces()) out.insert(f.face);
  return out;
}

FVector dims(const std::set<Polyhedron>& faces) {
  FVector f;
  for (const auto& p : faces) f.add(static_cast<std::size_t>(p.dimension()));
  return f;
}

// The two oracle instances with N d <= 4.
std::vector<std::pair<std::string, MarkedFansyDivisor>> oracle_instances() {
  return {{"trivial over P^1", testing::trivial_p1()}, {"P^2 over P^1", toric_downgrade(p2_fan())}};
}

Outcome table_reproduction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::vector<long>>> cases = {
      {"p_e.tvd", {213, 48, 36, 135, 45, 9}}, {"p_f.tvd", {132, 165, 0, 54, 135, 0}}};
  for (const auto& [name, expected] : cases) {
    int code = -1;
    const auto rows = count_rows(fixture(name), code);
    o.expect(code == kExitOk, name + ": exit code " + std::to_string(code));
    if (!rows.count(1) || !rows.count(2)) {
      o.expect(false, name + ": rows k = 1, 2 missing");
      continue;
    }
    const std::vector<Integer> got = {rows.at(2)[0], rows.at(2)[1], rows.at(2)[2], rows.at(1)[0], rows.at(1)[1], rows.at(1)[2]};
    std::string text;
    for (const auto& x : got) text += " " + x.get_str();
    o.expect(got == std::vector<Integer>(expected.begin(), expected.end()), name + ": got" + text);
  }
  o.expect(seconds_since(t0) < 60, "slower than 60 s");
  return o;
}

Outcome sum_identity_check() {
  Outcome o;
  const std::vector<long> S = {6, 9, 5}, Sp = {9, 18, 15, 6, 1};
  // The library closed forms against the literal S and S'.
  for (std::size_t i = 0; i < S.size(); ++i)
    o.expect(S_closed_form(p2_fan().f_vector(), 2, 2, i) == S[i], "S_" + std::to_string(i));
  for (std::size_t i = 0; i < Sp.size(); ++i) o.expect(Sprime_closed_form(3, 2, i) == Sp[i], "S'_" + std::to_string(i));

  for (const char* name : {"p_e.tvd", "p_f.tvd"}) {
    int code = -1;
    const auto rows = count_rows(fixture(name), code);
    for (std::size_t k = 0; k <= 2; ++k) {
      long rhs = 0;
      for (std::size_t i = 0; i <= k; ++i) rhs += Sp[i] * S[k - i];
      if (!rows.count(k)) {
        o.expect(false, std::string(name) + ": no row k = " + std::to_string(k));
        continue;
      }
      const auto& row = rows.at(k);
      o.expect(row[0] + row[1] + row[2] == rhs, std::string(name) + ": identity at k = " + std::to_string(k));
      o.expect(row[4] == rhs, std::string(name) + ": rhs column at k = " + std::to_string(k));
    }
    o.expect(rows.count(1) && rows.at(1)[3] == 189, std::string(name) + ": k = 1 sum");
    o.expect(rows.count(2) && rows.at(2)[3] == 297, std::string(name) + ": k = 2 sum");
  }
  return o;
}

// Cones of Sigma_E are d-tuples of proper subsets of {1..N}; dimension is the total size.
FVector sigma_E_by_subsets(std::size_t N, std::size_t d) {
  FVector f;
  const std::size_t proper = (std::size_t{1} << N) - 1;
  std::vector<std::size_t> tuple(d, 0);
  while (true) {
    std::size_t dim = 0;
    for (std::size_t m : tuple) dim += static_cast<std::size_t>(__builtin_popcountll(m));
    f.add(dim);
    std::size_t i = 0;
    while (i < d && ++tuple[i] == proper) tuple[i++] = 0;
    if (i == d) break;
  }
  return f;
}

Outcome sigma_E_check() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t N = 1; N <= 3; ++N)
    for (std::size_t d = 1; d <= 2; ++d) {
      const FVector built = build_sigma_E(N, d).f_vector();
      const std::string tag = "N=" + std::to_string(N) + ", d=" + std::to_string(d);
      o.expect(built == sigma_E_by_subsets(N, d), tag + ": built " + built.to_string());
      o.expect(built == sigma_E_fvector_closed_form(N, d), tag + ": closed form");
    }
  o.expect(build_sigma_E(3, 2).f_vector() == FVector({1, 6, 15, 18, 9}), "(3,2) is not (1,6,15,18,9)");
  o.expect(seconds_since(t0) < 5, "slower than 5 s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& [name, X] : oracle_instances()) {
    const QuotientFansyDivisor Y = build_YC(X, 2);
    const EquivariantCounts direct = testing::bucket_counts(X, Y);
    const EquivariantCounts convolved = testing::truncated(convolve_counts(enumerate_RVT(X), 2));
    for (std::size_t k = 0; k <= X.rank; ++k)
      o.expect(direct.r[k] == convolved.r[k] && direct.v[k] == convolved.v[k] && direct.t[k] == convolved.t[k],
               name + ": k = " + std::to_string(k));
  }
  return o;
}

Outcome property_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();

  // (a) face lattice of a product.
  std::mt19937 rng(2718);
  int instances = 0;
  for (std::size_t dim : {1, 2})
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Vector> pts;
      for (int i = 0; i < 4; ++i) pts.push_back(testing::random_vector(rng, dim, -5, 5));
      std::vector<Vector> rays;
      if (trial % 3 != 0) rays.push_back(testing::random_vector(rng, dim, -2, 2));
      const Polyhedron delta = Polyhedron::from_generators(dim, pts, rays);
      const SparseSigmaE sigma_E(2, dim);
      const auto all = sigma_E.all_cones();
      const Cone sigma = sigma_E.materialize(all[static_cast<std::size_t>(trial) % all.size()]);
      std::set<Polyhedron> expected;
      for (const auto& f : face_set(delta))
        for (const auto& g : face_set(sigma.polyhedron())) expected.insert(product(f, g));
      o.expect(face_set(product(delta, sigma.polyhedron())) == expected, "(a) instance " + std::to_string(instances));
      ++instances;
    }
  o.expect(instances >= 20, "(a) fewer than 20 instances");

  // (b)-(d) on every pair processed for the oracle instances.
  std::mt19937 urng(99);
  for (const auto& [name, X_in] : oracle_instances()) {
    const MarkedFansyDivisor X = ensure_min_P(X_in);
    const std::size_t N = 2;
    const SplitData split = build_split(N, X.rank);
    const SparseSigmaE sigma_E(N, X.rank);
    for (const auto& p : X.special_points) {
      const PolyhedralComplex s = X.slice(p);
      for (std::size_t c : s.maximal_cells())
        for (const auto& I : sigma_E.maximal_cones()) {
          const Cone sigma = sigma_E.materialize(I);
          const SliceImage img = downgrade_slice(s.cells()[c], sigma, split);
          const FVector expected = dims(face_set(s.cells()[c])).convolve(dims(face_set(sigma.polyhedron())));
          o.expect(img.faces.f_vector() == expected, "(b) " + name + " at " + p.to_string());
        }
    }

    const QuotientFansyDivisor Y = build_YC(X_in, N);
    for (const auto& p : Y.fansy.special_points) {
      const CompletenessCertificate cert = is_complete(Y.fansy.slice(p));
      o.expect(cert.full_dimensional && cert.ridges_paired && cert.connected, "(c) ridge certificate, " + name);
      o.expect(cert.samples >= 100 && cert.covered == cert.samples, "(c) sampling, " + name);
    }

    for (const auto& D : fansy_generators(X))
      for (const auto& I : sigma_E.maximal_cones()) {
        const PolyhedralDivisor prod = product_divisor(D, sigma_E.materialize(I));
        const PolyhedralDivisor image = linear_image(split.rho, prod);
        for (int sample = 0; sample < 6; ++sample) {
          const Vector u = testing::random_vector(urng, N * X.rank, -3, 3);
          const Vector pulled = split.rho.transpose().apply(u);
          if (!min_pairing(u, image.tail().polyhedron())) continue;
          // u o rho evaluated on the product agrees with u on the image, point by point.
          for (const auto& q : X.special_points) {
            const Polyhedron a = image.coefficient(q), b = prod.coefficient(q);
            if (a.is_empty() != b.is_empty()) {
              o.expect(false, "(d) EMPTY mismatch, " + name);
              continue;
            }
            if (a.is_empty()) continue;
            o.expect(min_pairing(u, a) == min_pairing(pulled, b), "(d) " + name + " at " + q.to_string());
          }
          const QDivisorOnLine lhs = evaluate(image, u), rhs = evaluate(prod, pulled);
          o.expect(lhs == rhs, "(d) evaluate, " + name);
        }
      }
  }

  // (e) split data.
  for (std::size_t N = 1; N <= 4; ++N)
    for (std::size_t d = 1; d <= 3; ++d) {
      const SplitData s = build_split(N, d);
      o.expect(s.rho.compose(s.alpha).is_zero() && s.pi.compose(s.iota).is_zero(),
               "(e) N=" + std::to_string(N) + ", d=" + std::to_string(d));
    }
  o.expect(seconds_since(t0) < 120, "slower than 120 s");
  return o;
}

Outcome validation_fixtures() {
  Outcome o;
  const MarkedFansyDivisor E = resolve_variety(parse_document(fixture("p_e.tvd")));
  const MarkedFansyDivisor F = resolve_variety(parse_document(fixture("p_f.tvd")));
  o.expect(!E.marked.empty(), "P(E) marked set is empty");
  o.expect(F.marked.empty(), "P(F) marked set has " + std::to_string(F.marked.size()) + " cones, expected none");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"sum identity", sum_identity_check},
      {"Sigma_E f-vector", sigma_E_check},
      {"downgrade oracle equivalence", oracle_equivalence},
      {"property suite", property_suite},
      {"validation fixtures", validation_fixtures},
  };
  std::size_t only = 0;
  if (argc > 1) {
    only = std::stoul(argv[1]);
    if (only == 0 || only > criteria.size()) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
      return 2;
    }
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("threw: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
