#include "tvchow/downgrade.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>

#include "tvchow/chow_count.hpp"
#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"

namespace tvchow {

namespace {

IntegerMatrix zeros(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, std::vector<Integer>(cols, 0)); }

// Runs body(i) for i < n, in parallel when asked; the first exception is rethrown.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body body) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
  auto run = [&](long i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) run(i);
  } else {
    for (long i = 0; i < count; ++i) run(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Vector sample_dual(const Cone& c, std::mt19937_64& rng) {
  std::vector<Constraint> ineqs;
  for (const auto& g : c.generators()) ineqs.push_back({g, 0});
  const Polyhedron dual = Polyhedron::from_constraints(c.ambient_rank(), ineqs);
  std::uniform_int_distribution<int> pos(0, 5), any(-5, 5);
  Vector u = zero_vector(c.ambient_rank());
  for (const auto& r : dual.rays()) u = u + Rational(pos(rng)) * r;
  for (const auto& l : dual.lines()) u = u + Rational(any(rng)) * l;
  return u;
}

// Minkowski sum of the non-EMPTY coefficients (and the tail).
Polyhedron locus_degree(const PolyhedralDivisor& D) {
  Polyhedron deg = D.tail().polyhedron();
  for (const auto& [_, delta] : D.coefficients())
    if (!delta.is_empty()) deg = minkowski_sum(deg, delta);
  return deg;
}

// The three properness checks for rho(D x sigma_I).
void check_member(const PolyhedralDivisor& D, const Cone& sigma, const SplitData& split, std::mt19937_64& rng,
                  ValidationReport& report, const std::string& label) {
  const PolyhedralDivisor product = product_divisor(D, sigma);
  const PolyhedralDivisor image = linear_image(split.rho, product);

  const Cone expected_tail(linear_image(split.rho, product.tail().polyhedron()));
  bool tails = image.tail() == expected_tail;
  for (const auto& [_, delta] : image.coefficients())
    if (!delta.is_empty() && !(tail_cone(delta) == expected_tail)) tails = false;
  if (!tails) report.fail(label + ": tail cone of the image is not rho(tail x sigma_I)");

  const Polyhedron deg = locus_degree(image);
  if (!(deg == linear_image(split.rho, locus_degree(product))))
    report.fail(label + ": deg rho(D x sigma_I) != rho(deg(D x sigma_I))");
  if (!image.has_empty_coefficient()) {
    const Polyhedron& t = image.tail().polyhedron();
    if (!t.contains(deg) || deg == t) report.fail(label + ": degree is not a proper subset of the tail cone");
  }

  const LatticeMap rho_t = split.rho.transpose();
  for (int s = 0; s < 3; ++s) {
    const Vector u = sample_dual(image.tail(), rng);
    if (evaluate(image, u) != evaluate(product, rho_t.apply(u)))
      report.fail(label + ": evaluation mismatch at u = " + to_string(u));
  }
}

struct ImageCell {
  Polyhedron cell;
  std::size_t source;
  SigmaECone sigma;
};

}  // namespace

ValidationReport SplitData::verify() const {
  ValidationReport r;
  const std::size_t n = N * d;
  if (!pi.compose(iota).is_zero()) r.fail("pi o iota != 0");
  if (!rho.compose(alpha).is_zero()) r.fail("rho o alpha != 0");
  if (!(pi.compose(sigma_star) == LatticeMap::identity(d))) r.fail("pi o sigma* != id_M");
  if (!(tau.compose(iota) == LatticeMap::identity(n))) r.fail("tau o iota != id_M_E");
  if (rho.rank() != n) r.fail("rho is not surjective over Q");
  if (!same_lattice(rho.integer_kernel(), alpha.image_generators())) r.fail("kernel(rho) != image(alpha)");
  if (!same_lattice(pi.integer_kernel(), iota.image_generators())) r.fail("kernel(pi) != image(iota)");

  // Entrywise formulas on basis vectors.
  for (std::size_t j = 0; j < n; ++j) {
    const Vector b = unit_vector(n, j);
    Vector Ib = zero_vector(d);
    Ib[j / N] = 1;
    if (I_map.apply(b) != Ib) r.fail("I(e_" + std::to_string(j) + ") is not e_block");
    if (iota.apply(b) != concat(Rational(-1) * Ib, b)) r.fail("iota(b) != (-I b, b)");
  }
  for (std::size_t i = 0; i < d; ++i) {
    const Vector a = unit_vector(d, i);
    Vector Ja = zero_vector(n);
    for (std::size_t k = 0; k < N; ++k) Ja[i * N + k] = 1;
    if (J_map.apply(a) != Ja) r.fail("J(e_" + std::to_string(i) + ") is not the block indicator");
    if (alpha.apply(a) != concat(a, Ja)) r.fail("alpha(a) != (a, J a)");
  }
  for (std::size_t j = 0; j < d + n; ++j) {
    const Vector x = unit_vector(d + n, j);
    const Vector a(x.begin(), x.begin() + static_cast<long>(d));
    const Vector b(x.begin() + static_cast<long>(d), x.end());
    if (pi.apply(x) != a + I_map.apply(b)) r.fail("pi(a, b) != a + I b");
    if (rho.apply(x) != b - J_map.apply(a)) r.fail("rho(a, b) != b - J a");
  }
  return r;
}

SplitData build_split(std::size_t N, std::size_t d) {
  if (N == 0 || d == 0) throw DimensionError("build_split: N and d must be positive");
  const std::size_t n = N * d;
  IntegerMatrix I = zeros(d, n), J = zeros(n, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      I[i][i * N + k] = 1;
      J[i * N + k][i] = 1;
    }
  IntegerMatrix iota = zeros(d + n, n), pi = zeros(d, d + n), alpha = zeros(d + n, d), rho = zeros(n, d + n),
                sigma_star = zeros(d + n, d), tau = zeros(n, d + n);
  for (std::size_t i = 0; i < d; ++i) {
    pi[i][i] = 1;
    alpha[i][i] = 1;
    sigma_star[i][i] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    iota[d + j][j] = 1;
    rho[j][d + j] = 1;
    tau[j][d + j] = 1;
    for (std::size_t i = 0; i < d; ++i) {
      iota[i][j] = -I[i][j];
      pi[i][d + j] = I[i][j];
      alpha[d + j][i] = J[j][i];
      rho[j][i] = -J[j][i];
    }
  }
  SplitData s{N,
              d,
              LatticeMap(n, d, I),
              LatticeMap(d, n, J),
              LatticeMap(n, d + n, iota),
              LatticeMap(d + n, d, pi),
              LatticeMap(d, d + n, alpha),
              LatticeMap(d + n, n, rho),
              LatticeMap(d, d + n, sigma_star),
              LatticeMap(d + n, n, tau)};
  const ValidationReport r = s.verify();
  if (!r.ok()) throw InconsistencyError("build_split: " + r.failures.front());
  return s;
}

PolyhedralDivisor product_divisor(const PolyhedralDivisor& D, const Cone& sigma) {
  std::map<PointOnLine, Polyhedron> coefficients;
  for (const auto& [p, delta] : D.coefficients()) coefficients.emplace(p, product(delta, sigma.polyhedron()));
  return PolyhedralDivisor(product(D.tail(), sigma), std::move(coefficients));
}

std::vector<PolyhedralDivisor> product_generators(const DivisorialFan& S, std::size_t N) {
  const SparseSigmaE sigma_E(N, S.ambient_rank());
  std::vector<Cone> maximal;
  for (const auto& c : sigma_E.maximal_cones()) maximal.push_back(sigma_E.materialize(c));
  std::vector<PolyhedralDivisor> out;
  for (const auto& D : S.members())
    for (const auto& sigma : maximal) out.push_back(product_divisor(D, sigma));
  return out;
}

DivisorialFan product_with_ET(const DivisorialFan& S, std::size_t N, const ResourceCaps& caps) {
  if (N * S.ambient_rank() > caps.geometric_rank)
    throw ResourceCapError("product_with_ET: N*d = " + std::to_string(N * S.ambient_rank()) +
                           " exceeds the geometric cap " + std::to_string(caps.geometric_rank));
  return DivisorialFan(product_generators(S, N));
}

DivisorialFan product_with_ET(const MarkedFansyDivisor& X, std::size_t N, const ResourceCaps& caps) {
  return product_with_ET(to_divisorial_fan(X), N, caps);
}

SliceImage downgrade_slice(const Polyhedron& delta, const Cone& sigma_I, const SplitData& split) {
  if (delta.ambient_rank() != split.d || sigma_I.ambient_rank() != split.N * split.d)
    throw DimensionError("downgrade_slice: operands do not match the split data");
  if (delta.is_empty()) throw EmptyOperandError("downgrade_slice: EMPTY slice cell");
  const Polyhedron source = product(delta, sigma_I.polyhedron());
  Polyhedron image = linear_image(split.rho, source);
  const FaceBijectionCertificate cert = certify_face_bijection(split.rho, source, image);
  if (!cert.holds()) throw InconsistencyError("downgrade_slice: rho is not a face bijection on the product");

  std::vector<Polyhedron> images;
  const FaceLattice lattice(source);
  for (const auto& f : lattice.faces()) images.push_back(linear_image(split.rho, f.face));
  PolyhedralComplex complex(split.N * split.d, images);
  if (complex.cells().size() != lattice.faces().size() ||
      !(complex == PolyhedralComplex(split.N * split.d, {image})))
    throw InconsistencyError("downgrade_slice: face images differ from the faces of the image");
  return {std::move(image), std::move(complex), cert};
}

QuotientFansyDivisor build_YC(const MarkedFansyDivisor& X_in, std::size_t N, Execution exec,
                              const ResourceCaps& caps) {
  const std::size_t d = X_in.rank;
  const std::size_t n = N * d;
  if (n > caps.geometric_rank)
    throw ResourceCapError("build_YC: ambient rank N*d = " + std::to_string(n) + " exceeds the geometric cap " +
                           std::to_string(caps.geometric_rank) + "; use counting mode");
  const MarkedFansyDivisor X = ensure_min_P(X_in);
  const SplitData split = build_split(N, d);
  const SparseSigmaE sigma_E(N, d);
  const auto maximal_sigma = sigma_E.maximal_cones();
  const auto all_sigma = sigma_E.all_cones();

  ValidationReport report;
  report.warn("marked cones are stored as rho-images rho(sigma x sigma_I), not as products sigma x sigma_I");

  // One task per (point, maximal cell, maximal sigma_I); every face pair is imaged for provenance.
  struct Task {
    PointOnLine point;
    std::size_t cell;
    std::size_t sigma;
  };
  std::map<PointOnLine, PolyhedralComplex> source_slices;
  std::vector<Task> tasks;
  for (const auto& p : X.special_points) {
    const auto& s = source_slices.emplace(p, X.slice(p)).first->second;
    for (std::size_t i : s.maximal_cells())
      for (std::size_t k = 0; k < maximal_sigma.size(); ++k) tasks.push_back({p, i, k});
  }
  std::vector<std::vector<ImageCell>> results(tasks.size());
  for_each_index(tasks.size(), exec, [&](std::size_t t) {
    const Task& task = tasks[t];
    const PolyhedralComplex& s = source_slices.at(task.point);
    const SigmaECone& sigma = maximal_sigma[task.sigma];
    downgrade_slice(s.cells()[task.cell], sigma_E.materialize(sigma), split);
    for (std::size_t j : s.faces_of(task.cell))
      for (const auto& delta : sigma_E.faces_of(sigma))
        results[t].push_back(
            {linear_image(split.rho, product(s.cells()[j], sigma_E.materialize(delta).polyhedron())), j, delta});
  });
  report.note("face-bijection certificates: " + std::to_string(tasks.size()) + " (cell, sigma_I) pairs");

  std::map<PointOnLine, PolyhedralComplex> slices;
  std::map<PointOnLine, std::vector<CellProvenance>> provenance;
  for (const auto& p : X.special_points) {
    std::vector<Polyhedron> cells;
    for (std::size_t t = 0; t < tasks.size(); ++t)
      if (tasks[t].point == p)
        for (const auto& c : results[t]) cells.push_back(c.cell);
    PolyhedralComplex complex(n, cells);
    std::vector<std::set<std::pair<std::size_t, SigmaECone>>> sources(complex.cells().size());
    for (std::size_t t = 0; t < tasks.size(); ++t)
      if (tasks[t].point == p)
        for (const auto& c : results[t]) sources[*complex.index_of(c.cell)].emplace(c.source, c.sigma);
    std::vector<CellProvenance> tags;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (sources[i].size() != 1)
        throw InconsistencyError("build_YC: cell " + std::to_string(i) + " of the slice at " + p.to_string() +
                                 " has " + std::to_string(sources[i].size()) + " source pairs");
      tags.push_back({p, sources[i].begin()->first, sources[i].begin()->second});
    }
    const CompletenessCertificate cert = is_complete(complex, exec);
    if (!cert.complete())
      throw InconsistencyError("build_YC: slice at " + p.to_string() + " is not complete" +
                               (cert.uncovered ? "; uncovered point " + to_string(*cert.uncovered) : std::string()));
    slices.emplace(p, std::move(complex));
    provenance.emplace(p, std::move(tags));
  }
  report.note("completeness certificates: " + std::to_string(slices.size()) + " slices");

  // Tail fan and marked cones as rho-images of products with every cone of Sigma_E.
  auto image_cones = [&](const std::vector<Cone>& source) {
    std::vector<std::pair<Cone, ConeProvenance>> out;
    for (std::size_t i = 0; i < source.size(); ++i)
      for (const auto& delta : all_sigma)
        out.emplace_back(Cone(linear_image(split.rho, product(source[i], sigma_E.materialize(delta)).polyhedron())),
                         ConeProvenance{i, delta});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  const auto tail_images = image_cones(X.tail_fan.cones());
  std::vector<Cone> tail_cones;
  for (const auto& [c, _] : tail_images) tail_cones.push_back(c);
  Fan tail(n, tail_cones);
  if (tail.cones().size() != tail_images.size())
    throw InconsistencyError("build_YC: tail cone images are not distinct");
  std::vector<ConeProvenance> tail_provenance;
  for (const auto& c : tail.cones()) {
    auto it = std::lower_bound(tail_images.begin(), tail_images.end(), c,
                               [](const auto& e, const Cone& v) { return e.first < v; });
    tail_provenance.push_back(it->second);
  }

  const auto marked_images = image_cones(X.marked);
  std::vector<Cone> marked;
  std::vector<ConeProvenance> marked_provenance;
  for (const auto& [c, tag] : marked_images) {
    marked.push_back(c);
    marked_provenance.push_back(tag);
  }

  // Properness of rho(D x sigma_I) for the generators of X's divisorial fan.
  std::mt19937_64 rng(0x5eed);
  const auto generators = fansy_generators(X);
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t k = 0; k < maximal_sigma.size(); ++k)
      check_member(generators[g], sigma_E.materialize(maximal_sigma[k]), split, rng, report,
                   "member " + std::to_string(g) + " x sigma_" + std::to_string(k));
  report.note("properness checks: " + std::to_string(generators.size() * maximal_sigma.size()) + " members");

  MarkedFansyDivisor fansy(std::move(tail), std::move(slices), std::move(marked), X.special_points);
  return {N, d, std::move(fansy), std::move(provenance), std::move(tail_provenance), std::move(marked_provenance),
          std::move(report)};
}

QuotientCounts build_YC_counts(const MarkedFansyDivisor& X_in, std::size_t N, const ResourceCaps& caps) {
  if (N > caps.counting_N)
    throw ResourceCapError("build_YC: N = " + std::to_string(N) + " exceeds the counting cap " +
                           std::to_string(caps.counting_N));
  const MarkedFansyDivisor X = ensure_min_P(X_in);
  const FVector e = sigma_E_fvector_closed_form(N, X.rank);
  QuotientCounts q{N, X.rank, {}, X.tail_fan.f_vector().convolve(e), {}};
  for (const auto& p : X.special_points) q.slices.emplace(p, X.slice(p).f_vector().convolve(e));
  FVector marked;
  for (const auto& c : X.marked) marked.add(c.dimension());
  q.marked = marked.convolve(e);
  return q;
}

QuotientCounts cell_counts(const QuotientFansyDivisor& Y) {
  QuotientCounts q{Y.N, Y.d, {}, Y.fansy.tail_fan.f_vector(), {}};
  for (const auto& p : Y.fansy.special_points) q.slices.emplace(p, Y.fansy.slice(p).f_vector());
  FVector marked;
  for (const auto& c : Y.fansy.marked) marked.add(c.dimension());
  q.marked = marked;
  return q;
}

MarkedFansyDivisor toric_downgrade(const Fan& big_fan) {
  const std::size_t rank = big_fan.ambient_rank();
  if (rank < 2) throw DimensionError("toric_downgrade: the fan needs rank at least 2");
  if (!is_complete(big_fan).complete()) throw ValidityError("toric_downgrade: the fan is not complete");
  const std::size_t n = rank - 1;
  IntegerMatrix drop = zeros(n, rank);
  for (std::size_t i = 0; i < n; ++i) drop[i][i] = 1;
  const LatticeMap s(rank, n, drop);
  const Vector q = unit_vector(rank, n);
  auto level = [&](const Polyhedron& p, int value) {
    return linear_image(s, Polyhedron::from_constraints(rank, p.inequalities(),
                                                        [&] {
                                                          auto eqs = p.equations();
                                                          eqs.push_back({q, value});
                                                          return eqs;
                                                        }()));
  };

  std::vector<Polyhedron> at_zero, at_infinity;
  std::vector<Cone> tails, marked;
  for (const auto& c : big_fan.cones()) {
    const Polyhedron& p = c.polyhedron();
    if (Polyhedron a = level(p, 1); !a.is_empty()) at_zero.push_back(std::move(a));
    if (Polyhedron b = level(p, -1); !b.is_empty()) at_infinity.push_back(std::move(b));
    Cone t(level(p, 0));
    bool above = false, below = false;
    for (const auto& g : c.generators()) {
      if (g[n] > 0) above = true;
      if (g[n] < 0) below = true;
    }
    if (above && below) marked.push_back(t);
    tails.push_back(std::move(t));
  }
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

  std::map<PointOnLine, PolyhedralComplex> slices;
  slices.emplace(PointOnLine::finite(0), PolyhedralComplex(n, at_zero));
  slices.emplace(PointOnLine::infinity(), PolyhedralComplex(n, at_infinity));
  for (const auto& [p, complex] : slices) {
    const CompletenessCertificate cert = is_complete(complex);
    if (!cert.complete()) throw InconsistencyError("toric_downgrade: slice at " + p.to_string() + " is not complete");
  }
  return MarkedFansyDivisor(Fan(n, tails), std::move(slices), std::move(marked),
                            {PointOnLine::finite(0), PointOnLine::infinity()});
}

}  // namespace tvchow
