#include "tvchow/chow_count.hpp"

#include "tvchow/errors.hpp"
#include "tvchow/sigma_e.hpp"

namespace tvchow {

namespace {

Integer at(const std::vector<Integer>& v, std::size_t k) { return k < v.size() ? v[k] : Integer(0); }

std::vector<Integer> add(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = at(a, k) + at(b, k);
  return out;
}

std::vector<Integer> convolve_with(const std::vector<Integer>& x, const FVector& e, long shift) {
  std::vector<Integer> out(x.size(), 0);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t m = 0; m <= k; ++m) out[k] += e[shift - static_cast<long>(k - m)] * x[m];
  return out;
}

}  // namespace

CountProfile CountProfile::zero(std::size_t d, std::size_t num_special_points) {
  const std::vector<Integer> z(d + 2, 0);
  return {d, z, z, z, num_special_points};
}

ValidationReport CountProfile::validate() const {
  ValidationReport r;
  for (const auto* v : {&R, &V, &T}) {
    if (v->size() != d + 2) r.fail("profile: arrays must have length d+2 = " + std::to_string(d + 2));
    for (const auto& x : *v)
      if (x < 0) r.fail("profile: negative entry");
    if (v->size() == d + 2 && v->back() != 0) r.fail("profile: entry at k = d+1 must vanish");
  }
  if (num_special_points < 2) r.fail("profile: fewer than two special points");
  return r;
}

Integer CountProfile::total(std::size_t k) const { return at(R, k) + at(V, k) + at(T, k); }

CountProfile operator+(const CountProfile& a, const CountProfile& b) {
  if (a.d != b.d || a.num_special_points != b.num_special_points)
    throw DimensionError("profile sum: d or |P| differ");
  return {a.d, add(a.R, b.R), add(a.V, b.V), add(a.T, b.T), a.num_special_points};
}

EquivariantCounts operator+(const EquivariantCounts& a, const EquivariantCounts& b) {
  if (a.N != b.N || a.d != b.d) throw DimensionError("count sum: N or d differ");
  return {a.N, a.d, add(a.r, b.r), add(a.v, b.v), add(a.t, b.t)};
}

std::string to_string(CountStrategy s) { return s == CountStrategy::example_table ? "example-table" : "textbook"; }

CountStrategy parse_strategy(const std::string& text) {
  if (text == "example-table") return CountStrategy::example_table;
  if (text == "textbook") return CountStrategy::textbook;
  throw Error("unknown count strategy '" + text + "'");
}

MarkedFansyDivisor ensure_min_P(const MarkedFansyDivisor& X) {
  if (X.special_points.size() >= 2) return X;
  MarkedFansyDivisor out = X;
  for (const auto& p : {PointOnLine::finite(0), PointOnLine::infinity(), PointOnLine::finite(1)}) {
    if (out.special_points.size() >= 2) break;
    if (out.special_points.count(p)) continue;
    out.special_points.insert(p);
    out.slices.emplace(p, X.tail_fan.as_complex());
  }
  return out;
}

CountProfile enumerate_RVT(const MarkedFansyDivisor& X_in, CountStrategy strategy) {
  const MarkedFansyDivisor X = ensure_min_P(X_in);
  const long d = static_cast<long>(X.rank);
  CountProfile p = CountProfile::zero(X.rank, X.special_points.size());
  auto bump = [&](std::vector<Integer>& v, long k) {
    if (k >= 0 && k <= d) ++v[static_cast<std::size_t>(k)];
  };

  std::vector<Integer>& slice_faces = strategy == CountStrategy::example_table ? p.R : p.V;
  std::vector<Integer>& marked = strategy == CountStrategy::example_table ? p.V : p.T;
  std::vector<Integer>& unmarked_tail = strategy == CountStrategy::example_table ? p.T : p.R;

  for (const auto& pt : X.special_points) {
    const PolyhedralComplex s = X.slice(pt);
    for (const auto& cell : s.cells()) {
      if (strategy == CountStrategy::example_table && X.is_marked(tail_cone(cell))) continue;
      bump(slice_faces, d - cell.dimension());
    }
  }
  for (const auto& c : X.marked) bump(marked, d - c.dimension());
  for (const auto& c : X.tail_fan.cones())
    if (!X.is_marked(c)) bump(unmarked_tail, d + 1 - c.dimension());
  return p;
}

Integer S_closed_form(const FVector& tail_fvector, std::size_t num_P, std::size_t d, std::size_t i) {
  if (i > d) return 0;
  const long j = static_cast<long>(d - i);
  if (i < d) return tail_fvector[j + 1] + 2 * tail_fvector[j];
  return tail_fvector[1] + Integer(static_cast<unsigned long>(num_P));
}

Integer Sprime_closed_form(std::size_t N, std::size_t d, std::size_t i) {
  const std::size_t top = N * d - d;
  if (i > top) return 0;
  return sigma_E_fvector_closed_form(N, d, static_cast<long>(top - i));
}

EquivariantCounts convolve_counts(const CountProfile& p, std::size_t N) {
  const FVector e = sigma_E_fvector_closed_form(N, p.d);
  const long top = static_cast<long>(N * p.d - p.d);
  return {N, p.d, convolve_with(p.R, e, top), convolve_with(p.V, e, top), convolve_with(p.T, e, top)};
}

bool S_check(const CountProfile& p, const FVector& tail_fvector, std::size_t i) {
  return p.total(i) == S_closed_form(tail_fvector, p.num_special_points, p.d, i);
}

ValidationReport check_profile(const CountProfile& p, const FVector& tail_fvector) {
  ValidationReport r;
  for (std::size_t i = 0; i <= p.d + 1; ++i)
    if (!S_check(p, tail_fvector, i))
      r.warn("S_" + std::to_string(i) + ": R+V+T = " + p.total(i).get_str() + " but the closed form gives " +
             S_closed_form(tail_fvector, p.num_special_points, p.d, i).get_str());
  return r;
}

SumIdentity sum_identity(const CountProfile& p, const FVector& tail_fvector, std::size_t N, std::size_t k) {
  const EquivariantCounts c = convolve_counts(p, N);
  SumIdentity s;
  s.lhs = k < c.r.size() ? c.total(k) : Integer(0);
  s.rhs = 0;
  for (std::size_t i = 0; i <= k; ++i)
    s.rhs += Sprime_closed_form(N, p.d, i) * S_closed_form(tail_fvector, p.num_special_points, p.d, k - i);
  return s;
}

GeneratorReport generator_report(const CountProfile& p, std::size_t k) {
  GeneratorReport g;
  g.k = k;
  g.V = at(p.V, k);
  g.R = at(p.R, k);
  g.T = at(p.T, k);
  g.disclaimer =
      "generators only: the relations lattice K is not computed; the third summand of the printed sequence "
      "is read as Z^{T_k}";
  return g;
}

}  // namespace tvchow
