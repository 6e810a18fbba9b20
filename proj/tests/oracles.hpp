#pragma once

#include "tvchow/chow_count.hpp"
#include "tvchow/downgrade.hpp"

namespace testing {

/// r, v, t of Y_C read directly from its cells: a slice cell of dimension Nd-k whose
/// source cell has an unmarked tail counts towards r_k, a marked cone of dimension Nd-k
/// towards v_k and an unmarked tail cone of dimension Nd+1-k towards t_k. Only k <= d.
inline tvchow::EquivariantCounts bucket_counts(const tvchow::MarkedFansyDivisor& X_in,
                                               const tvchow::QuotientFansyDivisor& Y) {
  using namespace tvchow;
  const MarkedFansyDivisor X = ensure_min_P(X_in);
  const long n = static_cast<long>(Y.N * Y.d);
  const long d = static_cast<long>(Y.d);
  EquivariantCounts out{Y.N, Y.d, std::vector<Integer>(Y.d + 2, 0), std::vector<Integer>(Y.d + 2, 0),
                        std::vector<Integer>(Y.d + 2, 0)};
  auto bump = [&](std::vector<Integer>& v, long k) {
    if (k >= 0 && k <= d) ++v[static_cast<std::size_t>(k)];
  };
  for (const auto& [p, tags] : Y.slice_provenance) {
    const PolyhedralComplex source = X.slice(p);
    const PolyhedralComplex target = Y.fansy.slice(p);
    for (std::size_t i = 0; i < tags.size(); ++i)
      if (!X.is_marked(tail_cone(source.cells()[tags[i].source_cell])))
        bump(out.r, n - target.cells()[i].dimension());
  }
  for (std::size_t i = 0; i < Y.fansy.marked.size(); ++i) {
    (void)X.marked.at(Y.marked_provenance[i].source_cone);
    bump(out.v, n - Y.fansy.marked[i].dimension());
  }
  const auto& tail = Y.fansy.tail_fan.cones();
  for (std::size_t i = 0; i < tail.size(); ++i)
    if (!X.is_marked(X.tail_fan.cones()[Y.tail_provenance[i].source_cone]))
      bump(out.t, n + 1 - tail[i].dimension());
  return out;
}

/// Convolution counts restricted to k <= d.
inline tvchow::EquivariantCounts truncated(tvchow::EquivariantCounts c) {
  for (auto* v : {&c.r, &c.v, &c.t}) v->back() = 0;
  return c;
}

}  // namespace testing
