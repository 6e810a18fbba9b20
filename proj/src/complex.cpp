#include "tvchow/complex.hpp"

#include <numeric>
#include <random>
#include <set>

#include "tvchow/errors.hpp"
#include "tvchow/faces.hpp"

namespace tvchow {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PolyhedralComplex::PolyhedralComplex(std::size_t rank, const std::vector<Polyhedron>& generators)
    : rank_(rank) {
  std::map<Polyhedron, std::set<Polyhedron>> below;
  for (const auto& g : generators) {
    if (g.ambient_rank() != rank) throw DimensionError("complex: cell of wrong rank");
    if (g.is_empty()) throw ValidityError("complex: EMPTY cell");
    if (below.count(g)) continue;
    FaceLattice lattice(g);
    const auto& fs = lattice.faces();
    std::vector<std::vector<std::size_t>> down(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) down[i].push_back(i);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (auto [lo, hi] : lattice.covers()) {
        if (hi != i) continue;
        for (std::size_t x : down[lo]) down[i].push_back(x);
      }
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto& entry = below[fs[i].face];
      if (!entry.empty()) continue;
      for (std::size_t x : down[i]) entry.insert(fs[x].face);
    }
  }
  for (const auto& [cell, _] : below) {
    index_.emplace(cell, cells_.size());
    cells_.push_back(cell);
  }
  std::vector<bool> covered(cells_.size(), false);
  for (const auto& [cell, fs] : below) {
    std::vector<std::size_t> idx;
    for (const auto& f : fs) {
      std::size_t j = index_.at(f);
      idx.push_back(j);
      if (!(f == cell)) covered[j] = true;
    }
    std::sort(idx.begin(), idx.end());
    faces_.push_back(std::move(idx));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!covered[i]) maximal_.push_back(i);
}

std::optional<std::size_t> PolyhedralComplex::index_of(const Polyhedron& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PolyhedralComplex::dimension() const { return cells_.empty() ? -1 : cells_.back().dimension(); }

FVector PolyhedralComplex::f_vector() const {
  FVector f;
  for (const auto& c : cells_) f.add(static_cast<std::size_t>(c.dimension()));
  return f;
}

ValidationReport PolyhedralComplex::validate() const {
  ValidationReport report;
  auto is_face = [&](const Polyhedron& x, std::size_t cell) {
    auto j = index_of(x);
    if (!j) return false;
    const auto& fs = faces_[cell];
    return std::binary_search(fs.begin(), fs.end(), *j);
  };
  for (std::size_t a = 0; a < maximal_.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal_.size(); ++b) {
      const std::size_t i = maximal_[a], j = maximal_[b];
      Polyhedron x = intersect(cells_[i], cells_[j]);
      if (x.is_empty()) continue;
      if (!is_face(x, i) || !is_face(x, j))
        report.fail("cells " + std::to_string(i) + " and " + std::to_string(j) +
                    " meet outside a common face");
    }
  }
  return report;
}

Fan PolyhedralComplex::tail_fan() const {
  std::vector<Cone> tails;
  for (const auto& c : cells_) tails.push_back(tail_cone(c));
  Fan fan(rank_, tails);
  if (!fan.validate().ok()) throw ValidityError("complex: tail cones do not form a fan");
  return fan;
}

Fan::Fan(std::size_t rank, const std::vector<Cone>& generators)
    : Fan([&] {
        std::vector<Polyhedron> ps;
        for (const auto& c : generators) ps.push_back(c.polyhedron());
        return PolyhedralComplex(rank, ps);
      }()) {}

Fan::Fan(PolyhedralComplex complex) : complex_(std::move(complex)) {
  for (const auto& c : complex_.cells()) cones_.emplace_back(c);
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (std::size_t i : complex_.maximal_cells()) out.push_back(cones_[i]);
  return out;
}

std::vector<Vector> Fan::rays() const {
  std::vector<Vector> out;
  for (const auto& c : cones_)
    if (c.dimension() == 1 && c.lines().empty()) out.push_back(c.rays().front());
  return out;
}

std::vector<Vector> completeness_samples(std::size_t rank, std::size_t count) {
  std::mt19937_64 rng(0x5eedULL + rank);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 9);
  std::vector<Vector> out;
  for (std::size_t s = 0; s < count; ++s) {
    Vector v;
    for (std::size_t i = 0; i < rank; ++i) {
      Rational q(num(rng), static_cast<unsigned long>(den(rng)));
      q.canonicalize();
      v.push_back(q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

CompletenessCertificate is_complete(const PolyhedralComplex& c, Execution exec) {
  CompletenessCertificate cert;
  const auto& cells = c.cells();
  const auto& maximal = c.maximal_cells();
  const int rank = static_cast<int>(c.ambient_rank());

  cert.full_dimensional = !maximal.empty();
  for (std::size_t i : maximal)
    if (cells[i].dimension() != rank) cert.full_dimensional = false;

  std::map<std::size_t, std::vector<std::size_t>> ridge_owners;
  for (std::size_t m = 0; m < maximal.size(); ++m)
    for (std::size_t f : c.faces_of(maximal[m]))
      if (cells[f].dimension() == cells[maximal[m]].dimension() - 1) ridge_owners[f].push_back(m);
  cert.ridges_paired = true;
  UnionFind uf(maximal.size());
  for (const auto& [ridge, owners] : ridge_owners) {
    if (owners.size() != 2) cert.ridges_paired = false;
    for (std::size_t k = 1; k < owners.size(); ++k) uf.unite(owners[0], owners[k]);
  }
  cert.connected = true;
  for (std::size_t m = 1; m < maximal.size(); ++m)
    if (uf.find(m) != uf.find(0)) cert.connected = false;

  const auto samples = completeness_samples(c.ambient_rank(), kCompletenessSamples);
  std::vector<char> hit(samples.size(), 0);
  auto probe = [&](std::size_t s) {
    for (std::size_t i : maximal)
      if (cells[i].contains(samples[s])) return char(1);
    return char(0);
  };
  const long n = static_cast<long>(samples.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < n; ++s) hit[static_cast<std::size_t>(s)] = probe(static_cast<std::size_t>(s));
  } else {
    for (long s = 0; s < n; ++s) hit[static_cast<std::size_t>(s)] = probe(static_cast<std::size_t>(s));
  }
  cert.samples = samples.size();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    if (hit[s]) {
      ++cert.covered;
    } else if (!cert.uncovered) {
      cert.uncovered = samples[s];
    }
  }
  return cert;
}

Fan product_fan(const Fan& a, const Fan& b) {
  std::vector<Cone> cones;
  for (const auto& x : a.maximal_cones())
    for (const auto& y : b.maximal_cones()) cones.push_back(product(x, y));
  return Fan(a.ambient_rank() + b.ambient_rank(), cones);
}

}  // namespace tvchow
