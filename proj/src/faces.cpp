#include "tvchow/faces.hpp"

#include <algorithm>
#include <set>

#include "tvchow/errors.hpp"

namespace tvchow {

namespace {

using Support = std::vector<bool>;

bool subset(const Support& a, const Support& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

Polyhedron face_of(const Polyhedron& p, const std::vector<std::size_t>& generators) {
  const std::size_t nv = p.vertices().size();
  std::vector<Vector> vs, rs;
  for (std::size_t g : generators) {
    if (g < nv)
      vs.push_back(p.vertices()[g]);
    else
      rs.push_back(p.rays()[g - nv]);
  }
  if (vs.empty()) throw ValidityError("face_of: generator set without a vertex");
  return Polyhedron::from_irredundant(p.ambient_rank(), std::move(vs), std::move(rs), p.lines());
}

FaceLattice::FaceLattice(const Polyhedron& p) {
  if (p.is_empty()) throw EmptyOperandError("faces: EMPTY operand");
  const std::size_t nv = p.vertices().size();
  const std::size_t ng = nv + p.rays().size();

  std::vector<Support> tight;
  for (const auto& c : p.inequalities()) {
    Support s(ng, false);
    for (std::size_t i = 0; i < nv; ++i) s[i] = dot(c.normal, p.vertices()[i]) == c.rhs;
    for (std::size_t i = nv; i < ng; ++i) s[i] = dot(c.normal, p.rays()[i - nv]) == 0;
    tight.push_back(std::move(s));
  }

  auto has_vertex = [nv](const Support& s) {
    return std::any_of(s.begin(), s.begin() + static_cast<long>(nv), [](bool b) { return b; });
  };

  std::set<Support> seen;
  std::vector<Support> queue{Support(ng, true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& t : tight) {
      Support s(ng);
      for (std::size_t i = 0; i < ng; ++i) s[i] = queue[head][i] && t[i];
      if (!has_vertex(s) || seen.count(s)) continue;
      seen.insert(s);
      queue.push_back(std::move(s));
    }
  }

  std::vector<std::pair<Face, Support>> found;
  for (const auto& s : queue) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ng; ++i)
      if (s[i]) idx.push_back(i);
    Polyhedron f = face_of(p, idx);
    int d = f.dimension();
    found.push_back({Face{d, std::move(f)}, s});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.dimension, a.first.face) < std::tie(b.first.dimension, b.first.face);
  });
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < found.size(); ++j) {
      if (found[j].first.dimension != found[i].first.dimension + 1) continue;
      if (subset(found[i].second, found[j].second)) covers_.emplace_back(i, j);
    }
  }
  for (auto& f : found) faces_.push_back(std::move(f.first));
}

FVector FaceLattice::f_vector() const {
  FVector f;
  for (const auto& face : faces_) f.add(static_cast<std::size_t>(face.dimension));
  return f;
}

std::vector<std::size_t> FaceLattice::facets() const {
  std::vector<std::size_t> out;
  const int top = faces_.back().dimension;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dimension == top - 1) out.push_back(i);
  return out;
}

FaceLattice faces(const Polyhedron& p) { return FaceLattice(p); }

}  // namespace tvchow
