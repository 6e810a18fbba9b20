#include "double_description.hpp"

#include <cstdint>

#include "tvchow/errors.hpp"

namespace tvchow::detail {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVec v;
  Bits tight;
};

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

void normalize(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

IntVec combine(const Integer& s, const IntVec& a, const Integer& t, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
  normalize(r);
  return r;
}

}  // namespace

ConeGenerators cone_from_inequalities(const std::vector<IntVec>& constraints, std::size_t dim) {
  const std::size_t m = constraints.size();
  std::vector<IntVec> lines;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t i = 0; i < m; ++i) {
    const IntVec& a = constraints[i];
    if (a.size() != dim) throw DimensionError("double description: constraint rank mismatch");

    std::size_t li = lines.size();
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (dot(a, lines[j]) != 0) {
        li = j;
        break;
      }
    }
    if (li < lines.size()) {
      IntVec l = lines[li];
      Integer al = dot(a, l);
      if (al < 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      lines.erase(lines.begin() + static_cast<long>(li));
      for (auto& l2 : lines) {
        Integer a2 = dot(a, l2);
        if (a2 != 0) l2 = combine(al, l2, -a2, l);
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r.v);
        if (ar != 0) r.v = combine(al, r.v, -ar, l);
        r.tight.set(i);
      }
      Ray fresh{l, Bits(m)};
      for (std::size_t k = 0; k < i; ++k) fresh.tight.set(k);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].v);
      int s = sgn(val[r]);
      if (s > 0) {
        pos.push_back(r);
        next.push_back(rays[r]);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        next.push_back(rays[r]);
        next.back().tight.set(i);
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bits common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (common.subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{combine(val[p], rays[n].v, -val[n], rays[p].v), common};
        fresh.tight.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lines = std::move(lines);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

IntVec integer_direction(const Vector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * lcm_den;
    r[i] = scaled.get_num();
  }
  normalize(r);
  return r;
}

Vector to_vector(const IntVec& v) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

}  // namespace tvchow::detail
