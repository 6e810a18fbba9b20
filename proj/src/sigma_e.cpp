#include "tvchow/sigma_e.hpp"

#include <bit>

#include "tvchow/errors.hpp"

namespace tvchow {

namespace {

constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 34;

std::uint64_t full_mask(std::size_t N) { return N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1; }

}  // namespace

std::size_t SigmaECone::dimension() const {
  std::size_t s = 0;
  for (auto m : masks) s += static_cast<std::size_t>(std::popcount(m));
  return s;
}

SparseSigmaE::SparseSigmaE(std::size_t N, std::size_t d) : N_(N), d_(d) {
  if (N == 0 || d == 0) throw ValidityError("Sigma_E: N and d must be positive");
  if (N > 63) throw ResourceCapError("Sigma_E: N > 63 does not fit the sparse encoding");
}

std::vector<SigmaECone> SparseSigmaE::maximal_cones() const {
  std::vector<SigmaECone> out;
  std::vector<std::size_t> idx(d_, 0);
  const std::uint64_t full = full_mask(N_);
  while (true) {
    SigmaECone c;
    for (std::size_t t = 0; t < d_; ++t) c.masks.push_back(full & ~(std::uint64_t{1} << idx[t]));
    out.push_back(std::move(c));
    std::size_t t = d_;
    while (t > 0 && ++idx[t - 1] == N_) idx[--t] = 0;
    if (t == 0) break;
  }
  return out;
}

std::vector<SigmaECone> SparseSigmaE::faces_of(const SigmaECone& c) const {
  std::vector<SigmaECone> out{SigmaECone{std::vector<std::uint64_t>(d_, 0)}};
  for (std::size_t t = 0; t < d_; ++t) {
    std::vector<SigmaECone> next;
    for (const auto& partial : out) {
      const std::uint64_t m = c.masks[t];
      for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
        SigmaECone x = partial;
        x.masks[t] = sub;
        next.push_back(std::move(x));
        if (sub == 0) break;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SigmaECone> SparseSigmaE::all_cones() const {
  const std::uint64_t per = full_mask(N_);
  std::vector<SigmaECone> out{SigmaECone{}};
  for (std::size_t t = 0; t < d_; ++t) {
    std::vector<SigmaECone> next;
    for (const auto& partial : out) {
      for (std::uint64_t m = 0; m < per; ++m) {
        SigmaECone x = partial;
        x.masks.push_back(m);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

FVector SparseSigmaE::f_vector(Execution exec) const {
  const std::uint64_t per = full_mask(N_);
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < d_; ++t) {
    if (total > kEnumerationLimit / per) throw ResourceCapError("Sigma_E: too many cones to enumerate");
    total *= per;
  }
  const std::size_t top = d_ * (N_ - 1);
  std::vector<std::uint64_t> counts(top + 1, 0);
  auto dim_of = [&](std::uint64_t index) {
    std::size_t s = 0;
    for (std::size_t t = 0; t < d_; ++t) {
      s += static_cast<std::size_t>(std::popcount(index % per));
      index /= per;
    }
    return s;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(top + 1, 0);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i)
        ++local[dim_of(static_cast<std::uint64_t>(i))];
#pragma omp critical
      for (std::size_t k = 0; k <= top; ++k) counts[k] += local[k];
    }
  } else {
    for (std::uint64_t i = 0; i < total; ++i) ++counts[dim_of(i)];
  }
  std::vector<Integer> out;
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return FVector(std::move(out));
}

Cone SparseSigmaE::materialize(const SigmaECone& c) const {
  const std::size_t n = ambient_rank();
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < d_; ++t)
    for (std::size_t j = 0; j < N_; ++j)
      if (c.masks[t] >> j & 1) gens.push_back(unit_vector(n, t * N_ + j));
  return Cone(n, gens);
}

Fan build_sigma_E(std::size_t N, std::size_t d, const ResourceCaps& caps) {
  if (N * d > caps.geometric_rank)
    throw ResourceCapError("Sigma_E: ambient rank " + std::to_string(N * d) + " exceeds the geometric cap " +
                           std::to_string(caps.geometric_rank));
  SparseSigmaE sparse(N, d);
  std::vector<Cone> cones;
  for (const auto& c : sparse.maximal_cones()) cones.push_back(sparse.materialize(c));
  return Fan(N * d, cones);
}

FVector sigma_E_fvector_closed_form(std::size_t N, std::size_t d) {
  std::vector<Integer> factor;
  for (std::size_t j = 0; j < N; ++j) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), N, j);
    factor.push_back(b);
  }
  FVector one(factor), acc({1});
  for (std::size_t t = 0; t < d; ++t) acc = acc.convolve(one);
  return acc;
}

Integer sigma_E_fvector_closed_form(std::size_t N, std::size_t d, long k) {
  if (k < 0 || static_cast<std::size_t>(k) > d * (N - 1)) return 0;
  return sigma_E_fvector_closed_form(N, d)[k];
}

}  // namespace tvchow
