#include "tvchow/config.hpp"

#include <cstdlib>
#include <string>

#include "tvchow/errors.hpp"

namespace tvchow {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw Error("");
    return v;
  } catch (const std::exception&) {
    throw Error(std::string(name) + ": expected a positive integer, got '" + raw + "'");
  }
}

}  // namespace

ResourceCaps ResourceCaps::from_environment() {
  ResourceCaps caps;
  caps.geometric_rank = env_or("TVCHOW_GEOMETRIC_RANK_CAP", caps.geometric_rank);
  caps.counting_N = env_or("TVCHOW_COUNTING_N_CAP", caps.counting_N);
  return caps;
}

}  // namespace tvchow
