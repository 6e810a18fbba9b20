#pragma once

#include <cstddef>

namespace tvchow {

enum class Execution { serial, parallel };

struct ResourceCaps {
  std::size_t geometric_rank = 8;  // ambient rank N*d above which nothing is materialized
  std::size_t counting_N = 16;

  /// Defaults overridden by TVCHOW_GEOMETRIC_RANK_CAP and TVCHOW_COUNTING_N_CAP.
  static ResourceCaps from_environment();
};

}  // namespace tvchow
