#pragma once

#include <string>
#include <vector>

#include "tvchow/bundle.hpp"
#include "tvchow/config.hpp"

namespace tvchow {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Twist on the P^2 fan keyed by the rays (1,0), (0,1), (-1,-1).
Twist p2_twist(long c1, long c2, long c0);
/// The two bundles of the worked example over P^2.
Twist example_twist_E();
Twist example_twist_F();

/// Reference rows (r_2, v_2, t_2, r_1, v_1, t_1) at N = 3.
std::vector<long> expected_row_E();
std::vector<long> expected_row_F();

/// Table row (r_2, v_2, t_2, r_1, v_1, t_1) of P(O + O(D)) over P^2 at N = 3.
std::vector<Integer> example_row(const Twist& twist);

/// The invariant suite, one entry per property.
std::vector<CheckResult> run_selfcheck(Execution exec = Execution::parallel);

}  // namespace tvchow
