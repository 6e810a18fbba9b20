#pragma once

#include <map>

#include "tvchow/complex.hpp"

namespace tvchow {

Fan p1_fan();
/// Rays (1,0), (0,1), (-1,-1).
Fan p2_fan();

/// Every cone is generated by part of a Z-basis.
bool is_smooth(const Fan& f);

/// Twist coefficients c_rho keyed by the primitive base ray.
using Twist = std::map<Vector, Integer>;

/// Fan of P(O + O(D)) with D = sum c_rho D_rho: rays (u_rho, c_rho) and (0, +-1).
Fan projectivized_bundle_fan(const Fan& base, const Twist& twist);

}  // namespace tvchow
