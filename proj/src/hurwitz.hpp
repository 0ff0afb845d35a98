#pragma once

#include "num.hpp"

namespace sqrtlat {

// Analytic continuation of sum_{k>=0} (k+a)^{-s} for s <= 1/2, 0 < a < 1.
// The result carries the precision active at the call site; internal work
// uses enough extra precision to absorb the cancellation that appears for
// very negative s.
mpreal hurwitz_zeta(double s, double a);

}  // namespace sqrtlat
