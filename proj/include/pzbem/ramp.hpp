#pragma once

#include "pzbem/types.hpp"

namespace pzbem {

// C^4 smooth step: 0 for t <= 0, 1 for t >= 1, and on [0,1] the
// polynomial 252 t^5 - 1050 t^6 + 1800 t^7 - 1575 t^8 + 700 t^9 - 126 t^10
// (four vanishing derivatives at both ends).
Real ramp(Real t);

// k-th derivative of the ramp, k = 0..4.
Real ramp_d(Real t, int k);

// Exact antiderivative int_0^t ramp; equals t - 5/11 for t >= 1.
Real ramp_integral(Real t);

}  // namespace pzbem
