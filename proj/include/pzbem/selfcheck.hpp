#pragma once

#include <string>
#include <vector>

#include "pzbem/types.hpp"

namespace pzbem {

// Outcome of one built-in verification suite. `worst` is the extreme
// observed value of whatever the suite measures (a relative error for the
// kernel/continuity/identity suites, the smallest observed order for the
// convolution suite) and `limit` is the pinned threshold it was held to.
struct CheckReport {
    std::string name;
    bool pass = false;
    Real worst = 0.0;
    Real limit = 0.0;
    std::string detail;
};

// Radial kernel K0 against an independent integral-representation oracle
// (trapezoidal quadrature of exp(-z cosh t), doubled until converged) on a
// 200-point logarithmic grid covering |z| in [1e-6, 100] with
// |arg z| <= pi/3. Pass: relative error <= 1e-12 everywhere.
CheckReport check_radial_kernel();

// Continuity of the single-layer potential across the boundary: for a
// smooth density on an h = 0.05 rectangle boundary at frequency s = 2,
// two-sided Richardson extrapolation toward several panel midpoints must
// agree across sides. Pass: relative mismatch <= 1e-6.
CheckReport check_layer_continuity();

// Energy identity of the solid block A(s) = [[K_C + s^2 M, E_c],
// [-E_c^T, K_eps]]: for random states z = (u, psi) and frequencies s,
//   Re(conj(s) z^H A z) = Re(s) [u^H K_C u + |s|^2 u^H M u
//                                + psi^H K_eps psi] + 2 Im(s) Im(u^H E_c psi),
// and at real s the coupling term drops so the right side is Re(s) times
// the material energy norm alone. Pass: both forms hold to 1e-10 relative
// over 50 seeded random draws, and the coupling blocks cancel from the
// real part to machine precision.
CheckReport check_energy_identity();

// Observed order of the convolution schemes integrating the causal signal
// g(t) = t^5 for t > 0 through the transfer function F(s) = 1/s, against
// the exact antiderivative t^6/6, over step halvings 0.02 -> 0.01 ->
// 0.005. Pass: every observed order >= 1.9 for both multistep rules.
CheckReport check_convolution_order();

// The four suites above, in that order. `log_progress` prints one line
// per finished suite to stderr.
std::vector<CheckReport> run_all_checks(bool log_progress = false);

}  // namespace pzbem
