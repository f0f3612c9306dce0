#pragma once

#include "pzbem/bie_space.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

// Galerkin matrices of the boundary integral operators for the kernel
// G(x,y) = (1/2pi) K0(s |x-y|) on the panel loop (s here is the wavenumber
// argument, i.e. Laplace parameter already divided by the wave speed):
//   V  (X x X):  single layer        <V lam, mu>
//   K  (X x Y):  double layer        <K phi, mu>
//   Kt (Y x X):  adjoint double layer <K' lam, eta>
//   W  (Y x Y):  hypersingular via integration by parts
//   M1 (X x Y):  surface pairing     <phi, mu>
struct BemBlocks {
    MatXc V, K, Kt, W;
    MatX M1;
};

BemBlocks assemble_bem(const BoundarySpace& bs, Complex s);

// Moment primitives over the unit interval, exposed for validation:
//   out0[q] = int_0^1 K0(alpha u) u^q du,  q = 0..qmax
//   out1[q] = int_0^1 K1(alpha u) u^q du,  q = 1..qmax (out1[0] unused)
// Requires Re(alpha) > 0 or alpha off the negative real axis, qmax <= 5.
void bessel_k_moments(Complex alpha, int qmax, Complex out0[6], Complex out1[6]);

// Representation formula v(x) = D(s)phi(x) - S(s)lam(x) evaluated away
// from the boundary. Near-panel quadrature subdivides adaptively;
// near_boundary flags points closer than half the longest panel.
struct PotentialEval {
    Complex value{0.0, 0.0};
    bool near_boundary = false;
};

PotentialEval eval_potentials(const BoundarySpace& bs, Complex s,
                              const VecXc& lam, const VecXc& phi,
                              const Vec2& x);

// Gradient of the same representation, for one-sided normal-derivative
// limits.
struct PotentialGradient {
    Complex gx{0.0, 0.0}, gy{0.0, 0.0};
    bool near_boundary = false;
};

PotentialGradient eval_potentials_gradient(const BoundarySpace& bs, Complex s,
                                           const VecXc& lam, const VecXc& phi,
                                           const Vec2& x);

}  // namespace pzbem
