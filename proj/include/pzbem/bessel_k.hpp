#pragma once

#include "pzbem/types.hpp"

namespace pzbem {

// Modified Bessel functions K0, K1, I0, I1 of complex argument in the
// sector Re z >= 0 (z != 0), as needed for the Helmholtz kernel in the
// Laplace domain. Target: <= 1e-12 relative error over |z| in
// [1e-8, 700], |arg z| <= pi/2.
//
// Three regimes, selected by |z|:
//   |z| <= 3   ascending series for I0/I1 and the classical log-split
//              series for K0/K1;
//   3 < |z| < 18  fixed 40-node Gauss quadrature of the confluent
//              integral representation after u = w^2 substitution, with
//              precomputed exp(-w^2)-weight factors; K0 and K1 share one
//              complex square root per node;
//   |z| >= 18  asymptotic expansion, truncated at its smallest term.
//
// Values with Re z > 745 underflow (|K| ~ e^{-Re z}) and return exact 0.

struct K01 {
    Complex k0, k1;
};

// both functions at once (shares the expensive node loop)
K01 bessel_k01(Complex z);
Complex bessel_k0(Complex z);
Complex bessel_k1(Complex z);

// ascending series, valid for any z but accurate/cheap for |z| <~ 8
Complex bessel_i0(Complex z);
Complex bessel_i1(Complex z);

// Entire parts of the kernel log-splits (for singular quadrature):
//   K0(z) = k0_regular(z) - log(z) * I0(z)
//   K1(z) = 1/z + log(z) * I1(z) + k1_regular(z)
// Both series; intended for |z| <~ 8.
Complex k0_regular(Complex z);
Complex k1_regular(Complex z);

}  // namespace pzbem
