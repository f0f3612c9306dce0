#pragma once

#include <functional>
#include <vector>

#include "pzbem/coupled.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

// Multistep generators for Convolution Quadrature. Both are A-stable, so
// the scaled generating symbol delta(zeta)/kappa maps the contour
// |zeta| = R < 1 into the right half plane (asserted numerically when a
// scheme is built).
enum class CQKind { BDF2, Trapezoidal };

Complex cq_symbol(CQKind kind, Complex zeta);  // TR throws at zeta = -1

struct CQScheme {
    CQKind kind = CQKind::BDF2;
    Real kappa = 0.0;  // time step
    int N = 0;         // steps; samples live at t_n = n kappa, n = 0..N
    Real R = 0.0;      // contour radius in (0,1)
    Real eps = 0.0;    // accuracy target that set R = eps^(1/(2N+2))

    Real time(int n) const { return kappa * n; }
    // frequency attached to contour node l (zeta_l = e^{-2 pi i l/(N+1)})
    Complex frequency(int l) const;
};

CQScheme make_scheme(CQKind kind, Real kappa, int N, Real eps = 1e-14);

// Uniformly sampled vector signal; column n holds the sample at t_n.
struct TimeSignal {
    MatXc samples;  // dim x (N+1)
    Real kappa = 0.0;
    bool causal = true;
};

// Frequency-domain action x_hat -> F(s) x_hat of the transfer operator.
using Transfer = std::function<VecXc(Complex s, const VecXc& xhat)>;

// All-steps-at-once forward convolution: scale column n by R^n, DFT over
// the N+1 steps, apply F at s_l = delta(R zeta_l)/kappa, inverse DFT,
// unscale by R^{-n}. Deterministic (fixed summation order, direct DFT).
TimeSignal cq_convolve(const CQScheme& sch, const Transfer& F,
                       const TimeSignal& g);

// Right-hand-side streams for the coupled convolution solve. Columns are
// time steps; all entries are plain (frequency-independent) samples.
// Column n of `c0` collects every RHS contribution without a Laplace
// factor (volume loads, surface flux, the acoustic datum pairing, and the
// Dirichlet lifting); `c1` collects the part that is multiplied by s at
// each frequency (the pressure-datum traction channel); `mu` holds the
// nodal Dirichlet samples used to re-insert constrained potentials.
struct CqRhsStreams {
    MatX c0;  // n_total x (N+1)
    MatX c1;  // n_total x (N+1)
    MatX mu;  // num scalar nodes x (N+1)
};

// Real time series of every solution component, plus the frequency-domain
// boundary densities needed to evaluate the acoustic field afterwards.
struct CqSolution {
    MatX u;    // 2n x (N+1)
    MatX psi;  // n x (N+1), Dirichlet rows re-inserted from mu
    MatX lam;  // nX x (N+1)
    MatX phi;  // nY x (N+1)
    MatXc lam_hat;  // nX x (N+1), one column per contour node
    MatXc phi_hat;  // nY x (N+1)
    Real max_imag = 0.0;  // largest imaginary residue dropped at the end
};

// Additional right-hand-side contribution evaluated per contour node; used
// for data whose transform is known in closed form rather than sampled in
// time. Must be safe to call concurrently when threads > 1.
using ExtraRhs = std::function<VecXc(Complex s, int l)>;

// Convolution-equation solve: one coupled frequency solve per contour
// node, with conjugate frequencies mirrored instead of solved when
// `use_pairing` is set (valid for real data; affects results only at the
// rounding level). `threads` splits the frequency loop; results are
// independent of the thread count.
CqSolution cq_solve(const CoupledSpaces& sp, const CQScheme& sch,
                    const CqRhsStreams& data, bool use_pairing = true,
                    const ExtraRhs& extra = {}, int threads = 1);

// Scaled forward transform of one real signal: component l is
// sum_n R^n g_n e^{-2 pi i n l/(N+1)}, the weight that multiplies a
// closed-form transfer factor at contour node l.
VecXc cq_forward_scalar(const CQScheme& sch, const VecX& g);

// Inverse of the scaled transform applied columnwise: recovers real time
// samples from per-node values, reporting the largest imaginary residue
// dropped (a consistency indicator for conjugate-symmetric input).
MatX cq_inverse_real(const CQScheme& sch, const MatXc& Z,
                     Real* max_imag = nullptr);

}  // namespace pzbem
