#pragma once

#include <functional>

#include "pzbem/coupled.hpp"
#include "pzbem/materials.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

using Mat2c = Eigen::Matrix2cd;
using Vec3c = Eigen::Vector3cd;

// Closed-form benchmark fields for the convergence harness: an elastic
// plane wave crossing the solid, a cubic electric potential, and a line
// source radiating in the exterior. The volume forcings f1 = div sigma -
// rho s^2 u and f2 = div D and all boundary data are derived analytically
// from the fields, so the triple satisfies the coupled system with those
// data exactly. Finite-difference residual checks live in the test suite.

// Cubic potential p(x) = x^3 + x^3 y - 3 x y^2 - y^3/3 and derivatives.
Real cubic_p(const Vec2& x);
Vec2 cubic_p_grad(const Vec2& x);
Eigen::Vector3d cubic_p_hess(const Vec2& x);  // (pxx, pxy, pyy)

// Frequency-domain case at Laplace parameter s (Re s > 0, or s on the
// imaginary axis away from the origin).
struct FreqCase {
    Materials mat;
    Complex s{};
    Real cl = 0.0;  // plane-wave speed parameter sqrt((lambda + 2 mu)/rho)
    Vec2 dir;       // unit propagation direction
    Vec2 x0;        // acoustic source point (inside the solid)

    // exact fields
    Vec2c u(const Vec2& x) const;
    Mat2c grad_u(const Vec2& x) const;
    Complex psi(const Vec2& x) const;
    Vec2c grad_psi(const Vec2& x) const;
    Complex v(const Vec2& x) const;  // exterior acoustic field
    Vec2c grad_v(const Vec2& x) const;

    // stress (Voigt) and electric displacement of the exact pair
    Vec3c stress(const Vec2& x) const;
    Vec2c dfield(const Vec2& x) const;

    // analytic volume forcings
    Vec2c f1(const Vec2& x) const;
    Complex f2(const Vec2& x) const;

    // Data bundle for build_rhs: traction = sigma nu + s rho_f v nu,
    // flux = -D.nu, mu = psi trace, alpha = -s u.nu - dv/dnu.
    FreqData data() const;
};

FreqCase make_freq_case(const Materials& mat, Complex s);

// Time-domain case: traveling ramped sine wave u, ramped cubic potential
// psi, and an acoustic field defined through its Laplace transform
// vhat(x, s) = vhat_kernel(x, s) ghat(s) with g(t) = ramp(t) sin(2 t).
struct TimeCase {
    Materials mat;
    Real cl = 0.0;
    Vec2 dir;
    Vec2 x0;

    // traveling profile g(tau) = ramp(tau) sin(3 tau); order <= 2
    Real wave(Real tau, int order = 0) const;

    Vec2 u(const Vec2& x, Real t) const;
    Vec2 u_t(const Vec2& x, Real t) const;
    Mat2 grad_u(const Vec2& x, Real t) const;
    Real psi(const Vec2& x, Real t) const;
    Vec2 grad_psi(const Vec2& x, Real t) const;

    Eigen::Vector3d stress(const Vec2& x, Real t) const;
    Vec2 dfield(const Vec2& x, Real t) const;

    Vec2 f1(const Vec2& x, Real t) const;
    Real f2(const Vec2& x, Real t) const;

    // plain-sample boundary channels (no Laplace factors)
    Vec2 traction_solid(const Vec2& x, const Vec2& nu, Real t) const;
    Real flux(const Vec2& x, const Vec2& nu, Real t) const;
    Real mu(const Vec2& x, Real t) const;
    // the part of the acoustic datum paired against the time derivative
    // of the displacement: plain samples of -u.nu, differentiated by the
    // s factor applied per frequency
    Real alpha_solid(const Vec2& x, const Vec2& nu, Real t) const;

    // acoustic signal and the frequency kernels through which the
    // acoustic field enters the right-hand side
    Real signal(Real t) const;                            // ramp(t) sin(2t)
    Complex vhat_kernel(const Vec2& x, Complex s) const;  // (2/pi) K0(sr/c)
    Complex vhat_dnu_kernel(const Vec2& x, const Vec2& nu, Complex s) const;
};

TimeCase make_time_case(const Materials& mat);

}  // namespace pzbem
