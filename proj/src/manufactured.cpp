#include "pzbem/manufactured.hpp"

#include <cmath>

#include "pzbem/bessel_k.hpp"
#include "pzbem/ramp.hpp"

namespace pzbem {

namespace {

const Real kTwoPi = 2.0 * M_PI;

// Voigt strain pattern of a plane wave with direction d: eps_V of d d^T.
Eigen::Vector3d wave_strain_pattern(const Vec2& d) {
    return Eigen::Vector3d(d.x() * d.x(), d.y() * d.y(), 2.0 * d.x() * d.y());
}

// Divergence pattern of a plane-wave stress state: given the Voigt stress
// amplitude q (stress = w(x) q for a scalar profile w), the divergence is
// w'(x) projected on the direction, i.e. (dw/dd) times this vector.
Vec2 stress_div_pattern(const Eigen::Vector3d& q, const Vec2& d) {
    return Vec2(q(0) * d.x() + q(2) * d.y(), q(2) * d.x() + q(1) * d.y());
}

// div(e grad p) from the Hessian of p.
Vec2 piezo_divergence(const Eigen::Matrix<Real, 3, 2>& e,
                      const Eigen::Vector3d& hess) {
    const Real pxx = hess(0), pxy = hess(1), pyy = hess(2);
    return Vec2(e(0, 0) * pxx + (e(0, 1) + e(2, 0)) * pxy + e(2, 1) * pyy,
                e(2, 0) * pxx + (e(2, 1) + e(1, 0)) * pxy + e(1, 1) * pyy);
}

// div(eps grad p) from the Hessian of p.
Real dielectric_divergence(const Eigen::Matrix2d& eps,
                           const Eigen::Vector3d& hess) {
    return eps(0, 0) * hess(0) + 2.0 * eps(0, 1) * hess(1) +
           eps(1, 1) * hess(2);
}

}  // namespace

Real cubic_p(const Vec2& x) {
    const Real a = x.x(), b = x.y();
    return a * a * a + a * a * a * b - 3.0 * a * b * b - b * b * b / 3.0;
}

Vec2 cubic_p_grad(const Vec2& x) {
    const Real a = x.x(), b = x.y();
    return Vec2(3.0 * a * a + 3.0 * a * a * b - 3.0 * b * b,
                a * a * a - 6.0 * a * b - b * b);
}

Eigen::Vector3d cubic_p_hess(const Vec2& x) {
    const Real a = x.x(), b = x.y();
    return Eigen::Vector3d(6.0 * a + 6.0 * a * b, 3.0 * a * a - 6.0 * b,
                           -6.0 * a - 2.0 * b);
}

// ---------------------------------------------------------------------
// frequency domain

FreqCase make_freq_case(const Materials& mat, Complex s) {
    mat.validate();
    if (s == Complex(0.0, 0.0)) {
        throw ConfigError("manufactured case requires s != 0");
    }
    FreqCase c;
    c.mat = mat;
    c.s = s;
    c.cl = std::sqrt((mat.lambda + 2.0 * mat.mu) / mat.rho);
    c.dir = Vec2(1.0, 1.0).normalized();
    c.x0 = Vec2(2.0, 1.5);
    return c;
}

Vec2c FreqCase::u(const Vec2& x) const {
    const Complex E = std::exp(-s * cl * x.dot(dir));
    return E * dir.cast<Complex>();
}

Mat2c FreqCase::grad_u(const Vec2& x) const {
    const Complex E = std::exp(-s * cl * x.dot(dir));
    Mat2c g;
    // du_i/dx_j = -s cl d_i d_j E
    const Complex a = -s * cl * E;
    g(0, 0) = a * dir.x() * dir.x();
    g(0, 1) = a * dir.x() * dir.y();
    g(1, 0) = a * dir.y() * dir.x();
    g(1, 1) = a * dir.y() * dir.y();
    return g;
}

Complex FreqCase::psi(const Vec2& x) const { return Complex(cubic_p(x), 0.0); }

Vec2c FreqCase::grad_psi(const Vec2& x) const {
    return cubic_p_grad(x).cast<Complex>();
}

Complex FreqCase::v(const Vec2& x) const {
    const Real r = (x - x0).norm();
    return bessel_k0((s / mat.c) * r) / kTwoPi;
}

Vec2c FreqCase::grad_v(const Vec2& x) const {
    const Vec2 rv = x - x0;
    const Real r = rv.norm();
    const Complex a = -(s / mat.c) * bessel_k1((s / mat.c) * r) / kTwoPi;
    return (a / r) * rv.cast<Complex>();
}

Vec3c FreqCase::stress(const Vec2& x) const {
    const Complex E = std::exp(-s * cl * x.dot(dir));
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    const Vec3c elastic = (-s * cl * E) * (mat.C * m).cast<Complex>();
    const Vec3c piezo = (mat.e * cubic_p_grad(x)).cast<Complex>();
    return elastic + piezo;
}

Vec2c FreqCase::dfield(const Vec2& x) const {
    const Complex E = std::exp(-s * cl * x.dot(dir));
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    const Vec2c from_u =
        (-s * cl * E) * (mat.e.transpose() * m).cast<Complex>();
    const Vec2c from_psi = (mat.eps * cubic_p_grad(x)).cast<Complex>();
    return from_u - from_psi;
}

Vec2c FreqCase::f1(const Vec2& x) const {
    const Complex E = std::exp(-s * cl * x.dot(dir));
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    const Vec2 adiv = stress_div_pattern(mat.C * m, dir);
    const Vec2 lpsi = piezo_divergence(mat.e, cubic_p_hess(x));
    const Complex sc2 = (s * cl) * (s * cl);
    // div sigma - rho s^2 u
    return sc2 * E * adiv.cast<Complex>() + lpsi.cast<Complex>() -
           mat.rho * s * s * E * dir.cast<Complex>();
}

Complex FreqCase::f2(const Vec2& x) const {
    const Complex E = std::exp(-s * cl * x.dot(dir));
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    const Real wd = (mat.e.transpose() * m).dot(dir);
    const Complex sc2 = (s * cl) * (s * cl);
    return sc2 * E * wd - dielectric_divergence(mat.eps, cubic_p_hess(x));
}

FreqData FreqCase::data() const {
    FreqData d;
    const FreqCase c = *this;  // capture by value: callbacks outlive *this
    d.f1 = [c](const Vec2& x) { return c.f1(x); };
    d.f2 = [c](const Vec2& x) { return c.f2(x); };
    d.traction = [c](const Vec2& x, const Vec2& nu) {
        const Vec3c sv = c.stress(x);
        Vec2c t(sv(0) * nu.x() + sv(2) * nu.y(),
                sv(2) * nu.x() + sv(1) * nu.y());
        return Vec2c(t + c.s * c.mat.rho_f * c.v(x) * nu.cast<Complex>());
    };
    d.eta = [c](const Vec2& x, const Vec2& nu) {
        // plain (unconjugated) contraction with the real normal
        const Vec2c df = c.dfield(x);
        return -(df.x() * nu.x() + df.y() * nu.y());
    };
    d.mu = [c](const Vec2& x) { return c.psi(x); };
    d.alpha = [c](const Vec2& x, const Vec2& nu) {
        const Vec2c uu = c.u(x);
        const Vec2c gv = c.grad_v(x);
        const Complex un = uu.x() * nu.x() + uu.y() * nu.y();
        const Complex dnv = gv.x() * nu.x() + gv.y() * nu.y();
        return -c.s * un - dnv;
    };
    return d;
}

// ---------------------------------------------------------------------
// time domain

TimeCase make_time_case(const Materials& mat) {
    mat.validate();
    TimeCase c;
    c.mat = mat;
    c.cl = std::sqrt((mat.lambda + 2.0 * mat.mu) / mat.rho);
    c.dir = Vec2(1.0, 1.0).normalized();
    c.x0 = Vec2(2.0, 1.5);
    return c;
}

Real TimeCase::wave(Real tau, int order) const {
    const Real sn = std::sin(3.0 * tau), cs = std::cos(3.0 * tau);
    switch (order) {
        case 0:
            return ramp(tau) * sn;
        case 1:
            return ramp_d(tau, 1) * sn + 3.0 * ramp(tau) * cs;
        case 2:
            return ramp_d(tau, 2) * sn + 6.0 * ramp_d(tau, 1) * cs -
                   9.0 * ramp(tau) * sn;
        default:
            throw ConfigError("wave derivative order must be 0..2");
    }
}

Vec2 TimeCase::u(const Vec2& x, Real t) const {
    return wave(cl * t - x.dot(dir)) * dir;
}

Vec2 TimeCase::u_t(const Vec2& x, Real t) const {
    return cl * wave(cl * t - x.dot(dir), 1) * dir;
}

Mat2 TimeCase::grad_u(const Vec2& x, Real t) const {
    const Real gp = wave(cl * t - x.dot(dir), 1);
    Mat2 g;
    g(0, 0) = -gp * dir.x() * dir.x();
    g(0, 1) = -gp * dir.x() * dir.y();
    g(1, 0) = -gp * dir.y() * dir.x();
    g(1, 1) = -gp * dir.y() * dir.y();
    return g;
}

Real TimeCase::psi(const Vec2& x, Real t) const { return ramp(t) * cubic_p(x); }

Vec2 TimeCase::grad_psi(const Vec2& x, Real t) const {
    return ramp(t) * cubic_p_grad(x);
}

Eigen::Vector3d TimeCase::stress(const Vec2& x, Real t) const {
    const Real gp = wave(cl * t - x.dot(dir), 1);
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    return -gp * (mat.C * m) + ramp(t) * (mat.e * cubic_p_grad(x));
}

Vec2 TimeCase::dfield(const Vec2& x, Real t) const {
    const Real gp = wave(cl * t - x.dot(dir), 1);
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    return Vec2(-gp * (mat.e.transpose() * m) -
                ramp(t) * (mat.eps * cubic_p_grad(x)));
}

Vec2 TimeCase::f1(const Vec2& x, Real t) const {
    const Real gpp = wave(cl * t - x.dot(dir), 2);
    const Eigen::Vector3d m = wave_strain_pattern(dir);
    const Vec2 adiv = stress_div_pattern(mat.C * m, dir);
    const Vec2 lpsi = piezo_divergence(mat.e, cubic_p_hess(x));
    // div sigma - rho u_tt
    return gpp * adiv + ramp(t) * lpsi - mat.rho * cl * cl * gpp * dir;
}

Real TimeCase::f2(const Vec2& x, Real t) const {
    const Real gpp = wave(cl * t - x.dot(dir), 2);
    const Real wd = (mat.e.transpose() * wave_strain_pattern(dir)).dot(dir);
    return gpp * wd - ramp(t) * dielectric_divergence(mat.eps, cubic_p_hess(x));
}

Vec2 TimeCase::traction_solid(const Vec2& x, const Vec2& nu, Real t) const {
    const Eigen::Vector3d sv = stress(x, t);
    return Vec2(sv(0) * nu.x() + sv(2) * nu.y(),
                sv(2) * nu.x() + sv(1) * nu.y());
}

Real TimeCase::flux(const Vec2& x, const Vec2& nu, Real t) const {
    return -dfield(x, t).dot(nu);
}

Real TimeCase::mu(const Vec2& x, Real t) const { return psi(x, t); }

Real TimeCase::alpha_solid(const Vec2& x, const Vec2& nu, Real t) const {
    return -u(x, t).dot(nu);
}

Real TimeCase::signal(Real t) const { return ramp(t) * std::sin(2.0 * t); }

Complex TimeCase::vhat_kernel(const Vec2& x, Complex s) const {
    const Real r = (x - x0).norm();
    return (2.0 / M_PI) * bessel_k0((s / mat.c) * r);
}

Complex TimeCase::vhat_dnu_kernel(const Vec2& x, const Vec2& nu,
                                  Complex s) const {
    const Vec2 rv = x - x0;
    const Real r = rv.norm();
    const Complex a = -(2.0 / M_PI) * (s / mat.c) *
                      bessel_k1((s / mat.c) * r);
    return a * (rv.dot(nu) / r);
}

}  // namespace pzbem
