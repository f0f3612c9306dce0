#include "pzbem/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "pzbem/bem_assembly.hpp"
#include "pzbem/bessel_k.hpp"
#include "pzbem/coupled.hpp"
#include "pzbem/cq.hpp"
#include "pzbem/mesh.hpp"

namespace pzbem {

namespace {

// K0(z) = int_0^inf exp(-z cosh t) dt for Re z > 0, by the trapezoidal
// rule with doubling until two refinements agree. The integrand is even
// in t and decays double-exponentially, so the rule converges faster than
// any power of the step once the truncation point covers an e^{-46}
// relative tail.
Complex k0_integral_oracle(Complex z) {
    const Real a = z.real();
    const Real T = std::acosh(1.0 + 46.0 / a);
    Complex prev(0.0, 0.0);
    for (int n = 512; n <= (1 << 18); n *= 2) {
        const Real h = T / n;
        Complex sum = 0.5 * (std::exp(-z) + std::exp(-z * std::cosh(T)));
        for (int i = 1; i < n; ++i)
            sum += std::exp(-z * std::cosh(i * h));
        const Complex val = h * sum;
        if (n >= 2048 && std::abs(val - prev) <= 5e-15 * std::abs(val))
            return val;
        prev = val;
    }
    return prev;
}

// quadratic extrapolation of f(e0), f(e1), f(e2) to e -> 0
Complex richardson3(Real e0, Real e1, Real e2, Complex f0, Complex f1,
                    Complex f2) {
    const Real L0 = (0.0 - e1) * (0.0 - e2) / ((e0 - e1) * (e0 - e2));
    const Real L1 = (0.0 - e0) * (0.0 - e2) / ((e1 - e0) * (e1 - e2));
    const Real L2 = (0.0 - e0) * (0.0 - e1) / ((e2 - e0) * (e2 - e1));
    return L0 * f0 + L1 * f1 + L2 * f2;
}

// a^H (A b); Eigen's complex dot already conjugates its left argument
Complex quad_form(const SpMat& A, const VecXc& a, const VecXc& b) {
    return a.dot(A.cast<Complex>() * b);
}

}  // namespace

CheckReport check_radial_kernel() {
    CheckReport rep;
    rep.name = "radial kernel vs integral oracle";
    rep.limit = 1e-12;

    const int n_mod = 25, n_arg = 8;
    Real worst = 0.0;
    Complex worst_z(0.0, 0.0);
    for (int i = 0; i < n_mod; ++i) {
        const Real mod =
            std::pow(10.0, -6.0 + 8.0 * i / (n_mod - 1.0));
        for (int j = 0; j < n_arg; ++j) {
            const Real arg =
                -M_PI / 3.0 + (2.0 * M_PI / 3.0) * j / (n_arg - 1.0);
            const Complex z = std::polar(mod, arg);
            const Complex ref = k0_integral_oracle(z);
            const Real rel = std::abs(bessel_k0(z) - ref) / std::abs(ref);
            if (rel > worst) {
                worst = rel;
                worst_z = z;
            }
        }
    }
    rep.worst = worst;
    rep.pass = worst <= rep.limit;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "200 points, worst %.3e at z = %.3e%+.3ei", worst,
                  worst_z.real(), worst_z.imag());
    rep.detail = buf;
    return rep;
}

CheckReport check_layer_continuity() {
    CheckReport rep;
    rep.name = "single layer continuous across the boundary";
    rep.limit = 1e-6;

    const Complex s(2.0, 0.0);
    const Mesh m = generate_rect_mesh(Vec2(1.0, 1.0), Vec2(3.0, 2.0), 0.05);
    const BoundarySpace bs = make_boundary_space(m, 2);
    const VecXc lam = project_X(bs, [](const Vec2& y, const Vec2&) {
        return Complex(std::exp(0.3 * y.x()), std::cos(1.1 * y.y()));
    });
    const VecXc zero_phi = VecXc::Zero(bs.num_Y);

    const Real eps[3] = {1e-3, 1e-4, 1e-5};
    const int np = static_cast<int>(m.panels.size());
    Real worst = 0.0;
    // a few midpoints spread around the loop, away from the corners
    for (int k = 0; k < 4; ++k) {
        const int p = (np / 4) * k + np / 8;
        const Vec2 z0 = m.panel_midpoint(p);
        const Vec2 nu = m.panel_normal(p);
        Complex out[3], in[3];
        for (int i = 0; i < 3; ++i) {
            out[i] =
                eval_potentials(bs, s, lam, zero_phi, z0 + eps[i] * nu).value;
            in[i] =
                eval_potentials(bs, s, lam, zero_phi, z0 - eps[i] * nu).value;
        }
        const Complex vo =
            richardson3(eps[0], eps[1], eps[2], out[0], out[1], out[2]);
        const Complex vi =
            richardson3(eps[0], eps[1], eps[2], in[0], in[1], in[2]);
        worst = std::max(worst, std::abs(vo - vi) / std::abs(vo));
    }
    rep.worst = worst;
    rep.pass = worst <= rep.limit;
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "h = 0.05, s = 2, 4 probes, worst side mismatch %.3e",
                  worst);
    rep.detail = buf;
    return rep;
}

CheckReport check_energy_identity() {
    CheckReport rep;
    rep.name = "solid block energy identity";
    rep.limit = 1e-10;

    const Materials mat = Materials::reference();
    const Mesh mesh = generate_rect_mesh(Vec2(1.0, 1.0), Vec2(3.0, 2.0), 0.25);
    const CoupledSpaces sp = make_coupled_spaces(mesh, mat, 2);
    const int nu = sp.nu(), npsi = sp.npsi();

    std::mt19937 rng(4242);
    std::uniform_real_distribution<Real> unit(-1.0, 1.0);
    std::uniform_real_distribution<Real> re_s(0.1, 5.0);
    std::uniform_real_distribution<Real> im_s(-5.0, 5.0);

    Real worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        VecXc u(nu), psi(npsi);
        for (int i = 0; i < nu; ++i) u[i] = Complex(unit(rng), unit(rng));
        for (int i = 0; i < npsi; ++i) psi[i] = Complex(unit(rng), unit(rng));
        // every third draw is purely real, where the coupling term drops
        // and the identity reduces to the plain energy norm
        const Complex s(re_s(rng), trial % 3 == 0 ? 0.0 : im_s(rng));

        const Complex qK = quad_form(sp.KC, u, u);
        const Complex qM = quad_form(sp.M, u, u);
        const Complex qE = quad_form(sp.Keps, psi, psi);
        const Complex pc = u.dot(sp.Ec.cast<Complex>() * psi);
        const Complex pcT =
            psi.dot(SpMat(sp.Ec.transpose()).cast<Complex>() * u);

        const Complex zAz = qK + s * s * qM + pc - pcT + qE;
        const Real lhs = (std::conj(s) * zAz).real();
        const Real energy =
            qK.real() + std::norm(s) * qM.real() + qE.real();
        const Real rhs = s.real() * energy + 2.0 * s.imag() * pc.imag();
        const Real scale = std::abs(s) * (std::abs(qK) +
                                          std::norm(s) * std::abs(qM) +
                                          std::abs(qE) + 2.0 * std::abs(pc));

        worst = std::max(worst, std::abs(lhs - rhs) / scale);
        // the coupling contribution is purely imaginary: its real part
        // cancels between the upper and lower off-diagonal blocks
        worst = std::max(worst, std::abs((pc - pcT).real()) / scale);
        if (s.imag() == 0.0)
            worst = std::max(
                worst, std::abs(lhs - s.real() * energy) / scale);
    }
    rep.worst = worst;
    rep.pass = worst <= rep.limit;
    char buf[120];
    std::snprintf(buf, sizeof buf, "50 random states, worst residual %.3e",
                  worst);
    rep.detail = buf;
    return rep;
}

CheckReport check_convolution_order() {
    CheckReport rep;
    rep.name = "convolution scheme order on smooth signal";
    rep.limit = 1.9;

    const Transfer integrate = [](Complex s, const VecXc& xhat) {
        return VecXc(xhat / s);
    };
    Real min_order = std::numeric_limits<Real>::infinity();
    std::string parts;
    for (CQKind kind : {CQKind::BDF2, CQKind::Trapezoidal}) {
        Real err[3];
        int lev = 0;
        for (Real kappa : {0.02, 0.01, 0.005}) {
            const int N = static_cast<int>(std::lround(1.0 / kappa));
            const CQScheme sch = make_scheme(kind, kappa, N);
            TimeSignal g;
            g.samples.resize(1, N + 1);
            for (int n = 0; n <= N; ++n)
                g.samples(0, n) = std::pow(sch.time(n), 5);
            const TimeSignal out = cq_convolve(sch, integrate, g);
            Real e = 0.0;
            for (int n = 0; n <= N; ++n)
                e = std::max(e, std::abs(out.samples(0, n).real() -
                                         std::pow(sch.time(n), 6) / 6.0));
            err[lev++] = e;
        }
        const Real o1 = std::log2(err[0] / err[1]);
        const Real o2 = std::log2(err[1] / err[2]);
        min_order = std::min({min_order, o1, o2});
        char buf[80];
        std::snprintf(buf, sizeof buf, "%s %.3f/%.3f ",
                      kind == CQKind::BDF2 ? "bdf2" : "tr", o1, o2);
        parts += buf;
    }
    rep.worst = min_order;
    rep.pass = min_order >= rep.limit;
    rep.detail = "observed orders: " + parts;
    return rep;
}

std::vector<CheckReport> run_all_checks(bool log_progress) {
    std::vector<CheckReport> out;
    CheckReport (*const suites[])() = {
        &check_radial_kernel, &check_layer_continuity,
        &check_energy_identity, &check_convolution_order};
    for (auto* suite : suites) {
        out.push_back(suite());
        if (log_progress)
            std::fprintf(stderr, "[selftest] %s: %s (%s)\n",
                         out.back().pass ? "pass" : "FAIL",
                         out.back().name.c_str(), out.back().detail.c_str());
    }
    return out;
}

}  // namespace pzbem
