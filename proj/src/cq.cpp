#include "pzbem/cq.hpp"

#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

namespace pzbem {

namespace {

// twiddle table: tw[k] = exp(-2 pi i k / M); powers are indexed by
// (n*l) mod M so every product uses an exactly reduced angle, and the
// upper half is stored as the exact conjugate of the lower half so the
// discrete transform of real data is bitwise conjugate-symmetric
std::vector<Complex> twiddles(int M) {
    std::vector<Complex> tw(M);
    for (int k = 0; 2 * k <= M; ++k)
        tw[k] = std::polar(1.0, -2.0 * M_PI * k / M);
    for (int k = M / 2 + 1; k < M; ++k) tw[k] = std::conj(tw[M - k]);
    return tw;
}

MatX inverse_real_impl(const CQScheme& sch, const std::vector<Complex>& tw,
                       const MatXc& Z, Real* max_imag) {
    const int M = sch.N + 1;
    const int dim = static_cast<int>(Z.rows());
    MatX out(dim, M);
    Real mi = 0.0;
    Real rinv = 1.0;
    for (int n = 0; n < M; ++n) {
        VecXc acc = VecXc::Zero(dim);
        for (int l = 0; l < M; ++l)
            acc += std::conj(tw[static_cast<std::size_t>(
                       (static_cast<long long>(n) * l) % M)]) *
                   Z.col(l);
        acc *= rinv / M;
        rinv /= sch.R;
        if (dim > 0) mi = std::max(mi, acc.imag().cwiseAbs().maxCoeff());
        out.col(n) = acc.real();
    }
    if (max_imag) *max_imag = mi;
    return out;
}

}  // namespace

Complex cq_symbol(CQKind kind, Complex zeta) {
    if (kind == CQKind::BDF2)
        return 1.5 - 2.0 * zeta + 0.5 * zeta * zeta;
    const Complex den = 1.0 + zeta;
    if (den == Complex(0.0, 0.0))
        throw NumericalError(
            "cq_symbol: trapezoidal generator has a pole at zeta = -1");
    return 2.0 * (1.0 - zeta) / den;
}

Complex CQScheme::frequency(int l) const {
    const int M = N + 1;
    const int k = ((l % M) + M) % M;
    // contour nodes in exactly conjugate-symmetric pairs
    const Complex unit =
        2 * k <= M ? std::polar(1.0, -2.0 * M_PI * k / M)
                   : std::conj(std::polar(1.0, -2.0 * M_PI * (M - k) / M));
    return cq_symbol(kind, R * unit) / kappa;
}

CQScheme make_scheme(CQKind kind, Real kappa, int N, Real eps) {
    if (!(kappa > 0.0)) throw ConfigError("make_scheme: kappa must be > 0");
    if (N < 1) throw ConfigError("make_scheme: need at least one step");
    if (!(eps > 0.0 && eps < 1.0))
        throw ConfigError("make_scheme: contour accuracy must lie in (0,1)");
    CQScheme sch;
    sch.kind = kind;
    sch.kappa = kappa;
    sch.N = N;
    sch.eps = eps;
    sch.R = std::pow(eps, 1.0 / (2.0 * N + 2.0));
    // A-stability containment: every contour frequency must lie strictly
    // in the right half plane
    Real min_re = std::numeric_limits<Real>::max();
    for (int l = 0; l <= N; ++l)
        min_re = std::min(min_re, sch.frequency(l).real());
    if (!(min_re > 0.0)) {
        std::ostringstream msg;
        msg << "make_scheme: contour frequency with Re s = " << min_re
            << " <= 0";
        throw NumericalError(msg.str());
    }
    return sch;
}

TimeSignal cq_convolve(const CQScheme& sch, const Transfer& F,
                       const TimeSignal& g) {
    const int M = sch.N + 1;
    if (static_cast<int>(g.samples.cols()) != M)
        throw ConfigError("cq_convolve: signal length must equal N+1");
    const int dim = static_cast<int>(g.samples.rows());
    const auto tw = twiddles(M);

    MatXc gs = g.samples;
    Real rp = 1.0;
    for (int n = 0; n < M; ++n) {
        gs.col(n) *= rp;
        rp *= sch.R;
    }

    MatXc Uh(dim, M);
    for (int l = 0; l < M; ++l) {
        VecXc acc = VecXc::Zero(dim);
        for (int n = 0; n < M; ++n)
            acc += tw[static_cast<std::size_t>(
                       (static_cast<long long>(n) * l) % M)] *
                   gs.col(n);
        Uh.col(l) = F(sch.frequency(l), acc);
    }

    TimeSignal out;
    out.kappa = sch.kappa;
    out.causal = g.causal;
    out.samples.resize(dim, M);
    Real rinv = 1.0;
    for (int n = 0; n < M; ++n) {
        VecXc acc = VecXc::Zero(dim);
        for (int l = 0; l < M; ++l)
            acc += std::conj(tw[static_cast<std::size_t>(
                       (static_cast<long long>(n) * l) % M)]) *
                   Uh.col(l);
        out.samples.col(n) = acc * (rinv / M);
        rinv /= sch.R;
    }
    return out;
}

CqSolution cq_solve(const CoupledSpaces& sp, const CQScheme& sch,
                    const CqRhsStreams& data, bool use_pairing,
                    const ExtraRhs& extra, int threads) {
    const int M = sch.N + 1;
    const int nu = sp.nu();
    const int nI = sp.npsi_int();
    const int nX = sp.nX();
    const int nY = sp.nY();
    const int ntot = nu + nI + nX + nY;
    if (data.c0.rows() != ntot || data.c1.rows() != ntot ||
        data.c0.cols() != M || data.c1.cols() != M)
        throw ConfigError("cq_solve: stream dimensions do not match");
    if (data.mu.rows() != sp.npsi() || data.mu.cols() != M)
        throw ConfigError("cq_solve: Dirichlet stream dimensions mismatch");
    if (threads < 1) throw ConfigError("cq_solve: threads must be >= 1");

    const auto tw = twiddles(M);

    // pre-scale the step columns by R^n once
    MatX c0s = data.c0, c1s = data.c1;
    Real rp = 1.0;
    for (int n = 0; n < M; ++n) {
        c0s.col(n) *= rp;
        c1s.col(n) *= rp;
        rp *= sch.R;
    }

    MatXc Z(ntot, M);
    const int last = use_pairing ? M / 2 : M - 1;

    // One independent coupled solve per contour node; with pairing each
    // handled node also owns the mirror column (no write collisions).
    auto solve_node = [&](int l) {
        // forward DFT of both stream parts at this contour node
        VecX br0 = VecX::Zero(ntot), bi0 = VecX::Zero(ntot);
        VecX br1 = VecX::Zero(ntot), bi1 = VecX::Zero(ntot);
        for (int n = 0; n < M; ++n) {
            const Complex w = tw[static_cast<std::size_t>(
                (static_cast<long long>(n) * l) % M)];
            br0 += w.real() * c0s.col(n);
            bi0 += w.imag() * c0s.col(n);
            br1 += w.real() * c1s.col(n);
            bi1 += w.imag() * c1s.col(n);
        }
        const Complex s_l = sch.frequency(l);
        VecXc b = br0.cast<Complex>() + Complex(0, 1) * bi0.cast<Complex>() +
                  s_l * (br1.cast<Complex>() +
                         Complex(0, 1) * bi1.cast<Complex>());
        if (extra) {
            const VecXc add = extra(s_l, l);
            if (add.size() != ntot)
                throw ConfigError(
                    "cq_solve: extra contribution has wrong length");
            b += add;
        }
        try {
            const FrequencySystem sys = build_system(sp, s_l);
            Z.col(l) = solve_reduced(sys, b);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "cq_solve: frequency node " << l << " (s = " << s_l.real()
                << " + " << s_l.imag() << "i) failed: " << e.what();
            throw NumericalError(msg.str());
        }
        if (use_pairing) {
            const int m = (M - l) % M;
            if (m != l) Z.col(m) = Z.col(l).conjugate();
        }
    };

    const int nt = std::min(threads, last + 1);
    if (nt <= 1) {
        for (int l = 0; l <= last; ++l) solve_node(l);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nt);
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (int l = t; l <= last; l += nt) solve_node(l);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    CqSolution sol;
    sol.lam_hat = Z.middleRows(nu + nI, nX);
    sol.phi_hat = Z.middleRows(nu + nI + nX, nY);

    const MatX zt = inverse_real_impl(sch, tw, Z, &sol.max_imag);
    sol.u = zt.topRows(nu);
    sol.psi.resize(sp.npsi(), M);
    for (int node = 0; node < sp.npsi(); ++node) {
        const int i = sp.psi_bc.interior_index[node];
        if (i >= 0)
            sol.psi.row(node) = zt.row(nu + i);
        else
            sol.psi.row(node) = data.mu.row(node);
    }
    sol.lam = zt.middleRows(nu + nI, nX);
    sol.phi = zt.middleRows(nu + nI + nX, nY);
    return sol;
}

VecXc cq_forward_scalar(const CQScheme& sch, const VecX& g) {
    const int M = sch.N + 1;
    if (static_cast<int>(g.size()) != M)
        throw ConfigError("cq_forward_scalar: signal length must equal N+1");
    const auto tw = twiddles(M);
    VecX gs = g;
    Real rp = 1.0;
    for (int n = 0; n < M; ++n) {
        gs[n] *= rp;
        rp *= sch.R;
    }
    VecXc out(M);
    for (int l = 0; l < M; ++l) {
        Complex acc(0.0, 0.0);
        for (int n = 0; n < M; ++n)
            acc += tw[static_cast<std::size_t>(
                       (static_cast<long long>(n) * l) % M)] *
                   gs[n];
        out[l] = acc;
    }
    return out;
}

MatX cq_inverse_real(const CQScheme& sch, const MatXc& Z, Real* max_imag) {
    const int M = sch.N + 1;
    if (static_cast<int>(Z.cols()) != M)
        throw ConfigError("cq_inverse_real: need one column per step");
    return inverse_real_impl(sch, twiddles(M), Z, max_imag);
}

}  // namespace pzbem
