#include "pzbem/coupled.hpp"

#include <sstream>
#include <vector>

#include <Eigen/LU>
#include <Eigen/SparseLU>

#include "pzbem/quadrature.hpp"

namespace pzbem {

namespace {

// <(w_j . nu), eta_i> over the panel loop; rows are Y_h dofs, columns are
// vector finite-element dofs. Both factors restrict to polynomials of
// degree <= k on a panel, so a 6-point rule is exact.
SpMat assemble_normal_trace(const Mesh& mesh, const FeSpace& fe,
                            const BoundarySpace& bs) {
    const Rule1D& gl = gauss_legendre(6);
    const int nloc = fe.degree + 1;
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(mesh.num_panels()) * nloc * nloc * 2);
    for (int p = 0; p < mesh.num_panels(); ++p) {
        const Real len = mesh.panel_length(p);
        const Vec2 nu = mesh.panel_normal(p);
        const auto& fn = fe.panel_nodes[p];
        const auto& yd = bs.panel_dofs_Y[p];
        Eigen::Matrix3d loc = Eigen::Matrix3d::Zero();
        for (int q = 0; q < static_cast<int>(gl.size()); ++q) {
            Real Nt[3];
            trace_values(fe.degree, gl.x[q], Nt);
            for (int a = 0; a < nloc; ++a)
                for (int b = 0; b < nloc; ++b)
                    loc(a, b) += gl.w[q] * Nt[a] * Nt[b] * len;
        }
        for (int a = 0; a < nloc; ++a)
            for (int b = 0; b < nloc; ++b)
                for (int c = 0; c < 2; ++c)
                    trip.emplace_back(yd[a], 2 * fn[b] + c, loc(a, b) * nu[c]);
    }
    SpMat Ntr(bs.num_Y, fe.num_vector_dofs());
    Ntr.setFromTriplets(trip.begin(), trip.end());
    return Ntr;
}

// real-sparse times complex-vector (Eigen has no mixed-scalar product)
VecXc spmul(const SpMat& A, const VecXc& x) {
    return (A * x.real()).cast<Complex>() +
           Complex(0.0, 1.0) * (A * x.imag()).cast<Complex>();
}

Real rel_residual(const SpMatC& A, const VecXc& z, const VecXc& b) {
    Real den = b.norm();
    if (den == 0.0) den = 1.0;
    return (A * z - b).norm() / den;
}

FrequencySolution unpack_solution(const FrequencySystem& sys, const VecXc& z,
                                  const CoupledRhs& rhs, Real residual) {
    const CoupledSpaces& sp = *sys.sp;
    FrequencySolution sol;
    sol.u = z.segment(sys.off_u(), sp.nu());
    sol.psi = VecXc::Zero(sp.npsi());
    for (int n = 0; n < sp.npsi(); ++n) {
        if (sp.psi_bc.is_constrained[n])
            sol.psi[n] = rhs.mu[n];
        else
            sol.psi[n] = z[sys.off_psi() + sp.psi_bc.interior_index[n]];
    }
    sol.lam = z.segment(sys.off_lam(), sp.nX());
    sol.phi = z.segment(sys.off_phi(), sp.nY());
    sol.residual = residual;
    return sol;
}

}  // namespace

CoupledSpaces make_coupled_spaces(const Mesh& mesh, const Materials& mat,
                                  int degree,
                                  const std::function<Real(const Vec2&)>&
                                      density) {
    mat.validate();
    CoupledSpaces sp;
    sp.mesh = &mesh;
    sp.mat = mat;
    sp.fe = make_fe_space(mesh, degree);
    sp.bs = make_boundary_space(mesh, degree, &sp.fe);
    sp.psi_bc = make_dirichlet_map(sp.fe, PanelTag::Dirichlet);
    sp.KC = assemble_elastic_stiffness(sp.fe, mat);
    const Real rho0 = mat.rho;
    sp.M = assemble_mass(sp.fe, density ? density
                                        : [rho0](const Vec2&) { return rho0; });
    sp.Ec = assemble_piezo_coupling(sp.fe, mat);
    sp.Keps = assemble_dielectric(sp.fe, mat);
    sp.Ntr = assemble_normal_trace(mesh, sp.fe, sp.bs);
    return sp;
}

FrequencySystem build_system(const CoupledSpaces& sp, Complex s,
                             bool allow_imaginary_axis) {
    const bool on_axis = s.real() == 0.0 && s != Complex(0.0, 0.0);
    if (!(s.real() > 0.0) && !(allow_imaginary_axis && on_axis)) {
        std::ostringstream msg;
        msg << "build_system: Laplace parameter must satisfy Re s > 0, got s = "
            << s.real() << " + " << s.imag() << "i";
        throw ConfigError(msg.str());
    }

    FrequencySystem sys;
    sys.s = s;
    sys.sp = &sp;

    const Real rf = sp.mat.rho_f;
    const Complex s2 = s * s;
    const int off_psi = sys.off_psi();
    const int off_lam = sys.off_lam();
    const int off_phi = sys.off_phi();
    const auto& idx = sp.psi_bc.interior_index;

    const BemBlocks bb = assemble_bem(sp.bs, s / sp.mat.c);

    std::vector<TripletC> trip;
    trip.reserve(sp.KC.nonZeros() + sp.M.nonZeros() + 2 * sp.Ec.nonZeros() +
                 sp.Keps.nonZeros() + 2 * sp.Ntr.nonZeros() +
                 static_cast<std::size_t>(sp.nX() + sp.nY()) *
                     (sp.nX() + sp.nY()));

    for (int k = 0; k < sp.KC.outerSize(); ++k)
        for (SpMat::InnerIterator it(sp.KC, k); it; ++it)
            trip.emplace_back(it.row(), it.col(), Complex(it.value(), 0.0));
    for (int k = 0; k < sp.M.outerSize(); ++k)
        for (SpMat::InnerIterator it(sp.M, k); it; ++it)
            trip.emplace_back(it.row(), it.col(), s2 * it.value());
    for (int k = 0; k < sp.Ec.outerSize(); ++k)
        for (SpMat::InnerIterator it(sp.Ec, k); it; ++it) {
            const int j = idx[it.col()];
            if (j < 0) continue;  // Dirichlet column, lifted into the RHS
            trip.emplace_back(it.row(), off_psi + j, Complex(it.value(), 0.0));
            trip.emplace_back(off_psi + j, it.row(), Complex(-it.value(), 0.0));
        }
    for (int k = 0; k < sp.Keps.outerSize(); ++k)
        for (SpMat::InnerIterator it(sp.Keps, k); it; ++it) {
            const int i = idx[it.row()];
            const int j = idx[it.col()];
            if (i < 0 || j < 0) continue;
            trip.emplace_back(off_psi + i, off_psi + j,
                              Complex(it.value(), 0.0));
        }

    for (int i = 0; i < sp.nX(); ++i)
        for (int j = 0; j < sp.nX(); ++j)
            trip.emplace_back(off_lam + i, off_lam + j, rf * bb.V(i, j));
    for (int i = 0; i < sp.nX(); ++i)
        for (int j = 0; j < sp.nY(); ++j)
            trip.emplace_back(off_lam + i, off_phi + j,
                              rf * (0.5 * bb.M1(i, j) - bb.K(i, j)));
    for (int i = 0; i < sp.nY(); ++i)
        for (int j = 0; j < sp.nX(); ++j)
            trip.emplace_back(off_phi + i, off_lam + j,
                              rf * (bb.Kt(i, j) - 0.5 * bb.M1(j, i)));
    for (int i = 0; i < sp.nY(); ++i)
        for (int j = 0; j < sp.nY(); ++j)
            trip.emplace_back(off_phi + i, off_phi + j, rf * bb.W(i, j));

    const Complex cpl = s * rf;
    for (int k = 0; k < sp.Ntr.outerSize(); ++k)
        for (SpMat::InnerIterator it(sp.Ntr, k); it; ++it) {
            trip.emplace_back(it.col(), off_phi + it.row(), cpl * it.value());
            trip.emplace_back(off_phi + it.row(), it.col(), -cpl * it.value());
        }

    sys.A.resize(sys.n_total(), sys.n_total());
    sys.A.setFromTriplets(trip.begin(), trip.end());
    sys.A.makeCompressed();
    return sys;
}

CoupledRhs build_rhs(const CoupledSpaces& sp, const FreqData& data) {
    const FeSpace& fe = sp.fe;
    CoupledRhs rhs;
    rhs.b = VecXc::Zero(sp.n_total());
    rhs.mu = VecXc::Zero(sp.npsi());

    if (data.mu)
        for (int n : sp.psi_bc.constrained)
            rhs.mu[n] = data.mu(fe.node_xy[n]);

    VecXc bu = VecXc::Zero(sp.nu());
    if (data.f1) bu -= assemble_load_vector_c(fe, data.f1);
    if (data.traction) bu += assemble_traction_term(fe, data.traction);
    bu -= spmul(sp.Ec, rhs.mu);
    rhs.b.segment(sp.off_u(), sp.nu()) = bu;

    VecXc bp = VecXc::Zero(sp.npsi());
    if (data.f2) bp += assemble_load_scalar_c(fe, data.f2);
    if (data.eta) bp += assemble_flux_term(fe, data.eta, PanelTag::Neumann);
    bp -= spmul(sp.Keps, rhs.mu);
    for (int n = 0; n < sp.npsi(); ++n) {
        const int i = sp.psi_bc.interior_index[n];
        if (i >= 0) rhs.b[sp.off_psi() + i] = bp[n];
    }

    if (data.alpha) {
        const Mesh& mesh = *sp.mesh;
        const Rule1D& gl = gauss_legendre(6);
        const int nloc = sp.bs.degree + 1;
        VecXc ba = VecXc::Zero(sp.nY());
        for (int p = 0; p < mesh.num_panels(); ++p) {
            const Real len = mesh.panel_length(p);
            const Vec2 nu = mesh.panel_normal(p);
            const Vec2 a = mesh.vertices[mesh.panels[p].v0];
            const Vec2 t = mesh.vertices[mesh.panels[p].v1] - a;
            const auto& yd = sp.bs.panel_dofs_Y[p];
            for (int q = 0; q < static_cast<int>(gl.size()); ++q) {
                Real Nt[3];
                trace_values(sp.bs.degree, gl.x[q], Nt);
                const Complex val = data.alpha(a + gl.x[q] * t, nu);
                for (int ai = 0; ai < nloc; ++ai)
                    ba[yd[ai]] += gl.w[q] * Nt[ai] * val * len;
            }
        }
        rhs.b.segment(sp.off_phi(), sp.nY()) = sp.mat.rho_f * ba;
    }
    return rhs;
}

VecXc solve_reduced(const FrequencySystem& sys, const VecXc& b) {
    Eigen::SparseLU<SpMatC> lu;
    lu.compute(sys.A);
    if (lu.info() != Eigen::Success)
        throw NumericalError("solve_reduced: sparse factorization failed");
    const VecXc z = lu.solve(b);
    const Real res = rel_residual(sys.A, z, b);
    if (!(res <= 1e-10)) {
        std::ostringstream msg;
        msg << "solve_reduced: relative residual " << res << " exceeds 1e-10";
        throw NumericalError(msg.str());
    }
    return z;
}

FrequencySolution solve_frequency(const FrequencySystem& sys,
                                  const CoupledRhs& rhs) {
    const VecXc z = solve_reduced(sys, rhs.b);
    return unpack_solution(sys, z, rhs, rel_residual(sys.A, z, rhs.b));
}

FrequencySolution schur_solve(const FrequencySystem& sys,
                              const CoupledRhs& rhs) {
    const CoupledSpaces& sp = *sys.sp;
    const int nF = sp.nu() + sp.npsi_int();
    const int nB = sp.nX() + sp.nY();

    std::vector<TripletC> tFF, tFB, tBF;
    MatXc ABB = MatXc::Zero(nB, nB);
    for (int k = 0; k < sys.A.outerSize(); ++k)
        for (SpMatC::InnerIterator it(sys.A, k); it; ++it) {
            const int r = static_cast<int>(it.row());
            const int c = static_cast<int>(it.col());
            if (r < nF && c < nF)
                tFF.emplace_back(r, c, it.value());
            else if (r < nF)
                tFB.emplace_back(r, c - nF, it.value());
            else if (c < nF)
                tBF.emplace_back(r - nF, c, it.value());
            else
                ABB(r - nF, c - nF) += it.value();
        }
    SpMatC AFF(nF, nF), AFB(nF, nB), ABF(nB, nF);
    AFF.setFromTriplets(tFF.begin(), tFF.end());
    AFB.setFromTriplets(tFB.begin(), tFB.end());
    ABF.setFromTriplets(tBF.begin(), tBF.end());

    Eigen::SparseLU<SpMatC> luF;
    luF.compute(AFF);
    if (luF.info() != Eigen::Success)
        throw NumericalError("schur_solve: interior factorization failed");

    const VecXc bF = rhs.b.head(nF);
    const VecXc bB = rhs.b.tail(nB);
    const VecXc xF0 = luF.solve(bF);

    // Schur complement in column blocks to bound the dense workspace.
    MatXc S = ABB;
    const int blk = 64;
    for (int j0 = 0; j0 < nB; j0 += blk) {
        const int w = std::min(blk, nB - j0);
        const MatXc X = luF.solve(MatXc(AFB.middleCols(j0, w)));
        S.middleCols(j0, w).noalias() -= ABF * X;
    }

    Eigen::PartialPivLU<MatXc> luS(S);
    const VecXc zB = luS.solve(bB - ABF * xF0);
    const VecXc zF = luF.solve(bF - AFB * zB);

    VecXc z(nF + nB);
    z << zF, zB;
    const Real res = rel_residual(sys.A, z, rhs.b);
    if (!(res <= 1e-10)) {
        std::ostringstream msg;
        msg << "schur_solve: relative residual " << res << " exceeds 1e-10";
        throw NumericalError(msg.str());
    }
    return unpack_solution(sys, z, rhs, res);
}

PotentialEval exterior_field(const CoupledSpaces& sp, Complex s,
                             const FrequencySolution& sol, const Vec2& x) {
    return eval_potentials(sp.bs, s / sp.mat.c, sol.lam, sol.phi, x);
}

}  // namespace pzbem
