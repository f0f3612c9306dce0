#pragma once

#include <functional>

#include "pzbem/bem_assembly.hpp"
#include "pzbem/bie_space.hpp"
#include "pzbem/fem_assembly.hpp"
#include "pzbem/materials.hpp"

namespace pzbem {

// Discretization bundle shared by every frequency solve on one mesh:
// vector/scalar finite elements of order k, boundary trial spaces of
// matching order, the Dirichlet map for the electric potential, and the
// Laplace-parameter-independent matrices (assembled once per mesh).
struct CoupledSpaces {
    const Mesh* mesh = nullptr;
    Materials mat;
    FeSpace fe;
    BoundarySpace bs;
    DirichletMap psi_bc;

    SpMat KC;    // elastic stiffness (2n x 2n)
    SpMat M;     // mass with solid density (2n x 2n)
    SpMat Ec;    // piezoelectric coupling (2n x n)
    SpMat Keps;  // dielectric stiffness (n x n)
    SpMat Ntr;   // normal-trace pairing <w . nu, eta>, (nY x 2n)

    int nu() const { return fe.num_vector_dofs(); }
    int npsi() const { return fe.num_nodes(); }
    int npsi_int() const { return psi_bc.num_interior; }
    int nX() const { return bs.num_X; }
    int nY() const { return bs.num_Y; }

    // Block offsets of the reduced unknown vector (u, psi_int, lam, phi).
    int off_u() const { return 0; }
    int off_psi() const { return nu(); }
    int off_lam() const { return nu() + npsi_int(); }
    int off_phi() const { return off_lam() + nX(); }
    int n_total() const { return off_phi() + nY(); }
};

// `density` overrides the constant solid density mat.rho when given (the
// scattering demo uses a Gaussian bump).
CoupledSpaces make_coupled_spaces(const Mesh& mesh, const Materials& mat,
                                  int degree,
                                  const std::function<Real(const Vec2&)>&
                                      density = nullptr);

// Monolithic frequency-domain matrix for the unknown ordering
// (u, psi_interior, lambda, phi):
//   [ K_C + s^2 M    E_c      0          +s rho_f Ntr^T ] [u  ]
//   [ -E_c^T         K_eps    0          0              ] [psi]
//   [ 0              0        rf V       rf(M1/2 - K)   ] [lam]
//   [ -s rf Ntr      0        rf(Kt-M2/2) rf W          ] [phi]
// with rf = rho_f, boundary operators at wavenumber s/c, and Ntr the
// pairing of the displacement normal trace with the Y_h basis.
struct FrequencySystem {
    Complex s{0.0, 0.0};
    const CoupledSpaces* sp = nullptr;
    SpMatC A;  // reduced system (psi Dirichlet dofs eliminated)

    int off_u() const { return sp->off_u(); }
    int off_psi() const { return sp->off_psi(); }
    int off_lam() const { return sp->off_lam(); }
    int off_phi() const { return sp->off_phi(); }
    int n_total() const { return sp->n_total(); }
};

// Requires Re s > 0; points on the imaginary axis (s != 0) are accepted
// only when explicitly allowed.
FrequencySystem build_system(const CoupledSpaces& sp, Complex s,
                             bool allow_imaginary_axis = false);

// Frequency-domain data bundle (volume forcings, surface data).
struct FreqData {
    std::function<Vec2c(const Vec2&)> f1;                       // body force
    std::function<Complex(const Vec2&)> f2;                     // charge
    std::function<Vec2c(const Vec2&, const Vec2&)> traction;    // on Gamma
    std::function<Complex(const Vec2&, const Vec2&)> eta;       // on Gamma_N
    std::function<Complex(const Vec2&)> mu;                     // on Gamma_D
    std::function<Complex(const Vec2&, const Vec2&)> alpha;     // acoustic
};

// Assembled right-hand side plus the nodal Dirichlet values it lifted.
struct CoupledRhs {
    VecXc b;    // length n_total
    VecXc mu;   // full scalar-node vector, zero away from Gamma_D
};

// The right-hand side depends only on the spaces and the data; any Laplace
// factors belong to the data callbacks themselves.
CoupledRhs build_rhs(const CoupledSpaces& sp, const FreqData& data);

struct FrequencySolution {
    VecXc u;    // full displacement coefficients
    VecXc psi;  // full potential coefficients (Dirichlet re-inserted)
    VecXc lam;  // X_h density
    VecXc phi;  // Y_h density
    Real residual = 0.0;
};

// Direct sparse solve of the reduced system; throws NumericalError if the
// relative residual exceeds 1e-10.
VecXc solve_reduced(const FrequencySystem& sys, const VecXc& b);

// solve_reduced plus unpacking into named components with the Dirichlet
// values re-inserted.
FrequencySolution solve_frequency(const FrequencySystem& sys,
                                  const CoupledRhs& rhs);

// Same result through elimination of the finite-element unknowns and a
// dense solve of the boundary Schur complement.
FrequencySolution schur_solve(const FrequencySystem& sys,
                              const CoupledRhs& rhs);

// Exterior acoustic field of a solved system at one point.
PotentialEval exterior_field(const CoupledSpaces& sp, Complex s,
                             const FrequencySolution& sol, const Vec2& x);

}  // namespace pzbem
