#pragma once

#include <Eigen/Dense>

#include "pzbem/types.hpp"

namespace pzbem {

// Voigt convention for symmetric 2x2 tensors: (11) -> 1, (22) -> 2,
// (12) -> 3, with engineering shear strain (eps_3 = 2 eps_12).
//
// Constitutive law of the piezoelectric solid:
//   sigma_V = C eps_V(u) + e grad(psi)
//   D       = e^T eps_V(u) - eps grad(psi)
struct Materials {
    Real lambda = 2.0;  // Lame parameters of the solid
    Real mu = 3.0;
    Real rho = 5.0;    // solid mass density (constant part)
    Real c = 1.0;      // acoustic wave speed in the fluid
    Real rho_f = 1.0;  // fluid density

    Eigen::Matrix3d C;              // elastic tensor, Voigt form
    Eigen::Matrix<Real, 3, 2> e;    // piezoelectric coupling
    Eigen::Matrix2d eps;            // dielectric tensor

    // The fixed parameter set used by every run in this project.
    static Materials reference();

    // Throws ConfigError if C or eps fails symmetry/positivity.
    void validate() const;
};

// strain in Voigt form from a displacement gradient (du_i/dx_j)
inline Eigen::Vector3d voigt_strain(const Eigen::Matrix2d& grad_u) {
    return Eigen::Vector3d(grad_u(0, 0), grad_u(1, 1),
                           grad_u(0, 1) + grad_u(1, 0));
}

inline Eigen::Vector3d stress_voigt(const Materials& mat,
                                    const Eigen::Matrix2d& grad_u,
                                    const Vec2& grad_psi) {
    return mat.C * voigt_strain(grad_u) + mat.e * grad_psi;
}

// traction sigma(u, psi) . n
inline Vec2 traction(const Materials& mat, const Eigen::Matrix2d& grad_u,
                     const Vec2& grad_psi, const Vec2& n) {
    Eigen::Vector3d s = stress_voigt(mat, grad_u, grad_psi);
    return Vec2(s(0) * n.x() + s(2) * n.y(), s(2) * n.x() + s(1) * n.y());
}

inline Vec2 electric_displacement(const Materials& mat,
                                  const Eigen::Matrix2d& grad_u,
                                  const Vec2& grad_psi) {
    return mat.e.transpose() * voigt_strain(grad_u) - mat.eps * grad_psi;
}

// Gaussian density bump used by the scattering demo: 5 + 25 exp(-100 |x|^2).
Real bump_density(const Vec2& x);

}  // namespace pzbem
