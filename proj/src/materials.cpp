#include "pzbem/materials.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace pzbem {

Materials Materials::reference() {
    Materials m;
    m.C << 2.4, 0.6, 0.0,
           0.6, 2.4, 0.0,
           0.0, 0.0, 0.9;
    m.e << 1.0, 5.0,
           5.0, 1.0,
           5.0, 5.0;
    m.eps << 4.0, 1.0,
             1.0, 4.0;
    m.validate();
    return m;
}

void Materials::validate() const {
    if (!(lambda > 0) || !(mu > 0) || !(rho > 0) || !(c > 0) || !(rho_f >= 0))
        throw ConfigError("materials: scalar parameters must be positive");
    if ((C - C.transpose()).norm() > 1e-14 * C.norm())
        throw ConfigError("materials: elastic tensor must be symmetric");
    if ((eps - eps.transpose()).norm() > 1e-14 * eps.norm())
        throw ConfigError("materials: dielectric tensor must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> esC(C);
    if (esC.eigenvalues().minCoeff() <= 0)
        throw ConfigError("materials: elastic tensor must be positive definite");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> esE(eps);
    if (esE.eigenvalues().minCoeff() <= 0)
        throw ConfigError(
            "materials: dielectric tensor must be positive definite");
}

Real bump_density(const Vec2& x) {
    return 5.0 + 25.0 * std::exp(-100.0 * x.squaredNorm());
}

}  // namespace pzbem
