#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace pzbem {

using Real = double;
using Complex = std::complex<double>;

using Vec2 = Eigen::Vector2d;
using Vec2c = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;
using MatX = Eigen::MatrixXd;
using MatXc = Eigen::MatrixXcd;
using SpMat = Eigen::SparseMatrix<Real>;
using SpMatC = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Real>;
using TripletC = Eigen::Triplet<Complex>;

// Error taxonomy: invalid geometry or parameters throw; numerical
// breakdowns (singular factorization, quadrature failure) also throw and
// are converted to exit codes at the CLI boundary.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace pzbem
