#pragma once

#include <functional>
#include <iosfwd>

#include "pzbem/fe_space.hpp"
#include "pzbem/materials.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

// Affine map of a triangle: x(ref) = p0 + J * ref.
struct CellGeometry {
    Eigen::Matrix2d J, Jinv;
    Real detJ = 0;
    Vec2 p0;
};
CellGeometry cell_geometry(const Mesh& mesh, int t);

using ScalarField = std::function<Real(const Vec2&)>;
using ScalarFieldC = std::function<Complex(const Vec2&)>;
using VectorField = std::function<Vec2(const Vec2&)>;
using VectorFieldC = std::function<Eigen::Vector2cd(const Vec2&)>;
// boundary data callbacks receive the point and the outward normal
using BoundaryFieldC = std::function<Complex(const Vec2&, const Vec2&)>;
using BoundaryVectorFieldC =
    std::function<Eigen::Vector2cd(const Vec2&, const Vec2&)>;

// Elastic stiffness on the vector space: (I,J) = int C eps(phi_J):eps(phi_I).
SpMat assemble_elastic_stiffness(const FeSpace& s, const Materials& mat);

// Vector mass weighted by a density field: int rho phi_J . phi_I.
// Always integrated with the degree-5 rule (variable densities allowed).
SpMat assemble_mass(const FeSpace& s, const ScalarField& rho);

// Piezoelectric coupling, (2n x n): (I,J) = int (e grad chi_J) : eps(phi_I).
SpMat assemble_piezo_coupling(const FeSpace& s, const Materials& mat);

// Dielectric stiffness, (n x n): (I,J) = int eps grad chi_J . grad chi_I.
SpMat assemble_dielectric(const FeSpace& s, const Materials& mat);

// Volume load vectors (degree-5 rule).
VecX assemble_load_scalar(const FeSpace& s, const ScalarField& f);
VecXc assemble_load_scalar_c(const FeSpace& s, const ScalarFieldC& f);
VecX assemble_load_vector(const FeSpace& s, const VectorField& f);
VecXc assemble_load_vector_c(const FeSpace& s, const VectorFieldC& f);

// Boundary terms over panels: <t, trace(w)> on all of Gamma for the vector
// space, and <g, trace(phi)> over panels with the given tag for the scalar
// space.
VecXc assemble_traction_term(const FeSpace& s, const BoundaryVectorFieldC& t);
VecXc assemble_flux_term(const FeSpace& s, const BoundaryFieldC& g,
                         PanelTag tag);

// Scalar nodes constrained by Dirichlet panels (of the given tag).
struct DirichletMap {
    std::vector<char> is_constrained;  // per scalar node
    std::vector<int> constrained;      // sorted constrained node ids
    std::vector<int> interior_index;   // node -> 0..n_int-1, or -1
    int num_interior = 0;
    int num_constrained() const { return static_cast<int>(constrained.size()); }
};
DirichletMap make_dirichlet_map(const FeSpace& s,
                                PanelTag tag = PanelTag::Dirichlet);

// Nodal interpolation helpers.
VecXc interpolate_scalar(const FeSpace& s, const ScalarFieldC& f);
VecXc interpolate_vector(const FeSpace& s, const VectorFieldC& f);

// Debug export: one line "row col re im" per stored entry.
void write_sparse_text(std::ostream& os, const SpMatC& A);

}  // namespace pzbem
