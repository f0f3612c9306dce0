#pragma once

#include <array>
#include <vector>

#include "pzbem/fe_space.hpp"
#include "pzbem/mesh.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

// Boundary-element trial/test spaces on the panel loop for order k:
//   X_h: discontinuous piecewise P_{k-1}; k dofs per panel, numbered
//        k*p + a for panel p (P0: constant; P1: Lagrange at endpoints).
//   Y_h: continuous piecewise P_k; dofs at boundary vertices (and panel
//        midpoints for k = 2), k*np in total on closed loops.
// Y_h nodes coincide with the finite-element trace nodes; y_to_fe_node
// records that correspondence when the space is built alongside an
// FeSpace on the same mesh.
struct BoundarySpace {
    const Mesh* mesh = nullptr;
    int degree = 1;  // k

    int num_X = 0, num_Y = 0;
    // per panel: Y dofs of (v0, v1, midpoint or -1)
    std::vector<std::array<int, 3>> panel_dofs_Y;
    // per boundary vertex dof: its mesh vertex id; midpoint dofs -> panel id
    std::vector<int> y_vertex;  // mesh vertex of Y dof (vertex dofs only)
    std::vector<int> y_to_fe_node;  // empty unless built with an FeSpace

    int x_dof(int panel, int a) const { return degree * panel + a; }
};

BoundarySpace make_boundary_space(const Mesh& mesh, int degree,
                                  const FeSpace* fe = nullptr);

// X_h basis on a panel at parameter t (P0: {1}; P1: {1-t, t}).
void xbasis_values(int degree, Real t, Real B[2]);

// Nodal interpolation into the spaces: Y_h at its nodes; X_h at panel
// endpoint/constant nodes (P0 uses the midpoint).
VecXc interpolate_Y(const BoundarySpace& bs,
                    const std::function<Complex(const Vec2&)>& f);
VecXc interpolate_X(const BoundarySpace& bs,
                    const std::function<Complex(const Vec2&, const Vec2&)>& f);

// Panel-wise L2 projection into X_h (orthogonalizes the residual against
// the panel polynomials, which interpolation does not).
VecXc project_X(const BoundarySpace& bs,
                const std::function<Complex(const Vec2&, const Vec2&)>& f);

}  // namespace pzbem
