#pragma once

#include <array>
#include <vector>

#include "pzbem/mesh.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

// Continuous Lagrange P_k (k = 1, 2) scalar space on a triangulation.
// Scalar nodes are the mesh vertices, plus edge midpoints for k = 2
// (appended after the vertices). The vector-valued displacement space
// uses the same node table with interleaved components: vector dof of
// node n, component c, is 2n + c.
struct FeSpace {
    const Mesh* mesh = nullptr;
    int degree = 1;
    int nodes_per_cell = 3;  // 3 for P1, 6 for P2

    std::vector<std::array<int, 6>> cell_dofs;  // scalar node ids per cell
    std::vector<Vec2> node_xy;                  // node coordinates
    std::vector<int> boundary_nodes;            // sorted node ids on Gamma
    // per panel: {v0 node, v1 node, midpoint node or -1}
    std::vector<std::array<int, 3>> panel_nodes;

    int num_nodes() const { return static_cast<int>(node_xy.size()); }
    int num_vector_dofs() const { return 2 * num_nodes(); }
    int num_cells() const { return mesh->num_triangles(); }
};

FeSpace make_fe_space(const Mesh& mesh, int degree);

// Reference-element shape functions on {x,y >= 0, x+y <= 1}.
// P2 local ordering: 0,1,2 vertices; 3 = mid(0,1), 4 = mid(1,2),
// 5 = mid(2,0).
void shape_values(int degree, Real x, Real y, Real N[6]);
void shape_ref_grads(int degree, Real x, Real y, Real dN[6][2]);

// Trace of the P_k basis on a panel parametrized by t in [0,1]
// (node order v0, v1, midpoint), matching FeSpace::panel_nodes.
void trace_values(int degree, Real t, Real N[3]);
void trace_derivs(int degree, Real t, Real dN[3]);

}  // namespace pzbem
