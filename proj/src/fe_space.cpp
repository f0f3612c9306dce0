#include "pzbem/fe_space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pzbem {

void shape_values(int degree, Real x, Real y, Real N[6]) {
    const Real l0 = 1.0 - x - y, l1 = x, l2 = y;
    if (degree == 1) {
        N[0] = l0;
        N[1] = l1;
        N[2] = l2;
        return;
    }
    N[0] = l0 * (2 * l0 - 1);
    N[1] = l1 * (2 * l1 - 1);
    N[2] = l2 * (2 * l2 - 1);
    N[3] = 4 * l0 * l1;
    N[4] = 4 * l1 * l2;
    N[5] = 4 * l2 * l0;
}

void shape_ref_grads(int degree, Real x, Real y, Real dN[6][2]) {
    const Real l0 = 1.0 - x - y, l1 = x, l2 = y;
    if (degree == 1) {
        dN[0][0] = -1;
        dN[0][1] = -1;
        dN[1][0] = 1;
        dN[1][1] = 0;
        dN[2][0] = 0;
        dN[2][1] = 1;
        return;
    }
    // d(l0)/dx = -1, d(l0)/dy = -1; l1 -> (1,0); l2 -> (0,1)
    dN[0][0] = -(4 * l0 - 1);
    dN[0][1] = -(4 * l0 - 1);
    dN[1][0] = 4 * l1 - 1;
    dN[1][1] = 0;
    dN[2][0] = 0;
    dN[2][1] = 4 * l2 - 1;
    dN[3][0] = 4 * (l0 - l1);
    dN[3][1] = -4 * l1;
    dN[4][0] = 4 * l2;
    dN[4][1] = 4 * l1;
    dN[5][0] = -4 * l2;
    dN[5][1] = 4 * (l0 - l2);
}

void trace_values(int degree, Real t, Real N[3]) {
    if (degree == 1) {
        N[0] = 1 - t;
        N[1] = t;
        N[2] = 0;
        return;
    }
    N[0] = (1 - t) * (1 - 2 * t);
    N[1] = t * (2 * t - 1);
    N[2] = 4 * t * (1 - t);
}

void trace_derivs(int degree, Real t, Real dN[3]) {
    if (degree == 1) {
        dN[0] = -1;
        dN[1] = 1;
        dN[2] = 0;
        return;
    }
    dN[0] = 4 * t - 3;
    dN[1] = 4 * t - 1;
    dN[2] = 4 - 8 * t;
}

FeSpace make_fe_space(const Mesh& mesh, int degree) {
    if (degree != 1 && degree != 2)
        throw ConfigError("fe space: degree must be 1 or 2");
    FeSpace s;
    s.mesh = &mesh;
    s.degree = degree;
    s.nodes_per_cell = degree == 1 ? 3 : 6;
    s.node_xy = mesh.vertices;

    std::map<std::pair<int, int>, int> edge_node;
    auto edge_id = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = edge_node.find(key);
        if (it != edge_node.end()) return it->second;
        int id = static_cast<int>(s.node_xy.size());
        s.node_xy.push_back(0.5 *
                            (mesh.vertices[a] + mesh.vertices[b]));
        edge_node.emplace(key, id);
        return id;
    };

    s.cell_dofs.resize(mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tr = mesh.triangles[t];
        auto& cd = s.cell_dofs[t];
        cd = {tr[0], tr[1], tr[2], -1, -1, -1};
        if (degree == 2) {
            cd[3] = edge_id(tr[0], tr[1]);
            cd[4] = edge_id(tr[1], tr[2]);
            cd[5] = edge_id(tr[2], tr[0]);
        }
    }

    std::set<int> bset;
    s.panel_nodes.resize(mesh.num_panels());
    for (int p = 0; p < mesh.num_panels(); ++p) {
        const auto& pa = mesh.panels[p];
        int mid = -1;
        if (degree == 2) {
            auto it = edge_node.find(std::minmax(pa.v0, pa.v1));
            if (it == edge_node.end())
                throw ConfigError("fe space: panel is not a mesh edge");
            mid = it->second;
            bset.insert(mid);
        }
        s.panel_nodes[p] = {pa.v0, pa.v1, mid};
        bset.insert(pa.v0);
        bset.insert(pa.v1);
    }
    s.boundary_nodes.assign(bset.begin(), bset.end());
    return s;
}

}  // namespace pzbem
