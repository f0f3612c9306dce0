#include "pzbem/bie_space.hpp"

#include <map>

#include "pzbem/quadrature.hpp"

namespace pzbem {

BoundarySpace make_boundary_space(const Mesh& mesh, int degree,
                                  const FeSpace* fe) {
    if (degree != 1 && degree != 2)
        throw ConfigError("boundary space degree must be 1 or 2");
    BoundarySpace bs;
    bs.mesh = &mesh;
    bs.degree = degree;
    const int np = mesh.num_panels();
    if (np == 0) throw ConfigError("mesh has no boundary panels");

    bs.num_X = degree * np;

    // Vertex Y dofs in first-encounter order along the panel list, then
    // midpoint dofs (k = 2) appended per panel.
    std::map<int, int> vert_dof;
    bs.panel_dofs_Y.assign(np, {-1, -1, -1});
    for (int p = 0; p < np; ++p) {
        for (int e = 0; e < 2; ++e) {
            const int v = (e == 0) ? mesh.panels[p].v0 : mesh.panels[p].v1;
            auto it = vert_dof.find(v);
            int dof;
            if (it == vert_dof.end()) {
                dof = static_cast<int>(vert_dof.size());
                vert_dof.emplace(v, dof);
                bs.y_vertex.push_back(v);
            } else {
                dof = it->second;
            }
            bs.panel_dofs_Y[p][e] = dof;
        }
    }
    const int nv = static_cast<int>(vert_dof.size());
    bs.num_Y = (degree == 2) ? nv + np : nv;
    if (degree == 2)
        for (int p = 0; p < np; ++p) bs.panel_dofs_Y[p][2] = nv + p;

    if (fe) {
        if (fe->mesh != &mesh)
            throw ConfigError("boundary space and FE space use different meshes");
        if (fe->degree != degree)
            throw ConfigError("boundary space degree must match FE space degree");
        bs.y_to_fe_node.assign(bs.num_Y, -1);
        for (int d = 0; d < nv; ++d) bs.y_to_fe_node[d] = bs.y_vertex[d];
        if (degree == 2)
            for (int p = 0; p < np; ++p)
                bs.y_to_fe_node[nv + p] = fe->panel_nodes[p][2];
    }
    return bs;
}

void xbasis_values(int degree, Real t, Real B[2]) {
    if (degree == 1) {
        B[0] = 1.0;
        B[1] = 0.0;
    } else {
        B[0] = 1.0 - t;
        B[1] = t;
    }
}

VecXc interpolate_Y(const BoundarySpace& bs,
                    const std::function<Complex(const Vec2&)>& f) {
    const Mesh& m = *bs.mesh;
    VecXc out = VecXc::Zero(bs.num_Y);
    std::vector<char> done(bs.num_Y, 0);
    for (int p = 0; p < m.num_panels(); ++p) {
        const Vec2 a = m.vertices[m.panels[p].v0];
        const Vec2 b = m.vertices[m.panels[p].v1];
        const auto& pd = bs.panel_dofs_Y[p];
        if (!done[pd[0]]) { out[pd[0]] = f(a); done[pd[0]] = 1; }
        if (!done[pd[1]]) { out[pd[1]] = f(b); done[pd[1]] = 1; }
        if (pd[2] >= 0 && !done[pd[2]]) {
            out[pd[2]] = f(0.5 * (a + b));
            done[pd[2]] = 1;
        }
    }
    return out;
}

VecXc interpolate_X(const BoundarySpace& bs,
                    const std::function<Complex(const Vec2&, const Vec2&)>& f) {
    const Mesh& m = *bs.mesh;
    VecXc out = VecXc::Zero(bs.num_X);
    for (int p = 0; p < m.num_panels(); ++p) {
        const Vec2 a = m.vertices[m.panels[p].v0];
        const Vec2 b = m.vertices[m.panels[p].v1];
        const Vec2 nu = m.panel_normal(p);
        if (bs.degree == 1) {
            out[p] = f(0.5 * (a + b), nu);
        } else {
            out[2 * p] = f(a, nu);
            out[2 * p + 1] = f(b, nu);
        }
    }
    return out;
}

VecXc project_X(const BoundarySpace& bs,
                const std::function<Complex(const Vec2&, const Vec2&)>& f) {
    const Mesh& m = *bs.mesh;
    const Rule1D& g8 = gauss_legendre(8);
    VecXc out = VecXc::Zero(bs.num_X);
    for (int p = 0; p < m.num_panels(); ++p) {
        const Vec2 a = m.vertices[m.panels[p].v0];
        const Vec2 b = m.vertices[m.panels[p].v1];
        const Vec2 nu = m.panel_normal(p);
        if (bs.degree == 1) {
            Complex acc{0.0, 0.0};
            for (int q = 0; q < static_cast<int>(g8.size()); ++q)
                acc += g8.w[q] * f(a + g8.x[q] * (b - a), nu);
            out[p] = acc;  // unit-length parameter mass cancels
        } else {
            // basis {1-t, t}: mass [[1/3,1/6],[1/6,1/3]] per unit parameter
            Complex r0{0.0, 0.0}, r1{0.0, 0.0};
            for (int q = 0; q < static_cast<int>(g8.size()); ++q) {
                const Real t = g8.x[q];
                const Complex v = f(a + t * (b - a), nu);
                r0 += g8.w[q] * (1.0 - t) * v;
                r1 += g8.w[q] * t * v;
            }
            // inverse of [[1/3,1/6],[1/6,1/3]] = [[4,-2],[-2,4]]
            out[2 * p] = 4.0 * r0 - 2.0 * r1;
            out[2 * p + 1] = -2.0 * r0 + 4.0 * r1;
        }
    }
    return out;
}

}  // namespace pzbem
