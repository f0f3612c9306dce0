#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pzbem/types.hpp"

namespace pzbem {

enum class PanelTag { Dirichlet, Neumann };

// Boundary panel: straight segment between two mesh vertices, oriented so
// the solid domain lies on the left; the outward normal is the 90-degree
// clockwise rotation of the unit tangent.
struct Panel {
    int v0 = -1, v1 = -1;
    PanelTag tag = PanelTag::Dirichlet;
};

struct Mesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;  // CCW vertex indices
    std::vector<Panel> panels;                  // ordered boundary loop(s)

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
    int num_panels() const { return static_cast<int>(panels.size()); }

    Vec2 panel_midpoint(int p) const {
        return 0.5 * (vertices[panels[p].v0] + vertices[panels[p].v1]);
    }
    Real panel_length(int p) const {
        return (vertices[panels[p].v1] - vertices[panels[p].v0]).norm();
    }
    Vec2 panel_tangent(int p) const {
        return (vertices[panels[p].v1] - vertices[panels[p].v0]).normalized();
    }
    Vec2 panel_normal(int p) const {
        Vec2 t = panel_tangent(p);
        return Vec2(t.y(), -t.x());
    }

    Real max_edge_length() const;
    Real triangle_area(int t) const;
    // V - E + F for a simply connected triangulation must equal 1.
    int euler_characteristic() const;
};

using TagPredicate = std::function<PanelTag(const Vec2& midpoint)>;

inline PanelTag all_dirichlet(const Vec2&) { return PanelTag::Dirichlet; }

// Structured triangulation of the axis-aligned rectangle [a.x,b.x] x
// [a.y,b.y] with cell size <= h in each direction. Cells are split along
// the right diagonal by default; `crisscross` splits each cell into four
// triangles about its center instead.
Mesh generate_rect_mesh(const Vec2& a, const Vec2& b, Real h,
                        const TagPredicate& tag = all_dirichlet,
                        bool crisscross = false);

// Triangulation of a simple polygon (vertices in CCW order): ear-clipping
// macro triangulation followed by uniform refinement until every edge is
// <= h. Deterministic; throws on self-intersecting or degenerate input.
Mesh generate_polygon_mesh(const std::vector<Vec2>& poly, Real h,
                           const TagPredicate& tag = all_dirichlet);

// Regular n-gon helper (circumradius r, first vertex at angle phase).
std::vector<Vec2> regular_polygon(int n, Real r, Real phase = M_PI / 2);

// One level of uniform (red) refinement: every triangle is split into
// four congruent children; new vertices are edge midpoints appended after
// the parent vertices, so parent dofs keep their indices.
Mesh refine_uniform(const Mesh& m);

// Recompute the ordered boundary loop from triangle connectivity and
// re-tag panels at their midpoints. Throws if the boundary is not a
// collection of closed loops.
void extract_boundary(Mesh& m, const TagPredicate& tag = all_dirichlet);

// Plain-text mesh format. Header "nv nt np", then nv lines "x y", nt
// lines "i j k", np lines "i j tag" with tag D or N; all indices 0-based,
// coordinates round-trip bit-exactly.
void write_mesh(std::ostream& os, const Mesh& m);
Mesh read_mesh(std::istream& is);
void write_mesh_file(const std::string& path, const Mesh& m);
Mesh read_mesh_file(const std::string& path);

}  // namespace pzbem
