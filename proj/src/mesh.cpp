#include "pzbem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pzbem {

Real Mesh::max_edge_length() const {
    Real m = 0.0;
    for (const auto& t : triangles)
        for (int e = 0; e < 3; ++e)
            m = std::max(m, (vertices[t[e]] - vertices[t[(e + 1) % 3]]).norm());
    return m;
}

Real Mesh::triangle_area(int t) const {
    const auto& tr = triangles[t];
    Vec2 u = vertices[tr[1]] - vertices[tr[0]];
    Vec2 v = vertices[tr[2]] - vertices[tr[0]];
    return 0.5 * (u.x() * v.y() - u.y() * v.x());
}

int Mesh::euler_characteristic() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& t : triangles)
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    return num_vertices() - static_cast<int>(edges.size()) + num_triangles();
}

namespace {

void check_triangle_orientation(Mesh& m) {
    for (int t = 0; t < m.num_triangles(); ++t) {
        if (m.triangle_area(t) <= 0.0)
            throw ConfigError("mesh: degenerate or clockwise triangle");
    }
}

}  // namespace

void extract_boundary(Mesh& m, const TagPredicate& tag) {
    // Directed edges of CCW triangles traverse the boundary with the
    // domain on the left; an edge is on the boundary iff its reverse
    // never appears.
    std::map<std::pair<int, int>, int> count;
    for (const auto& t : m.triangles)
        for (int e = 0; e < 3; ++e)
            count[{t[e], t[(e + 1) % 3]}]++;

    std::map<int, int> next;  // boundary successor vertex
    for (const auto& [edge, c] : count) {
        if (c > 1) throw ConfigError("mesh: non-manifold edge");
        if (!count.count({edge.second, edge.first})) {
            if (next.count(edge.first))
                throw ConfigError("mesh: boundary is not a disjoint loop set");
            next[edge.first] = edge.second;
        }
    }

    m.panels.clear();
    std::set<int> visited;
    while (visited.size() < next.size()) {
        int start = -1;
        for (const auto& [v, _] : next)
            if (!visited.count(v)) {
                start = v;
                break;
            }
        int v = start;
        do {
            auto it = next.find(v);
            if (it == next.end())
                throw ConfigError("mesh: open boundary chain");
            Panel p;
            p.v0 = v;
            p.v1 = it->second;
            p.tag = tag(0.5 * (m.vertices[p.v0] + m.vertices[p.v1]));
            m.panels.push_back(p);
            visited.insert(v);
            v = it->second;
        } while (v != start);
    }
}

Mesh generate_rect_mesh(const Vec2& a, const Vec2& b, Real h,
                        const TagPredicate& tag, bool crisscross) {
    if (!(b.x() > a.x()) || !(b.y() > a.y()))
        throw ConfigError("generate_rect_mesh: empty rectangle");
    if (!(h > 0.0)) throw ConfigError("generate_rect_mesh: h must be > 0");
    const int nx = std::max(1, static_cast<int>(
                                   std::ceil((b.x() - a.x()) / h - 1e-12)));
    const int ny = std::max(1, static_cast<int>(
                                   std::ceil((b.y() - a.y()) / h - 1e-12)));
    const Real dx = (b.x() - a.x()) / nx;
    const Real dy = (b.y() - a.y()) / ny;

    Mesh m;
    m.vertices.reserve((nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            m.vertices.emplace_back(a.x() + i * dx, a.y() + j * dy);
    auto vid = [&](int i, int j) { return j * (nx + 1) + i; };

    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int v00 = vid(i, j), v10 = vid(i + 1, j);
            const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            if (crisscross) {
                const int c = m.num_vertices();
                m.vertices.emplace_back(a.x() + (i + 0.5) * dx,
                                        a.y() + (j + 0.5) * dy);
                m.triangles.push_back({v00, v10, c});
                m.triangles.push_back({v10, v11, c});
                m.triangles.push_back({v11, v01, c});
                m.triangles.push_back({v01, v00, c});
            } else {
                m.triangles.push_back({v00, v10, v11});
                m.triangles.push_back({v00, v11, v01});
            }
        }
    check_triangle_orientation(m);
    extract_boundary(m, tag);
    return m;
}

std::vector<Vec2> regular_polygon(int n, Real r, Real phase) {
    std::vector<Vec2> poly;
    poly.reserve(n);
    for (int i = 0; i < n; ++i) {
        Real th = phase + 2.0 * M_PI * i / n;
        poly.emplace_back(r * std::cos(th), r * std::sin(th));
    }
    return poly;
}

namespace {

Real cross2(const Vec2& a, const Vec2& b) {
    return a.x() * b.y() - a.y() * b.x();
}

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                        const Vec2& q2) {
    // proper intersection test (shared endpoints excluded by the caller)
    auto sgn = [](Real v) { return (v > 0) - (v < 0); };
    int d1 = sgn(cross2(p2 - p1, q1 - p1));
    int d2 = sgn(cross2(p2 - p1, q2 - p1));
    int d3 = sgn(cross2(q2 - q1, p1 - q1));
    int d4 = sgn(cross2(q2 - q1, p2 - q1));
    return d1 * d2 < 0 && d3 * d4 < 0;
}

bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b,
                       const Vec2& c) {
    Real d1 = cross2(b - a, p - a);
    Real d2 = cross2(c - b, p - b);
    Real d3 = cross2(a - c, p - c);
    return d1 >= 0 && d2 >= 0 && d3 >= 0;
}

std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& poly) {
    const int n = static_cast<int>(poly.size());
    Real area2 = 0.0;
    for (int i = 0; i < n; ++i) area2 += cross2(poly[i], poly[(i + 1) % n]);
    if (std::abs(area2) < 1e-14)
        throw ConfigError("polygon: degenerate (zero area)");
    if (area2 < 0) throw ConfigError("polygon: vertices must be CCW");

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::array<int, 3>> tris;
    const Real scale = std::sqrt(std::abs(area2));

    while (idx.size() > 3) {
        const int m = static_cast<int>(idx.size());
        bool clipped = false;
        for (int i = 0; i < m; ++i) {
            int ia = idx[(i + m - 1) % m], ib = idx[i], ic = idx[(i + 1) % m];
            const Vec2 &A = poly[ia], &B = poly[ib], &C = poly[ic];
            if (cross2(B - A, C - A) <= 1e-12 * scale * scale) continue;
            bool ear = true;
            for (int j = 0; j < m; ++j) {
                int iv = idx[j];
                if (iv == ia || iv == ib || iv == ic) continue;
                if (point_in_triangle(poly[iv], A, B, C)) {
                    ear = false;
                    break;
                }
            }
            if (ear) {
                tris.push_back({ia, ib, ic});
                idx.erase(idx.begin() + i);
                clipped = true;
                break;
            }
        }
        if (!clipped)
            throw ConfigError("polygon: ear clipping failed (degenerate?)");
    }
    tris.push_back({idx[0], idx[1], idx[2]});
    return tris;
}

}  // namespace

Mesh generate_polygon_mesh(const std::vector<Vec2>& poly, Real h,
                           const TagPredicate& tag) {
    const int n = static_cast<int>(poly.size());
    if (n < 3) throw ConfigError("polygon: need at least 3 vertices");
    if (!(h > 0.0)) throw ConfigError("polygon: h must be > 0");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j],
                                   poly[(j + 1) % n]))
                throw ConfigError("polygon: self-intersecting boundary");
        }

    Mesh m;
    m.vertices = poly;
    m.triangles = ear_clip(poly);
    check_triangle_orientation(m);
    extract_boundary(m, tag);
    while (m.max_edge_length() > h) m = refine_uniform(m);
    extract_boundary(m, tag);
    return m;
}

Mesh refine_uniform(const Mesh& m) {
    Mesh r;
    r.vertices = m.vertices;
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        int id = r.num_vertices();
        r.vertices.push_back(0.5 * (m.vertices[a] + m.vertices[b]));
        midpoint.emplace(key, id);
        return id;
    };
    for (const auto& t : m.triangles) {
        int m01 = mid(t[0], t[1]), m12 = mid(t[1], t[2]), m20 = mid(t[2], t[0]);
        r.triangles.push_back({t[0], m01, m20});
        r.triangles.push_back({t[1], m12, m01});
        r.triangles.push_back({t[2], m20, m12});
        r.triangles.push_back({m01, m12, m20});
    }
    for (const auto& p : m.panels) {
        int c = mid(p.v0, p.v1);
        r.panels.push_back({p.v0, c, p.tag});
        r.panels.push_back({c, p.v1, p.tag});
    }
    return r;
}

void write_mesh(std::ostream& os, const Mesh& m) {
    char buf[96];
    os << m.num_vertices() << ' ' << m.num_triangles() << ' '
       << m.num_panels() << '\n';
    for (const auto& v : m.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.x(), v.y());
        os << buf;
    }
    for (const auto& t : m.triangles)
        os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    for (const auto& p : m.panels)
        os << p.v0 << ' ' << p.v1 << ' '
           << (p.tag == PanelTag::Dirichlet ? 'D' : 'N') << '\n';
}

Mesh read_mesh(std::istream& is) {
    Mesh m;
    int nv = 0, nt = 0, np = 0;
    if (!(is >> nv >> nt >> np))
        throw ConfigError("mesh file: bad header");
    if (nv < 3 || nt < 1 || np < 3)
        throw ConfigError("mesh file: implausible counts");
    m.vertices.resize(nv);
    for (auto& v : m.vertices) {
        Real x, y;
        if (!(is >> x >> y)) throw ConfigError("mesh file: bad vertex line");
        v = Vec2(x, y);
    }
    m.triangles.resize(nt);
    for (auto& t : m.triangles) {
        if (!(is >> t[0] >> t[1] >> t[2]))
            throw ConfigError("mesh file: bad triangle line");
        for (int v : t)
            if (v < 0 || v >= nv)
                throw ConfigError("mesh file: triangle index out of range");
    }
    m.panels.resize(np);
    for (auto& p : m.panels) {
        char c;
        if (!(is >> p.v0 >> p.v1 >> c))
            throw ConfigError("mesh file: bad panel line");
        if (p.v0 < 0 || p.v0 >= nv || p.v1 < 0 || p.v1 >= nv)
            throw ConfigError("mesh file: panel index out of range");
        if (c == 'D')
            p.tag = PanelTag::Dirichlet;
        else if (c == 'N')
            p.tag = PanelTag::Neumann;
        else
            throw ConfigError("mesh file: panel tag must be D or N");
    }
    check_triangle_orientation(m);
    return m;
}

void write_mesh_file(const std::string& path, const Mesh& m) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open for writing: " + path);
    write_mesh(os, m);
}

Mesh read_mesh_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open: " + path);
    return read_mesh(is);
}

}  // namespace pzbem
