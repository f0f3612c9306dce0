#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pzbem/mesh.hpp"

using namespace pzbem;

namespace {

double total_area(const Mesh& m) {
    double a = 0.0;
    for (int t = 0; t < m.num_triangles(); ++t) a += m.triangle_area(t);
    return a;
}

// panels must chain into closed loops: every v1 is some panel's v0
void check_closed_loops(const Mesh& m) {
    std::vector<int> out(m.num_vertices(), 0), in(m.num_vertices(), 0);
    for (const auto& p : m.panels) {
        out[p.v0]++;
        in[p.v1]++;
    }
    for (int v = 0; v < m.num_vertices(); ++v) CHECK(out[v] == in[v]);
    for (const auto& p : m.panels) CHECK(out[p.v1] == 1);
}

}  // namespace

TEST_CASE("rect mesh: structured counts") {
    Mesh m = generate_rect_mesh(Vec2(1, 1), Vec2(3, 2), 1.0);
    CHECK(m.num_vertices() == 6);
    CHECK(m.num_triangles() == 4);
    CHECK(m.num_panels() == 6);
    CHECK(m.euler_characteristic() == 1);
    CHECK(total_area(m) == doctest::Approx(2.0).epsilon(1e-14));

    Mesh f = generate_rect_mesh(Vec2(1, 1), Vec2(3, 2), 0.5);
    CHECK(f.num_vertices() == 15);
    CHECK(f.num_triangles() == 16);
    CHECK(f.num_panels() == 12);
    CHECK(f.euler_characteristic() == 1);
    CHECK(f.max_edge_length() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("rect mesh: criss-cross variant") {
    Mesh m = generate_rect_mesh(Vec2(0, 0), Vec2(1, 1), 1.0, all_dirichlet,
                                true);
    CHECK(m.num_vertices() == 5);
    CHECK(m.num_triangles() == 4);
    CHECK(m.num_panels() == 4);
    CHECK(m.euler_characteristic() == 1);
    CHECK(total_area(m) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rect mesh: boundary loop is closed, outward-oriented") {
    Mesh m = generate_rect_mesh(Vec2(1, 1), Vec2(3, 2), 0.5);
    check_closed_loops(m);
    const Vec2 center(2.0, 1.5);
    double perim = 0.0;
    for (int p = 0; p < m.num_panels(); ++p) {
        perim += m.panel_length(p);
        CHECK(m.panel_normal(p).dot(m.panel_midpoint(p) - center) > 0.0);
    }
    CHECK(perim == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("rect mesh: tag predicate applied at panel midpoints") {
    auto tag = [](const Vec2& mid) {
        return mid.y() < 1.0 + 1e-12 ? PanelTag::Neumann
                                     : PanelTag::Dirichlet;
    };
    Mesh m = generate_rect_mesh(Vec2(1, 1), Vec2(3, 2), 0.5, tag);
    int n_neu = 0;
    for (const auto& p : m.panels)
        if (p.tag == PanelTag::Neumann) ++n_neu;
    CHECK(n_neu == 4);
}

TEST_CASE("rect mesh: invalid input throws") {
    CHECK_THROWS_AS(generate_rect_mesh(Vec2(0, 0), Vec2(0, 1), 0.5),
                    ConfigError);
    CHECK_THROWS_AS(generate_rect_mesh(Vec2(0, 0), Vec2(1, 1), 0.0),
                    ConfigError);
}

TEST_CASE("uniform refinement: counts, indices, orientation") {
    Mesh m = generate_rect_mesh(Vec2(1, 1), Vec2(3, 2), 0.5);
    Mesh r = refine_uniform(m);
    // V' = V + E with E = V + T - 1 for a simply connected triangulation
    CHECK(r.num_vertices() == 15 + (15 + 16 - 1));
    CHECK(r.num_triangles() == 4 * 16);
    CHECK(r.num_panels() == 2 * 12);
    CHECK(r.euler_characteristic() == 1);
    for (int v = 0; v < m.num_vertices(); ++v)
        CHECK((r.vertices[v] - m.vertices[v]).norm() == 0.0);
    for (int t = 0; t < r.num_triangles(); ++t)
        CHECK(r.triangle_area(t) > 0.0);
    CHECK(total_area(r) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.max_edge_length() == doctest::Approx(0.5 * m.max_edge_length()));
    check_closed_loops(r);
}

TEST_CASE("polygon mesh: regular pentagon") {
    auto poly = regular_polygon(5, 1.0);
    REQUIRE(poly.size() == 5);
    CHECK(poly[0].x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(poly[0].y() == doctest::Approx(1.0));

    Mesh m = generate_polygon_mesh(poly, 0.3);
    CHECK(m.euler_characteristic() == 1);
    CHECK(m.max_edge_length() <= 0.3);
    CHECK(m.num_panels() % 5 == 0);
    const double pentagon_area = 2.5 * std::sin(2.0 * M_PI / 5.0);
    CHECK(total_area(m) == doctest::Approx(pentagon_area).epsilon(1e-13));
    check_closed_loops(m);
    // outward normals for a convex polygon centered at the origin
    for (int p = 0; p < m.num_panels(); ++p)
        CHECK(m.panel_normal(p).dot(m.panel_midpoint(p)) > 0.0);
}

TEST_CASE("polygon mesh: rejects bad input") {
    // bow-tie (self-intersecting)
    std::vector<Vec2> bow = {Vec2(0, 0), Vec2(1, 1), Vec2(1, 0), Vec2(0, 1)};
    CHECK_THROWS_AS(generate_polygon_mesh(bow, 0.5), ConfigError);
    // clockwise square
    std::vector<Vec2> cw = {Vec2(0, 0), Vec2(0, 1), Vec2(1, 1), Vec2(1, 0)};
    CHECK_THROWS_AS(generate_polygon_mesh(cw, 0.5), ConfigError);
    // too few vertices
    std::vector<Vec2> two = {Vec2(0, 0), Vec2(1, 0)};
    CHECK_THROWS_AS(generate_polygon_mesh(two, 0.5), ConfigError);
}

TEST_CASE("mesh text IO: bit-exact round-trip") {
    Mesh m = generate_polygon_mesh(regular_polygon(5, 1.0), 0.4);
    std::stringstream ss;
    write_mesh(ss, m);
    Mesh r = read_mesh(ss);
    REQUIRE(r.num_vertices() == m.num_vertices());
    REQUIRE(r.num_triangles() == m.num_triangles());
    REQUIRE(r.num_panels() == m.num_panels());
    for (int v = 0; v < m.num_vertices(); ++v) {
        CHECK(r.vertices[v].x() == m.vertices[v].x());
        CHECK(r.vertices[v].y() == m.vertices[v].y());
    }
    for (int t = 0; t < m.num_triangles(); ++t)
        CHECK(r.triangles[t] == m.triangles[t]);
    for (int p = 0; p < m.num_panels(); ++p) {
        CHECK(r.panels[p].v0 == m.panels[p].v0);
        CHECK(r.panels[p].v1 == m.panels[p].v1);
        CHECK(r.panels[p].tag == m.panels[p].tag);
    }
}

TEST_CASE("mesh text IO: malformed input throws") {
    std::stringstream bad1("not a mesh");
    CHECK_THROWS_AS(read_mesh(bad1), ConfigError);
    // clockwise triangle must be rejected on read
    std::stringstream bad2("3 1 3\n0 0\n1 0\n0 1\n0 2 1\n0 2 D\n2 1 D\n1 0 D\n");
    CHECK_THROWS_AS(read_mesh(bad2), ConfigError);
}
