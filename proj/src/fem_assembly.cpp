#include "pzbem/fem_assembly.hpp"

#include <ostream>

#include "pzbem/quadrature.hpp"

namespace pzbem {

CellGeometry cell_geometry(const Mesh& mesh, int t) {
    const auto& tr = mesh.triangles[t];
    CellGeometry g;
    g.p0 = mesh.vertices[tr[0]];
    g.J.col(0) = mesh.vertices[tr[1]] - g.p0;
    g.J.col(1) = mesh.vertices[tr[2]] - g.p0;
    g.detJ = g.J.determinant();
    if (!(g.detJ > 0)) throw NumericalError("degenerate triangle in assembly");
    g.Jinv = g.J.inverse();
    return g;
}

namespace {

const TriRule& volume_rule(const FeSpace& s) {
    return s.degree == 1 ? tri_rule_deg2() : tri_rule_deg5();
}

// physical gradients of all shape functions at a reference point
void phys_grads(const FeSpace& s, const CellGeometry& g, Real x, Real y,
                Vec2 grad[6]) {
    Real dN[6][2];
    shape_ref_grads(s.degree, x, y, dN);
    for (int i = 0; i < s.nodes_per_cell; ++i) {
        Vec2 gr(dN[i][0], dN[i][1]);
        grad[i] = g.Jinv.transpose() * gr;
    }
}

template <class Fill>
SpMat assemble_cells(int rows, int cols, const FeSpace& s, Fill fill) {
    std::vector<Triplet> trip;
    for (int t = 0; t < s.num_cells(); ++t) fill(t, trip);
    SpMat A(rows, cols);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}

}  // namespace

SpMat assemble_elastic_stiffness(const FeSpace& s, const Materials& mat) {
    const TriRule& q = volume_rule(s);
    const int npc = s.nodes_per_cell;
    return assemble_cells(
        s.num_vector_dofs(), s.num_vector_dofs(), s,
        [&](int t, std::vector<Triplet>& trip) {
            CellGeometry g = cell_geometry(*s.mesh, t);
            const auto& cd = s.cell_dofs[t];
            Eigen::Matrix<Real, 12, 12> Ke =
                Eigen::Matrix<Real, 12, 12>::Zero();
            for (int k = 0; k < q.size(); ++k) {
                Vec2 grad[6];
                phys_grads(s, g, q.x[k], q.y[k], grad);
                Eigen::Matrix<Real, 3, 12> B =
                    Eigen::Matrix<Real, 3, 12>::Zero();
                for (int i = 0; i < npc; ++i) {
                    B(0, 2 * i) = grad[i].x();
                    B(2, 2 * i) = grad[i].y();
                    B(1, 2 * i + 1) = grad[i].y();
                    B(2, 2 * i + 1) = grad[i].x();
                }
                Ke.topLeftCorner(2 * npc, 2 * npc) +=
                    (q.w[k] * g.detJ) *
                    (B.leftCols(2 * npc).transpose() * mat.C *
                     B.leftCols(2 * npc));
            }
            for (int i = 0; i < 2 * npc; ++i)
                for (int j = 0; j < 2 * npc; ++j)
                    trip.emplace_back(2 * cd[i / 2] + i % 2,
                                      2 * cd[j / 2] + j % 2, Ke(i, j));
        });
}

SpMat assemble_mass(const FeSpace& s, const ScalarField& rho) {
    const TriRule& q = tri_rule_deg5();
    const int npc = s.nodes_per_cell;
    return assemble_cells(
        s.num_vector_dofs(), s.num_vector_dofs(), s,
        [&](int t, std::vector<Triplet>& trip) {
            CellGeometry g = cell_geometry(*s.mesh, t);
            const auto& cd = s.cell_dofs[t];
            Eigen::Matrix<Real, 6, 6> Me = Eigen::Matrix<Real, 6, 6>::Zero();
            for (int k = 0; k < q.size(); ++k) {
                Real N[6];
                shape_values(s.degree, q.x[k], q.y[k], N);
                Vec2 xq = g.p0 + g.J * Vec2(q.x[k], q.y[k]);
                const Real w = q.w[k] * g.detJ * rho(xq);
                for (int i = 0; i < npc; ++i)
                    for (int j = 0; j < npc; ++j)
                        Me(i, j) += w * N[i] * N[j];
            }
            for (int i = 0; i < npc; ++i)
                for (int j = 0; j < npc; ++j)
                    for (int c = 0; c < 2; ++c)
                        trip.emplace_back(2 * cd[i] + c, 2 * cd[j] + c,
                                          Me(i, j));
        });
}

SpMat assemble_piezo_coupling(const FeSpace& s, const Materials& mat) {
    const TriRule& q = volume_rule(s);
    const int npc = s.nodes_per_cell;
    return assemble_cells(
        s.num_vector_dofs(), s.num_nodes(), s,
        [&](int t, std::vector<Triplet>& trip) {
            CellGeometry g = cell_geometry(*s.mesh, t);
            const auto& cd = s.cell_dofs[t];
            Eigen::Matrix<Real, 12, 6> Ke = Eigen::Matrix<Real, 12, 6>::Zero();
            for (int k = 0; k < q.size(); ++k) {
                Vec2 grad[6];
                phys_grads(s, g, q.x[k], q.y[k], grad);
                Eigen::Matrix<Real, 3, 12> B =
                    Eigen::Matrix<Real, 3, 12>::Zero();
                for (int i = 0; i < npc; ++i) {
                    B(0, 2 * i) = grad[i].x();
                    B(2, 2 * i) = grad[i].y();
                    B(1, 2 * i + 1) = grad[i].y();
                    B(2, 2 * i + 1) = grad[i].x();
                }
                for (int j = 0; j < npc; ++j) {
                    Eigen::Vector3d ev = mat.e * grad[j];
                    Ke.col(j).head(2 * npc) +=
                        (q.w[k] * g.detJ) *
                        (B.leftCols(2 * npc).transpose() * ev);
                }
            }
            for (int i = 0; i < 2 * npc; ++i)
                for (int j = 0; j < npc; ++j)
                    trip.emplace_back(2 * cd[i / 2] + i % 2, cd[j], Ke(i, j));
        });
}

SpMat assemble_dielectric(const FeSpace& s, const Materials& mat) {
    const TriRule& q = volume_rule(s);
    const int npc = s.nodes_per_cell;
    return assemble_cells(
        s.num_nodes(), s.num_nodes(), s,
        [&](int t, std::vector<Triplet>& trip) {
            CellGeometry g = cell_geometry(*s.mesh, t);
            const auto& cd = s.cell_dofs[t];
            Eigen::Matrix<Real, 6, 6> Ke = Eigen::Matrix<Real, 6, 6>::Zero();
            for (int k = 0; k < q.size(); ++k) {
                Vec2 grad[6];
                phys_grads(s, g, q.x[k], q.y[k], grad);
                for (int i = 0; i < npc; ++i)
                    for (int j = 0; j < npc; ++j)
                        Ke(i, j) += q.w[k] * g.detJ *
                                    grad[i].dot(mat.eps * grad[j]);
            }
            for (int i = 0; i < npc; ++i)
                for (int j = 0; j < npc; ++j)
                    trip.emplace_back(cd[i], cd[j], Ke(i, j));
        });
}

namespace {

template <class Scalar, class Fn>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> load_scalar_impl(const FeSpace& s,
                                                          Fn f) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(s.num_nodes());
    const TriRule& q = tri_rule_deg5();
    for (int t = 0; t < s.num_cells(); ++t) {
        CellGeometry g = cell_geometry(*s.mesh, t);
        const auto& cd = s.cell_dofs[t];
        for (int k = 0; k < q.size(); ++k) {
            Real N[6];
            shape_values(s.degree, q.x[k], q.y[k], N);
            Vec2 xq = g.p0 + g.J * Vec2(q.x[k], q.y[k]);
            Scalar fv = f(xq) * (q.w[k] * g.detJ);
            for (int i = 0; i < s.nodes_per_cell; ++i) b[cd[i]] += fv * N[i];
        }
    }
    return b;
}

template <class Scalar, class Fn>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> load_vector_impl(const FeSpace& s,
                                                          Fn f) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(s.num_vector_dofs());
    const TriRule& q = tri_rule_deg5();
    for (int t = 0; t < s.num_cells(); ++t) {
        CellGeometry g = cell_geometry(*s.mesh, t);
        const auto& cd = s.cell_dofs[t];
        for (int k = 0; k < q.size(); ++k) {
            Real N[6];
            shape_values(s.degree, q.x[k], q.y[k], N);
            Vec2 xq = g.p0 + g.J * Vec2(q.x[k], q.y[k]);
            auto fv = f(xq);
            const Real w = q.w[k] * g.detJ;
            for (int i = 0; i < s.nodes_per_cell; ++i)
                for (int c = 0; c < 2; ++c)
                    b[2 * cd[i] + c] += (w * N[i]) * fv(c);
        }
    }
    return b;
}

}  // namespace

VecX assemble_load_scalar(const FeSpace& s, const ScalarField& f) {
    return load_scalar_impl<Real>(s, f);
}
VecXc assemble_load_scalar_c(const FeSpace& s, const ScalarFieldC& f) {
    return load_scalar_impl<Complex>(s, f);
}
VecX assemble_load_vector(const FeSpace& s, const VectorField& f) {
    return load_vector_impl<Real>(s, f);
}
VecXc assemble_load_vector_c(const FeSpace& s, const VectorFieldC& f) {
    return load_vector_impl<Complex>(s, f);
}

VecXc assemble_traction_term(const FeSpace& s, const BoundaryVectorFieldC& t) {
    VecXc b = VecXc::Zero(s.num_vector_dofs());
    const Rule1D& q = gauss_legendre(6);
    const Mesh& m = *s.mesh;
    for (int p = 0; p < m.num_panels(); ++p) {
        const Vec2 a = m.vertices[m.panels[p].v0];
        const Vec2 d = m.vertices[m.panels[p].v1] - a;
        const Real len = d.norm();
        const Vec2 nu = m.panel_normal(p);
        const auto& pn = s.panel_nodes[p];
        for (int k = 0; k < q.size(); ++k) {
            Real N[3];
            trace_values(s.degree, q.x[k], N);
            Eigen::Vector2cd tv = t(a + q.x[k] * d, nu) * (q.w[k] * len);
            const int nn = s.degree == 1 ? 2 : 3;
            for (int i = 0; i < nn; ++i)
                for (int c = 0; c < 2; ++c)
                    b[2 * pn[i] + c] += N[i] * tv(c);
        }
    }
    return b;
}

VecXc assemble_flux_term(const FeSpace& s, const BoundaryFieldC& g,
                         PanelTag tag) {
    VecXc b = VecXc::Zero(s.num_nodes());
    const Rule1D& q = gauss_legendre(6);
    const Mesh& m = *s.mesh;
    for (int p = 0; p < m.num_panels(); ++p) {
        if (m.panels[p].tag != tag) continue;
        const Vec2 a = m.vertices[m.panels[p].v0];
        const Vec2 d = m.vertices[m.panels[p].v1] - a;
        const Real len = d.norm();
        const Vec2 nu = m.panel_normal(p);
        const auto& pn = s.panel_nodes[p];
        for (int k = 0; k < q.size(); ++k) {
            Real N[3];
            trace_values(s.degree, q.x[k], N);
            Complex gv = g(a + q.x[k] * d, nu) * (q.w[k] * len);
            const int nn = s.degree == 1 ? 2 : 3;
            for (int i = 0; i < nn; ++i) b[pn[i]] += N[i] * gv;
        }
    }
    return b;
}

DirichletMap make_dirichlet_map(const FeSpace& s, PanelTag tag) {
    DirichletMap dm;
    dm.is_constrained.assign(s.num_nodes(), 0);
    const Mesh& m = *s.mesh;
    for (int p = 0; p < m.num_panels(); ++p) {
        if (m.panels[p].tag != tag) continue;
        const auto& pn = s.panel_nodes[p];
        dm.is_constrained[pn[0]] = 1;
        dm.is_constrained[pn[1]] = 1;
        if (pn[2] >= 0) dm.is_constrained[pn[2]] = 1;
    }
    dm.interior_index.assign(s.num_nodes(), -1);
    for (int n = 0; n < s.num_nodes(); ++n) {
        if (dm.is_constrained[n])
            dm.constrained.push_back(n);
        else
            dm.interior_index[n] = dm.num_interior++;
    }
    return dm;
}

VecXc interpolate_scalar(const FeSpace& s, const ScalarFieldC& f) {
    VecXc v(s.num_nodes());
    for (int n = 0; n < s.num_nodes(); ++n) v[n] = f(s.node_xy[n]);
    return v;
}

VecXc interpolate_vector(const FeSpace& s, const VectorFieldC& f) {
    VecXc v(s.num_vector_dofs());
    for (int n = 0; n < s.num_nodes(); ++n) {
        Eigen::Vector2cd u = f(s.node_xy[n]);
        v[2 * n] = u(0);
        v[2 * n + 1] = u(1);
    }
    return v;
}

void write_sparse_text(std::ostream& os, const SpMatC& A) {
    for (int k = 0; k < A.outerSize(); ++k)
        for (SpMatC::InnerIterator it(A, k); it; ++it)
            os << it.row() << ' ' << it.col() << ' ' << it.value().real()
               << ' ' << it.value().imag() << '\n';
}

}  // namespace pzbem
