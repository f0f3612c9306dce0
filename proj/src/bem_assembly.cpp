#include "pzbem/bem_assembly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "pzbem/bessel_k.hpp"
#include "pzbem/fe_space.hpp"
#include "pzbem/quadrature.hpp"

namespace pzbem {
namespace {

constexpr Real kTwoPiInv = 0.15915494309189535;  // 1/(2 pi)

struct PanelGeom {
    Vec2 a, b;  // endpoints in loop orientation v0 -> v1
    Vec2 nu;    // outward unit normal
    Real L = 0.0;
};

PanelGeom panel_geom(const Mesh& m, int p) {
    PanelGeom g;
    g.a = m.vertices[m.panels[p].v0];
    g.b = m.vertices[m.panels[p].v1];
    g.L = (g.b - g.a).norm();
    g.nu = m.panel_normal(p);
    return g;
}

// Quadratic polynomials c0 + c1 t + c2 t^2 carry the basis functions in
// the pair-local parametrization.
using Poly = std::array<Real, 3>;

Poly reverse_poly(const Poly& c) {  // p(1 - t)
    return {c[0] + c[1] + c[2], -c[1] - 2.0 * c[2], c[2]};
}

Poly d_poly(const Poly& c) { return {c[1], 2.0 * c[2], 0.0}; }

// X_h basis (P_{k-1}) on one panel, local parameter.
int x_coefs(int degree, bool rev, Poly out[2]) {
    int n;
    if (degree == 1) {
        out[0] = {1.0, 0.0, 0.0};
        n = 1;
    } else {
        out[0] = {1.0, -1.0, 0.0};
        out[1] = {0.0, 1.0, 0.0};
        n = 2;
    }
    if (rev)
        for (int i = 0; i < n; ++i) out[i] = reverse_poly(out[i]);
    return n;
}

// Y_h basis (P_k) on one panel in dof order (v0, v1, midpoint).
int y_coefs(int degree, bool rev, Poly out[3]) {
    int n;
    if (degree == 1) {
        out[0] = {1.0, -1.0, 0.0};
        out[1] = {0.0, 1.0, 0.0};
        n = 2;
    } else {
        out[0] = {1.0, -3.0, 2.0};
        out[1] = {0.0, -1.0, 2.0};
        out[2] = {0.0, 4.0, -4.0};
        n = 3;
    }
    if (rev)
        for (int i = 0; i < n; ++i) out[i] = reverse_poly(out[i]);
    return n;
}

using Mom = Eigen::Matrix<Complex, 3, 3>;

struct MomTrio {
    Mom m0 = Mom::Zero();   // K0(s r) t^i tau^j
    Mom m1y = Mom::Zero();  // K1(s r) ((x-y).nu_y / r) t^i tau^j
    Mom m1x = Mom::Zero();  // K1(s r) ((x-y).nu_x / r) t^i tau^j
};

Complex quad_form(const Poly& p, const Mom& M, const Poly& q) {
    Complex acc{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        if (p[i] == 0.0) continue;
        Complex row{0.0, 0.0};
        for (int j = 0; j < 3; ++j)
            if (q[j] != 0.0) row += M(i, j) * q[j];
        acc += p[i] * row;
    }
    return acc;
}

Real binom(int n, int k) {
    static const Real tab[7][7] = {
        {1, 0, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0, 0},
        {1, 2, 1, 0, 0, 0, 0},      {1, 3, 3, 1, 0, 0, 0},
        {1, 4, 6, 4, 1, 0, 0},      {1, 5, 10, 10, 5, 1, 0},
        {1, 6, 15, 20, 15, 6, 1}};
    return tab[n][k];
}

// Coefficients of O_ij(w) = int_0^{1-w} [(tau+w)^i tau^j + tau^i (tau+w)^j] dtau
// as a polynomial in w; reduces the coincident double integral to the
// one-dimensional moments int_0^1 K0(alpha w) w^q dw.
std::array<Real, 6> overlap_coeffs(int i, int j) {
    std::array<Real, 6> c{};
    auto add_term = [&c](int ii, int jj) {
        for (int a = 0; a <= ii; ++a) {
            const int m = a + jj + 1;
            const Real f = binom(ii, a) / static_cast<Real>(m);
            for (int b = 0; b <= m; ++b)
                c[ii - a + b] += f * binom(m, b) * ((b % 2) ? -1.0 : 1.0);
        }
    };
    add_term(i, j);
    add_term(j, i);
    return c;
}

MomTrio coincident_moments(Complex s, const PanelGeom& A) {
    MomTrio out;  // flat panel: (x - y) . nu = 0, so m1y = m1x = 0
    Complex m0[6], m1[6];
    bessel_k_moments(s * A.L, 5, m0, m1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const auto c = overlap_coeffs(i, j);
            Complex acc{0.0, 0.0};
            for (int q = 0; q <= i + j + 1; ++q) acc += c[q] * m0[q];
            out.m0(i, j) = acc;
        }
    return out;
}

// Shared-corner pair, both panels parametrized from the corner:
// x = c + t dA, y = c + tau dB. Duffy split tau = t w / t = tau w turns
// the distance into t |dA - w dB| (resp. tau |w dA - dB|), and the inner
// integral becomes a radial moment.
MomTrio adjacent_moments(Complex s, const PanelGeom& A, const PanelGeom& B,
                         const Vec2& dA, const Vec2& dB) {
    MomTrio out;
    const Rule1D& gl = gauss_legendre(16);
    const Real dAnB = dA.dot(B.nu);
    const Real dBnA = dB.dot(A.nu);
    Complex m0[6], m1[6];
    for (int iw = 0; iw < static_cast<int>(gl.size()); ++iw) {
        const Real w = gl.x[iw], gw = gl.w[iw];
        {  // region tau <= t
            const Real g = (dA - w * dB).norm();
            bessel_k_moments(s * g, 5, m0, m1);
            Real wj = 1.0;
            for (int j = 0; j < 3; ++j) {
                for (int i = 0; i < 3; ++i) {
                    const Complex q0 = m0[i + j + 1];
                    const Complex q1 = m1[i + j + 1];
                    out.m0(i, j) += gw * wj * q0;
                    out.m1y(i, j) += gw * wj * (dAnB / g) * q1;
                    out.m1x(i, j) += gw * wj * (-w * dBnA / g) * q1;
                }
                wj *= w;
            }
        }
        {  // region t <= tau
            const Real g = (w * dA - dB).norm();
            bessel_k_moments(s * g, 5, m0, m1);
            Real wi = 1.0;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    const Complex q0 = m0[i + j + 1];
                    const Complex q1 = m1[i + j + 1];
                    out.m0(i, j) += gw * wi * q0;
                    out.m1y(i, j) += gw * wi * (w * dAnB / g) * q1;
                    out.m1x(i, j) += gw * wi * (-dBnA / g) * q1;
                }
                wi *= w;
            }
        }
    }
    return out;
}

Real point_seg_dist2(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    const Real L2 = d.squaredNorm();
    Real t = (L2 > 0.0) ? (p - a).dot(d) / L2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + t * d)).squaredNorm();
}

// Distance of non-crossing segments (attained at an endpoint).
Real seg_seg_dist(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                  const Vec2& b1) {
    const Real d2 = std::min(
        std::min(point_seg_dist2(a0, b0, b1), point_seg_dist2(a1, b0, b1)),
        std::min(point_seg_dist2(b0, a0, a1), point_seg_dist2(b1, a0, a1)));
    return std::sqrt(d2);
}

// Well-separated pair: tensor Gauss in the global parameters, one kernel
// evaluation feeding all three moment families. Close pairs split the
// longer panel until the distance/size ratio recovers.
void disjoint_accumulate(Complex s, const PanelGeom& A, const PanelGeom& B,
                         Real ta0, Real ta1, Real tb0, Real tb1, int depth,
                         MomTrio& acc) {
    const Vec2 dA = A.b - A.a, dB = B.b - B.a;
    const Vec2 a0 = A.a + ta0 * dA, a1 = A.a + ta1 * dA;
    const Vec2 b0 = B.a + tb0 * dB, b1 = B.a + tb1 * dB;
    const Real la = (ta1 - ta0) * A.L, lb = (tb1 - tb0) * B.L;
    const Real dist = seg_seg_dist(a0, a1, b0, b1);
    const Real ratio = dist / std::max(la, lb);
    int n = 0;
    if (ratio >= 4.0)
        n = 6;
    else if (ratio >= 2.0)
        n = 8;
    else if (ratio >= 1.0)
        n = 10;
    else if (depth >= 8)
        n = 12;
    if (n == 0) {
        if (la >= lb) {
            const Real tm = 0.5 * (ta0 + ta1);
            disjoint_accumulate(s, A, B, ta0, tm, tb0, tb1, depth + 1, acc);
            disjoint_accumulate(s, A, B, tm, ta1, tb0, tb1, depth + 1, acc);
        } else {
            const Real tm = 0.5 * (tb0 + tb1);
            disjoint_accumulate(s, A, B, ta0, ta1, tb0, tm, depth + 1, acc);
            disjoint_accumulate(s, A, B, ta0, ta1, tm, tb1, depth + 1, acc);
        }
        return;
    }
    const Rule1D& gl = gauss_legendre(n);
    const Real box = (ta1 - ta0) * (tb1 - tb0);
    for (int i = 0; i < n; ++i) {
        const Real t = ta0 + (ta1 - ta0) * gl.x[i];
        const Vec2 x = A.a + t * dA;
        const Real tp[3] = {1.0, t, t * t};
        for (int j = 0; j < n; ++j) {
            const Real tau = tb0 + (tb1 - tb0) * gl.x[j];
            const Vec2 y = B.a + tau * dB;
            const Vec2 d = x - y;
            const Real r = d.norm();
            const K01 k = bessel_k01(s * r);
            const Real wq = box * gl.w[i] * gl.w[j];
            const Complex g0 = wq * k.k0;
            const Complex g1y = wq * k.k1 * (d.dot(B.nu) / r);
            const Complex g1x = wq * k.k1 * (d.dot(A.nu) / r);
            const Real taup[3] = {1.0, tau, tau * tau};
            for (int ii = 0; ii < 3; ++ii)
                for (int jj = 0; jj < 3; ++jj) {
                    const Real mono = tp[ii] * taup[jj];
                    acc.m0(ii, jj) += mono * g0;
                    acc.m1y(ii, jj) += mono * g1y;
                    acc.m1x(ii, jj) += mono * g1x;
                }
        }
    }
}

}  // namespace

void bessel_k_moments(Complex alpha, int qmax, Complex out0[6],
                      Complex out1[6]) {
    if (qmax < 0 || qmax > 5)
        throw ConfigError("bessel_k_moments: qmax must be in [0,5]");
    for (int q = 0; q <= qmax; ++q) out0[q] = out1[q] = Complex{0.0, 0.0};

    const Real amag = std::abs(alpha);
    if (!(amag > 0.0))
        throw NumericalError("bessel_k_moments: alpha must be nonzero");
    const Complex loga = std::log(alpha);
    const Real t1 = std::min(1.0, 4.0 / amag);

    const Rule1D& gl = gauss_legendre(16);
    const Rule1D& glog = gauss_log(16);

    // [0, t1]: split off the logarithm through K0 = k0_reg - log(z) I0,
    // K1 = 1/z + log(z) I1 + k1_reg; the 1/z part integrates exactly.
    const Complex logc = loga + std::log(t1);
    for (int i = 0; i < static_cast<int>(gl.size()); ++i) {
        const Real x = gl.x[i];
        const Complex z = alpha * (t1 * x);
        const Complex f0 = k0_regular(z) - logc * bessel_i0(z);
        const Complex f1 = k1_regular(z) + logc * bessel_i1(z);
        Real xp = 1.0;
        for (int q = 0; q <= qmax; ++q) {
            out0[q] += gl.w[i] * f0 * xp;
            out1[q] += gl.w[i] * f1 * xp;
            xp *= x;
        }
    }
    for (int i = 0; i < static_cast<int>(glog.size()); ++i) {
        const Real x = glog.x[i];
        const Complex z = alpha * (t1 * x);
        const Complex i0 = bessel_i0(z), i1 = bessel_i1(z);
        Real xp = 1.0;
        for (int q = 0; q <= qmax; ++q) {
            out0[q] += glog.w[i] * i0 * xp;  // integrates (-ln x) I0 x^q
            out1[q] -= glog.w[i] * i1 * xp;
            xp *= x;
        }
    }
    Real t1p = t1;
    for (int q = 0; q <= qmax; ++q) {
        out0[q] *= t1p;
        out1[q] *= t1p;
        t1p *= t1;
    }
    Real tq = t1;
    for (int q = 1; q <= qmax; ++q) {
        out1[q] += tq / (alpha * static_cast<Real>(q));
        tq *= t1;
    }

    // Dyadic continuation on [t1, 1]: direct kernel evaluations on
    // doubling intervals, capped so each holds a bounded phase span,
    // stopping once the exponential decay makes the tail negligible.
    const Real im_a = std::abs(alpha.imag());
    Real a = t1;
    while (a < 1.0) {
        Real b = std::min(1.0, 2.0 * a);
        if (im_a > 0.0) b = std::min(b, a + 12.0 / im_a);
        const Real len = b - a;
        for (int i = 0; i < static_cast<int>(gl.size()); ++i) {
            const Real u = a + len * gl.x[i];
            const K01 k = bessel_k01(alpha * u);
            const Real w = len * gl.w[i];
            Real up = 1.0;
            for (int q = 0; q <= qmax; ++q) {
                out0[q] += w * k.k0 * up;
                out1[q] += w * k.k1 * up;
                up *= u;
            }
        }
        a = b;
        if (alpha.real() * a > 40.0) break;  // tail below 5e-18
    }
}

BemBlocks assemble_bem(const BoundarySpace& bs, Complex s) {
    if (!bs.mesh) throw ConfigError("assemble_bem: empty boundary space");
    if (!(std::abs(s) > 0.0))
        throw NumericalError("assemble_bem: s must be nonzero");
    const Mesh& m = *bs.mesh;
    const int np = m.num_panels();
    const int k = bs.degree;

    BemBlocks out;
    out.V = MatXc::Zero(bs.num_X, bs.num_X);
    out.K = MatXc::Zero(bs.num_X, bs.num_Y);
    out.Kt = MatXc::Zero(bs.num_Y, bs.num_X);
    out.W = MatXc::Zero(bs.num_Y, bs.num_Y);
    out.M1 = MatX::Zero(bs.num_X, bs.num_Y);

    std::vector<PanelGeom> pg(np);
    for (int p = 0; p < np; ++p) pg[p] = panel_geom(m, p);

    // Surface pairing <X_h, Y_h>, exact Gauss.
    const Rule1D& g6 = gauss_legendre(6);
    for (int p = 0; p < np; ++p) {
        Real XB[2], N[3];
        for (int q = 0; q < static_cast<int>(g6.size()); ++q) {
            const Real t = g6.x[q];
            xbasis_values(k, t, XB);
            trace_values(k, t, N);
            const Real w = g6.w[q] * pg[p].L;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k + 1; ++b)
                    out.M1(bs.x_dof(p, a), bs.panel_dofs_Y[p][b]) +=
                        w * XB[a] * N[b];
        }
    }

    for (int pa = 0; pa < np; ++pa) {
        const Panel& PA = m.panels[pa];
        for (int pb = pa; pb < np; ++pb) {
            const Panel& PB = m.panels[pb];
            const PanelGeom& A = pg[pa];
            const PanelGeom& B = pg[pb];

            MomTrio trio;
            bool revA = false, revB = false;
            if (pa == pb) {
                trio = coincident_moments(s, A);
            } else if (PA.v1 == PB.v0 || PA.v0 == PB.v1 || PA.v0 == PB.v0 ||
                       PA.v1 == PB.v1) {
                Vec2 corner, dA, dB;
                if (PA.v1 == PB.v0) {
                    corner = A.b; revA = true; revB = false;
                } else if (PA.v0 == PB.v1) {
                    corner = A.a; revA = false; revB = true;
                } else if (PA.v0 == PB.v0) {
                    corner = A.a; revA = false; revB = false;
                } else {
                    corner = A.b; revA = true; revB = true;
                }
                dA = revA ? Vec2(A.a - corner) : Vec2(A.b - corner);
                dB = revB ? Vec2(B.a - corner) : Vec2(B.b - corner);
                trio = adjacent_moments(s, A, B, dA, dB);
            } else {
                disjoint_accumulate(s, A, B, 0.0, 1.0, 0.0, 1.0, 0, trio);
            }

            Poly XA[2], XB[2], YA[3], YB[3], dYA[3], dYB[3];
            const int nx = x_coefs(k, revA, XA);
            x_coefs(k, revB, XB);
            const int ny = y_coefs(k, revA, YA);
            y_coefs(k, revB, YB);
            for (int a = 0; a < ny; ++a) dYA[a] = d_poly(YA[a]);
            for (int b = 0; b < ny; ++b) dYB[b] = d_poly(YB[b]);
            // arc-length derivative sign relative to the loop orientation
            const Real sgn = (revA != revB) ? -1.0 : 1.0;

            const Real LL = A.L * B.L;
            const Complex f0 = kTwoPiInv * LL;
            const Complex fK = kTwoPiInv * LL * s;
            const Real nAnB = A.nu.dot(B.nu);
            const Complex fW2 = kTwoPiInv * s * s * nAnB * LL;

            Complex BV[2][2], BK[2][3], BKt[3][2], BW[3][3];
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < nx; ++b)
                    BV[a][b] = f0 * quad_form(XA[a], trio.m0, XB[b]);
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < ny; ++b)
                    BK[a][b] = fK * quad_form(XA[a], trio.m1y, YB[b]);
            for (int a = 0; a < ny; ++a)
                for (int b = 0; b < nx; ++b)
                    BKt[a][b] = -fK * quad_form(YA[a], trio.m1x, XB[b]);
            for (int a = 0; a < ny; ++a)
                for (int b = 0; b < ny; ++b)
                    BW[a][b] =
                        kTwoPiInv * sgn * quad_form(dYA[a], trio.m0, dYB[b]) +
                        fW2 * quad_form(YA[a], trio.m0, YB[b]);

            const auto& ya = bs.panel_dofs_Y[pa];
            const auto& yb = bs.panel_dofs_Y[pb];
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < nx; ++b) {
                    out.V(bs.x_dof(pa, a), bs.x_dof(pb, b)) += BV[a][b];
                    if (pa != pb)
                        out.V(bs.x_dof(pb, b), bs.x_dof(pa, a)) += BV[a][b];
                }
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < ny; ++b) {
                    out.K(bs.x_dof(pa, a), yb[b]) += BK[a][b];
                    if (pa != pb) out.Kt(yb[b], bs.x_dof(pa, a)) += BK[a][b];
                }
            for (int a = 0; a < ny; ++a)
                for (int b = 0; b < nx; ++b) {
                    out.Kt(ya[a], bs.x_dof(pb, b)) += BKt[a][b];
                    if (pa != pb) out.K(bs.x_dof(pb, b), ya[a]) += BKt[a][b];
                }
            for (int a = 0; a < ny; ++a)
                for (int b = 0; b < ny; ++b) {
                    out.W(ya[a], yb[b]) += BW[a][b];
                    if (pa != pb) out.W(yb[b], ya[a]) += BW[a][b];
                }
        }
    }
    return out;
}

PotentialEval eval_potentials(const BoundarySpace& bs, Complex s,
                              const VecXc& lam, const VecXc& phi,
                              const Vec2& x) {
    if (!bs.mesh) throw ConfigError("eval_potentials: empty boundary space");
    if (lam.size() != bs.num_X || phi.size() != bs.num_Y)
        throw ConfigError("eval_potentials: density size mismatch");
    const Mesh& m = *bs.mesh;
    const int np = m.num_panels();
    const int k = bs.degree;
    const Rule1D& g8 = gauss_legendre(8);

    Real hmax = 0.0;
    for (int p = 0; p < np; ++p) hmax = std::max(hmax, m.panel_length(p));

    PotentialEval res;
    Complex S{0.0, 0.0}, D{0.0, 0.0};
    for (int p = 0; p < np; ++p) {
        const PanelGeom G = panel_geom(m, p);
        const Vec2 dAB = G.b - G.a;
        const Real dist0 = std::sqrt(point_seg_dist2(x, G.a, G.b));
        if (dist0 < 1e-13 * std::max(G.L, 1.0))
            throw NumericalError(
                "eval_potentials: point lies on the boundary");
        if (dist0 < 0.5 * hmax) res.near_boundary = true;
        const auto& pd = bs.panel_dofs_Y[p];

        const std::function<void(Real, Real, int)> seg = [&](Real t0, Real t1,
                                                             int depth) {
            const Vec2 e0 = G.a + t0 * dAB, e1 = G.a + t1 * dAB;
            const Real len = (t1 - t0) * G.L;
            const Real dist = std::sqrt(point_seg_dist2(x, e0, e1));
            if (dist < 2.0 * len && depth < 40) {
                const Real tm = 0.5 * (t0 + t1);
                seg(t0, tm, depth + 1);
                seg(tm, t1, depth + 1);
                return;
            }
            Real XB[2], N[3];
            for (int q = 0; q < static_cast<int>(g8.size()); ++q) {
                const Real t = t0 + (t1 - t0) * g8.x[q];
                const Vec2 y = G.a + t * dAB;
                const Vec2 d = x - y;
                const Real r = d.norm();
                const K01 kk = bessel_k01(s * r);
                const Real w = g8.w[q] * (t1 - t0) * G.L;
                xbasis_values(k, t, XB);
                trace_values(k, t, N);
                Complex lam_t = lam[bs.x_dof(p, 0)] * XB[0];
                if (k == 2) lam_t += lam[bs.x_dof(p, 1)] * XB[1];
                Complex phi_t = phi[pd[0]] * N[0] + phi[pd[1]] * N[1];
                if (k == 2) phi_t += phi[pd[2]] * N[2];
                S += w * kTwoPiInv * kk.k0 * lam_t;
                D += w * (s * kTwoPiInv) * kk.k1 * (d.dot(G.nu) / r) * phi_t;
            }
        };
        seg(0.0, 1.0, 0);
    }
    res.value = D - S;
    return res;
}

PotentialGradient eval_potentials_gradient(const BoundarySpace& bs, Complex s,
                                           const VecXc& lam, const VecXc& phi,
                                           const Vec2& x) {
    if (!bs.mesh)
        throw ConfigError("eval_potentials_gradient: empty boundary space");
    if (lam.size() != bs.num_X || phi.size() != bs.num_Y)
        throw ConfigError("eval_potentials_gradient: density size mismatch");
    const Mesh& m = *bs.mesh;
    const int np = m.num_panels();
    const int k = bs.degree;
    const Rule1D& g8 = gauss_legendre(8);

    Real hmax = 0.0;
    for (int p = 0; p < np; ++p) hmax = std::max(hmax, m.panel_length(p));

    PotentialGradient res;
    Complex Sx{0.0, 0.0}, Sy{0.0, 0.0}, Dx{0.0, 0.0}, Dy{0.0, 0.0};
    for (int p = 0; p < np; ++p) {
        const PanelGeom G = panel_geom(m, p);
        const Vec2 dAB = G.b - G.a;
        const Real dist0 = std::sqrt(point_seg_dist2(x, G.a, G.b));
        if (dist0 < 1e-13 * std::max(G.L, 1.0))
            throw NumericalError(
                "eval_potentials_gradient: point lies on the boundary");
        if (dist0 < 0.5 * hmax) res.near_boundary = true;
        const auto& pd = bs.panel_dofs_Y[p];

        const std::function<void(Real, Real, int)> seg = [&](Real t0, Real t1,
                                                             int depth) {
            const Vec2 e0 = G.a + t0 * dAB, e1 = G.a + t1 * dAB;
            const Real len = (t1 - t0) * G.L;
            const Real dist = std::sqrt(point_seg_dist2(x, e0, e1));
            if (dist < 2.0 * len && depth < 40) {
                const Real tm = 0.5 * (t0 + t1);
                seg(t0, tm, depth + 1);
                seg(tm, t1, depth + 1);
                return;
            }
            Real XB[2], N[3];
            for (int q = 0; q < static_cast<int>(g8.size()); ++q) {
                const Real t = t0 + (t1 - t0) * g8.x[q];
                const Vec2 y = G.a + t * dAB;
                const Vec2 d = x - y;
                const Real r = d.norm();
                const K01 kk = bessel_k01(s * r);
                const Real w = g8.w[q] * (t1 - t0) * G.L;
                xbasis_values(k, t, XB);
                trace_values(k, t, N);
                Complex lam_t = lam[bs.x_dof(p, 0)] * XB[0];
                if (k == 2) lam_t += lam[bs.x_dof(p, 1)] * XB[1];
                Complex phi_t = phi[pd[0]] * N[0] + phi[pd[1]] * N[1];
                if (k == 2) phi_t += phi[pd[2]] * N[2];

                // grad_x S kernel: -(s/2pi) K1(sr) d/r
                const Complex cs = w * (s * kTwoPiInv) * kk.k1 / r * lam_t;
                Sx -= cs * d.x();
                Sy -= cs * d.y();
                // grad_x D kernel:
                //   (s/2pi)[K1(sr)(nu/r - 2(d.nu)d/r^3) - s K0(sr)(d.nu)d/r^2]
                const Real dn = d.dot(G.nu);
                const Complex c1 = w * (s * kTwoPiInv) * kk.k1 * phi_t;
                const Complex c2 = w * (s * kTwoPiInv) * s * kk.k0 * dn /
                                   (r * r) * phi_t;
                Dx += c1 * (G.nu.x() / r - 2.0 * dn * d.x() / (r * r * r)) -
                      c2 * d.x();
                Dy += c1 * (G.nu.y() / r - 2.0 * dn * d.y() / (r * r * r)) -
                      c2 * d.y();
            }
        };
        seg(0.0, 1.0, 0);
    }
    res.gx = Dx - Sx;
    res.gy = Dy - Sy;
    return res;
}

}  // namespace pzbem
