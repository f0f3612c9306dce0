#include "pzbem/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "pzbem/quadrature.hpp"

namespace pzbem {

namespace {

constexpr Real kTinyNorm = 1e-28;  // squared-norm floor for relative errors

ErrorPair finish_errors(Real num_l2, Real den_l2, Real num_semi,
                        Real den_semi) {
    ErrorPair e;
    const Real num_h1 = num_l2 + num_semi;
    const Real den_h1 = den_l2 + den_semi;
    if (den_l2 < kTinyNorm || den_h1 < kTinyNorm) {
        e.absolute = true;
        e.l2 = std::sqrt(num_l2);
        e.h1 = std::sqrt(num_h1);
    } else {
        e.l2 = std::sqrt(num_l2 / den_l2);
        e.h1 = std::sqrt(num_h1 / den_h1);
    }
    return e;
}

void check_options(const HarnessOptions& opt) {
    if (opt.levels < 1)
        throw ConfigError("harness: levels must be at least 1");
    if (!(opt.h0 > 0.0)) throw ConfigError("harness: h0 must be positive");
    if (!(opt.kappa0 > 0.0))
        throw ConfigError("harness: kappa0 must be positive");
    if (opt.steps0 < 1)
        throw ConfigError("harness: steps0 must be at least 1");
    if (opt.sample_points < 1)
        throw ConfigError("harness: need at least one sample point");
    if (!(opt.margin > 0.0))
        throw ConfigError("harness: margin must be positive");
    if (opt.threads < 1)
        throw ConfigError("harness: threads must be at least 1");
    if (!(opt.box_lo.x() < opt.box_hi.x() &&
          opt.box_lo.y() < opt.box_hi.y()))
        throw ConfigError("harness: scatterer box corners are inverted");
}

void log_row(bool enabled, const char* what, const ConvergenceRow& row) {
    if (!enabled) return;
    std::fprintf(stderr,
                 "[%s] h=%-8.5g kappa=%-8.5g Ev=%.3e EuL2=%.3e EpsiL2=%.3e "
                 "EuH1=%.3e EpsiH1=%.3e\n",
                 what, row.h, row.kappa, row.err[kEv], row.err[kEuL2],
                 row.err[kEpsiL2], row.err[kEuH1], row.err[kEpsiH1]);
}

// max |value| and max |value - exact| over the sample points
Real max_ratio_error(const std::vector<Complex>& approx,
                     const std::vector<Complex>& exact, bool* absolute) {
    Real num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < approx.size(); ++j) {
        num = std::max(num, std::abs(approx[j] - exact[j]));
        den = std::max(den, std::abs(exact[j]));
    }
    if (den < 1e-14) {
        if (absolute) *absolute = true;
        return num;
    }
    return num / den;
}

// Incident plane pulse of the scattering demo.
struct IncidentPulse {
    Real amplitude, window, carrier;
    Vec2 dir;

    Real shape(Real sig) const {
        return (sig > 0.0 && sig < window)
                   ? amplitude * std::sin(carrier * sig)
                   : 0.0;
    }
    Real shape_d(Real sig) const {  // derivative away from the jump
        return (sig > 0.0 && sig < window)
                   ? amplitude * carrier * std::cos(carrier * sig)
                   : 0.0;
    }
    Real value(const Vec2& x, Real t) const {
        return shape(t - x.dot(dir));
    }
    Real normal_deriv(const Vec2& x, const Vec2& nu, Real t) const {
        return -shape_d(t - x.dot(dir)) * dir.dot(nu);
    }
};

bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    bool inside = false;
    const int n = static_cast<int>(poly.size());
    for (int i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y() > p.y()) != (b.y() > p.y()) &&
            p.x() < (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) +
                        a.x())
            inside = !inside;
    }
    return inside;
}

Real distance_to_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    const Vec2 ab = b - a;
    const Real t =
        std::clamp(ab.dot(p - a) / std::max(ab.squaredNorm(), 1e-30), 0.0,
                   1.0);
    return (p - (a + t * ab)).norm();
}

Real distance_to_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    Real d = std::numeric_limits<Real>::max();
    const int n = static_cast<int>(poly.size());
    for (int i = 0, j = n - 1; i < n; j = i++)
        d = std::min(d, distance_to_segment(poly[j], poly[i], p));
    return d;
}

void write_or_throw(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << content;
    if (!f) throw NumericalError("failed writing output file: " + path);
}

void append_csv_real(std::string& out, const char* fmt, Real v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    out += buf;
}

}  // namespace

std::vector<std::array<Real, 5>> convergence_rates(
    const ConvergenceTable& table) {
    std::vector<std::array<Real, 5>> rates(table.rows.size());
    const Real nan = std::numeric_limits<Real>::quiet_NaN();
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        for (int c = 0; c < 5; ++c)
            rates[i][c] =
                i == 0 ? nan
                       : std::log2(table.rows[i - 1].err[c] /
                                   table.rows[i].err[c]);
    return rates;
}

ErrorPair vector_field_error(
    const FeSpace& fe, const VecXc& coeffs,
    const std::function<Vec2c(const Vec2&)>& exact,
    const std::function<Mat2c(const Vec2&)>& exact_grad) {
    if (coeffs.size() != fe.num_vector_dofs())
        throw ConfigError("vector_field_error: coefficient size mismatch");
    const TriRule& qr = tri_rule_product(6);
    const int nloc = fe.nodes_per_cell;
    Real num_l2 = 0.0, den_l2 = 0.0, num_s = 0.0, den_s = 0.0;
    for (int c = 0; c < fe.num_cells(); ++c) {
        const CellGeometry g = cell_geometry(*fe.mesh, c);
        const auto& cd = fe.cell_dofs[c];
        for (int q = 0; q < qr.size(); ++q) {
            Real N[6], dN[6][2];
            shape_values(fe.degree, qr.x[q], qr.y[q], N);
            shape_ref_grads(fe.degree, qr.x[q], qr.y[q], dN);
            const Vec2 x = g.p0 + g.J * Vec2(qr.x[q], qr.y[q]);

            Vec2c uh = Vec2c::Zero();
            Mat2c gh = Mat2c::Zero();
            for (int a = 0; a < nloc; ++a) {
                const Vec2 gp =
                    g.Jinv.transpose() * Vec2(dN[a][0], dN[a][1]);
                for (int i = 0; i < 2; ++i) {
                    const Complex ca = coeffs[2 * cd[a] + i];
                    uh[i] += N[a] * ca;
                    gh(i, 0) += ca * gp.x();
                    gh(i, 1) += ca * gp.y();
                }
            }
            const Vec2c ue = exact(x);
            const Mat2c ge = exact_grad(x);
            const Real w = qr.w[q] * std::abs(g.detJ);
            num_l2 += w * (uh - ue).squaredNorm();
            den_l2 += w * ue.squaredNorm();
            num_s += w * (gh - ge).squaredNorm();
            den_s += w * ge.squaredNorm();
        }
    }
    return finish_errors(num_l2, den_l2, num_s, den_s);
}

ErrorPair scalar_field_error(
    const FeSpace& fe, const VecXc& coeffs,
    const std::function<Complex(const Vec2&)>& exact,
    const std::function<Vec2c(const Vec2&)>& exact_grad) {
    if (coeffs.size() != fe.num_nodes())
        throw ConfigError("scalar_field_error: coefficient size mismatch");
    const TriRule& qr = tri_rule_product(6);
    const int nloc = fe.nodes_per_cell;
    Real num_l2 = 0.0, den_l2 = 0.0, num_s = 0.0, den_s = 0.0;
    for (int c = 0; c < fe.num_cells(); ++c) {
        const CellGeometry g = cell_geometry(*fe.mesh, c);
        const auto& cd = fe.cell_dofs[c];
        for (int q = 0; q < qr.size(); ++q) {
            Real N[6], dN[6][2];
            shape_values(fe.degree, qr.x[q], qr.y[q], N);
            shape_ref_grads(fe.degree, qr.x[q], qr.y[q], dN);
            const Vec2 x = g.p0 + g.J * Vec2(qr.x[q], qr.y[q]);

            Complex ph(0.0, 0.0);
            Vec2c gh = Vec2c::Zero();
            for (int a = 0; a < nloc; ++a) {
                const Vec2 gp =
                    g.Jinv.transpose() * Vec2(dN[a][0], dN[a][1]);
                const Complex ca = coeffs[cd[a]];
                ph += N[a] * ca;
                gh.x() += ca * gp.x();
                gh.y() += ca * gp.y();
            }
            const Complex pe = exact(x);
            const Vec2c ge = exact_grad(x);
            const Real w = qr.w[q] * std::abs(g.detJ);
            num_l2 += w * std::norm(ph - pe);
            den_l2 += w * std::norm(pe);
            num_s += w * (gh - ge).squaredNorm();
            den_s += w * ge.squaredNorm();
        }
    }
    return finish_errors(num_l2, den_l2, num_s, den_s);
}

std::vector<Vec2> exterior_sample_points(const Vec2& lo, const Vec2& hi,
                                         int count, Real margin,
                                         unsigned seed) {
    if (count < 1)
        throw ConfigError("exterior_sample_points: count must be positive");
    if (!(margin > 0.0))
        throw ConfigError("exterior_sample_points: margin must be positive");
    std::mt19937 rng(seed);
    const Real pad = margin + 1.0;
    std::uniform_real_distribution<Real> ux(lo.x() - pad, hi.x() + pad);
    std::uniform_real_distribution<Real> uy(lo.y() - pad, hi.y() + pad);
    std::vector<Vec2> pts;
    pts.reserve(count);
    for (long tries = 0; static_cast<int>(pts.size()) < count; ++tries) {
        if (tries > 100000L * count)
            throw NumericalError(
                "exterior_sample_points: rejection sampling stalled");
        const Vec2 p(ux(rng), uy(rng));
        const Real dx =
            std::max({lo.x() - p.x(), 0.0, p.x() - hi.x()});
        const Real dy =
            std::max({lo.y() - p.y(), 0.0, p.y() - hi.y()});
        if (std::hypot(dx, dy) >= margin) pts.push_back(p);
    }
    return pts;
}

FreqStudy run_freq_convergence(const Materials& mat, int degree,
                               const HarnessOptions& opt) {
    check_options(opt);
    FreqStudy out;
    out.points = exterior_sample_points(opt.box_lo, opt.box_hi,
                                        opt.sample_points, opt.margin,
                                        opt.seed);
    const FreqCase fc = make_freq_case(mat, opt.s);
    const FreqData data = fc.data();
    ConvergenceTable& tb = out.table;
    tb.time_domain = false;

    for (int lev = 0; lev < opt.levels; ++lev) {
        const Real h = opt.h0 / static_cast<Real>(1 << lev);
        try {
            const Mesh mesh = generate_rect_mesh(opt.box_lo, opt.box_hi, h);
            const CoupledSpaces sp = make_coupled_spaces(mesh, mat, degree);
            const FrequencySystem sys = build_system(sp, opt.s, true);
            const CoupledRhs rhs = build_rhs(sp, data);
            FrequencySolution sol = solve_frequency(sys, rhs);

            ConvergenceRow row;
            row.h = h;
            const ErrorPair eu = vector_field_error(
                sp.fe, sol.u, [&](const Vec2& x) { return fc.u(x); },
                [&](const Vec2& x) { return fc.grad_u(x); });
            const ErrorPair ep = scalar_field_error(
                sp.fe, sol.psi, [&](const Vec2& x) { return fc.psi(x); },
                [&](const Vec2& x) { return fc.grad_psi(x); });

            std::vector<Complex> vh, ve;
            for (const Vec2& p : out.points) {
                vh.push_back(exterior_field(sp, opt.s, sol, p).value);
                ve.push_back(fc.v(p));
            }
            bool v_abs = false;
            row.err[kEv] = max_ratio_error(vh, ve, &v_abs);
            row.err[kEuL2] = eu.l2;
            row.err[kEpsiL2] = ep.l2;
            row.err[kEuH1] = eu.h1;
            row.err[kEpsiH1] = ep.h1;
            tb.absolute[kEv] = tb.absolute[kEv] || v_abs;
            tb.absolute[kEuL2] = tb.absolute[kEuL2] || eu.absolute;
            tb.absolute[kEuH1] = tb.absolute[kEuH1] || eu.absolute;
            tb.absolute[kEpsiL2] = tb.absolute[kEpsiL2] || ep.absolute;
            tb.absolute[kEpsiH1] = tb.absolute[kEpsiH1] || ep.absolute;
            tb.rows.push_back(row);
            out.finest = std::move(sol);
            log_row(opt.log_progress, "freq", row);
        } catch (const std::exception& e) {
            tb.aborted = true;
            std::ostringstream msg;
            msg << "level " << lev << " (h = " << h << "): " << e.what();
            tb.abort_reason = msg.str();
            break;
        }
    }
    return out;
}

TimeStudy run_time_convergence(const Materials& mat, CQKind kind, int degree,
                               const HarnessOptions& opt) {
    check_options(opt);
    TimeStudy out;
    out.points = exterior_sample_points(opt.box_lo, opt.box_hi,
                                        opt.sample_points, opt.margin,
                                        opt.seed);
    const int npts = static_cast<int>(out.points.size());
    const TimeCase tc = make_time_case(mat);
    ConvergenceTable& tb = out.table;
    tb.time_domain = true;

    for (int lev = 0; lev < opt.levels; ++lev) {
        const Real h = opt.h0 / static_cast<Real>(1 << lev);
        const Real kappa = opt.kappa0 / static_cast<Real>(1 << lev);
        const int N = opt.steps0 * (1 << lev);
        try {
            const Mesh mesh = generate_rect_mesh(opt.box_lo, opt.box_hi, h);
            const CoupledSpaces sp = make_coupled_spaces(mesh, mat, degree);
            const CQScheme sch = make_scheme(kind, kappa, N, opt.cq_eps);
            const int M = N + 1;
            const Real T = sch.time(N);

            // sampled data streams: plain samples in c0, the channel that
            // carries a Laplace factor in c1
            CqRhsStreams streams;
            streams.c0.resize(sp.n_total(), M);
            streams.c1.resize(sp.n_total(), M);
            streams.mu.resize(sp.npsi(), M);
            for (int n = 0; n < M; ++n) {
                const Real t = sch.time(n);
                FreqData d0;
                d0.f1 = [&, t](const Vec2& x) {
                    return Vec2c(tc.f1(x, t).cast<Complex>());
                };
                d0.f2 = [&, t](const Vec2& x) {
                    return Complex(tc.f2(x, t), 0.0);
                };
                d0.traction = [&, t](const Vec2& x, const Vec2& nu) {
                    return Vec2c(tc.traction_solid(x, nu, t).cast<Complex>());
                };
                d0.mu = [&, t](const Vec2& x) {
                    return Complex(tc.mu(x, t), 0.0);
                };
                const CoupledRhs r0 = build_rhs(sp, d0);
                streams.c0.col(n) = r0.b.real();
                streams.mu.col(n) = r0.mu.real();

                FreqData d1;
                d1.alpha = [&, t](const Vec2& x, const Vec2& nu) {
                    return Complex(tc.alpha_solid(x, nu, t), 0.0);
                };
                streams.c1.col(n) = build_rhs(sp, d1).b.real();
            }

            // channels of the cylindrical wave enter per contour node with
            // the transform of the driving signal as weight
            VecX gsig(M);
            for (int n = 0; n < M; ++n) gsig[n] = tc.signal(sch.time(n));
            const VecXc ghat = cq_forward_scalar(sch, gsig);
            const Real rf = sp.mat.rho_f;
            const ExtraRhs extra = [&sp, &tc, ghat, rf](Complex s, int l) {
                const Complex G = ghat[l];
                FreqData d;
                d.traction = [&tc, s, G, rf](const Vec2& x, const Vec2& nu) {
                    const Complex w = s * rf * G * tc.vhat_kernel(x, s);
                    return Vec2c(w * nu.x(), w * nu.y());
                };
                d.alpha = [&tc, s, G](const Vec2& x, const Vec2& nu) {
                    return -G * tc.vhat_dnu_kernel(x, nu, s);
                };
                return build_rhs(sp, d).b;
            };

            const CqSolution sol =
                cq_solve(sp, sch, streams, true, extra, opt.threads);

            // exterior field at the sample points from the frequency-domain
            // densities, with conjugate mirroring across the contour
            MatXc Vh(npts, M);
            for (int l = 0; l <= M / 2; ++l) {
                const Complex se = sch.frequency(l) / sp.mat.c;
                for (int j = 0; j < npts; ++j)
                    Vh(j, l) = eval_potentials(sp.bs, se, sol.lam_hat.col(l),
                                               sol.phi_hat.col(l),
                                               out.points[j])
                                   .value;
                const int m = (M - l) % M;
                if (m != l) Vh.col(m) = Vh.col(l).conjugate();
            }
            const MatX v_series = cq_inverse_real(sch, Vh, nullptr);

            // reference acoustic values from the same kernel at an 8x finer
            // step
            const CQScheme ref = make_scheme(kind, kappa / 8.0, 8 * N,
                                             opt.cq_eps);
            TimeSignal gref;
            gref.kappa = ref.kappa;
            gref.samples.resize(npts, ref.N + 1);
            for (int n = 0; n <= ref.N; ++n) {
                const Complex gv(tc.signal(ref.time(n)), 0.0);
                for (int j = 0; j < npts; ++j) gref.samples(j, n) = gv;
            }
            const Transfer F = [&](Complex s, const VecXc& xh) {
                VecXc y(npts);
                for (int j = 0; j < npts; ++j)
                    y[j] = tc.vhat_kernel(out.points[j], s) * xh[j];
                return y;
            };
            const TimeSignal vref = cq_convolve(ref, F, gref);

            ConvergenceRow row;
            row.h = h;
            row.kappa = kappa;
            const ErrorPair eu = vector_field_error(
                sp.fe, sol.u.col(N).cast<Complex>(),
                [&](const Vec2& x) {
                    return Vec2c(tc.u(x, T).cast<Complex>());
                },
                [&](const Vec2& x) {
                    return Mat2c(tc.grad_u(x, T).cast<Complex>());
                });
            const ErrorPair ep = scalar_field_error(
                sp.fe, sol.psi.col(N).cast<Complex>(),
                [&](const Vec2& x) {
                    return Complex(tc.psi(x, T), 0.0);
                },
                [&](const Vec2& x) {
                    return Vec2c(tc.grad_psi(x, T).cast<Complex>());
                });
            std::vector<Complex> vh(npts), ve(npts);
            for (int j = 0; j < npts; ++j) {
                vh[j] = Complex(v_series(j, N), 0.0);
                ve[j] = vref.samples(j, ref.N);
            }
            bool v_abs = false;
            row.err[kEv] = max_ratio_error(vh, ve, &v_abs);
            row.err[kEuL2] = eu.l2;
            row.err[kEpsiL2] = ep.l2;
            row.err[kEuH1] = eu.h1;
            row.err[kEpsiH1] = ep.h1;
            tb.absolute[kEv] = tb.absolute[kEv] || v_abs;
            tb.absolute[kEuL2] = tb.absolute[kEuL2] || eu.absolute;
            tb.absolute[kEuH1] = tb.absolute[kEuH1] || eu.absolute;
            tb.absolute[kEpsiL2] = tb.absolute[kEpsiL2] || ep.absolute;
            tb.absolute[kEpsiH1] = tb.absolute[kEpsiH1] || ep.absolute;
            tb.rows.push_back(row);
            out.v_series = v_series;
            out.kappa = kappa;
            log_row(opt.log_progress, "time", row);
        } catch (const std::exception& e) {
            tb.aborted = true;
            std::ostringstream msg;
            msg << "level " << lev << " (h = " << h << ", kappa = " << kappa
                << "): " << e.what();
            tb.abort_reason = msg.str();
            break;
        }
    }
    return out;
}

SimulationResult run_sample_simulation(const Materials& mat,
                                       const SimulationOptions& opt) {
    if (!(opt.kappa > 0.0) || !(opt.T > 0.0))
        throw ConfigError("simulation: kappa and T must be positive");
    if (opt.grid_n < 2)
        throw ConfigError("simulation: grid needs at least 2 points per side");
    if (!opt.polygon.empty() && opt.polygon.size() < 3)
        throw ConfigError("simulation: polygon needs at least 3 vertices");
    if (opt.threads < 1)
        throw ConfigError("simulation: threads must be at least 1");
    const int N = static_cast<int>(std::lround(opt.T / opt.kappa));
    if (N < 1) throw ConfigError("simulation: T shorter than one step");

    const std::vector<Vec2> poly =
        opt.polygon.empty() ? regular_polygon(5, 1.0) : opt.polygon;
    std::vector<int> snap_steps;
    for (Real t : opt.snapshot_times) {
        const int n = static_cast<int>(std::lround(t / opt.kappa));
        if (n < 0 || n > N) {
            std::ostringstream msg;
            msg << "simulation: snapshot time " << t
                << " outside the run interval [0, " << N * opt.kappa << "]";
            throw ConfigError(msg.str());
        }
        snap_steps.push_back(n);
    }

    const Mesh mesh = generate_polygon_mesh(poly, opt.h);
    const std::function<Real(const Vec2&)> density =
        opt.gaussian_bump ? bump_density
                          : std::function<Real(const Vec2&)>();
    const CoupledSpaces sp =
        make_coupled_spaces(mesh, mat, opt.degree, density);
    const CQScheme sch = make_scheme(opt.kind, opt.kappa, N, opt.cq_eps);
    const int M = N + 1;

    const IncidentPulse pulse{opt.amplitude, opt.window, opt.carrier,
                              opt.direction};

    // grounded scatterer: no volume forcing, no Dirichlet lifting; the
    // incident wave drives the pressure-traction channel (Laplace factor,
    // c1) and the normal-velocity channel (plain samples, c0)
    CqRhsStreams streams;
    streams.c0.resize(sp.n_total(), M);
    streams.c1.resize(sp.n_total(), M);
    streams.mu = MatX::Zero(sp.npsi(), M);
    for (int n = 0; n < M; ++n) {
        const Real t = sch.time(n);
        FreqData d0;
        d0.alpha = [&, t](const Vec2& x, const Vec2& nu) {
            return Complex(pulse.normal_deriv(x, nu, t), 0.0);
        };
        streams.c0.col(n) = build_rhs(sp, d0).b.real();

        FreqData d1;
        const Real rf = sp.mat.rho_f;
        d1.traction = [&, t, rf](const Vec2& x, const Vec2& nu) {
            const Real w = -rf * pulse.value(x, t);
            return Vec2c(Complex(w * nu.x(), 0.0), Complex(w * nu.y(), 0.0));
        };
        streams.c1.col(n) = build_rhs(sp, d1).b.real();
    }

    const CqSolution sol =
        cq_solve(sp, sch, streams, true, {}, opt.threads);

    // exterior evaluation grid, masked near and inside the scatterer
    std::vector<Vec2> grid;
    for (int i = 0; i < opt.grid_n; ++i)
        for (int j = 0; j < opt.grid_n; ++j) {
            const Real fx = static_cast<Real>(i) / (opt.grid_n - 1);
            const Real fy = static_cast<Real>(j) / (opt.grid_n - 1);
            const Vec2 p(opt.grid_lo.x() + fx * (opt.grid_hi.x() - opt.grid_lo.x()),
                         opt.grid_lo.y() + fy * (opt.grid_hi.y() - opt.grid_lo.y()));
            if (point_in_polygon(poly, p)) continue;
            if (distance_to_polygon(poly, p) < opt.h) continue;
            grid.push_back(p);
        }
    const int npts = static_cast<int>(grid.size());

    MatXc Vh(npts, M);
    for (int l = 0; l <= M / 2; ++l) {
        const Complex se = sch.frequency(l) / sp.mat.c;
        for (int j = 0; j < npts; ++j)
            Vh(j, l) = eval_potentials(sp.bs, se, sol.lam_hat.col(l),
                                       sol.phi_hat.col(l), grid[j])
                           .value;
        const int m = (M - l) % M;
        if (m != l) Vh.col(m) = Vh.col(l).conjugate();
    }
    Real grid_imag = 0.0;
    const MatX v_scat = cq_inverse_real(sch, Vh, &grid_imag);

    SimulationResult res;
    res.max_imag = std::max(sol.max_imag, grid_imag);
    for (std::size_t k = 0; k < snap_steps.size(); ++k) {
        const int n = snap_steps[k];
        const Real t = sch.time(n);

        SnapshotField av;
        av.time = t;
        av.xy = grid;
        av.value.resize(npts);
        for (int j = 0; j < npts; ++j)
            av.value[j] = v_scat(j, n) + pulse.value(grid[j], t);
        res.acoustic.push_back(std::move(av));

        SnapshotField mu_f, ps_f;
        mu_f.time = ps_f.time = t;
        mu_f.xy = ps_f.xy = sp.fe.node_xy;
        mu_f.value.resize(sp.npsi());
        ps_f.value.resize(sp.npsi());
        for (int i = 0; i < sp.npsi(); ++i) {
            mu_f.value[i] =
                std::hypot(sol.u(2 * i, n), sol.u(2 * i + 1, n));
            ps_f.value[i] = sol.psi(i, n);
        }
        res.magnitude_u.push_back(std::move(mu_f));
        res.potential.push_back(std::move(ps_f));
    }
    return res;
}

void write_table_csv(const ConvergenceTable& table, const std::string& path) {
    std::string out;
    const char* cols[5] = {"E_v", "E_u_L2", "E_psi_L2", "E_u_H1",
                           "E_psi_H1"};
    const char* rcols[5] = {"ecr_v", "ecr_u_L2", "ecr_psi_L2", "ecr_u_H1",
                            "ecr_psi_H1"};
    out += "h";
    if (table.time_domain) out += ",kappa";
    for (int c = 0; c < 5; ++c) {
        out += ",";
        out += cols[c];
        out += ",";
        out += rcols[c];
    }
    out += "\n";
    const auto rates = convergence_rates(table);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const ConvergenceRow& row = table.rows[i];
        append_csv_real(out, "%.6g", row.h);
        if (table.time_domain) {
            out += ",";
            append_csv_real(out, "%.6g", row.kappa);
        }
        for (int c = 0; c < 5; ++c) {
            out += ",";
            append_csv_real(out, "%.6e", row.err[c]);
            out += ",";
            if (i > 0) append_csv_real(out, "%.3f", rates[i][c]);
        }
        out += "\n";
    }
    write_or_throw(path, out);
}

void write_solution_csv(const FrequencySolution& sol,
                        const std::string& path) {
    std::string out = "dof_kind,index,re,im\n";
    const auto block = [&out](const char* kind, const VecXc& v) {
        for (int i = 0; i < static_cast<int>(v.size()); ++i) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%s,%d,%.17g,%.17g\n", kind, i,
                          v[i].real(), v[i].imag());
            out += buf;
        }
    };
    block("u", sol.u);
    block("psi", sol.psi);
    block("lam", sol.lam);
    block("phi", sol.phi);
    write_or_throw(path, out);
}

void write_timeseries_csv(const MatX& series, Real kappa,
                          const std::string& path) {
    std::string out = "step,time";
    for (int j = 0; j < static_cast<int>(series.rows()); ++j) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), ",f%d", j);
        out += buf;
    }
    out += "\n";
    for (int n = 0; n < static_cast<int>(series.cols()); ++n) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%d,%.10g", n, kappa * n);
        out += buf;
        for (int j = 0; j < static_cast<int>(series.rows()); ++j) {
            std::snprintf(buf, sizeof(buf), ",%.12e", series(j, n));
            out += buf;
        }
        out += "\n";
    }
    write_or_throw(path, out);
}

void write_points_csv(const SnapshotField& field, const std::string& path) {
    std::string out = "x,y,value\n";
    for (std::size_t i = 0; i < field.xy.size(); ++i) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.12e\n",
                      field.xy[i].x(), field.xy[i].y(), field.value[i]);
        out += buf;
    }
    write_or_throw(path, out);
}

}  // namespace pzbem
