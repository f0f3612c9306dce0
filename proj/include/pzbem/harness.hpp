#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "pzbem/cq.hpp"
#include "pzbem/manufactured.hpp"

namespace pzbem {

// Settings shared by the convergence studies. Levels halve the mesh size
// and the time step together; the final time is steps0 * kappa0.
struct HarnessOptions {
    int levels = 4;
    Real h0 = 0.2;        // coarsest mesh size
    Real kappa0 = 0.075;  // coarsest time step
    int steps0 = 20;      // steps at the coarsest level
    Complex s{0.0, -2.5};  // Laplace parameter of the frequency study
    int sample_points = 20;
    Real margin = 0.4;  // exterior sample distance to the scatterer
    unsigned seed = 7201;
    int threads = 1;
    Real cq_eps = 1e-14;
    bool log_progress = false;
    Vec2 box_lo{1.0, 1.0};  // scatterer rectangle
    Vec2 box_hi{3.0, 2.0};
};

// Error columns, in table order: exterior acoustic (max over samples),
// then L2 and H1 errors of the displacement and the potential.
enum ErrCol { kEv = 0, kEuL2, kEpsiL2, kEuH1, kEpsiH1 };

struct ConvergenceRow {
    Real h = 0.0;
    Real kappa = 0.0;  // zero for frequency studies
    std::array<Real, 5> err{};
};

struct ConvergenceTable {
    bool time_domain = false;
    std::vector<ConvergenceRow> rows;
    // column reported as an absolute error (reference norm was zero)
    std::array<bool, 5> absolute{};
    bool aborted = false;  // a level failed; rows holds the partial table
    std::string abort_reason;
};

// Estimated convergence rates log2(e_{2h}/e_h) between consecutive rows;
// entry [0] is a NaN marker row (no coarser level to compare with).
std::vector<std::array<Real, 5>> convergence_rates(const ConvergenceTable&);

// L2 and full H1 errors of a discrete field against closed-form
// evaluators, relative to the exact-solution norms; `absolute` is set
// (and the raw error returned) when a reference norm vanishes.
struct ErrorPair {
    Real l2 = 0.0;
    Real h1 = 0.0;
    bool absolute = false;
};

ErrorPair vector_field_error(
    const FeSpace& fe, const VecXc& coeffs,
    const std::function<Vec2c(const Vec2&)>& exact,
    const std::function<Mat2c(const Vec2&)>& exact_grad);

ErrorPair scalar_field_error(
    const FeSpace& fe, const VecXc& coeffs,
    const std::function<Complex(const Vec2&)>& exact,
    const std::function<Vec2c(const Vec2&)>& exact_grad);

// Fixed-seed rejection sampling of points outside the rectangle [lo, hi]
// by at least `margin`, inside the box inflated by margin + 1.
std::vector<Vec2> exterior_sample_points(const Vec2& lo, const Vec2& hi,
                                         int count, Real margin,
                                         unsigned seed);

struct FreqStudy {
    ConvergenceTable table;
    FrequencySolution finest;  // solution of the last completed level
    std::vector<Vec2> points;  // exterior sample points
};

FreqStudy run_freq_convergence(const Materials& mat, int degree,
                               const HarnessOptions& opt);

struct TimeStudy {
    ConvergenceTable table;
    std::vector<Vec2> points;
    // acoustic field at the sample points over the finest level's steps
    MatX v_series;  // sample_points x (N+1)
    Real kappa = 0.0;  // step of v_series
};

TimeStudy run_time_convergence(const Materials& mat, CQKind kind, int degree,
                               const HarnessOptions& opt);

// Scattering demo: an incident acoustic pulse hits a grounded polygonal
// scatterer with a Gaussian density bump; snapshots of the total exterior
// field on a masked Cartesian grid plus nodal |u| and psi.
struct SimulationOptions {
    std::vector<Vec2> polygon;  // empty selects a regular pentagon, r = 1
    Real h = 0.05;
    int degree = 2;
    CQKind kind = CQKind::Trapezoidal;
    Real kappa = 0.005;
    Real T = 1.75;
    std::vector<Real> snapshot_times{0.175, 0.7, 1.225, 1.75};
    Vec2 grid_lo{-2.5, -2.5};
    Vec2 grid_hi{2.5, 2.5};
    int grid_n = 32;  // grid points per direction
    Real amplitude = 3.0;
    Real window = 0.3;    // pulse duration in retarded time
    Real carrier = 88.0;  // oscillation rate inside the window
    Vec2 direction = Vec2(1.0, 5.0).normalized();
    bool gaussian_bump = true;  // density preset; false keeps mat.rho
    int threads = 1;
    Real cq_eps = 1e-14;
    bool log_progress = false;
};

struct SnapshotField {
    Real time = 0.0;
    std::vector<Vec2> xy;
    std::vector<Real> value;
};

struct SimulationResult {
    std::vector<SnapshotField> acoustic;     // total field, exterior grid
    std::vector<SnapshotField> magnitude_u;  // |u| at mesh nodes
    std::vector<SnapshotField> potential;    // psi at mesh nodes
    Real max_imag = 0.0;
};

SimulationResult run_sample_simulation(const Materials& mat,
                                       const SimulationOptions& opt);

// Table CSV in the study layout: one row per level, each error column
// followed by its rate (empty on the first row); %.6e errors, %.3f rates.
void write_table_csv(const ConvergenceTable& table, const std::string& path);

// Frequency solution export, one row per degree of freedom:
// `dof_kind index re im` with kinds u, psi, lam, phi.
void write_solution_csv(const FrequencySolution& sol, const std::string& path);

// Time series export: `step time f0 f1 ...` with one column per field.
void write_timeseries_csv(const MatX& series, Real kappa,
                          const std::string& path);

// Point-value export: `x y value` rows.
void write_points_csv(const SnapshotField& field, const std::string& path);

}  // namespace pzbem
