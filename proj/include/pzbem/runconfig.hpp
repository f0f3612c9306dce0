#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pzbem/harness.hpp"
#include "pzbem/materials.hpp"

namespace pzbem {

inline constexpr const char* kVersion = "1.0.0";

// A parsed configuration file: `key = value` lines grouped under
// `[section]` headers. Keys are stored fully qualified ("section.key",
// both halves lower-cased) together with the line they came from so that
// later validation can point back at the file. `#` and `;` start
// comments; duplicate keys are rejected at parse time.
struct ConfigDoc {
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries;
};

ConfigDoc parse_config_text(const std::string& text);
ConfigDoc load_config_file(const std::string& path);

// Fully resolved run settings. Optional fields keep "not given" distinct
// from a value, because their defaults depend on the run mode (element
// order, scheme, time step and final time differ between the convergence
// studies and the scattering demo); the mode-specific builders below fill
// them in.
struct RunConfig {
    // geometry
    bool rectangle = true;
    bool shape_given = false;
    Vec2 rect_lo{1.0, 1.0};
    Vec2 rect_hi{3.0, 2.0};
    std::vector<Vec2> polygon;  // empty selects the regular pentagon

    // discretization
    std::optional<int> degree;
    std::optional<Real> h;
    int levels = 4;

    // time stepping
    std::optional<CQKind> scheme;
    std::optional<Real> kappa;
    std::optional<Real> final_time;

    // frequency study
    Complex s{0.0, -2.5};

    // exterior sampling
    int sample_points = 20;
    Real margin = 0.4;

    // incident pulse and snapshot grid
    Real amplitude = 3.0;
    Real window = 0.3;
    Real carrier = 88.0;
    Vec2 direction{1.0, 5.0};
    std::vector<Real> snapshot_times{0.175, 0.7, 1.225, 1.75};
    Vec2 grid_lo{-2.5, -2.5};
    Vec2 grid_hi{2.5, 2.5};
    int grid_n = 32;

    // materials; rho overrides keep "not given" distinct so the demo can
    // default to the Gaussian density preset
    Materials mat = Materials::reference();
    std::optional<Real> rho_const;
    bool rho_bump = false;

    // execution
    unsigned seed = 7201;
    int threads = 1;
    Real cq_eps = 1e-14;
    bool verbose = false;
    std::string out_dir = "out";
};

// Validates every entry and rejects unknown keys by name and line.
RunConfig resolve_run_config(const ConfigDoc& doc);

// Mode-specific views of the configuration. Each fills mode defaults,
// runs the remaining cross-field validation, and throws ConfigError on
// settings the mode cannot honor.
HarnessOptions make_freq_options(const RunConfig& cfg);
HarnessOptions make_time_options(const RunConfig& cfg);
SimulationOptions make_sim_options(const RunConfig& cfg);
int freq_degree(const RunConfig& cfg);   // default order 1
int time_degree(const RunConfig& cfg);   // default order 2
CQKind time_scheme(const RunConfig& cfg);  // default Trapezoidal

}  // namespace pzbem
