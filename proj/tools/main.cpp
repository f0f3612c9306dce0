#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pzbem/runconfig.hpp"
#include "pzbem/selfcheck.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pzbem;

namespace {

struct CliFlags {
    std::string config_path;
    std::string out_dir;
    int threads = 0;      // 0: keep the config value
    long long seed = -1;  // <0: keep the config value
    bool verbose = false;
};

void add_common_flags(CLI::App* cmd, CliFlags& fl) {
    cmd->add_option("--config", fl.config_path,
                    "configuration file ([section] key = value)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", fl.out_dir,
                    "output directory (overrides run.out)");
    cmd->add_option("--threads", fl.threads,
                    "frequency-solve worker threads (overrides run.threads)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", fl.seed,
                    "sample-point seed (overrides run.seed)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--verbose", fl.verbose, "progress logging to stderr");
}

struct LoadedConfig {
    ConfigDoc doc;
    RunConfig cfg;
};

LoadedConfig load(const CliFlags& fl) {
    LoadedConfig lc;
    if (!fl.config_path.empty()) lc.doc = load_config_file(fl.config_path);
    lc.cfg = resolve_run_config(lc.doc);
    if (!fl.out_dir.empty()) lc.cfg.out_dir = fl.out_dir;
    if (fl.threads > 0) lc.cfg.threads = fl.threads;
    if (fl.seed >= 0) lc.cfg.seed = static_cast<unsigned>(fl.seed);
    if (fl.verbose) lc.cfg.verbose = true;
    return lc;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

json base_manifest(const char* command, const CliFlags& fl,
                   const LoadedConfig& lc) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["seed"] = lc.cfg.seed;
    j["threads"] = lc.cfg.threads;
    j["config_file"] =
        fl.config_path.empty() ? json() : json(fl.config_path);
    json echo = json::object();
    for (const auto& [key, e] : lc.doc.entries) echo[key] = e.value;
    j["config"] = echo;
    j["out_dir"] = lc.cfg.out_dir;
    return j;
}

void write_manifest(const json& j, const std::string& dir) {
    const std::string path = dir + "/manifest.json";
    std::ofstream out(path, std::ios::binary);
    out << j.dump(2) << "\n";
    if (!out) throw NumericalError("cannot write '" + path + "'");
}

void print_table(const ConvergenceTable& tb) {
    const auto rates = convergence_rates(tb);
    const char* names[5] = {"E_v", "E_u_L2", "E_psi_L2", "E_u_H1",
                            "E_psi_H1"};
    std::printf("%10s", "h");
    if (tb.time_domain) std::printf(" %10s", "kappa");
    for (const char* n : names) std::printf(" %12s %6s", n, "rate");
    std::printf("\n");
    for (size_t i = 0; i < tb.rows.size(); ++i) {
        std::printf("%10.5g", tb.rows[i].h);
        if (tb.time_domain) std::printf(" %10.5g", tb.rows[i].kappa);
        for (int c = 0; c < 5; ++c) {
            std::printf(" %12.4e", tb.rows[i].err[c]);
            if (i == 0)
                std::printf(" %6s", "-");
            else
                std::printf(" %6.3f", rates[i][c]);
        }
        std::printf("\n");
    }
    for (int c = 0; c < 5; ++c)
        if (tb.absolute[c])
            std::printf(
                "note: %s is an absolute error (reference norm was zero)\n",
                names[c]);
}

int finish_study(const ConvergenceTable& tb) {
    if (tb.aborted) {
        std::fprintf(stderr, "study aborted: %s\n", tb.abort_reason.c_str());
        return 1;
    }
    return 0;
}

int cmd_freq(const CliFlags& fl) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoadedConfig lc = load(fl);
    const HarnessOptions opt = make_freq_options(lc.cfg);
    const int degree = freq_degree(lc.cfg);

    const FreqStudy study = run_freq_convergence(lc.cfg.mat, degree, opt);

    fs::create_directories(lc.cfg.out_dir);
    write_table_csv(study.table, lc.cfg.out_dir + "/freq_table.csv");
    write_solution_csv(study.finest, lc.cfg.out_dir + "/freq_solution.csv");

    json j = base_manifest("freq-convergence", fl, lc);
    j["degree"] = degree;
    j["levels"] = opt.levels;
    j["laplace_parameter"] = {opt.s.real(), opt.s.imag()};
    j["outputs"] = {"freq_table.csv", "freq_solution.csv"};
    j["aborted"] = study.table.aborted;
    if (study.table.aborted) j["abort_reason"] = study.table.abort_reason;
    j["wall_seconds"] = seconds_since(t0);
    write_manifest(j, lc.cfg.out_dir);

    print_table(study.table);
    std::printf("outputs in %s\n", lc.cfg.out_dir.c_str());
    return finish_study(study.table);
}

int cmd_time(const CliFlags& fl) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoadedConfig lc = load(fl);
    const HarnessOptions opt = make_time_options(lc.cfg);
    const int degree = time_degree(lc.cfg);
    const CQKind kind = time_scheme(lc.cfg);

    const TimeStudy study =
        run_time_convergence(lc.cfg.mat, kind, degree, opt);

    fs::create_directories(lc.cfg.out_dir);
    write_table_csv(study.table, lc.cfg.out_dir + "/time_table.csv");
    json outputs = json::array({"time_table.csv"});
    if (!study.table.aborted) {
        write_timeseries_csv(study.v_series, study.kappa,
                             lc.cfg.out_dir + "/time_series.csv");
        outputs.push_back("time_series.csv");
    }

    json j = base_manifest("time-convergence", fl, lc);
    j["degree"] = degree;
    j["scheme"] = kind == CQKind::BDF2 ? "BDF2" : "TR";
    j["levels"] = opt.levels;
    j["kappa0"] = opt.kappa0;
    j["final_time"] = opt.kappa0 * opt.steps0;
    j["outputs"] = outputs;
    j["aborted"] = study.table.aborted;
    if (study.table.aborted) j["abort_reason"] = study.table.abort_reason;
    j["wall_seconds"] = seconds_since(t0);
    write_manifest(j, lc.cfg.out_dir);

    print_table(study.table);
    std::printf("outputs in %s\n", lc.cfg.out_dir.c_str());
    return finish_study(study.table);
}

int cmd_simulate(const CliFlags& fl) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoadedConfig lc = load(fl);
    const SimulationOptions opt = make_sim_options(lc.cfg);

    const SimulationResult res = run_sample_simulation(lc.cfg.mat, opt);

    fs::create_directories(lc.cfg.out_dir);
    json snaps = json::array();
    json outputs = json::array();
    for (size_t i = 0; i < res.acoustic.size(); ++i) {
        char tag[16];
        std::snprintf(tag, sizeof tag, "%03zu", i);
        const std::string a = std::string("acoustic_") + tag + ".csv";
        const std::string d = std::string("displacement_") + tag + ".csv";
        const std::string p = std::string("potential_") + tag + ".csv";
        write_points_csv(res.acoustic[i], lc.cfg.out_dir + "/" + a);
        write_points_csv(res.magnitude_u[i], lc.cfg.out_dir + "/" + d);
        write_points_csv(res.potential[i], lc.cfg.out_dir + "/" + p);
        snaps.push_back({{"index", i},
                         {"time", res.acoustic[i].time},
                         {"acoustic", a},
                         {"displacement_magnitude", d},
                         {"potential", p}});
        outputs.push_back(a);
        outputs.push_back(d);
        outputs.push_back(p);
    }

    json j = base_manifest("simulate", fl, lc);
    j["degree"] = opt.degree;
    j["scheme"] = opt.kind == CQKind::BDF2 ? "BDF2" : "TR";
    j["kappa"] = opt.kappa;
    j["final_time"] = opt.T;
    j["fields"] = {"acoustic", "displacement_magnitude", "potential"};
    j["snapshots"] = snaps;
    j["outputs"] = outputs;
    j["max_imaginary_part"] = res.max_imag;
    j["wall_seconds"] = seconds_since(t0);
    write_manifest(j, lc.cfg.out_dir);

    std::printf("%zu snapshots, %zu files, largest imaginary residue %.3e\n",
                res.acoustic.size(), outputs.size(), res.max_imag);
    std::printf("outputs in %s\n", lc.cfg.out_dir.c_str());
    return 0;
}

int cmd_selftest(const CliFlags& fl) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CheckReport> reports = run_all_checks(fl.verbose);
    bool ok = true;
    for (const CheckReport& r : reports) {
        std::printf("%s  %-46s %s\n", r.pass ? "pass" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        ok = ok && r.pass;
    }
    if (!fl.out_dir.empty()) {
        fs::create_directories(fl.out_dir);
        json j;
        j["command"] = "selftest";
        j["version"] = kVersion;
        json list = json::array();
        for (const CheckReport& r : reports)
            list.push_back({{"name", r.name},
                            {"pass", r.pass},
                            {"worst", r.worst},
                            {"limit", r.limit},
                            {"detail", r.detail}});
        j["checks"] = list;
        j["wall_seconds"] = seconds_since(t0);
        write_manifest(j, fl.out_dir);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coupled finite/boundary element solver for the transient "
        "interaction of an acoustic wave with a piezoelectric scatterer"};
    app.require_subcommand(1);

    CliFlags fl;
    CLI::App* fconv = app.add_subcommand(
        "freq-convergence",
        "frequency-domain convergence study on the rectangle");
    CLI::App* tconv = app.add_subcommand(
        "time-convergence",
        "time-domain convergence study (convolution quadrature)");
    CLI::App* sim = app.add_subcommand(
        "simulate",
        "scattering demo: acoustic pulse on a grounded polygonal scatterer");
    CLI::App* self = app.add_subcommand(
        "selftest", "run the built-in verification suites");
    for (CLI::App* c : {fconv, tconv, sim}) add_common_flags(c, fl);
    self->add_option("--out", fl.out_dir,
                     "also write a manifest with the suite results");
    self->add_flag("--verbose", fl.verbose, "progress logging to stderr");

    try {
        app.parse(argc, argv);
        if (fconv->parsed()) return cmd_freq(fl);
        if (tconv->parsed()) return cmd_time(fl);
        if (sim->parsed()) return cmd_simulate(fl);
        return cmd_selftest(fl);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);  // prints the parse diagnostic
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "failure: %s\n", e.what());
        return 1;
    }
}
