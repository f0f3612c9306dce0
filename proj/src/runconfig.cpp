#include "pzbem/runconfig.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "pzbem/mesh.hpp"

namespace pzbem {

namespace {

std::string trimmed(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

[[noreturn]] void line_fail(int line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

// Typed access over the parsed document. Every key that is read gets
// marked, so resolve_run_config can reject leftovers by name.
struct KeyReader {
    const ConfigDoc& doc;
    std::set<std::string> used;

    const ConfigDoc::Entry* find(const std::string& key) {
        const auto it = doc.entries.find(key);
        if (it == doc.entries.end()) return nullptr;
        used.insert(key);
        return &it->second;
    }

    [[noreturn]] void fail(const std::string& key, const ConfigDoc::Entry& e,
                           const std::string& what) {
        throw ConfigError("config key '" + key + "' (line " +
                          std::to_string(e.line) + "): " + what + ", got '" +
                          e.value + "'");
    }

    std::vector<Real> parse_reals(const std::string& key,
                                  const ConfigDoc::Entry& e) {
        std::istringstream in(e.value);
        std::vector<Real> out;
        std::string tok;
        while (in >> tok) {
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size() || !std::isfinite(v))
                fail(key, e, "expected a list of numbers");
            out.push_back(v);
        }
        if (out.empty()) fail(key, e, "expected a list of numbers");
        return out;
    }

    bool get(const std::string& key, std::string& dst) {
        const auto* e = find(key);
        if (!e) return false;
        dst = e->value;
        return true;
    }

    bool get(const std::string& key, Real& dst) {
        const auto* e = find(key);
        if (!e) return false;
        const std::vector<Real> v = parse_reals(key, *e);
        if (v.size() != 1) fail(key, *e, "expected one number");
        dst = v[0];
        return true;
    }

    bool get(const std::string& key, int& dst) {
        const auto* e = find(key);
        if (!e) return false;
        char* end = nullptr;
        const long v = std::strtol(e->value.c_str(), &end, 10);
        if (end != e->value.c_str() + e->value.size())
            fail(key, *e, "expected an integer");
        dst = static_cast<int>(v);
        return true;
    }

    bool get(const std::string& key, unsigned& dst) {
        const auto* e = find(key);
        if (!e) return false;
        char* end = nullptr;
        const unsigned long v = std::strtoul(e->value.c_str(), &end, 10);
        if (end != e->value.c_str() + e->value.size() ||
            e->value.find('-') != std::string::npos)
            fail(key, *e, "expected a non-negative integer");
        dst = static_cast<unsigned>(v);
        return true;
    }

    bool get(const std::string& key, bool& dst) {
        const auto* e = find(key);
        if (!e) return false;
        const std::string v = lowered(e->value);
        if (v == "1" || v == "true" || v == "on" || v == "yes")
            dst = true;
        else if (v == "0" || v == "false" || v == "off" || v == "no")
            dst = false;
        else
            fail(key, *e, "expected a boolean (0/1/true/false)");
        return true;
    }

    bool get(const std::string& key, Vec2& dst) {
        const auto* e = find(key);
        if (!e) return false;
        const std::vector<Real> v = parse_reals(key, *e);
        if (v.size() != 2) fail(key, *e, "expected two numbers");
        dst = Vec2(v[0], v[1]);
        return true;
    }

    bool get(const std::string& key, std::vector<Real>& dst) {
        const auto* e = find(key);
        if (!e) return false;
        dst = parse_reals(key, *e);
        return true;
    }

    void reject_unused() const {
        for (const auto& [key, e] : doc.entries)
            if (!used.count(key))
                throw ConfigError("unknown config key '" + key + "' (line " +
                                  std::to_string(e.line) + ")");
    }
};

int steps_for(Real T, Real kappa) {
    const long n = std::lround(T / kappa);
    if (n < 1 || std::abs(static_cast<Real>(n) * kappa - T) >
                     1e-9 * std::max(T, 1.0)) {
        std::ostringstream msg;
        msg << "final time " << T
            << " is not a positive integer multiple of the time step "
            << kappa;
        throw ConfigError(msg.str());
    }
    return static_cast<int>(n);
}

// shared constraints of the two convergence studies
void require_rect_study(const RunConfig& cfg) {
    if (cfg.shape_given && !cfg.rectangle)
        throw ConfigError(
            "convergence studies run on the rectangular scatterer; "
            "set geometry.shape = rectangle");
    if (cfg.rho_bump)
        throw ConfigError(
            "the gaussian_bump density preset is only supported by the "
            "simulate mode");
    // the closed-form acoustic field radiates from this interior point
    const Vec2 x0(2.0, 1.5);
    if (!(cfg.rect_lo.x() + 0.05 < x0.x() &&
          x0.x() < cfg.rect_hi.x() - 0.05 &&
          cfg.rect_lo.y() + 0.05 < x0.y() &&
          x0.y() < cfg.rect_hi.y() - 0.05))
        throw ConfigError(
            "the rectangle must contain the source point (2, 1.5) of the "
            "closed-form fields with clearance 0.05");
}

}  // namespace

ConfigDoc parse_config_text(const std::string& text) {
    ConfigDoc doc;
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const size_t cut = line.find_first_of("#;");
        if (cut != std::string::npos) line.erase(cut);
        line = trimmed(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                line_fail(lineno, "malformed section header '" + line + "'");
            section = lowered(trimmed(line.substr(1, line.size() - 2)));
            if (section.empty() ||
                section.find_first_of(" \t.=") != std::string::npos)
                line_fail(lineno, "malformed section name '" + section + "'");
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            line_fail(lineno, "expected 'key = value', got '" + line + "'");
        const std::string key = lowered(trimmed(line.substr(0, eq)));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty()) line_fail(lineno, "empty key");
        if (key.find_first_of(" \t.[]") != std::string::npos)
            line_fail(lineno, "malformed key '" + key + "'");
        if (section.empty())
            line_fail(lineno,
                      "key '" + key + "' appears before any [section]");
        if (value.empty())
            line_fail(lineno, "empty value for key '" + key + "'");

        const std::string full = section + "." + key;
        const auto it = doc.entries.find(full);
        if (it != doc.entries.end())
            line_fail(lineno, "duplicate key '" + full +
                                  "' (first set on line " +
                                  std::to_string(it->second.line) + ")");
        doc.entries[full] = ConfigDoc::Entry{value, lineno};
    }
    return doc;
}

ConfigDoc load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

RunConfig resolve_run_config(const ConfigDoc& doc) {
    RunConfig cfg;
    KeyReader r{doc, {}};

    // ---- geometry ----------------------------------------------------
    if (std::string shape; r.get("geometry.shape", shape)) {
        const std::string v = lowered(shape);
        if (v == "rectangle")
            cfg.rectangle = true;
        else if (v == "polygon")
            cfg.rectangle = false;
        else
            r.fail("geometry.shape", doc.entries.at("geometry.shape"),
                   "expected 'rectangle' or 'polygon'");
        cfg.shape_given = true;
    }
    r.get("geometry.rect_lo", cfg.rect_lo);
    r.get("geometry.rect_hi", cfg.rect_hi);
    if (!(cfg.rect_lo.x() < cfg.rect_hi.x() &&
          cfg.rect_lo.y() < cfg.rect_hi.y()))
        throw ConfigError(
            "geometry.rect_lo must be strictly below geometry.rect_hi in "
            "both coordinates");
    if (std::string poly; r.get("geometry.polygon", poly)) {
        std::istringstream in(poly);
        std::string first;
        in >> first;
        if (lowered(first) == "regular") {
            long n = 0;
            Real radius = 0.0;
            if (!(in >> n >> radius) || !(in >> std::ws).eof() || n < 3 ||
                !(radius > 0.0))
                r.fail("geometry.polygon", doc.entries.at("geometry.polygon"),
                       "expected 'regular <sides >= 3> <radius > 0>'");
            cfg.polygon = regular_polygon(static_cast<int>(n), radius);
        } else {
            const std::vector<Real> v =
                r.parse_reals("geometry.polygon",
                              doc.entries.at("geometry.polygon"));
            if (v.size() % 2 != 0 || v.size() < 6)
                r.fail("geometry.polygon", doc.entries.at("geometry.polygon"),
                       "expected at least three x y pairs");
            for (size_t i = 0; i < v.size(); i += 2)
                cfg.polygon.emplace_back(v[i], v[i + 1]);
        }
        if (!cfg.shape_given) cfg.rectangle = false;
        cfg.shape_given = true;
    }

    // ---- discretization ----------------------------------------------
    if (int d = 0; r.get("discretization.degree", d)) {
        if (d != 1 && d != 2)
            r.fail("discretization.degree",
                   doc.entries.at("discretization.degree"),
                   "element order must be 1 or 2");
        cfg.degree = d;
    }
    if (Real h = 0.0; r.get("discretization.h", h)) {
        if (!(h > 0.0))
            r.fail("discretization.h", doc.entries.at("discretization.h"),
                   "mesh size must be positive");
        cfg.h = h;
    }
    if (r.get("discretization.levels", cfg.levels) && cfg.levels < 1)
        r.fail("discretization.levels",
               doc.entries.at("discretization.levels"),
               "need at least one level");

    // ---- time stepping -----------------------------------------------
    if (std::string sc; r.get("time.scheme", sc)) {
        const std::string v = lowered(sc);
        if (v == "tr" || v == "trapezoidal")
            cfg.scheme = CQKind::Trapezoidal;
        else if (v == "bdf2")
            cfg.scheme = CQKind::BDF2;
        else
            r.fail("time.scheme", doc.entries.at("time.scheme"),
                   "expected 'TR' or 'BDF2'");
    }
    if (Real k = 0.0; r.get("time.kappa", k)) {
        if (!(k > 0.0))
            r.fail("time.kappa", doc.entries.at("time.kappa"),
                   "time step must be positive");
        cfg.kappa = k;
    }
    if (Real t = 0.0; r.get("time.t", t)) {
        if (!(t > 0.0))
            r.fail("time.t", doc.entries.at("time.t"),
                   "final time must be positive");
        cfg.final_time = t;
    }

    // ---- frequency ---------------------------------------------------
    if (std::vector<Real> sv; r.get("frequency.s", sv)) {
        if (sv.size() != 2)
            r.fail("frequency.s", doc.entries.at("frequency.s"),
                   "expected two numbers (real and imaginary part)");
        cfg.s = Complex(sv[0], sv[1]);
    }

    // ---- sampling ----------------------------------------------------
    if (r.get("sampling.points", cfg.sample_points) &&
        cfg.sample_points < 1)
        r.fail("sampling.points", doc.entries.at("sampling.points"),
               "need at least one sample point");
    if (r.get("sampling.margin", cfg.margin) && !(cfg.margin > 0.0))
        r.fail("sampling.margin", doc.entries.at("sampling.margin"),
               "margin must be positive");

    // ---- incident pulse ----------------------------------------------
    r.get("incident.amplitude", cfg.amplitude);
    if (r.get("incident.window", cfg.window) && !(cfg.window > 0.0))
        r.fail("incident.window", doc.entries.at("incident.window"),
               "window must be positive");
    r.get("incident.carrier", cfg.carrier);
    if (r.get("incident.direction", cfg.direction) &&
        !(cfg.direction.norm() > 0.0))
        r.fail("incident.direction", doc.entries.at("incident.direction"),
               "direction must be nonzero");

    // ---- snapshots ---------------------------------------------------
    if (std::vector<Real> times; r.get("snapshots.times", times)) {
        for (Real t : times)
            if (t < 0.0)
                r.fail("snapshots.times", doc.entries.at("snapshots.times"),
                       "times must be non-negative");
        cfg.snapshot_times = times;
    }
    r.get("snapshots.grid_lo", cfg.grid_lo);
    r.get("snapshots.grid_hi", cfg.grid_hi);
    if (!(cfg.grid_lo.x() < cfg.grid_hi.x() &&
          cfg.grid_lo.y() < cfg.grid_hi.y()))
        throw ConfigError(
            "snapshots.grid_lo must be strictly below snapshots.grid_hi");
    if (r.get("snapshots.grid_n", cfg.grid_n) && cfg.grid_n < 2)
        r.fail("snapshots.grid_n", doc.entries.at("snapshots.grid_n"),
               "need at least a 2 x 2 grid");

    // ---- boundary ----------------------------------------------------
    if (std::string bd; r.get("boundary.psi_dirichlet", bd)) {
        if (lowered(bd) != "all")
            r.fail("boundary.psi_dirichlet",
                   doc.entries.at("boundary.psi_dirichlet"),
                   "only the grounded partition 'all' is supported");
    }

    // ---- materials ---------------------------------------------------
    r.get("materials.lambda", cfg.mat.lambda);
    r.get("materials.mu", cfg.mat.mu);
    if (std::string rs; r.get("materials.rho_solid", rs)) {
        if (lowered(rs) == "gaussian_bump") {
            cfg.rho_bump = true;
        } else {
            char* end = nullptr;
            const double v = std::strtod(rs.c_str(), &end);
            if (end != rs.c_str() + rs.size() || !(v > 0.0))
                r.fail("materials.rho_solid",
                       doc.entries.at("materials.rho_solid"),
                       "expected a positive number or 'gaussian_bump'");
            cfg.rho_const = v;
            cfg.mat.rho = v;
        }
    }
    r.get("materials.c", cfg.mat.c);
    r.get("materials.rho_fluid", cfg.mat.rho_f);
    if (std::vector<Real> v; r.get("materials.stiffness", v)) {
        if (v.size() != 9)
            r.fail("materials.stiffness",
                   doc.entries.at("materials.stiffness"),
                   "expected 9 numbers (3 x 3, row-major)");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) cfg.mat.C(i, j) = v[3 * i + j];
    }
    if (std::vector<Real> v; r.get("materials.coupling", v)) {
        if (v.size() != 6)
            r.fail("materials.coupling",
                   doc.entries.at("materials.coupling"),
                   "expected 6 numbers (3 x 2, row-major)");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) cfg.mat.e(i, j) = v[2 * i + j];
    }
    if (std::vector<Real> v; r.get("materials.permittivity", v)) {
        if (v.size() != 4)
            r.fail("materials.permittivity",
                   doc.entries.at("materials.permittivity"),
                   "expected 4 numbers (2 x 2, row-major)");
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) cfg.mat.eps(i, j) = v[2 * i + j];
    }

    // ---- execution ---------------------------------------------------
    r.get("run.seed", cfg.seed);
    if (r.get("run.threads", cfg.threads) && cfg.threads < 1)
        r.fail("run.threads", doc.entries.at("run.threads"),
               "need at least one thread");
    if (r.get("run.cq_eps", cfg.cq_eps) &&
        !(cfg.cq_eps > 0.0 && cfg.cq_eps < 1.0))
        r.fail("run.cq_eps", doc.entries.at("run.cq_eps"),
               "contour accuracy target must lie in (0, 1)");
    r.get("run.verbose", cfg.verbose);
    r.get("run.out", cfg.out_dir);

    r.reject_unused();
    cfg.mat.validate();
    return cfg;
}

HarnessOptions make_freq_options(const RunConfig& cfg) {
    require_rect_study(cfg);
    HarnessOptions o;
    o.levels = cfg.levels;
    o.h0 = cfg.h.value_or(0.2);
    o.s = cfg.s;
    o.sample_points = cfg.sample_points;
    o.margin = cfg.margin;
    o.seed = cfg.seed;
    o.threads = cfg.threads;
    o.cq_eps = cfg.cq_eps;
    o.log_progress = cfg.verbose;
    o.box_lo = cfg.rect_lo;
    o.box_hi = cfg.rect_hi;
    return o;
}

HarnessOptions make_time_options(const RunConfig& cfg) {
    HarnessOptions o = make_freq_options(cfg);
    o.kappa0 = cfg.kappa.value_or(0.075);
    o.steps0 = steps_for(cfg.final_time.value_or(1.5), o.kappa0);
    return o;
}

SimulationOptions make_sim_options(const RunConfig& cfg) {
    SimulationOptions o;
    if (cfg.shape_given && cfg.rectangle) {
        o.polygon = {cfg.rect_lo, Vec2(cfg.rect_hi.x(), cfg.rect_lo.y()),
                     cfg.rect_hi, Vec2(cfg.rect_lo.x(), cfg.rect_hi.y())};
    } else {
        o.polygon = cfg.polygon;  // empty keeps the pentagon default
    }
    o.h = cfg.h.value_or(0.05);
    o.degree = cfg.degree.value_or(2);
    o.kind = cfg.scheme.value_or(CQKind::Trapezoidal);
    o.kappa = cfg.kappa.value_or(0.005);
    o.T = cfg.final_time.value_or(1.75);
    steps_for(o.T, o.kappa);
    o.snapshot_times = cfg.snapshot_times;
    for (Real t : o.snapshot_times)
        if (t > o.T + 1e-12) {
            std::ostringstream msg;
            msg << "snapshot time " << t << " lies beyond the final time "
                << o.T;
            throw ConfigError(msg.str());
        }
    o.grid_lo = cfg.grid_lo;
    o.grid_hi = cfg.grid_hi;
    o.grid_n = cfg.grid_n;
    o.amplitude = cfg.amplitude;
    o.window = cfg.window;
    o.carrier = cfg.carrier;
    o.direction = cfg.direction.normalized();
    o.gaussian_bump = !cfg.rho_const.has_value();
    o.threads = cfg.threads;
    o.cq_eps = cfg.cq_eps;
    o.log_progress = cfg.verbose;
    return o;
}

int freq_degree(const RunConfig& cfg) { return cfg.degree.value_or(1); }

int time_degree(const RunConfig& cfg) { return cfg.degree.value_or(2); }

CQKind time_scheme(const RunConfig& cfg) {
    return cfg.scheme.value_or(CQKind::Trapezoidal);
}

}  // namespace pzbem
