#include "expwell/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expwell/errors.hpp"
#include "expwell/model.hpp"
#include "expwell/oracle.hpp"
#include "expwell/refute.hpp"
#include "expwell/spectrum.hpp"
#include "expwell/wavefunc.hpp"

namespace expwell::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    PhysParams p;
    std::string format = "csv";
    std::string output;
    int threads = 0;
    int points_per_decade = 400;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--m", c.p.m, "particle mass")->capture_default_str();
    sub->add_option("--hbar", c.p.hbar, "reduced Planck constant")->capture_default_str();
    sub->add_option("--v0", c.p.v0, "well strength V0 (negative)")->capture_default_str();
    sub->add_option("--delta", c.p.delta, "range parameter delta")->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("-o,--output", c.output, "output file (default: standard output)");
    sub->add_option("--threads", c.threads,
                    "worker threads (0: EXPWELL_THREADS or the OpenMP default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--points-per-decade", c.points_per_decade, "energy scan density")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void check_params(const PhysParams& p, bool need_well = true) {
    try {
        need_well ? p.validate_well() : p.validate();
    } catch (const Error& e) {
        std::string msg = e.what();
        if (p.v0 >= 0.0 && need_well) msg = "V0 must be negative";
        throw UsageError(msg);
    }
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

ordered_json params_json(const PhysParams& p) {
    return {{"m", p.m}, {"hbar", p.hbar}, {"v0", p.v0}, {"delta", p.delta}};
}

std::string params_line(const PhysParams& p) {
    return "# params: m=" + num(p.m) + " hbar=" + num(p.hbar) + " v0=" + num(p.v0) +
           " delta=" + num(p.delta);
}

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::DomainError, "cannot open output file " + path);
            out_ = &file_;
        }
    }
    std::ostream& operator*() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

ScanConfig scan_config(const Common& c) {
    ScanConfig s;
    s.points_per_decade = c.points_per_decade;
    s.threads = c.threads;
    return s;
}

// ---------------------------------------------------------------- levels

// S at a root; falls back to the origin amplitude when the 2F1 quotient is degenerate.
double s_value(const PhysParams& p, double e) {
    try {
        return s_of_e(p, e);
    } catch (const Error&) {
        return origin_amplitude(p, e);
    }
}

struct LevelsOpts {
    bool no_oracle = false;
    std::string curve;
};

int cmd_levels(const Common& c, const LevelsOpts& o, std::ostream& out, std::ostream& err) {
    check_params(c.p);
    const PhysParams& p = c.p;
    LevelSet ls;
    try {
        ls = find_levels(p, scan_config(c));
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    std::vector<double> oracle_levels;
    if (!o.no_oracle) {
        oracle::ShootingConfig sc;
        sc.points_per_decade = c.points_per_decade;
        sc.threads = c.threads;
        oracle_levels = oracle::shoot_eigenvalues(p, sc);
    }
    const double bound = chadan_estimate(p);
    const double bargmann = bargmann_integral(p);
    const std::size_t n = ls.count();

    if (!o.curve.empty()) {
        const auto grid = energy_grid(ScanConfig{}.e_top * p.energy_unit(), ls.scan_floor,
                                      c.points_per_decade);
        const auto samples = sample_spectrum(p, grid, Exec::Parallel, c.threads);
        std::ofstream curve(o.curve);
        if (!curve) {
            err << "error: cannot open curve file " << o.curve << "\n";
            return 1;
        }
        curve << "# S(E) samples; pole=1 marks points where the denominator 2F1 is degenerate\n"
              << params_line(p) << "\nenergy,s_value,origin_amplitude,pole\n";
        for (const auto& s : samples) {
            if (!s.valid) continue;
            const bool pole = !std::isfinite(s.s);
            curve << num(s.energy) << "," << (pole ? "" : num(s.s)) << "," << num(s.origin) << ","
                  << (pole ? 1 : 0) << "\n";
        }
    }

    Sink sink(c.output, out);
    std::ostream& os = *sink;
    if (c.format == "json") {
        ordered_json doc;
        doc["command"] = "levels";
        doc["params"] = params_json(p);
        doc["count"] = n;
        doc["chadan_bound"] = bound;
        doc["bargmann_integral"] = bargmann;
        doc["oracle_count"] = o.no_oracle ? ordered_json() : ordered_json(oracle_levels.size());
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t g = n - 1 - i;  // paper order: shallowest first
            ordered_json r;
            r["paper_index"] = i + 1;
            r["ground_index"] = g;
            r["energy"] = ls.energies[g];
            r["s_value"] = s_value(p, ls.energies[g]);
            if (!o.no_oracle && oracle_levels.size() == n) {
                r["oracle_energy"] = oracle_levels[g];
                r["abs_diff"] = std::abs(oracle_levels[g] - ls.energies[g]);
            }
            rows.push_back(r);
        }
        doc["levels"] = rows;
        doc["metadata"] = {
            {"energy", "roots of S(E) by bisection, |dE| < 1e-10 max(1,|E|)"},
            {"oracle_energy", "Dormand-Prince 5(4) shooting, step tolerance 1e-10"},
            {"chadan_bound", "2(sqrt2-1) sqrt(m delta^2 |V0| / hbar^2), closed form"},
            {"bargmann_integral", "(2m/hbar^2) int y|V| dy, adaptive Gauss-Kronrod, rel 1e-12"},
            {"s_value", "S(E) at the refined root"}};
        os << doc.dump(2) << "\n";
    } else {
        os << "# expwell levels\n" << params_line(p) << "\n"
           << "# energy: roots of S(E) refined by bisection to |dE| < 1e-10 max(1,|E|)\n"
           << "# oracle_energy: Dormand-Prince 5(4) shooting, step tolerance 1e-10\n"
           << "# chadan_bound: " << num(bound) << " (closed form)\n"
           << "# bargmann_integral: " << num(bargmann) << " (adaptive Gauss-Kronrod, rel 1e-12)\n"
           << "# s_value: S(E) at the refined root\n"
           << "# count: " << n;
        if (!o.no_oracle) os << " (oracle: " << oracle_levels.size() << ")";
        os << "\npaper_index,ground_index,energy,oracle_energy,abs_diff,s_value\n";
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t g = n - 1 - i;
            os << i + 1 << "," << g << "," << num(ls.energies[g]) << ",";
            if (!o.no_oracle && oracle_levels.size() == n) {
                os << num(oracle_levels[g]) << "," << num(std::abs(oracle_levels[g] - ls.energies[g]));
            } else {
                os << ",";
            }
            os << "," << num(s_value(p, ls.energies[g])) << "\n";
        }
    }
    if (!o.no_oracle && oracle_levels.size() != n) {
        err << "warning: shooting oracle found " << oracle_levels.size() << " levels, spectrum scan "
            << n << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------- wavefunction

struct WaveOpts {
    int level = 1;
    double y_min = 0.0;
    double y_max = 0.0;  // 0: 10 delta
    int points = 401;
};

int cmd_wavefunction(const Common& c, const WaveOpts& o, std::ostream& out, std::ostream& err) {
    check_params(c.p);
    if (o.points < 2) throw UsageError("--points must be at least 2");
    if (o.level < 1) throw UsageError("--level must be at least 1");
    const PhysParams& p = c.p;
    const double y_max = o.y_max > 0.0 ? o.y_max : 10.0 * p.delta;
    if (!(o.y_min >= 0.0) || !(y_max > o.y_min)) throw UsageError("need 0 <= y-min < y-max");

    const LevelSet ls = find_levels(p, scan_config(c));
    const auto wanted = static_cast<std::size_t>(o.level);
    if (wanted > ls.count()) {
        err << "error: TooFewLevels: only " << ls.count() << " levels exist\n";
        return 1;
    }
    const auto states = bound_states(ls);
    const BoundState& s = states[ls.count() - wanted];
    const double norm = overlap(s, s);
    const auto res = schrodinger_residual(
        p, s.energy, [&](long double y) { return s.eval_ext(y); }, 1e-3, 10.0 * p.delta, 200);

    std::vector<double> ys(o.points), psis(o.points);
    for (int i = 0; i < o.points; ++i) {
        ys[i] = o.y_min + (y_max - o.y_min) * i / (o.points - 1);
        psis[i] = ys[i] > 0.0 ? s(ys[i]) : static_cast<double>(s.eval_ext(0.0L));
    }

    Sink sink(c.output, out);
    std::ostream& os = *sink;
    if (c.format == "json") {
        ordered_json doc;
        doc["command"] = "wavefunction";
        doc["params"] = params_json(p);
        doc["level"] = o.level;
        doc["ground_index"] = s.ground_index;
        doc["energy"] = s.energy;
        doc["norm"] = norm;
        doc["residual_max"] = res.max_norm;
        doc["y"] = ys;
        doc["psi"] = psis;
        doc["metadata"] = {{"norm", "adaptive Gauss-Kronrod, rel 1e-12"},
                           {"residual_max", "5-point stencil on [1e-3, 10 delta], 200 points"}};
        os << doc.dump(2) << "\n";
    } else {
        os << "# expwell wavefunction\n" << params_line(p) << "\n"
           << "# level: " << o.level << " (1 = shallowest), nodes: " << s.ground_index << "\n"
           << "# energy: " << num(s.energy) << "\n"
           << "# norm: " << num(norm) << " (adaptive Gauss-Kronrod, rel 1e-12)\n"
           << "# residual_max: " << num(res.max_norm)
           << " (relative Schrodinger defect, 5-point stencil)\n"
           << "y,psi\n";
        for (int i = 0; i < o.points; ++i) os << num(ys[i]) << "," << num(psis[i]) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- sweep

struct SweepOpts {
    double from = -0.5;
    double to = -8.0;
    double step = 0.05;
    bool wide = false;
    bool no_matrix = false;
};

int cmd_sweep(const Common& c, const SweepOpts& o, std::ostream& out, std::ostream& /*err*/) {
    PhysParams base = c.p;
    base.v0 = o.from;
    check_params(base);
    if (!(o.to < 0.0)) throw UsageError("V0 must be negative");
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");

    const double dir = o.to < o.from ? -1.0 : 1.0;
    const auto n = static_cast<std::size_t>(std::floor(std::abs(o.to - o.from) / o.step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = o.from + dir * o.step * static_cast<double>(i);

    SweepOptions so;
    so.scan = scan_config(c);
    so.matrix_elements = !o.no_matrix;
    so.threads = c.threads;
    const SweepTable t = sweep_v0(base, grid, so);

    Sink sink(c.output, out);
    std::ostream& os = *sink;
    if (c.format == "json") {
        ordered_json doc;
        doc["command"] = "sweep";
        doc["params"] = params_json(base);
        ordered_json rows = ordered_json::array();
        for (const auto& r : t.rows) {
            ordered_json j;
            j["v0"] = r.v0;
            j["ok"] = r.ok;
            if (!r.ok) j["error"] = r.error;
            j["levels"] = r.levels;
            j["intervals"] = r.intervals;
            j["m12"] = r.m12 ? ordered_json(*r.m12) : ordered_json();
            j["m12_ground"] = r.m12_ground ? ordered_json(*r.m12_ground) : ordered_json();
            rows.push_back(j);
        }
        doc["rows"] = rows;
        ordered_json em = ordered_json::array();
        for (const auto& e : t.emergence_points) em.push_back({{"v0", e.v0}, {"level_count", e.level_count}});
        doc["emergence_points"] = em;
        doc["failed"] = t.failed();
        doc["metadata"] = {
            {"levels", "ascending energies, |dE| < 1e-10 max(1,|E|)"},
            {"m12", "<psi|y|psi'> between the two shallowest states, Gauss-Kronrod rel 1e-12"},
            {"m12_ground", "<psi|y|psi'> between ground and first excited state"},
            {"emergence_points", "bisection on |V0| to 1e-3"}};
        os << doc.dump(2) << "\n";
    } else {
        os << "# expwell sweep\n" << params_line(base) << " (v0 varies)\n"
           << "# levels: bisection to |dE| < 1e-10 max(1,|E|); m12: two shallowest states, "
              "m12_ground: ground and first excited; Gauss-Kronrod rel 1e-12\n";
        for (const auto& e : t.emergence_points) {
            os << "# emergence: level_count=" << e.level_count << " v0=" << num(e.v0)
               << " (bisection tolerance 1e-3)\n";
        }
        os << "# failed_points: " << t.failed() << "\n";
        auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
        if (o.wide) {
            std::size_t max_levels = 0;
            for (const auto& r : t.rows) max_levels = std::max(max_levels, r.levels.size());
            os << "v0,status,count";
            for (std::size_t k = 1; k <= max_levels; ++k) os << ",E" << k;
            for (std::size_t k = 1; k < max_levels; ++k) os << ",gap" << k;
            os << ",m12,m12_ground\n";
            for (const auto& r : t.rows) {
                const std::size_t cnt = r.levels.size();
                os << num(r.v0) << "," << (r.ok ? "ok" : "failed") << "," << cnt;
                for (std::size_t k = 0; k < max_levels; ++k) {
                    os << "," << (k < cnt ? num(r.levels[cnt - 1 - k]) : "");
                }
                for (std::size_t k = 0; k + 1 < max_levels; ++k) {
                    os << "," << (k + 1 < cnt ? num(r.intervals[cnt - 2 - k]) : "");
                }
                os << "," << opt(r.m12) << "," << opt(r.m12_ground) << "\n";
            }
        } else {
            os << "v0,status,count,level,ground_index,energy,gap_below,m12,m12_ground\n";
            for (const auto& r : t.rows) {
                const std::size_t cnt = r.levels.size();
                if (!r.ok || cnt == 0) {
                    os << num(r.v0) << "," << (r.ok ? "ok" : "failed") << "," << cnt << ",,,,,,\n";
                    continue;
                }
                for (std::size_t k = 0; k < cnt; ++k) {
                    const std::size_t g = cnt - 1 - k;
                    os << num(r.v0) << ",ok," << cnt << "," << k + 1 << "," << g << ","
                       << num(r.levels[g]) << "," << (g > 0 ? num(r.intervals[g - 1]) : "") << ","
                       << opt(r.m12) << "," << opt(r.m12_ground) << "\n";
                }
            }
        }
    }
    const double ok_fraction =
        1.0 - static_cast<double>(t.failed()) / static_cast<double>(t.rows.size());
    return ok_fraction >= 0.9 ? 0 : 1;
}

// -------------------------------------------------------------- estimate

int cmd_estimate(const Common& c, std::ostream& out, std::ostream& /*err*/) {
    check_params(c.p);
    const PhysParams& p = c.p;
    const double bound = chadan_estimate(p);
    const double bargmann = bargmann_integral(p);
    const double calogero = calogero_integral(p);
    const std::size_t count = find_levels(p, scan_config(c)).count();
    const double thr2 = generation_threshold(p, 2);
    const double thr3 = generation_threshold(p, 3);
    const double thr4 = generation_threshold(p, 4);
    const double strength = std::abs(p.v0);
    auto verdict = [&](std::size_t need) { return count >= need ? "possible" : "not possible"; };

    Sink sink(c.output, out);
    std::ostream& os = *sink;
    if (c.format == "json") {
        ordered_json doc;
        doc["command"] = "estimate";
        doc["params"] = params_json(p);
        doc["chadan_bound"] = bound;
        doc["bargmann_integral"] = bargmann;
        doc["calogero_integral"] = calogero;
        doc["exact_count"] = count;
        doc["threshold_2_levels"] = thr2;
        doc["threshold_3_levels"] = thr3;
        doc["threshold_4_levels"] = thr4;
        doc["three_wave_mixing"] = verdict(3);
        doc["thg"] = verdict(4);
        doc["metadata"] = {{"chadan_bound", "closed form"},
                           {"thresholds", "|V0| at which the bound reaches n levels, closed form"},
                           {"integrals", "adaptive Gauss-Kronrod, rel 1e-12"},
                           {"verdicts", "exact level count >= 3 (three-wave) or >= 4 (THG)"}};
        os << doc.dump(2) << "\n";
    } else {
        os << "# expwell estimate\n" << params_line(p) << "\n"
           << "# thresholds: |V0| where 2(sqrt2-1) sqrt(m delta^2 |V0|/hbar^2) reaches n (closed form)\n"
           << "# integrals: adaptive Gauss-Kronrod, rel 1e-12\n"
           << "quantity,value,note\n"
           << "chadan_bound," << num(bound) << ",n <= bound\n"
           << "bargmann_integral," << num(bargmann) << ",finite => finitely many levels\n"
           << "calogero_integral," << num(calogero) << ",int sqrt(-V) dy\n"
           << "exact_count," << count << ",roots of S(E)\n"
           << "threshold_2_levels," << num(thr2) << ",|V0| " << (strength >= thr2 ? ">=" : "<") << " threshold\n"
           << "threshold_3_levels," << num(thr3) << ",|V0| " << (strength >= thr3 ? ">=" : "<") << " threshold\n"
           << "threshold_4_levels," << num(thr4) << ",|V0| " << (strength >= thr4 ? ">=" : "<") << " threshold\n"
           << "three_wave_mixing," << verdict(3) << ",needs >= 3 levels; have " << count << "\n"
           << "thg," << verdict(4) << ",needs >= 4 levels; have " << count << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- refute

ordered_json refute_json(const refute::RefuteReport& r) {
    ordered_json doc;
    doc["command"] = "refute";
    doc["params"] = params_json(r.params);
    doc["passed"] = r.all_passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["checks"] = checks;
    doc["controls"] = {{"schrodinger_max", r.correct_schrodinger_max},
                       {"heun_max", r.correct_heun_max},
                       {"free_particle_max", r.free_particle_max}};
    ordered_json heun = ordered_json::array();
    for (const auto& c : r.heun_cells) {
        heun.push_back({{"rho", c.rho}, {"sigma", c.sigma}, {"sign", c.sign}, {"c1", c.c1},
                        {"c2", c.c2}, {"defect", c.defect}});
    }
    doc["heun_cells"] = heun;
    doc["heun_min_defect"] = r.heun_min_defect;
    ordered_json psi = ordered_json::array();
    for (const auto& c : r.psi_cells) {
        psi.push_back({{"n", c.n}, {"sigma", c.sigma}, {"reading", c.reading},
                       {"energy", c.energy}, {"defect", c.defect}});
    }
    doc["psi_cells"] = psi;
    doc["psi_min_defect"] = r.psi_min_defect;
    doc["origin"] = {{"sigma", r.origin_sigma},
                     {"ground_state_values", r.origin_ground},
                     {"by_level", r.origin_by_level}};
    doc["spectrum"] = {{"exact_levels", r.exact_levels},
                       {"exact_count", r.exact_levels.size()},
                       {"chadan_bound", r.chadan_bound},
                       {"bargmann_integral", r.bargmann},
                       {"claimed_levels", r.claimed_levels},
                       {"claimed_s_values", r.claimed_s_values},
                       {"claimed_above_shallowest", r.claimed_above_shallowest},
                       {"claimed_count", "unbounded"}};
    doc["negative_control"] = {{"energy", r.off_root_energy},
                               {"residual", r.off_root_residual},
                               {"origin_ratio", r.off_root_origin},
                               {"flagged_not_an_eigenvalue", r.off_root_flagged}};
    return doc;
}

int cmd_refute(const Common& c, std::ostream& out, std::ostream& err) {
    check_params(c.p);
    refute::RefuteConfig cfg;
    cfg.threads = c.threads;
    const auto r = refute::refute_report(c.p, cfg);

    Sink sink(c.output, out);
    std::ostream& os = *sink;
    if (c.format == "json") {
        os << refute_json(r).dump(2) << "\n";
    } else {
        os << "# expwell refute\n" << params_line(c.p) << "\n"
           << "# defects: relative ODE residuals from 5-point finite differences\n"
           << "# exact_count: " << r.exact_levels.size() << " (claimed: unbounded)\n"
           << "# origin_value_wrong_ground_state: " << num(r.origin_ground.front()) << "\n"
           << "check,passed,detail\n";
        for (const auto& ch : r.checks) {
            os << ch.name << "," << (ch.passed ? "yes" : "no") << ",\"" << ch.detail << "\"\n";
        }
    }
    if (!r.all_passed()) {
        err << "refutation checks did not produce the expected asymmetry\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of the short-range bottomless exponential well"};
    app.require_subcommand(1);

    Common common;
    LevelsOpts levels_opts;
    WaveOpts wave_opts;
    SweepOpts sweep_opts;

    auto* levels = app.add_subcommand("levels", "bound-state energies, oracle cross-check, bounds");
    add_common(levels, common);
    levels->add_flag("--no-oracle", levels_opts.no_oracle, "skip the shooting cross-check");
    levels->add_option("--curve", levels_opts.curve, "also write S(E) samples to this CSV file");

    auto* wave = app.add_subcommand("wavefunction", "normalized wavefunction samples");
    add_common(wave, common);
    wave->add_option("--level", wave_opts.level, "level, 1 = shallowest")->capture_default_str();
    wave->add_option("--y-min", wave_opts.y_min)->capture_default_str();
    wave->add_option("--y-max", wave_opts.y_max, "default 10 delta");
    wave->add_option("--points", wave_opts.points)->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "levels, gaps and M12 against V0");
    add_common(sweep, common);
    sweep->add_option("--v0-from", sweep_opts.from)->capture_default_str();
    sweep->add_option("--v0-to", sweep_opts.to)->capture_default_str();
    sweep->add_option("--step", sweep_opts.step)->capture_default_str();
    sweep->add_flag("--wide", sweep_opts.wide, "one row per V0 instead of per (V0, level)");
    sweep->add_flag("--no-matrix", sweep_opts.no_matrix, "skip matrix elements");

    auto* estimate = app.add_subcommand("estimate", "bound-state count estimates and thresholds");
    add_common(estimate, common);

    auto* refute_cmd = app.add_subcommand("refute", "residual evidence against the Hermite solution");
    add_common(refute_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*levels) return cmd_levels(common, levels_opts, out, err);
        if (*wave) return cmd_wavefunction(common, wave_opts, out, err);
        if (*sweep) return cmd_sweep(common, sweep_opts, out, err);
        if (*estimate) return cmd_estimate(common, out, err);
        if (*refute_cmd) return cmd_refute(common, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace expwell::cli
