#include "geobohm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "geobohm/config.hpp"
#include "geobohm/csv.hpp"
#include "geobohm/dynamics.hpp"
#include "geobohm/error.hpp"
#include "geobohm/kernels.hpp"
#include "geobohm/matching.hpp"
#include "geobohm/metric.hpp"
#include "geobohm/potential.hpp"
#include "geobohm/validate.hpp"

namespace geobohm {

void write_fig2(std::ostream& os, const std::vector<double>& xs) {
    const Fig2Table t = parallel::fig2(xs);
    csv::Writer w(os);
    w.header(t.columns);
    for (const auto& r : t.rows) w.row(r);
}

void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows) {
    csv::Writer w(os);
    w.header({"a", "driver", "vs", "dt"});
    for (const auto& r : rows) w.row({r.a, r.driver, r.vs, r.dt});
}

void write_fig3(std::ostream& os, const std::vector<double>& a, const std::vector<double>& E) {
    csv::Writer w(os);
    w.header({"a", "E", "dt"});
    for (double e : E)
        for (double x : a) w.row({x, e, tunneling_time_narrow(x, e)});
}

void write_fig4(std::ostream& os, const std::vector<double>& a, const std::vector<double>& n0) {
    csv::Writer w(os);
    w.header({"a", "n0", "dt"});
    for (double n : n0)
        for (double x : a) w.row({x, n, tunneling_time_wide(n)});
}

void write_fig5(std::ostream& os, const std::vector<double>& a, const std::vector<double>& n0) {
    csv::Writer w(os);
    w.header({"a", "n0", "vs_over_c"});
    for (double n : n0)
        for (double x : a) w.row({x, n, bubble_speed_scaling(x, n)});
}

namespace {

struct Options {
    std::string config, out, regime, figure;
    std::optional<double> a, vs, n0, sigma, R;
    bool json = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

std::filesystem::path output_path(const Options& o, const RunConfig& cfg, const std::string& stem,
                                  const std::string& suffix = "") {
    if (!o.out.empty()) {
        if (suffix.empty()) return o.out;
        std::filesystem::path p(o.out);
        return p.parent_path() / (p.stem().string() + "_" + suffix + p.extension().string());
    }
    const std::string s = suffix.empty() ? stem : stem + "_" + suffix;
    return std::filesystem::path(cfg.output_dir) / (s + "_" + timestamp() + ".csv");
}

template <class F>
void emit(const std::filesystem::path& path, F&& body) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) throw ModelError(ErrorKind::invalid_parameter, "cannot write " + path.string());
    body(f);
    std::cout << "wrote " << path.string() << '\n';
}

RunConfig make_config(const Options& o) {
    RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
    if (o.a) cfg.barrier.a = *o.a;
    if (o.vs) cfg.bubble.vs = *o.vs;
    if (o.sigma) cfg.bubble.sigma = *o.sigma;
    if (o.R) cfg.bubble.R = *o.R;
    cfg.finalize();
    return cfg;
}

std::vector<double> grid_x(const RunConfig& cfg) {
    return linspace(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.n_points);
}

int cmd_metric(const Options& o, const RunConfig& cfg) {
    emit(output_path(o, cfg, "metric"), [&](std::ostream& os) {
        csv::Writer w(os);
        w.header({"t", "x", "g00", "g01", "g11"});
        for (double t : {cfg.barrier.t0, cfg.barrier.t1})
            for (double x : grid_x(cfg)) {
                const MetricTensor g = alcubierre_metric(t, x, cfg.bubble);
                w.row({t, x, g.g[0][0], g.g[0][1], g.g[1][1]});
            }
    });
    return 0;
}

int cmd_phase(const Options& o, const RunConfig& cfg) {
    const auto rows = parallel::phase_grid(grid_x(cfg), cfg.bubble);
    emit(output_path(o, cfg, "phase"), [&](std::ostream& os) {
        csv::Writer w(os);
        w.header({"r_s", "S_analytic", "S_quadrature", "abs_err"});
        for (const auto& r : rows) w.row({r.r_s, r.S_analytic, r.S_quadrature, r.abs_err});
    });
    return 0;
}

int cmd_potential(const Options& o, const RunConfig& cfg) {
    const BubbleParams& p = cfg.bubble;
    emit(output_path(o, cfg, "potential"), [&](std::ostream& os) {
        csv::Writer w(os);
        w.header({"x", "f", "Q_II"});
        for (double x : grid_x(cfg)) {
            const double f = bubble_profile(x - bubble_center(p, 0.0), p);
            const double b = p.vs * f;
            w.row({x, f, std::abs(b) < 1.0 ? quantum_potential_II_of_shift(b) : std::nan("")});
        }
    });
    const double R = bubble_radius(p.sigma, p.alpha1);
    emit(output_path(o, cfg, "potential", "energy"), [&](std::ostream& os) {
        csv::Writer w(os);
        w.header({"a", "E_numeric", "E_closed_form", "regime"});
        for (double a : linspace(0.1 * R, 10.0 * R, 100)) {
            const Regime r = classify_regime(a, R).regime;
            const double closed = r == Regime::narrow ? energy_narrow(a, p.vs)
                                  : r == Regime::wide ? energy_wide(p.vs, p.sigma)
                                                      : std::nan("");
            w.cells({csv::format(a), csv::format(distortion_energy(a, p, 0.0)), csv::format(closed), to_string(r)});
        }
    });
    return 0;
}

nlohmann::json cjson(cd z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int cmd_match(const Options& o, const RunConfig& cfg) {
    const MatchCoefficients c = solve_coefficients(cfg.barrier, zeta_terms(cfg.barrier, cfg.bubble));
    const auto res = matching_residuals(c, cfg.barrier);
    const std::pair<const char*, cd> coeffs[] = {{"cI1", c.cI1},   {"cI2", c.cI2},   {"cII1", c.cII1},
                                                 {"cII2", c.cII2}, {"cIII1", c.cIII1}, {"cIII2", c.cIII2}};
    if (o.json) {
        nlohmann::json j;
        for (const auto& [k, v] : coeffs) j[k] = cjson(v);
        for (int i = 1; i <= 6; ++i) {
            j["zeta"].push_back(cjson(c.zeta[i]));
            j["zetaPrime"].push_back(cjson(c.zetaPrime[i]));
        }
        for (int i = 1; i <= 4; ++i) j["varpi"].push_back(cjson(c.varpi[i]));
        j["t_left"] = c.t_left;
        j["t_right"] = c.t_right;
        j["residuals"] = res;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "coefficient,re,im,abs\n";
    for (const auto& [k, v] : coeffs)
        std::cout << k << ',' << csv::format(v.real()) << ',' << csv::format(v.imag()) << ','
                  << csv::format(std::abs(v)) << '\n';
    std::cout << "residuals";
    for (double r : res) std::cout << ',' << csv::format(r);
    std::cout << '\n';
    return 0;
}

int cmd_trajectories(const Options& o, const RunConfig& cfg) {
    const BarrierSpec& s = cfg.barrier;
    const MatchCoefficients c = solve_coefficients(s, zeta_terms(s, cfg.bubble));
    const TrajectoryConstants tc = trajectory_constants(c, s, cfg.bubble);
    const std::vector<TrajectoryJob> jobs = {
        {Region::I, -s.a}, {Region::II, bubble_center(cfg.bubble, s.t0)}, {Region::III, s.a}};
    const auto paths = parallel::trajectories(jobs, s.t0, s.t1, 1000, tc, RegionIIModel::reduced);
    emit(output_path(o, cfg, "trajectories"), [&](std::ostream& os) {
        csv::Writer w(os);
        w.header({"t", "x", "region", "momentum", "invariant"});
        for (const auto& p : paths)
            for (const auto& q : p.samples)
                w.cells({csv::format(q.t), csv::format(q.x), to_string(q.region), csv::format(q.momentum),
                         csv::format(q.invariant_value)});
    });
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].halted) std::cerr << "path " << i << " halted: " << paths[i].message << '\n';
    return 0;
}

int cmd_tunneling_time(const Options& o) {
    if (o.a && o.vs) {
        std::cout << csv::format(tunneling_time(*o.a, *o.vs)) << '\n';
    } else if (o.n0 && !o.vs) {
        std::cout << csv::format(tunneling_time_wide(*o.n0)) << '\n';
    } else {
        throw UsageError("tunneling-time needs --a and --vs, or --n0");
    }
    return 0;
}

int cmd_sweep(const Options& o, const RunConfig& cfg) {
    if (o.regime.empty()) throw UsageError("sweep needs --regime narrow|wide|speed");
    const SweepRegime r = parse_sweep_regime(o.regime.c_str());
    const double R = cfg.bubble.R, sigma = cfg.bubble.sigma;
    const int n = cfg.grid.n_points;
    std::vector<double> a, d;
    switch (r) {
        case SweepRegime::narrow:
            a = linspace(0.1 * R, R, n);
            d = {1.0, 2.0, 4.0};
            break;
        case SweepRegime::wide:
            a = linspace(2.0 * R, 10.0 * R, n);
            d = o.n0 ? std::vector<double>{*o.n0} : std::vector<double>{0.5, 1.0, 2.0};
            break;
        case SweepRegime::speed:
            a = linspace(0.05 * R, 3.0 * R, n);
            d = {o.n0.value_or(0.7)};
            break;
    }
    const auto rows = sweep(r, a, d, sigma, R);
    emit(output_path(o, cfg, "sweep"), [&](std::ostream& os) { write_sweep(os, rows); });
    return 0;
}

int cmd_figures(const Options& o, const RunConfig& cfg) {
    const double R = cfg.bubble.R;
    const int n = cfg.grid.n_points;
    const std::string& f = o.figure;
    const auto path = output_path(o, cfg, f);
    if (f == "fig2") {
        emit(path, [&](std::ostream& os) { write_fig2(os, grid_x(cfg)); });
    } else if (f == "fig3") {
        emit(path, [&](std::ostream& os) { write_fig3(os, linspace(0.1 * R, R, n), {1.0, 2.0, 4.0}); });
    } else if (f == "fig4") {
        const std::vector<double> n0 = o.n0 ? std::vector<double>{*o.n0} : std::vector<double>{0.5, 1.0, 2.0};
        emit(path, [&](std::ostream& os) { write_fig4(os, linspace(2.0 * R, 10.0 * R, n), n0); });
    } else {
        emit(path, [&](std::ostream& os) { write_fig5(os, linspace(0.0, 3.0 * R, n), {o.n0.value_or(0.7)}); });
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    const auto rows = run_validation(cfg);
    bool ok = true;
    for (const auto& r : rows) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  " << r.detail << '\n';
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

void echo_parameters(const Options& o) {
    std::cerr << "parameters:";
    if (!o.config.empty()) std::cerr << " config=" << o.config;
    auto put = [](const char* k, const std::optional<double>& v) {
        if (v) std::cerr << ' ' << k << '=' << *v;
    };
    put("a", o.a);
    put("vs", o.vs);
    put("n0", o.n0);
    put("sigma", o.sigma);
    put("R", o.R);
    if (!o.regime.empty()) std::cerr << " regime=" << o.regime;
    std::cerr << '\n';
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Geometrodynamic Bohmian tunneling model"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--config", o.config, "key=value configuration file");
    app.add_option("--out", o.out, "output CSV path");
    app.add_option("--a", o.a, "barrier width");
    app.add_option("--vs", o.vs, "bubble speed");
    app.add_option("--n0", o.n0, "wide-regime scale factor");
    app.add_option("--sigma", o.sigma, "bubble wall parameter");
    app.add_option("--R", o.R, "bubble radius");
    app.add_option("--regime", o.regime, "sweep regime")->check(CLI::IsMember({"narrow", "wide", "speed"}));
    app.add_flag("--json", o.json, "machine-readable matching record");

    const std::pair<const char*, const char*> subs[] = {
        {"metric", "metric components on the grid"},
        {"phase", "region-II phase, closed form against quadrature"},
        {"potential", "quantum potential and distortion energy tables"},
        {"match", "boundary-matching coefficients and residuals"},
        {"trajectories", "one guidance path per region"},
        {"tunneling-time", "single tunneling-time evaluation"},
        {"sweep", "tunneling-time sweep over width and driver"},
        {"validate", "run the oracle suite"},
    };
    for (const auto& [n, d] : subs) app.add_subcommand(n, d)->fallthrough();
    auto* fig = app.add_subcommand("figures", "figure datasets fig2..fig5")->fallthrough();
    fig->add_option("figure", o.figure)->required()->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    if (o.json && sub != "match") {
        std::cerr << "--json applies to match only\n";
        return 2;
    }
    try {
        if (sub == "tunneling-time") return cmd_tunneling_time(o);
        const RunConfig cfg = make_config(o);
        if (sub == "metric") return cmd_metric(o, cfg);
        if (sub == "phase") return cmd_phase(o, cfg);
        if (sub == "potential") return cmd_potential(o, cfg);
        if (sub == "match") return cmd_match(o, cfg);
        if (sub == "trajectories") return cmd_trajectories(o, cfg);
        if (sub == "sweep") return cmd_sweep(o, cfg);
        if (sub == "figures") return cmd_figures(o, cfg);
        return cmd_validate(cfg);
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        echo_parameters(o);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        echo_parameters(o);
        return 1;
    }
}

}  // namespace geobohm
