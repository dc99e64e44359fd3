#include "cli.hpp"

#include "function_io.hpp"

#include "subaction/subaction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace subaction::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ReferenceNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string potential = "quadratic";
    std::string map = "doubling";
    std::size_t n = 1440;
    double tol = 1e-9;
    int max_iters = 10000;
    std::string initial = "zero";
    std::string out;
    std::string report;
    std::uint64_t seed = 20240101;

    int pmax = 16;
    bool compare = false;

    std::string experiment;
    double eps = 0.05;

    std::string f_path;
    std::string g_spec = "zero";
    double band = 0.0;
    bool both_sides = false;

    double reference_tol = 1e-12;
};

void add_grid_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--n", o.n, "grid size")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
    cmd.add_option("--out", o.out, "write the resulting function as x,value CSV");
    cmd.add_option("--report", o.report, "write the JSON summary here instead of stdout");
    cmd.add_option("--seed", o.seed, "seed for randomized steps")->capture_default_str();
}

void add_problem_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--potential", o.potential, "catalog name or file:PATH")->capture_default_str();
    cmd.add_option("--map", o.map, "circle map")
        ->capture_default_str()
        ->check(CLI::IsMember({"doubling", "minus-doubling"}));
}

void add_solver_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--tol", o.tol, "stop when successive iterates are this close")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--max-iters", o.max_iters, "iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_option("--initial", o.initial, "zero, potential, or file:PATH")->capture_default_str();
}

Json config_echo(const std::string& command, const Options& o) {
    Json c;
    c["command"] = command;
    if (command != "perturb") {
        c["potential"] = o.potential;
        c["map"] = o.map;
    }
    c["n"] = o.n;
    if (command == "solve" || command == "rates" || command == "generic-check" || o.compare) {
        c["tol"] = o.tol;
        c["max_iters"] = o.max_iters;
        c["initial"] = o.initial;
    }
    if (command == "oracle") {
        c["pmax"] = o.pmax;
        c["compare"] = o.compare;
    }
    if (command == "perturb") {
        c["experiment"] = o.experiment;
        c["eps"] = o.eps;
    }
    if (command == "generic-check") {
        c["f"] = o.f_path;
        c["g"] = o.g_spec;
        c["band"] = o.band;
        c["both_sides"] = o.both_sides;
    }
    if (command == "rates")
        c["reference_tol"] = o.reference_tol;
    c["seed"] = o.seed;
    return c;
}

SolveConfig solve_config(const Options& o) {
    SolveConfig cfg;
    cfg.n = o.n;
    cfg.tol = o.tol;
    cfg.max_iters = o.max_iters;
    if (o.initial == "zero") {
        cfg.initial = InitialGuess::Zero;
    } else if (o.initial == "potential") {
        cfg.initial = InitialGuess::Potential;
    } else if (o.initial.rfind("file:", 0) == 0) {
        cfg.initial = InitialGuess::File;
        cfg.initial_function = read_function_csv(o.initial.substr(5)).sample(o.n);
    } else {
        throw std::invalid_argument("--initial must be zero, potential, or file:PATH");
    }
    return cfg;
}

Json solve_summary(const SolveReport& r) {
    Json j;
    j["m_estimate"] = r.m_estimate;
    j["c_final"] = r.c_final;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["residuals"] = r.residuals;
    return j;
}

Json points_json(const std::vector<std::size_t>& idx, std::size_t n) {
    Json a = Json::array();
    for (std::size_t j : idx)
        a.push_back(GridFunction::point(j, n));
    return a;
}

void emit(const Json& summary, const Options& o, std::ostream& out) {
    const std::string text = summary.dump(2) + "\n";
    if (o.report.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.report, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + o.report + " for writing");
    file << text;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto potential = load_potential(o.potential);
    const auto report = solve(potential, parse_circle_map(o.map), solve_config(o));
    Json j = solve_summary(report);
    j["config"] = config_echo("solve", o);
    if (!o.out.empty())
        write_function_csv(o.out, report.u);
    emit(j, o, out);
    return report.converged ? kExitOk : kExitNotConverged;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const auto potential = load_potential(o.potential);
    const auto map = parse_circle_map(o.map);
    const auto r = periodic_mA(potential, map, o.pmax);
    Json j;
    j["m_value"] = r.m_value;
    j["period"] = r.period;
    j["orbit"] = r.orbit;
    j["maximizers"] = r.maximizers;
    Json table = Json::object();
    for (const auto& [p, v] : r.period_best)
        table[std::to_string(p)] = v;
    j["period_best"] = table;

    int code = kExitOk;
    if (o.compare) {
        const auto report = solve(potential, map, solve_config(o));
        const auto cc = cross_check(potential, map, report, o.pmax);
        j["m_estimate"] = cc.m_estimate;
        j["m_gap"] = cc.m_gap;
        j["u_gap"] = cc.u_gap ? Json(*cc.u_gap) : Json(nullptr);
        j["converged"] = report.converged;
        if (!o.out.empty())
            write_function_csv(o.out, report.u);
        code = report.converged ? kExitOk : kExitNotConverged;
    }
    j["config"] = config_echo("oracle", o);
    emit(j, o, out);
    return code;
}

int cmd_perturb(const Options& o, std::ostream& out) {
    Json j;
    j["experiment"] = o.experiment;
    if (o.experiment == "l6" || o.experiment == "e3") {
        const auto s = o.experiment == "l6" ? half_rate_setup(o.n, o.eps) : unit_rate_setup(o.n, o.eps);
        const auto f = perturb(s.u, s.bump);
        const auto r = contraction_ratio(s.map, s.potential, f, s.u);
        j["bump"] = {{"eps", s.bump.eps}, {"center", s.bump.center}, {"slope", s.bump.slope}};
        j["dist_before"] = r.dist_before;
        j["dist_after"] = r.dist_after;
        j["ratio"] = r.ratio;
        if (!o.out.empty())
            write_function_csv(o.out, f);
    } else if (o.experiment == "counterexample1") {
        const auto d = counterexample1(o.n);
        j["dist_before"] = d.dist_before;
        j["dist_after"] = d.dist_after;
        if (!o.out.empty())
            write_function_csv(o.out, PotentialSpec::counterex1().sample(o.n));
    } else {
        const auto s = support_setup(o.n);
        const auto r = support_check(s.map, s.potential, s.u, s.bump);
        j["support"] = {r.support.start, r.support.start + r.support.length};
        j["image"] = {r.image.start, r.image.start + r.image.length};
        j["dominant_is_bump_branch"] = r.dominant_is_bump_branch;
        j["psi_change_max"] = r.psi_change_max;
        j["psi_change_outside_image"] = r.psi_change_outside_image;
        j["h_min_increase"] = r.h_min_increase;
        j["h_max_increase"] = r.h_max_increase;
        j["h_change_outside"] = r.h_change_outside;
        j["bound"] = r.bound;
        j["holds"] = r.holds;
        if (!o.out.empty())
            write_function_csv(o.out, perturb(s.u, s.bump));
    }
    j["config"] = config_echo("perturb", o);
    emit(j, o, out);
    return kExitOk;
}

int cmd_generic_check(const Options& o, std::ostream& out) {
    const auto map = parse_circle_map(o.map);
    const auto f = read_function_csv(o.f_path).sample(o.n);
    int code = kExitOk;
    std::optional<GridFunction> g;
    Json j;
    if (o.g_spec == "zero") {
        g = GridFunction::constant(o.n, 0.0);
    } else if (o.g_spec == "u") {
        const auto report = solve(load_potential(o.potential), map, solve_config(o));
        j["m_estimate"] = report.m_estimate;
        j["converged"] = report.converged;
        code = report.converged ? kExitOk : kExitNotConverged;
        g = report.u;
    } else {
        g = read_function_csv(o.g_spec).sample(o.n);
    }

    const double band = o.band > 0.0 ? o.band : default_genericity_tol(f, *g);
    const auto r = generic_membership(map, f, *g, band, o.both_sides);
    j["in_set"] = r.in_set;
    j["degenerate"] = r.degenerate;
    j["distance"] = quotient_dist(f, *g);
    j["band"] = band;
    Json maxima = Json::array();
    for (std::size_t idx : r.maximizers) {
        const double x = GridFunction::point(idx, o.n);
        maxima.push_back({{"x", x}, {"beta", beta(map, x, f, *g)}});
    }
    j["maximizers"] = maxima;
    if (o.both_sides)
        j["negative_maximizers"] = points_json(r.negative_maximizers, o.n);
    j["violations"] = points_json(r.violations, o.n);
    j["config"] = config_echo("generic-check", o);
    emit(j, o, out);
    return code;
}

int cmd_rates(const Options& o, std::ostream& out) {
    const auto potential = load_potential(o.potential);
    const auto map = parse_circle_map(o.map);
    const auto a = potential.sample(o.n);
    const auto cfg = solve_config(o);

    Json j;
    GridFunction u_ref = GridFunction::constant(o.n, 0.0);
    const auto analytic_map = analytic_subaction_map(potential.kind());
    if (analytic_map && *analytic_map == map) {
        u_ref = analytic_subaction(potential.kind(), o.n);
        j["reference"] = "analytic";
    } else {
        SolveConfig tight = cfg;
        tight.tol = o.reference_tol;
        tight.max_iters = std::max(cfg.max_iters, 100000);
        const auto ref = solve(a, map, tight);
        if (!ref.converged)
            throw ReferenceNotConverged("reference solve did not reach --reference-tol");
        u_ref = ref.u;
        j["reference"] = "solve";
    }

    const auto series = rate_series(a, map, cfg, u_ref);
    j.update(solve_summary(series.solve));
    Json ratios = Json::array(), distances = Json::array();
    for (const auto& step : series.steps) {
        ratios.push_back(step.ratio ? Json(*step.ratio) : Json(nullptr));
        distances.push_back(step.dist_before);
    }
    j["ratio_series"] = ratios;
    j["distance_series"] = distances;
    j["degenerate_floor"] = series.floor;
    j["config"] = config_echo("rates", o);
    if (!o.out.empty())
        write_function_csv(o.out, series.solve.u);
    emit(j, o, out);
    return series.solve.converged ? kExitOk : kExitNotConverged;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Calibrated subactions of expanding circle maps"};
    app.require_subcommand(1, 1);

    auto* solve_cmd = app.add_subcommand("solve", "iterate G to a calibrated subaction");
    add_problem_flags(*solve_cmd, o);
    add_solver_flags(*solve_cmd, o);
    add_grid_flags(*solve_cmd, o);

    auto* oracle_cmd = app.add_subcommand("oracle", "best periodic-orbit average");
    add_problem_flags(*oracle_cmd, o);
    add_solver_flags(*oracle_cmd, o);
    add_grid_flags(*oracle_cmd, o);
    oracle_cmd->add_option("--pmax", o.pmax, "longest period")->capture_default_str()->check(CLI::Range(1, 20));
    oracle_cmd->add_flag("--compare", o.compare, "also solve and report the gap");

    auto* perturb_cmd = app.add_subcommand("perturb", "bump experiments near the fixed point");
    perturb_cmd->add_option("--experiment", o.experiment)
        ->required()
        ->check(CLI::IsMember({"l6", "e3", "counterexample1", "support"}));
    perturb_cmd->add_option("--eps", o.eps, "bump half-width for l6 and e3")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_grid_flags(*perturb_cmd, o);

    auto* generic_cmd = app.add_subcommand("generic-check", "test a pair (f, g) for coincident maximizers");
    generic_cmd->add_option("--f", o.f_path, "function CSV")->required()->check(CLI::ExistingFile);
    generic_cmd->add_option("--g", o.g_spec, "function CSV, zero, or u")->capture_default_str();
    generic_cmd->add_option("--band", o.band, "maximizer tolerance; 0 picks 1e-8 * max(1, |f-g|)");
    generic_cmd->add_flag("--both-sides", o.both_sides, "also test minimizers");
    add_problem_flags(*generic_cmd, o);
    add_solver_flags(*generic_cmd, o);
    add_grid_flags(*generic_cmd, o);

    auto* rates_cmd = app.add_subcommand("rates", "per-step contraction ratios against a reference subaction");
    add_problem_flags(*rates_cmd, o);
    add_solver_flags(*rates_cmd, o);
    add_grid_flags(*rates_cmd, o);
    rates_cmd->add_option("--reference-tol", o.reference_tol, "tolerance of the reference solve when no closed form exists")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>> commands[] = {
        {solve_cmd, cmd_solve},     {oracle_cmd, cmd_oracle}, {perturb_cmd, cmd_perturb},
        {generic_cmd, cmd_generic_check}, {rates_cmd, cmd_rates}};
    try {
        for (const auto& [cmd, fn] : commands)
            if (cmd->parsed())
                return fn(o, out);
    } catch (const ReferenceNotConverged& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        // PreconditionViolated, DegenerateDistance, NotFound, I/O failures
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

} // namespace subaction::cli
