// invitelab -- workbench for the on-demand agent invitation system.
//
// Subcommands:
//   analyze   classify a parameter set against the stability criteria
//   fluid     integrate the fluid limit from a given init
//   simulate  run the stochastic chain
//   compare   matched-init fluid vs simulation gap
//   sweep     classify a 2-axis parameter grid
//
// Exit codes: 0 success, 2 input error (no output files written), 1 internal
// failure.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invitelab/experiments.hpp"
#include "invitelab/io.hpp"

namespace fs = std::filesystem;
using namespace invitelab;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
T parse_number(const std::string& text, const std::string& what) {
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw InputError("cannot parse " + what + " from '" + text + "'");
    return value;
}

template <class T>
std::array<T, 3> parse_triple(const std::string& text, const std::string& flag) {
    std::array<T, 3> out{};
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 3) throw InputError(flag + " expects exactly three comma-separated values");
        out[static_cast<std::size_t>(i++)] = parse_number<T>(part, flag);
    }
    if (i != 3) throw InputError(flag + " expects exactly three comma-separated values");
    return out;
}

ModelParams load_and_validate(const std::string& path, bool for_simulation) {
    ModelParams p = load_params_file(path);
    const auto errs = validate_params(p, for_simulation);
    if (!errs.empty()) {
        std::string msg = "invalid parameters in '" + path + "':";
        for (const auto& e : errs) msg += "\n  - " + e;
        throw InputError(msg);
    }
    return p;
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory '" + out + "': " + ec.message());
    return dir;
}

struct InitFlags {
    std::string raw;    // --init X,Y,Z
    std::string fluid;  // --finit x,y,w
};

// Flag values shared by the run-style subcommands; zero-initialized fields
// mean "use the library default".
struct CommonFlags {
    std::string params_file;
    std::string out_dir;
    InitFlags init;
    std::uint64_t seed = 1;
    double t_end = 0.0;
    double dt = 0.0;
    double sample_dt = 0.0;
    double conv_tol = 0.0;
    double conv_hold = -1.0;
    int reps = 1;
};

FluidConfig make_fluid_config(const CommonFlags& f, double default_t_end = 100.0) {
    FluidConfig cfg;
    if (f.dt > 0.0) cfg.dt = f.dt;
    cfg.t_end = f.t_end > 0.0 ? f.t_end : default_t_end;
    cfg.conv_tol = f.conv_tol;
    if (f.conv_hold >= 0.0) cfg.conv_hold = f.conv_hold;
    return cfg;
}

SimConfig make_sim_config(const CommonFlags& f, double default_t_end = 40.0) {
    SimConfig cfg;
    cfg.seed = f.seed;
    cfg.t_end = f.t_end > 0.0 ? f.t_end : default_t_end;
    if (f.sample_dt > 0.0) cfg.sample_dt = f.sample_dt;
    cfg.replications = f.reps;
    return cfg;
}

ExperimentInit parse_init(const InitFlags& init) {
    if (!init.raw.empty() && !init.fluid.empty())
        throw InputError("give either --init or --finit, not both");
    if (!init.raw.empty()) {
        const auto v = parse_triple<long long>(init.raw, "--init");
        if (v[0] < 0 || v[2] < 0) throw InputError("--init requires X >= 0 and Z >= 0");
        return CtmcState{v[0], v[1], v[2]};
    }
    if (!init.fluid.empty()) {
        const auto v = parse_triple<double>(init.fluid, "--finit");
        return FluidState{v[0], v[1], v[2]};
    }
    throw InputError("an initial state is required (--init X,Y,Z or --finit x,y,w)");
}

ExperimentSpec make_spec(const CommonFlags& f, bool for_simulation,
                         double default_fluid_t_end = 100.0, double default_sim_t_end = 40.0) {
    ExperimentSpec spec;
    spec.params = load_params_file(f.params_file);
    spec.inits.push_back(parse_init(f.init));
    spec.fluid_cfg = make_fluid_config(f, default_fluid_t_end);
    spec.sim_cfg = make_sim_config(f, default_sim_t_end);
    spec.outputs = f.out_dir;
    if (const auto errs = validate(spec, for_simulation); !errs.empty()) {
        std::string msg = "invalid experiment:";
        for (const auto& e : errs) msg += "\n  - " + e;
        throw InputError(msg);
    }
    return spec;
}

std::string rep_suffix(int reps, std::uint32_t rep) {
    return reps > 1 ? "_rep" + std::to_string(rep) : std::string{};
}

int cmd_analyze(const CommonFlags& f, bool pretty) {
    const ModelParams p = load_and_validate(f.params_file, /*for_simulation=*/false);
    std::cout << to_json(classify(p), pretty ? 2 : -1) << "\n";
    return 0;
}

int cmd_fluid(const CommonFlags& f) {
    const ExperimentSpec spec = make_spec(f, /*for_simulation=*/false);
    const FluidState init = as_fluid(spec.inits.front(), spec.params);
    if (init.x < spec.params.x_min() - 1e-9)
        throw InputError("initial x = " + format_double(init.x) + " lies below the boundary x_min = " +
                         format_double(spec.params.x_min()));

    const FluidRun run = integrate(init, spec.params, spec.fluid_cfg);

    const fs::path dir = prepare_out_dir(spec.outputs.string());
    write_file(dir / "fluid.csv", to_csv(run.trajectory));
    write_file(dir / "fluid_verdict.json", to_json(run.verdict, 2) + "\n");
    std::cout << to_json(run.verdict, 2) << "\n";
    return 0;
}

int cmd_simulate(const CommonFlags& f) {
    if (!f.init.fluid.empty()) throw InputError("simulate takes a raw --init X,Y,Z");
    const ExperimentSpec spec = make_spec(f, /*for_simulation=*/true);
    const CtmcState init = as_raw(spec.inits.front(), spec.params);
    const SimConfig& cfg = spec.sim_cfg;

    const fs::path dir = prepare_out_dir(spec.outputs.string());
    std::string summaries = "[";
    for (int rep = 0; rep < cfg.replications; ++rep) {
        const SimResult res = simulate_run(init, spec.params, cfg, static_cast<std::uint32_t>(rep));
        const std::string suffix = rep_suffix(cfg.replications, static_cast<std::uint32_t>(rep));
        write_file(dir / ("simulate_raw" + suffix + ".csv"), to_csv_raw(res.trajectory));
        write_file(dir / ("simulate_scaled" + suffix + ".csv"),
                   to_csv_scaled(scale_center(res.trajectory)));
        summaries += (rep ? ",\n" : "\n");
        summaries += to_json(summarize(res.trajectory, res.event_counts), 2);
    }
    summaries += "\n]\n";
    write_file(dir / "simulate_summary.json", summaries);
    write_file(dir / "run_meta.json", run_metadata_json(spec.params, cfg) + "\n");
    std::cout << "wrote " << cfg.replications << " replication(s) to " << dir.string() << "\n";
    return 0;
}

int cmd_compare(const CommonFlags& f) {
    const ExperimentSpec spec = make_spec(f, /*for_simulation=*/true,
                                          /*default_fluid_t_end=*/20.0, /*default_sim_t_end=*/20.0);
    const CtmcState init = as_raw(spec.inits.front(), spec.params);
    const FluidState fluid_init = scale_center(init, spec.params);
    if (fluid_init.x < spec.params.x_min() - 1e-9)
        throw InputError("matched fluid init lies below the boundary");
    const SimConfig& sim_cfg = spec.sim_cfg;

    const fs::path dir = prepare_out_dir(spec.outputs.string());
    double mean_sup = 0.0;
    std::string results = "[";
    for (int rep = 0; rep < sim_cfg.replications; ++rep) {
        const ComparisonResult res = run_comparison(init, spec.params, spec.fluid_cfg, sim_cfg,
                                                    static_cast<std::uint32_t>(rep));
        const std::string suffix = rep_suffix(sim_cfg.replications, static_cast<std::uint32_t>(rep));
        write_file(dir / ("gap" + suffix + ".csv"), gap_to_csv(res));
        if (rep == 0) {
            FluidConfig fcfg = spec.fluid_cfg;
            fcfg.t_end = std::max(fcfg.t_end, sim_cfg.t_end);
            const FluidRun fluid = integrate(fluid_init, spec.params, fcfg);
            write_file(dir / "fluid.csv", to_csv(fluid.trajectory));
        }
        write_file(dir / ("sim_scaled" + suffix + ".csv"),
                   to_csv_scaled(simulate_scaled(init, spec.params, sim_cfg,
                                                 static_cast<std::uint32_t>(rep))));
        results += (rep ? ",\n" : "\n");
        results += to_json(res, 2);
        mean_sup += res.sup_gap;
    }
    mean_sup /= sim_cfg.replications;
    results += "\n]";
    const std::string doc = "{\n\"mean_sup_gap\": " + format_double(mean_sup) +
                            ",\n\"replications\": " + results + "\n}\n";
    write_file(dir / "compare.json", doc);
    write_file(dir / "run_meta.json", run_metadata_json(spec.params, sim_cfg) + "\n");
    std::cout << "mean_sup_gap " << format_double(mean_sup) << "\n";
    return 0;
}

SweepAxis parse_axis(const std::string& text) {
    // name=lo:hi:count
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw InputError("--axis expects name=lo:hi:count");
    const std::string name = text.substr(0, eq);
    const auto param = sweep_param_from_name(name);
    if (!param)
        throw InputError("unknown sweep axis '" + name + "' (use alpha, beta, mu, gamma or epsilon)");
    std::stringstream ss(text.substr(eq + 1));
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw InputError("--axis expects name=lo:hi:count");
    SweepAxis axis;
    axis.param = *param;
    axis.lo = parse_number<double>(parts[0], "axis lo");
    axis.hi = parse_number<double>(parts[1], "axis hi");
    axis.count = parse_number<int>(parts[2], "axis count");
    if (axis.count < 1) throw InputError("sweep grid is empty (axis count must be >= 1)");
    return axis;
}

int cmd_sweep(const CommonFlags& f, const std::vector<std::string>& axis_specs, bool with_fluid) {
    const ModelParams base = load_and_validate(f.params_file, /*for_simulation=*/false);
    if (axis_specs.size() != 2) throw InputError("sweep needs exactly two --axis specs");
    const SweepAxis axis_a = parse_axis(axis_specs[0]);
    const SweepAxis axis_b = parse_axis(axis_specs[1]);
    if (axis_a.param == axis_b.param) throw InputError("sweep axes must differ");
    const FluidConfig fluid_cfg = make_fluid_config(f);

    std::vector<SweepPoint> points;
    try {
        points = sweep_grid(base, axis_a, axis_b, with_fluid, fluid_cfg);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    const fs::path dir = prepare_out_dir(f.out_dir);
    write_file(dir / "sweep.csv", sweep_to_csv(points, with_fluid));
    std::cout << "wrote " << points.size() << " grid points to " << (dir / "sweep.csv").string()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for the randomly-behaving on-demand agent service system"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool pretty = true;
    std::vector<std::string> axis_specs;
    bool with_fluid = false;

    const auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--params", flags.params_file, "parameter JSON file")->required();
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", flags.out_dir, "output directory")->required();
    };
    const auto add_inits = [&](CLI::App* cmd) {
        cmd->add_option("--init", flags.init.raw, "raw initial state X,Y,Z");
        cmd->add_option("--finit", flags.init.fluid, "fluid initial state x,y,w");
    };
    const auto add_fluid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--dt", flags.dt, "integration step");
        cmd->add_option("--conv-tol", flags.conv_tol, "convergence ball radius");
        cmd->add_option("--conv-hold", flags.conv_hold, "time the norm must stay in the ball");
    };
    const auto add_sim_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", flags.seed, "base RNG seed");
        cmd->add_option("--sample-dt", flags.sample_dt, "output grid step");
        cmd->add_option("--reps", flags.reps, "replication count");
    };
    const auto add_t_end = [&](CLI::App* cmd) {
        cmd->add_option("--t-end", flags.t_end, "time horizon");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "stability classification as JSON");
    add_params(analyze);
    analyze->add_flag("--pretty,!--compact", pretty, "pretty-print the report");

    CLI::App* fluid = app.add_subcommand("fluid", "integrate the fluid limit");
    add_params(fluid);
    add_out(fluid);
    add_inits(fluid);
    add_t_end(fluid);
    add_fluid_flags(fluid);

    CLI::App* simulate = app.add_subcommand("simulate", "run the stochastic chain");
    add_params(simulate);
    add_out(simulate);
    add_inits(simulate);
    add_t_end(simulate);
    add_sim_flags(simulate);

    CLI::App* compare = app.add_subcommand("compare", "fluid vs simulation gap");
    add_params(compare);
    add_out(compare);
    add_inits(compare);
    add_t_end(compare);
    add_fluid_flags(compare);
    add_sim_flags(compare);

    CLI::App* sweep = app.add_subcommand("sweep", "classify a 2-axis parameter grid");
    add_params(sweep);
    add_out(sweep);
    sweep->add_option("--axis", axis_specs, "axis spec name=lo:hi:count (give exactly two)");
    sweep->add_flag("--with-fluid", with_fluid, "also run the fluid init battery per point");
    add_t_end(sweep);
    add_fluid_flags(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(flags, pretty);
        if (app.got_subcommand(fluid)) return cmd_fluid(flags);
        if (app.got_subcommand(simulate)) return cmd_simulate(flags);
        if (app.got_subcommand(compare)) return cmd_compare(flags);
        if (app.got_subcommand(sweep)) return cmd_sweep(flags, axis_specs, with_fluid);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
