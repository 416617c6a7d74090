#include "signalga/cli.hpp"

#include "signalga/artifacts.hpp"
#include "signalga/baseline.hpp"
#include "signalga/errors.hpp"
#include "signalga/genetic.hpp"
#include "signalga/scenario_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

namespace signalga {

namespace fs = std::filesystem;

namespace {

std::string describe(const Fitness& f) {
    return "unserved=" + std::to_string(f.unserved) + " makespan=" + std::to_string(f.makespan) +
           " mean_total=" + f.mean_total.to_decimal(4);
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
}

struct GaOptions {
    std::string scenario;
    std::uint64_t seed = 0;
    GaConfig config;
    std::string mode = "duration";
    std::string template_literal;
    int min_green = 5;
    int max_green = 60;
    BaselineSpec baseline;
    std::string out = ".";
};

void add_ga_options(CLI::App* cmd, GaOptions& o) {
    cmd->add_option("--scenario", o.scenario, "Scenario file")->required();
    cmd->add_option("--seed", o.seed, "RNG seed")->required();
    cmd->add_option("--generations", o.config.generations, "Generations to breed")->capture_default_str();
    cmd->add_option("--population", o.config.population_size, "Population size")->capture_default_str();
    cmd->add_option("--mode", o.mode, "Mutation mode")
        ->check(CLI::IsMember({"duration", "string"}))
        ->capture_default_str();
    cmd->add_option("--crossover-prob", o.config.crossover_prob, "Crossover probability")->capture_default_str();
    cmd->add_option("--mutation-prob", o.config.mutation_prob, "Mutation probability per child")
        ->capture_default_str();
    cmd->add_option("--max-delta", o.config.max_duration_delta, "Largest duration tweak (s)")->capture_default_str();
    cmd->add_option("--elitism", o.config.elitism_count, "Elite members copied per generation")
        ->capture_default_str();
    cmd->add_option("--workers", o.config.workers, "Concurrent fitness evaluations")->capture_default_str();
    cmd->add_option("--template", o.template_literal,
                    "Starting program literal (default: the fixed-timer baseline)");
    cmd->add_option("--min-green", o.min_green, "Lower bound for green durations")->capture_default_str();
    cmd->add_option("--max-green", o.max_green, "Upper bound for green durations")->capture_default_str();
    cmd->add_option("--baseline-ns", o.baseline.green_ns, "Baseline NS green (s)")->capture_default_str();
    cmd->add_option("--baseline-ew", o.baseline.green_ew, "Baseline EW green (s)")->capture_default_str();
    cmd->add_option("--yellow", o.baseline.yellow, "Baseline yellow (s)")->capture_default_str();
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
}

struct GaRun {
    Scenario scenario;
    SimResult baseline;
    EvolutionResult evolved;
    SimResult best;
};

GaRun run_ga(GaOptions& o) {
    GaRun run;
    run.scenario = load_scenario(o.scenario);
    o.config.seed = o.seed;
    o.config.mode = o.mode == "string" ? MutationMode::String : MutationMode::Duration;
    if (o.min_green < 1 || o.min_green > o.max_green) throw ValidationError("green bounds must satisfy 1 <= min <= max");

    const SignalProgram baseline_program = fixed_timer_program(o.baseline);
    const SignalProgram start =
        o.template_literal.empty() ? baseline_program : SignalProgram::parse(o.template_literal);
    require_valid(start, ConflictMatrix::standard());
    const Genome tmpl = Genome::from_program(start, {o.min_green, o.max_green});

    run.baseline = simulate(run.scenario, baseline_program);
    run.evolved = evolve(o.config, run.scenario, tmpl);
    run.best = simulate(run.scenario, run.evolved.best.genome.decode());
    return run;
}

void write_ga_artifacts(const GaRun& run, const fs::path& dir) {
    ensure_dir(dir);
    write_vehicle_table(run.best, dir / "vehicles.csv");
    write_generation_log(run.evolved.log, dir / "generations.csv");
    emit_plot_data(run.evolved.log, run.baseline.fitness, dir / "plot.tsv");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Evolve and evaluate traffic-light phase programs for a single intersection", "signalga"};
    app.require_subcommand(1);

    // simulate
    std::string sim_scenario, sim_program, sim_out;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run one program over a scenario");
    simulate_cmd->add_option("--scenario", sim_scenario, "Scenario file")->required();
    simulate_cmd->add_option("--program", sim_program, "Program literal, e.g. GGrr:30;yyrr:3;rrGG:30;rryy:3")
        ->required();
    simulate_cmd->add_option("--out", sim_out, "Output directory for vehicles.csv");

    GaOptions evolve_opts;
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a program with the genetic algorithm");
    add_ga_options(evolve_cmd, evolve_opts);

    std::string oracle_scenario, oracle_grid = "5..60:5", oracle_out;
    int oracle_yellow = 3;
    std::size_t oracle_workers = 1;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive fixed-timer grid search");
    oracle_cmd->add_option("--scenario", oracle_scenario, "Scenario file")->required();
    oracle_cmd->add_option("--grid", oracle_grid, "Green values: LO..HI:STEP or a comma list")->capture_default_str();
    oracle_cmd->add_option("--yellow", oracle_yellow, "Yellow duration (s)")->capture_default_str();
    oracle_cmd->add_option("--workers", oracle_workers, "Concurrent simulations")->capture_default_str();
    oracle_cmd->add_option("--out", oracle_out, "Output directory for oracle.tsv");

    std::string export_scenario, export_out;
    auto* export_cmd = app.add_subcommand("export-sumo", "Write SUMO node/edge/route files");
    export_cmd->add_option("--scenario", export_scenario, "Scenario file")->required();
    export_cmd->add_option("--out", export_out, "Output directory")->required();

    GaOptions compare_opts;
    auto* compare_cmd = app.add_subcommand("compare", "Evolve, run the fixed-timer baseline and report");
    add_ga_options(compare_cmd, compare_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (simulate_cmd->parsed()) {
            const Scenario scenario = load_scenario(sim_scenario);
            const SimResult result = simulate(scenario, SignalProgram::parse(sim_program));
            out << "fitness: " << describe(result.fitness) << '\n';
            if (sim_out.empty()) {
                out << render_vehicle_table(result);
            } else {
                ensure_dir(sim_out);
                write_vehicle_table(result, fs::path(sim_out) / "vehicles.csv");
            }
        } else if (evolve_cmd->parsed()) {
            const GaRun run = run_ga(evolve_opts);
            write_ga_artifacts(run, evolve_opts.out);
            out << "best program: " << run.evolved.best.genome.decode().literal() << '\n';
            out << "best fitness: " << describe(*run.evolved.best.fitness) << '\n';
            out << "baseline fitness: " << describe(run.baseline.fitness) << '\n';
        } else if (oracle_cmd->parsed()) {
            const Scenario scenario = load_scenario(oracle_scenario);
            const OracleResult oracle = exhaustive_search(scenario, parse_grid(oracle_grid), oracle_yellow,
                                                          std::max<std::size_t>(1, oracle_workers));
            if (oracle_out.empty()) {
                out << render_oracle_table(oracle);
            } else {
                ensure_dir(oracle_out);
                write_oracle_table(oracle, fs::path(oracle_out) / "oracle.tsv");
            }
            out << "best program: " << oracle.best_program.literal() << '\n';
            out << "best fitness: " << describe(oracle.best_fitness) << '\n';
        } else if (export_cmd->parsed()) {
            export_sumo_files(load_scenario(export_scenario), export_out);
            out << "wrote grid.nod.xml, grid.edg.xml, grid.rou.xml to " << export_out << '\n';
        } else if (compare_cmd->parsed()) {
            const GaRun run = run_ga(compare_opts);
            const fs::path dir = compare_opts.out;
            write_ga_artifacts(run, dir);
            const ComparisonReport report = compare_report(run.evolved.log, run.baseline.fitness,
                                                           *run.evolved.best.fitness);
            const std::string text = "best program: " + run.evolved.best.genome.decode().literal() + '\n' +
                                     report.render();
            write_file_atomic(dir / "report.txt", text);
            export_sumo_files(run.scenario, dir / "sumo");
            out << text;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace signalga
