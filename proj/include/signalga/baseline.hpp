#pragma once

#include "signalga/genetic.hpp"
#include "signalga/rational.hpp"
#include "signalga/signal_program.hpp"
#include "signalga/traffic_sim.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace signalga {

/// Fixed-timer ("regular practice") two-phase plan.
struct BaselineSpec {
    int green_ns = 30;
    int green_ew = 30;
    int yellow = 3;
};

/// GGrr:green_ns;yyrr:yellow;rrGG:green_ew;rryy:yellow. Throws ValidationError
/// if a green or the yellow is < 1.
SignalProgram fixed_timer_program(const BaselineSpec& spec);

struct OracleRow {
    int green_ns = 0;
    int green_ew = 0;
    Fitness fitness;
};

struct OracleResult {
    SignalProgram best_program;
    int best_green_ns = 0;
    int best_green_ew = 0;
    Fitness best_fitness;
    std::vector<OracleRow> table;  // g_ns-major, both axes ascending
};

/// Simulates every fixed-timer pair in grid x grid. The lexicographically
/// best fitness wins; ties keep the smaller (g_ns, g_ew).
OracleResult exhaustive_search(const Scenario& scenario, const std::set<int>& grid, int yellow = 3,
                               std::size_t workers = 1);

/// Parses "5..60:5" (inclusive range with step) or "5,10,30". Throws ParseError.
std::set<int> parse_grid(const std::string& text);

/// A fixed-timer template as a genome; greens mutable within `green_bounds`.
Genome baseline_genome(const BaselineSpec& spec, DurationBounds green_bounds = {5, 60});

struct ComparisonReport {
    Fitness baseline_fitness;
    Fitness evolved_fitness;
    Rational improvement_makespan_pct;
    std::optional<Rational> improvement_mean_pct;  // nullopt when baseline mean is 0
    std::size_t generations_run = 0;
    std::int64_t oscillation_amplitude = 0;

    /// Plain-text rendering, stable byte for byte.
    std::string render() const;
};

/// Percentages are (baseline - evolved) / baseline * 100 in exact arithmetic;
/// positive means the evolved program is better. Throws ZeroBaseline.
ComparisonReport compare_report(const EvolutionLog& log, const Fitness& baseline, const Fitness& evolved);

}  // namespace signalga
