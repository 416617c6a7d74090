#pragma once

#include "signalga/rational.hpp"
#include "signalga/rng.hpp"
#include "signalga/signal_program.hpp"
#include "signalga/traffic_sim.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace signalga {

struct DurationBounds {
    int min = 1;
    int max = 1;

    bool contains(int d) const noexcept { return d >= min && d <= max; }
    friend bool operator==(const DurationBounds&, const DurationBounds&) = default;
};

/// Chromosome: a signal program plus per-phase duration bounds and a mask of
/// the phases the operators may touch.
struct Genome {
    std::vector<Phase> phases;
    std::vector<DurationBounds> bounds;
    std::vector<bool> mutable_mask;

    /// Phases showing any G become mutable with `green_bounds`; the rest are
    /// pinned to their current duration.
    static Genome from_program(const SignalProgram& program, DurationBounds green_bounds);

    SignalProgram decode() const { return SignalProgram(phases); }
    std::size_t size() const noexcept { return phases.size(); }

    /// Same phase count, bounds and mask.
    bool same_shape(const Genome& other) const noexcept {
        return bounds == other.bounds && mutable_mask == other.mutable_mask;
    }

    /// Durations inside bounds and the decoded program validates.
    bool valid(const ConflictMatrix& conflicts = ConflictMatrix::standard()) const;

    friend bool operator==(const Genome&, const Genome&) = default;
};

struct Individual {
    Genome genome;
    std::optional<Fitness> fitness;  // nullopt == unevaluated
};

struct Populace {
    std::vector<Individual> members;
};

enum class MutationMode { Duration, String };

struct GaConfig {
    std::size_t population_size = 20;
    std::size_t generations = 200;
    std::size_t tournament_size = 2;  // fixed; other values are rejected
    double crossover_prob = 0.9;
    double mutation_prob = 0.2;
    int max_duration_delta = 5;
    std::size_t elitism_count = 1;
    MutationMode mode = MutationMode::Duration;
    std::uint64_t seed = 0;
    std::size_t workers = 1;  // concurrent fitness evaluations per generation

    /// Throws ValidationError.
    void validate() const;
};

struct GenerationRecord {
    std::size_t generation = 0;
    Fitness best_fitness;
    Rational mean_makespan;
    std::string best_program;  // literal text form
};

struct EvolutionLog {
    std::vector<GenerationRecord> generations;
};

struct EvolutionResult {
    Individual best;
    EvolutionLog log;
};

/// Location of a single STRING-mode character flip, so repair can undo it.
struct FlipSite {
    std::size_t phase = 0;
    Movement movement = Movement::NS;
    Light original = Light::Red;
};

/// Member 0 is the template; the others redraw every mutable duration
/// uniformly within bounds (phase order, one draw per mutable phase).
/// Throws InvalidTemplate.
Populace seed_population(const GaConfig& config, const Genome& tmpl, Rng& rng);

/// Pairwise tournament over two distinct uniformly drawn members. The better
/// fitness wins; ties go to the lower member index. Throws Unevaluated.
std::size_t select_parent_index(const Populace& populace, Rng& rng);
const Individual& select_parent(const Populace& populace, Rng& rng);

/// a[0..cut) ++ b[cut..K). Throws ShapeMismatch, or std::out_of_range for cut > K.
Genome splice(const Genome& a, const Genome& b, std::size_t cut);

/// Adds `delta` to one phase duration, clamped to that phase's bounds.
Genome apply_duration_delta(const Genome& g, std::size_t phase, int delta);

/// Single-point crossover a[0..cut) ++ b[cut..K). Always draws the crossover
/// coin; draws the cut only when the coin succeeds and K >= 2. Throws ShapeMismatch.
Genome crossover(const Genome& a, const Genome& b, double crossover_prob, Rng& rng);

/// With probability mutation_prob, tweaks one mutable duration by a nonzero
/// delta (clamped to bounds) or, in STRING mode with even odds, flips one
/// G/r character of a mutable phase and repairs. An irreparable flip is
/// discarded. The result is always valid if the input is.
Genome mutate(const Genome& g, const GaConfig& config, Rng& rng,
              const ConflictMatrix& conflicts = ConflictMatrix::standard());

/// Local fixes for an invalid genome: undo `last_flip` if it creates a
/// conflict, and insert y into the following mutable phase for a bare G->r
/// step (undoing the flip when that phase is pinned). Valid input is returned
/// unchanged. Throws IrreparableGenome when no local fix validates.
Genome repair(const Genome& g, const ConflictMatrix& conflicts, std::optional<FlipSite> last_flip = std::nullopt);

/// Called for every genome simulated during evolve, in member order.
using EvaluationObserver = std::function<void(const Genome&, const Fitness&)>;

/// Generational GA with elitism. One Rng seeded with config.seed is consumed
/// in a fixed order: seeding, then per offspring slot the two tournaments,
/// the crossover coin (+cut), and the mutation coin (+kind, site, delta).
/// Fitness evaluation consumes no randomness and may run on several workers.
EvolutionResult evolve(const GaConfig& config, const Scenario& scenario, const Genome& tmpl,
                       const EvaluationObserver& observer = {},
                       const ConflictMatrix& conflicts = ConflictMatrix::standard());

}  // namespace signalga
