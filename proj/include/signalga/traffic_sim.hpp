#pragma once

#include "signalga/rational.hpp"
#include "signalga/signal_program.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace signalga {

struct Vehicle {
    int id = 0;  // 1-based, contiguous, in arrival order
    Movement movement = Movement::NS;
    std::int64_t entrance_time = 0;

    friend bool operator==(const Vehicle&, const Vehicle&) = default;
};

/// Intersection constants plus the arrival schedule. Saturation flow is fixed
/// at one stop-line departure per second per movement.
struct Scenario {
    std::vector<Vehicle> vehicles;  // sorted by (entrance_time, id)
    std::int64_t horizon = 3600;
    std::int64_t startup_lost = 2;
    std::int64_t cross_time = 3;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws InvalidScenario when an invariant is violated.
void validate_scenario(const Scenario& scenario);

/// Builds a scenario from (movement, entrance) pairs: stable-sorts by entrance
/// time and assigns ids 1..n in the resulting order.
Scenario make_scenario(std::vector<std::pair<Movement, std::int64_t>> arrivals, std::int64_t horizon,
                       std::int64_t startup_lost = 2, std::int64_t cross_time = 3);

struct VehicleOutcome {
    int id = 0;
    std::int64_t entrance_time = 0;
    std::optional<std::int64_t> departure_time;  // nullopt == unserved

    bool served() const noexcept { return departure_time.has_value(); }
    std::optional<std::int64_t> total_time() const {
        if (!departure_time) return std::nullopt;
        return *departure_time - entrance_time;
    }

    friend bool operator==(const VehicleOutcome&, const VehicleOutcome&) = default;
};

/// Lexicographic (unserved, makespan, mean_total); lower is better.
struct Fitness {
    std::int64_t unserved = 0;
    std::int64_t makespan = 0;
    Rational mean_total;

    friend bool operator==(const Fitness&, const Fitness&) = default;
    friend std::strong_ordering operator<=>(const Fitness& a, const Fitness& b) {
        if (auto c = a.unserved <=> b.unserved; c != 0) return c;
        if (auto c = a.makespan <=> b.makespan; c != 0) return c;
        return a.mean_total <=> b.mean_total;
    }
};

struct SimResult {
    std::vector<VehicleOutcome> outcomes;  // scenario vehicle order
    Fitness fitness;
};

enum class Ordering { ABetter, BBetter, Tie };

Ordering better(const Fitness& a, const Fitness& b) noexcept;

Fitness fitness_of(std::span<const VehicleOutcome> outcomes);
inline Fitness fitness_of(const SimResult& result) { return fitness_of(result.outcomes); }

/// Runs ticks 0..horizon-1. Each movement holds a FIFO queue; arrivals join
/// before service. A movement showing G is served once its current green run
/// (merged across phase boundaries and the cyclic wrap, clipped at t=0) is at
/// least startup_lost ticks old, one vehicle per tick. A vehicle leaving the
/// stop line at t departs at t + cross_time; departures after the horizon, and
/// vehicles still queued at the horizon, are unserved.
///
/// Throws InvalidProgram or InvalidScenario.
SimResult simulate(const Scenario& scenario, const SignalProgram& program,
                   const ConflictMatrix& conflicts = ConflictMatrix::standard());

}  // namespace signalga
