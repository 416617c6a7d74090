#include "signalga/traffic_sim.hpp"

#include "signalga/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace signalga {

void validate_scenario(const Scenario& scenario) {
    if (scenario.horizon < 1) throw InvalidScenario("horizon must be >= 1");
    if (scenario.startup_lost < 0) throw InvalidScenario("startup_lost must be >= 0");
    if (scenario.cross_time < 1) throw InvalidScenario("cross_time must be >= 1");
    for (std::size_t i = 0; i < scenario.vehicles.size(); ++i) {
        const Vehicle& v = scenario.vehicles[i];
        if (v.id != static_cast<int>(i) + 1) {
            throw InvalidScenario("vehicle ids must be contiguous from 1 (position " + std::to_string(i) + ")");
        }
        if (v.entrance_time < 0 || v.entrance_time >= scenario.horizon) {
            throw InvalidScenario("vehicle " + std::to_string(v.id) + " entrance time " +
                                  std::to_string(v.entrance_time) + " outside [0, horizon)");
        }
        if (i > 0 && scenario.vehicles[i - 1].entrance_time > v.entrance_time) {
            throw InvalidScenario("vehicles are not sorted by entrance time at id " + std::to_string(v.id));
        }
    }
}

Scenario make_scenario(std::vector<std::pair<Movement, std::int64_t>> arrivals, std::int64_t horizon,
                       std::int64_t startup_lost, std::int64_t cross_time) {
    std::stable_sort(arrivals.begin(), arrivals.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    Scenario s;
    s.horizon = horizon;
    s.startup_lost = startup_lost;
    s.cross_time = cross_time;
    s.vehicles.reserve(arrivals.size());
    int id = 1;
    for (const auto& [movement, entrance] : arrivals) s.vehicles.push_back({id++, movement, entrance});
    return s;
}

Ordering better(const Fitness& a, const Fitness& b) noexcept {
    const auto c = a <=> b;
    if (c < 0) return Ordering::ABetter;
    if (c > 0) return Ordering::BBetter;
    return Ordering::Tie;
}

Fitness fitness_of(std::span<const VehicleOutcome> outcomes) {
    Fitness f;
    std::int64_t served = 0;
    std::int64_t total = 0;
    for (const VehicleOutcome& o : outcomes) {
        if (!o.served()) {
            ++f.unserved;
            continue;
        }
        ++served;
        total += *o.departure_time - o.entrance_time;
        f.makespan = std::max(f.makespan, *o.departure_time);
    }
    if (served > 0) f.mean_total = Rational(total, served);
    return f;
}

SimResult simulate(const Scenario& scenario, const SignalProgram& program, const ConflictMatrix& conflicts) {
    require_valid(program, conflicts);
    validate_scenario(scenario);

    // Expand one cycle into per-offset green flags so each tick is a lookup.
    // Offsets at or beyond the horizon are never read.
    const std::int64_t cycle = cycle_length(program);
    const std::size_t expanded = static_cast<std::size_t>(std::min(cycle, scenario.horizon));
    std::vector<std::array<bool, kMovementCount>> green(expanded);
    {
        std::size_t offset = 0;
        for (const Phase& p : program.phases()) {
            for (int d = 0; d < p.duration && offset < expanded; ++d, ++offset) {
                for (Movement m : kAllMovements) green[offset][index_of(m)] = p.state[m] == Light::Green;
            }
        }
    }

    SimResult result;
    result.outcomes.reserve(scenario.vehicles.size());
    for (const Vehicle& v : scenario.vehicles) result.outcomes.push_back({v.id, v.entrance_time, std::nullopt});

    std::array<std::deque<std::size_t>, kMovementCount> queues;
    std::array<std::int64_t, kMovementCount> run_start{};
    std::size_t next_arrival = 0;
    const auto& vehicles = scenario.vehicles;

    for (std::int64_t t = 0; t < scenario.horizon; ++t) {
        while (next_arrival < vehicles.size() && vehicles[next_arrival].entrance_time == t) {
            queues[index_of(vehicles[next_arrival].movement)].push_back(next_arrival);
            ++next_arrival;
        }
        const auto& now = green[static_cast<std::size_t>(t % cycle)];
        for (std::size_t m = 0; m < kMovementCount; ++m) {
            if (!now[m]) continue;
            if (t == 0 || !green[static_cast<std::size_t>((t - 1) % cycle)][m]) run_start[m] = t;
            if (t < run_start[m] + scenario.startup_lost || queues[m].empty()) continue;
            const std::size_t idx = queues[m].front();
            queues[m].pop_front();
            const std::int64_t departure = t + scenario.cross_time;
            if (departure <= scenario.horizon) result.outcomes[idx].departure_time = departure;
        }
    }

    result.fitness = fitness_of(result.outcomes);
    return result;
}

}  // namespace signalga
