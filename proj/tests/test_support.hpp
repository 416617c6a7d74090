#pragma once

// Seeded generators and an independent reference simulator used by the
// property tests. The reference simulator recomputes everything from
// state_at, walking back tick by tick to find the green-run start, and keeps
// queues as plain vectors; it shares no code with simulate().

#include "signalga/signal_program.hpp"
#include "signalga/traffic_sim.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace signalga::testing {

inline SignalProgram default_template() { return SignalProgram::parse("GGrr:30;yyrr:3;rrGG:30;rryy:3"); }

inline Scenario random_scenario(std::mt19937_64& gen, std::size_t max_vehicles = 200) {
    std::uniform_int_distribution<std::int64_t> horizon_dist(50, 1500);
    const std::int64_t horizon = horizon_dist(gen);
    std::uniform_int_distribution<std::size_t> count_dist(0, max_vehicles);
    std::uniform_int_distribution<std::int64_t> entrance_dist(0, horizon - 1);
    std::uniform_int_distribution<int> move_dist(0, 3);
    std::uniform_int_distribution<std::int64_t> lost_dist(0, 4);
    std::uniform_int_distribution<std::int64_t> cross_dist(1, 6);
    std::vector<std::pair<Movement, std::int64_t>> arrivals;
    const std::size_t n = count_dist(gen);
    for (std::size_t i = 0; i < n; ++i) {
        arrivals.emplace_back(kAllMovements[static_cast<std::size_t>(move_dist(gen))], entrance_dist(gen));
    }
    return make_scenario(std::move(arrivals), horizon, lost_dist(gen), cross_dist(gen));
}

/// Rejection-sampled valid program with 1..6 phases of 1..40 s.
inline SignalProgram random_valid_program(std::mt19937_64& gen) {
    static constexpr char kLights[] = {'G', 'y', 'r'};
    std::uniform_int_distribution<int> k_dist(1, 6);
    std::uniform_int_distribution<int> light_dist(0, 2);
    std::uniform_int_distribution<int> dur_dist(1, 40);
    const ConflictMatrix conflicts = ConflictMatrix::standard();
    while (true) {
        std::vector<Phase> phases(static_cast<std::size_t>(k_dist(gen)));
        for (Phase& p : phases) {
            std::string word(4, 'r');
            for (char& c : word) c = kLights[light_dist(gen)];
            p.state = SignalState::parse(word);
            p.duration = dur_dist(gen);
        }
        SignalProgram program(std::move(phases));
        if (validate_program(program, conflicts).valid()) return program;
    }
}

/// Straight transcription of the tick rules.
inline std::vector<std::optional<std::int64_t>> reference_departures(const Scenario& s, const SignalProgram& p) {
    std::vector<std::optional<std::int64_t>> departures(s.vehicles.size());
    std::vector<std::vector<std::size_t>> queues(kMovementCount);
    std::vector<std::size_t> heads(kMovementCount, 0);
    for (std::int64_t t = 0; t < s.horizon; ++t) {
        for (std::size_t i = 0; i < s.vehicles.size(); ++i) {
            if (s.vehicles[i].entrance_time == t) queues[index_of(s.vehicles[i].movement)].push_back(i);
        }
        for (Movement m : kAllMovements) {
            if (state_at(p, t)[m] != Light::Green) continue;
            std::int64_t g0 = t;
            while (g0 > 0 && state_at(p, g0 - 1)[m] == Light::Green) --g0;
            if (t < g0 + s.startup_lost) continue;
            auto& q = queues[index_of(m)];
            auto& head = heads[index_of(m)];
            if (head == q.size()) continue;
            const std::int64_t departure = t + s.cross_time;
            if (departure <= s.horizon) departures[q[head]] = departure;
            ++head;
        }
    }
    return departures;
}

}  // namespace signalga::testing
