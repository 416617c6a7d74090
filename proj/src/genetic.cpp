#include "signalga/genetic.hpp"

#include "signalga/errors.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace signalga {

Genome Genome::from_program(const SignalProgram& program, DurationBounds green_bounds) {
    Genome g;
    g.phases = program.phases();
    for (const Phase& p : g.phases) {
        bool has_green = false;
        for (Movement m : kAllMovements) has_green = has_green || p.state[m] == Light::Green;
        g.mutable_mask.push_back(has_green);
        g.bounds.push_back(has_green ? green_bounds : DurationBounds{p.duration, p.duration});
    }
    return g;
}

bool Genome::valid(const ConflictMatrix& conflicts) const {
    if (bounds.size() != phases.size() || mutable_mask.size() != phases.size()) return false;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (!bounds[i].contains(phases[i].duration)) return false;
    }
    return validate_program(decode(), conflicts).valid();
}

void GaConfig::validate() const {
    if (population_size < 2) throw ValidationError("population size must be >= 2");
    if (tournament_size != 2) throw ValidationError("tournament size is fixed at 2");
    if (elitism_count < 1 || elitism_count >= population_size) {
        throw ValidationError("elitism count must satisfy 1 <= elitism < population size");
    }
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
        throw ValidationError("crossover probability must be in [0,1]");
    }
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
        throw ValidationError("mutation probability must be in [0,1]");
    }
    if (max_duration_delta < 0) throw ValidationError("max duration delta must be >= 0");
    if (workers < 1) throw ValidationError("workers must be >= 1");
}

namespace {

std::vector<std::size_t> mutable_phases(const Genome& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.mutable_mask[i]) out.push_back(i);
    }
    return out;
}

bool fitter(const Individual& a, std::size_t ia, const Individual& b, std::size_t ib) {
    const Ordering o = better(*a.fitness, *b.fitness);
    if (o == Ordering::Tie) return ia < ib;
    return o == Ordering::ABetter;
}

/// Member indices sorted best-first, ties by index.
std::vector<std::size_t> ranking(const Populace& pop) {
    std::vector<std::size_t> order(pop.members.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fitter(pop.members[a], a, pop.members[b], b);
    });
    return order;
}

Light flipped(Light l) { return l == Light::Green ? Light::Red : Light::Green; }

}  // namespace

Populace seed_population(const GaConfig& config, const Genome& tmpl, Rng& rng) {
    if (tmpl.phases.empty()) throw InvalidTemplate("template genome has no phases");
    if (!tmpl.valid()) {
        throw InvalidTemplate("template genome is invalid: " +
                              validate_program(tmpl.decode(), ConflictMatrix::standard()).message() +
                              " or a duration lies outside its bounds");
    }
    Populace pop;
    pop.members.reserve(config.population_size);
    pop.members.push_back({tmpl, std::nullopt});
    for (std::size_t n = 1; n < config.population_size; ++n) {
        Genome g = tmpl;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g.mutable_mask[i]) continue;
            g.phases[i].duration = static_cast<int>(rng.uniform_int(g.bounds[i].min, g.bounds[i].max));
        }
        pop.members.push_back({std::move(g), std::nullopt});
    }
    return pop;
}

std::size_t select_parent_index(const Populace& populace, Rng& rng) {
    const std::size_t n = populace.members.size();
    if (n < 2) throw ValidationError("tournament needs at least two members");
    for (const Individual& ind : populace.members) {
        if (!ind.fitness) throw Unevaluated();
    }
    const std::size_t first = rng.index(n);
    std::size_t second = rng.index(n - 1);
    if (second >= first) ++second;
    return fitter(populace.members[first], first, populace.members[second], second) ? first : second;
}

const Individual& select_parent(const Populace& populace, Rng& rng) {
    return populace.members[select_parent_index(populace, rng)];
}

Genome splice(const Genome& a, const Genome& b, std::size_t cut) {
    if (a.size() != b.size() || !a.same_shape(b)) {
        throw ShapeMismatch("crossover parents differ in phase count, bounds or mask");
    }
    if (cut > a.size()) throw std::out_of_range("crossover cut beyond phase count");
    Genome child = a;
    std::copy(b.phases.begin() + static_cast<std::ptrdiff_t>(cut), b.phases.end(),
              child.phases.begin() + static_cast<std::ptrdiff_t>(cut));
    return child;
}

Genome apply_duration_delta(const Genome& g, std::size_t phase, int delta) {
    Genome out = g;
    const DurationBounds& b = out.bounds.at(phase);
    out.phases[phase].duration = std::clamp(out.phases[phase].duration + delta, b.min, b.max);
    return out;
}

Genome crossover(const Genome& a, const Genome& b, double crossover_prob, Rng& rng) {
    if (a.size() != b.size() || !a.same_shape(b)) {
        throw ShapeMismatch("crossover parents differ in phase count, bounds or mask");
    }
    if (!rng.bernoulli(crossover_prob) || a.size() < 2) return a;
    const auto cut = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(a.size()) - 1));
    return splice(a, b, cut);
}

Genome repair(const Genome& g, const ConflictMatrix& conflicts, std::optional<FlipSite> last_flip) {
    if (validate_program(g.decode(), conflicts).valid()) return g;

    Genome h = g;
    bool reverted = false;
    const auto revert = [&] {
        h = g;
        h.phases[last_flip->phase].state[last_flip->movement] = last_flip->original;
        reverted = true;
    };

    // Each pass either writes one r->y or reverts once, so this terminates.
    const std::size_t max_steps = h.size() * kMovementCount + 2;
    for (std::size_t step = 0; step <= max_steps; ++step) {
        const ValidationResult r = validate_program(h.decode(), conflicts);
        if (r.valid()) return h;
        const bool can_revert = last_flip && !reverted && last_flip->phase < h.size();
        if (r.violation == Violation::MissingYellow) {
            const std::size_t next = (r.phase + 1) % h.size();
            Light& light = h.phases[next].state[*r.movement];
            if (h.mutable_mask[next] && light == Light::Red) {
                light = Light::Yellow;
                continue;
            }
        }
        if ((r.violation == Violation::MissingYellow || r.violation == Violation::ConflictingGreens) && can_revert) {
            revert();
            continue;
        }
        break;
    }
    throw IrreparableGenome("genome cannot be repaired locally");
}

Genome mutate(const Genome& g, const GaConfig& config, Rng& rng, const ConflictMatrix& conflicts) {
    if (!rng.bernoulli(config.mutation_prob)) return g;
    const std::vector<std::size_t> sites = mutable_phases(g);
    if (sites.empty()) return g;

    const bool flip = config.mode == MutationMode::String && rng.bernoulli(0.5);
    const std::size_t phase = sites[rng.index(sites.size())];

    if (!flip) {
        if (config.max_duration_delta == 0) return g;
        const int d = config.max_duration_delta;
        auto delta = static_cast<int>(rng.uniform_int(0, 2 * static_cast<std::int64_t>(d) - 1)) - d;
        if (delta >= 0) ++delta;  // skip zero: [-d..-1] U [1..d]
        return apply_duration_delta(g, phase, delta);
    }

    Genome out = g;

    std::vector<Movement> candidates;
    for (Movement m : kAllMovements) {
        const Light l = out.phases[phase].state[m];
        if (l == Light::Green || l == Light::Red) candidates.push_back(m);
    }
    if (candidates.empty()) return out;
    const Movement m = candidates[rng.index(candidates.size())];
    const FlipSite site{phase, m, out.phases[phase].state[m]};
    out.phases[phase].state[m] = flipped(site.original);
    try {
        return repair(out, conflicts, site);
    } catch (const IrreparableGenome&) {
        return g;
    }
}

namespace {

void evaluate(Populace& pop, const Scenario& scenario, const ConflictMatrix& conflicts, std::size_t workers,
              const EvaluationObserver& observer) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        if (!pop.members[i].fitness) pending.push_back(i);
    }
    std::vector<Fitness> scores(pending.size());

    const auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t k = begin; k < pending.size(); k += stride) {
            scores[k] = simulate(scenario, pop.members[pending[k]].genome.decode(), conflicts).fitness;
        }
    };

    const std::size_t n_threads = std::min(workers, pending.size());
    if (n_threads <= 1) {
        run(0, 1);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> threads;
            for (std::size_t w = 0; w < n_threads; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        run(w, n_threads);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    // Written back by member index, never by completion order.
    for (std::size_t k = 0; k < pending.size(); ++k) {
        Individual& ind = pop.members[pending[k]];
        ind.fitness = scores[k];
        if (observer) observer(ind.genome, scores[k]);
    }
}

GenerationRecord record(const Populace& pop, std::size_t generation) {
    const std::size_t best = ranking(pop).front();
    std::int64_t makespan_sum = 0;
    for (const Individual& ind : pop.members) makespan_sum += ind.fitness->makespan;
    return {generation, *pop.members[best].fitness,
            Rational(makespan_sum, static_cast<std::int64_t>(pop.members.size())),
            pop.members[best].genome.decode().literal()};
}

}  // namespace

EvolutionResult evolve(const GaConfig& config, const Scenario& scenario, const Genome& tmpl,
                       const EvaluationObserver& observer, const ConflictMatrix& conflicts) {
    config.validate();
    validate_scenario(scenario);

    Rng rng(config.seed);
    Populace pop = seed_population(config, tmpl, rng);
    evaluate(pop, scenario, conflicts, config.workers, observer);

    EvolutionResult result;
    result.log.generations.push_back(record(pop, 0));
    result.best = pop.members[ranking(pop).front()];

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        Populace next;
        next.members.reserve(config.population_size);
        const std::vector<std::size_t> order = ranking(pop);
        for (std::size_t e = 0; e < config.elitism_count; ++e) next.members.push_back(pop.members[order[e]]);

        while (next.members.size() < config.population_size) {
            const Individual& mother = select_parent(pop, rng);
            const Individual& father = select_parent(pop, rng);
            Genome child = crossover(mother.genome, father.genome, config.crossover_prob, rng);
            if (!child.valid(conflicts)) {
                // Only reachable in STRING mode, where parents may carry different words.
                try {
                    child = repair(child, conflicts);
                } catch (const IrreparableGenome&) {
                    child = mother.genome;
                }
            }
            next.members.push_back({mutate(child, config, rng, conflicts), std::nullopt});
        }

        pop = std::move(next);
        evaluate(pop, scenario, conflicts, config.workers, observer);
        result.log.generations.push_back(record(pop, gen));

        const Individual& gen_best = pop.members[ranking(pop).front()];
        if (better(*gen_best.fitness, *result.best.fitness) == Ordering::ABetter) result.best = gen_best;
    }
    return result;
}

}  // namespace signalga
