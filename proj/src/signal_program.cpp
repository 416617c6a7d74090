#include "signalga/signal_program.hpp"

#include "signalga/errors.hpp"

#include <charconv>

namespace signalga {

std::string_view to_string(Movement m) noexcept {
    switch (m) {
        case Movement::NS: return "NS";
        case Movement::SN: return "SN";
        case Movement::EW: return "EW";
        case Movement::WE: return "WE";
    }
    return "?";
}

std::optional<Movement> parse_movement(std::string_view name) noexcept {
    for (Movement m : kAllMovements) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

SignalState SignalState::parse(std::string_view word) {
    if (word.size() != kMovementCount) {
        throw ParseError(0, "signal state '" + std::string(word) + "' must have exactly 4 characters");
    }
    std::array<Light, kMovementCount> lights{};
    for (std::size_t i = 0; i < kMovementCount; ++i) {
        switch (word[i]) {
            case 'G': lights[i] = Light::Green; break;
            case 'y': lights[i] = Light::Yellow; break;
            case 'r': lights[i] = Light::Red; break;
            default:
                throw ParseError(0, "signal state '" + std::string(word) + "' has invalid character '" +
                                        std::string(1, word[i]) + "' (expected G, y or r)");
        }
    }
    return SignalState(lights);
}

std::string SignalState::str() const {
    std::string out(kMovementCount, 'r');
    for (std::size_t i = 0; i < kMovementCount; ++i) out[i] = static_cast<char>(lights_[i]);
    return out;
}

SignalProgram SignalProgram::parse(std::string_view literal) {
    std::vector<Phase> phases;
    if (literal.empty()) return SignalProgram{};
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = literal.find(';', pos);
        const std::string_view token = literal.substr(pos, end == std::string_view::npos ? end : end - pos);
        const std::size_t colon = token.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(0, "program token '" + std::string(token) + "' is not STATE:DURATION");
        }
        Phase phase;
        phase.state = SignalState::parse(token.substr(0, colon));
        const std::string_view digits = token.substr(colon + 1);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), phase.duration);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ParseError(0, "program token '" + std::string(token) + "' has a non-integer duration");
        }
        phases.push_back(phase);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return SignalProgram(std::move(phases));
}

std::string SignalProgram::literal() const {
    std::string out;
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        if (i > 0) out += ';';
        out += phases_[i].state.str();
        out += ':';
        out += std::to_string(phases_[i].duration);
    }
    return out;
}

ConflictMatrix ConflictMatrix::standard() {
    ConflictMatrix m;
    for (Movement a : {Movement::NS, Movement::SN}) {
        for (Movement b : {Movement::EW, Movement::WE}) m.set_conflict(a, b, true);
    }
    return m;
}

void ConflictMatrix::set_conflict(Movement a, Movement b, bool value) {
    table_[index_of(a)][index_of(b)] = value;
    table_[index_of(b)][index_of(a)] = value;
}

std::string_view to_string(Violation v) noexcept {
    switch (v) {
        case Violation::None: return "Valid";
        case Violation::ConflictingGreens: return "ConflictingGreens";
        case Violation::MissingYellow: return "MissingYellow";
        case Violation::NonPositiveDuration: return "NonPositiveDuration";
        case Violation::EmptyProgram: return "EmptyProgram";
    }
    return "?";
}

std::string ValidationResult::message() const {
    std::string out(to_string(violation));
    if (violation == Violation::None || violation == Violation::EmptyProgram) return out;
    out += " at phase " + std::to_string(phase);
    if (movement) out += " (movement " + std::string(to_string(*movement)) + ")";
    return out;
}

std::int64_t cycle_length(const SignalProgram& program) {
    if (program.empty()) throw EmptyProgram();
    std::int64_t total = 0;
    for (const Phase& p : program.phases()) total += p.duration;
    return total;
}

SignalState state_at(const SignalProgram& program, std::int64_t t) {
    const std::int64_t cycle = cycle_length(program);
    if (cycle < 1) throw InvalidProgram("signal program cycle length must be positive");
    if (t < 0) throw std::invalid_argument("state_at: negative time");
    std::int64_t offset = t % cycle;
    for (const Phase& p : program.phases()) {
        if (p.duration > 0 && offset < p.duration) return p.state;
        offset -= p.duration > 0 ? p.duration : 0;
    }
    // Unreachable for positive cycles with only positive durations; with
    // non-positive entries fall back to the last phase of positive length.
    for (auto it = program.phases().rbegin(); it != program.phases().rend(); ++it) {
        if (it->duration > 0) return it->state;
    }
    throw InvalidProgram("signal program has no phase of positive duration");
}

ValidationResult validate_program(const SignalProgram& program, const ConflictMatrix& conflicts) {
    if (program.empty()) return {Violation::EmptyProgram, 0, std::nullopt};
    const auto& phases = program.phases();
    const std::size_t k = phases.size();
    for (std::size_t i = 0; i < k; ++i) {
        const SignalState& s = phases[i].state;
        for (std::size_t a = 0; a < kMovementCount; ++a) {
            for (std::size_t b = a + 1; b < kMovementCount; ++b) {
                const Movement ma = kAllMovements[a];
                const Movement mb = kAllMovements[b];
                if (conflicts.conflicts(ma, mb) && s[ma] != Light::Red && s[mb] != Light::Red) {
                    return {Violation::ConflictingGreens, i, ma};
                }
            }
        }
        const SignalState& next = phases[(i + 1) % k].state;
        for (Movement m : kAllMovements) {
            if (s[m] == Light::Green && next[m] == Light::Red) return {Violation::MissingYellow, i, m};
        }
        if (phases[i].duration < 1) return {Violation::NonPositiveDuration, i, std::nullopt};
    }
    return {};
}

void require_valid(const SignalProgram& program, const ConflictMatrix& conflicts) {
    const ValidationResult r = validate_program(program, conflicts);
    if (!r) throw InvalidProgram("invalid signal program: " + r.message());
}

}  // namespace signalga
