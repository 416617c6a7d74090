#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace signalga {

/// The four through movements of the intersection, in canonical word order.
enum class Movement : std::uint8_t { NS = 0, SN = 1, EW = 2, WE = 3 };

inline constexpr std::size_t kMovementCount = 4;
inline constexpr std::array<Movement, kMovementCount> kAllMovements{
    Movement::NS, Movement::SN, Movement::EW, Movement::WE};

std::string_view to_string(Movement m) noexcept;
std::optional<Movement> parse_movement(std::string_view name) noexcept;
constexpr std::size_t index_of(Movement m) noexcept { return static_cast<std::size_t>(m); }

enum class Light : char { Green = 'G', Yellow = 'y', Red = 'r' };

/// One signal word: a light per movement in canonical order.
class SignalState {
public:
    SignalState() { lights_.fill(Light::Red); }
    explicit SignalState(std::array<Light, kMovementCount> lights) : lights_(lights) {}

    /// Parses a 4-character word over {G, y, r}; throws ParseError otherwise.
    static SignalState parse(std::string_view word);

    Light operator[](Movement m) const noexcept { return lights_[index_of(m)]; }
    Light& operator[](Movement m) noexcept { return lights_[index_of(m)]; }

    std::string str() const;

    friend bool operator==(const SignalState&, const SignalState&) = default;

private:
    std::array<Light, kMovementCount> lights_;
};

struct Phase {
    SignalState state;
    int duration = 1;

    friend bool operator==(const Phase&, const Phase&) = default;
};

/// Cyclic phase sequence starting at simulation time 0; the evolvable
/// "scheduling string". Construction does not validate; see validate_program.
class SignalProgram {
public:
    SignalProgram() = default;
    explicit SignalProgram(std::vector<Phase> phases) : phases_(std::move(phases)) {}

    /// Parses the literal form `GGrr:30;yyrr:3;...`. Whitespace is rejected.
    static SignalProgram parse(std::string_view literal);

    const std::vector<Phase>& phases() const noexcept { return phases_; }
    std::size_t size() const noexcept { return phases_.size(); }
    bool empty() const noexcept { return phases_.empty(); }

    std::string literal() const;

    friend bool operator==(const SignalProgram&, const SignalProgram&) = default;

private:
    std::vector<Phase> phases_;
};

/// Symmetric movement conflict relation.
class ConflictMatrix {
public:
    /// All-compatible matrix.
    ConflictMatrix() = default;

    /// The 1x1 intersection: opposing through movements share a green, every
    /// north-south/east-west pair conflicts.
    static ConflictMatrix standard();

    bool conflicts(Movement a, Movement b) const noexcept {
        return table_[index_of(a)][index_of(b)];
    }
    void set_conflict(Movement a, Movement b, bool value);

private:
    std::array<std::array<bool, kMovementCount>, kMovementCount> table_{};
};

enum class Violation { None, ConflictingGreens, MissingYellow, NonPositiveDuration, EmptyProgram };

std::string_view to_string(Violation v) noexcept;

struct ValidationResult {
    Violation violation = Violation::None;
    std::size_t phase = 0;                 // offending phase (first phase of a transition)
    std::optional<Movement> movement;      // offending movement where one applies

    bool valid() const noexcept { return violation == Violation::None; }
    explicit operator bool() const noexcept { return valid(); }
    std::string message() const;
};

/// Sum of durations. Throws EmptyProgram.
std::int64_t cycle_length(const SignalProgram& program);

/// State of the phase containing t mod cycle_length, phases being half-open
/// intervals. Throws EmptyProgram, or InvalidProgram if the cycle is not positive.
SignalState state_at(const SignalProgram& program, std::int64_t t);

/// Scans phases in order. For each phase i it checks, in this order:
/// conflicting non-red lights in phase i, a direct G->r step from phase i to
/// phase i+1 (cyclically), then duration(i) >= 1. The first hit is returned.
ValidationResult validate_program(const SignalProgram& program, const ConflictMatrix& conflicts);

/// Throws InvalidProgram carrying the validation message when the program is invalid.
void require_valid(const SignalProgram& program, const ConflictMatrix& conflicts);

}  // namespace signalga
