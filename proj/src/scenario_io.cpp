#include "signalga/scenario_io.hpp"

#include "signalga/errors.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace signalga {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::int64_t to_int(std::string_view token, std::size_t line, std::string_view field) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string(field) + " '" + std::string(token) + "' is not an integer");
    }
    return v;
}

Movement to_movement(std::string_view token, std::size_t line) {
    if (auto m = parse_movement(token)) return *m;
    throw ParseError(line, "unknown movement '" + std::string(token) + "' (expected NS, SN, EW or WE)");
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t line) {
    if (tokens.size() != n) {
        throw ParseError(line, "directive '" + std::string(tokens[0]) + "' expects " + std::to_string(n - 1) +
                                   " argument(s), got " + std::to_string(tokens.size() - 1));
    }
}

struct Arrival {
    Movement movement;
    std::int64_t entrance;
    std::size_t line;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
    std::optional<std::int64_t> horizon;
    std::int64_t startup_lost = 2;
    std::int64_t cross_time = 3;
    std::vector<Arrival> arrivals;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        const std::string_view directive = tokens[0];

        if (directive == "horizon") {
            expect_arity(tokens, 2, line_no);
            horizon = to_int(tokens[1], line_no, "horizon");
            if (*horizon < 1) throw ValidationError("line " + std::to_string(line_no) + ": horizon must be >= 1");
        } else if (directive == "startup_lost") {
            expect_arity(tokens, 2, line_no);
            startup_lost = to_int(tokens[1], line_no, "startup_lost");
            if (startup_lost < 0) {
                throw ValidationError("line " + std::to_string(line_no) + ": startup_lost must be >= 0");
            }
        } else if (directive == "cross_time") {
            expect_arity(tokens, 2, line_no);
            cross_time = to_int(tokens[1], line_no, "cross_time");
            if (cross_time < 1) throw ValidationError("line " + std::to_string(line_no) + ": cross_time must be >= 1");
        } else if (directive == "vehicle") {
            expect_arity(tokens, 3, line_no);
            const Movement m = to_movement(tokens[1], line_no);
            const std::int64_t entrance = to_int(tokens[2], line_no, "entrance time");
            if (entrance < 0) throw ValidationError("line " + std::to_string(line_no) + ": entrance time must be >= 0");
            arrivals.push_back({m, entrance, line_no});
        } else if (directive == "demand") {
            expect_arity(tokens, 5, line_no);
            const Movement m = to_movement(tokens[1], line_no);
            const std::int64_t rate = to_int(tokens[2], line_no, "rate");
            const std::int64_t start = to_int(tokens[3], line_no, "start");
            const std::int64_t end = to_int(tokens[4], line_no, "end");
            if (rate < 1) throw ValidationError("line " + std::to_string(line_no) + ": demand rate must be >= 1");
            if (start < 0) throw ValidationError("line " + std::to_string(line_no) + ": demand start must be >= 0");
            for (std::int64_t k = 0;; ++k) {
                // round(60k / rate), halves away from zero
                const std::int64_t at = start + (120 * k + rate) / (2 * rate);
                if (at >= end) break;
                arrivals.push_back({m, at, line_no});
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
        }
    }

    if (!horizon) throw ValidationError("scenario has no 'horizon' directive");
    for (const Arrival& a : arrivals) {
        if (a.entrance >= *horizon) {
            throw ValidationError("line " + std::to_string(a.line) + ": entrance time " + std::to_string(a.entrance) +
                                  " is not before the horizon " + std::to_string(*horizon));
        }
    }

    std::vector<std::pair<Movement, std::int64_t>> pairs;
    pairs.reserve(arrivals.size());
    for (const Arrival& a : arrivals) pairs.emplace_back(a.movement, a.entrance);
    return make_scenario(std::move(pairs), *horizon, startup_lost, cross_time);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading scenario file '" + path.string() + "'");
    return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& scenario) {
    std::ostringstream os;
    os << "horizon " << scenario.horizon << '\n';
    os << "startup_lost " << scenario.startup_lost << '\n';
    os << "cross_time " << scenario.cross_time << '\n';
    for (const Vehicle& v : scenario.vehicles) os << "vehicle " << to_string(v.movement) << ' ' << v.entrance_time << '\n';
    return os.str();
}

}  // namespace signalga
