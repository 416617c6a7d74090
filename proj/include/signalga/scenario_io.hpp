#pragma once

#include "signalga/traffic_sim.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace signalga {

/// Line format, one directive per line, `#` starts a comment line:
///
///     horizon <int>
///     startup_lost <int>          (default 2)
///     cross_time <int>            (default 3)
///     vehicle <movement> <entrance_s>
///     demand <movement> <rate_per_min> <start_s> <end_s>
///
/// `demand` expands to arrivals at start + round(60k / rate), k = 0, 1, ...
/// while below end. All arrivals are stable-sorted by entrance time in
/// declaration order and numbered from 1. `horizon` is required.
///
/// Throws ParseError (with line number) or ValidationError.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a scenario file. Throws IoError as well.
Scenario load_scenario(const std::filesystem::path& path);

/// Emits the line format; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace signalga
