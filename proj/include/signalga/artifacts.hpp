#pragma once

#include "signalga/baseline.hpp"
#include "signalga/genetic.hpp"
#include "signalga/traffic_sim.hpp"

#include <filesystem>
#include <string>

namespace signalga {

inline constexpr const char* kVehicleTableHeader = "Car Number,Entrance Time,Departure Time,Total Time";
inline constexpr const char* kGenerationLogHeader =
    "generation,unserved,best_makespan,best_mean,mean_makespan,best_program";
inline constexpr const char* kOracleTableHeader = "g_ns\tg_ew\tunserved\tmakespan\tmean_total";

// Renderers. Rationals are printed with 4 decimals.
std::string render_vehicle_table(const SimResult& result);
std::string render_generation_log(const EvolutionLog& log);
std::string render_plot_data(const EvolutionLog& log, const Fitness& baseline);
std::string render_oracle_table(const OracleResult& oracle);

/// Writes to a sibling temp file then renames over `path`. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

void write_vehicle_table(const SimResult& result, const std::filesystem::path& path);
void write_generation_log(const EvolutionLog& log, const std::filesystem::path& path);
void emit_plot_data(const EvolutionLog& log, const Fitness& baseline, const std::filesystem::path& path);
void write_oracle_table(const OracleResult& oracle, const std::filesystem::path& path);

/// SUMO plain-XML triplet for the 1x1 layout: grid.nod.xml, grid.edg.xml and
/// grid.rou.xml. Creates `dir` if needed.
void export_sumo_files(const Scenario& scenario, const std::filesystem::path& dir);

}  // namespace signalga
