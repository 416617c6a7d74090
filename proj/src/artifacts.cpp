#include "signalga/artifacts.hpp"

#include "signalga/errors.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace signalga {

namespace fs = std::filesystem;

std::string render_vehicle_table(const SimResult& result) {
    std::ostringstream os;
    os << kVehicleTableHeader << '\n';
    for (const VehicleOutcome& o : result.outcomes) {
        os << o.id << ',' << o.entrance_time << ',';
        if (o.served()) os << *o.departure_time << ',' << *o.total_time();
        else os << ',';
        os << '\n';
    }
    return os.str();
}

std::string render_generation_log(const EvolutionLog& log) {
    std::ostringstream os;
    os << kGenerationLogHeader << '\n';
    for (const GenerationRecord& g : log.generations) {
        os << g.generation << ',' << g.best_fitness.unserved << ',' << g.best_fitness.makespan << ','
           << g.best_fitness.mean_total.to_decimal(4) << ',' << g.mean_makespan.to_decimal(4) << ','
           << g.best_program << '\n';
    }
    return os.str();
}

std::string render_plot_data(const EvolutionLog& log, const Fitness& baseline) {
    std::ostringstream os;
    for (const GenerationRecord& g : log.generations) os << g.generation << '\t' << g.best_fitness.makespan << '\n';
    os << "# baseline_makespan " << baseline.makespan << '\n';
    return os.str();
}

std::string render_oracle_table(const OracleResult& oracle) {
    std::ostringstream os;
    os << kOracleTableHeader << '\n';
    for (const OracleRow& row : oracle.table) {
        os << row.green_ns << '\t' << row.green_ew << '\t' << row.fitness.unserved << '\t' << row.fitness.makespan
           << '\t' << row.fitness.mean_total.to_decimal(4) << '\n';
    }
    return os.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw IoError("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot replace '" + path.string() + "'");
    }
}

void write_vehicle_table(const SimResult& result, const fs::path& path) {
    write_file_atomic(path, render_vehicle_table(result));
}

void write_generation_log(const EvolutionLog& log, const fs::path& path) {
    write_file_atomic(path, render_generation_log(log));
}

void emit_plot_data(const EvolutionLog& log, const Fitness& baseline, const fs::path& path) {
    write_file_atomic(path, render_plot_data(log, baseline));
}

void write_oracle_table(const OracleResult& oracle, const fs::path& path) {
    write_file_atomic(path, render_oracle_table(oracle));
}

namespace {

struct Stub {
    const char* id;
    int x;
    int y;
};

// Approach stubs 200 m from the centre node.
constexpr Stub kStubs[] = {{"N", 0, 200}, {"S", 0, -200}, {"E", 200, 0}, {"W", -200, 0}};

// Movement -> (origin stub, destination stub).
const char* origin_of(Movement m) {
    switch (m) {
        case Movement::NS: return "N";
        case Movement::SN: return "S";
        case Movement::EW: return "E";
        case Movement::WE: return "W";
    }
    return "?";
}

const char* destination_of(Movement m) {
    switch (m) {
        case Movement::NS: return "S";
        case Movement::SN: return "N";
        case Movement::EW: return "W";
        case Movement::WE: return "E";
    }
    return "?";
}

}  // namespace

void export_sumo_files(const Scenario& scenario, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir.string() + "'");

    std::ostringstream nod;
    nod << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    nod << "<nodes xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
           "xsi:noNamespaceSchemaLocation=\"http://sumo.dlr.de/xsd/nodes_file.xsd\">\n";
    nod << "    <node id=\"C\" x=\"0.00\" y=\"0.00\" type=\"traffic_light\"/>\n";
    for (const Stub& s : kStubs) {
        nod << "    <node id=\"" << s.id << "\" x=\"" << s.x << ".00\" y=\"" << s.y << ".00\" type=\"priority\"/>\n";
    }
    nod << "</nodes>\n";

    std::ostringstream edg;
    edg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    edg << "<edges xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
           "xsi:noNamespaceSchemaLocation=\"http://sumo.dlr.de/xsd/edges_file.xsd\">\n";
    for (const Stub& s : kStubs) {
        edg << "    <edge id=\"" << s.id << "2C\" from=\"" << s.id << "\" to=\"C\" numLanes=\"1\" speed=\"13.89\"/>\n";
        edg << "    <edge id=\"C2" << s.id << "\" from=\"C\" to=\"" << s.id << "\" numLanes=\"1\" speed=\"13.89\"/>\n";
    }
    edg << "</edges>\n";

    std::ostringstream rou;
    rou << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    rou << "<routes xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
           "xsi:noNamespaceSchemaLocation=\"http://sumo.dlr.de/xsd/routes_file.xsd\">\n";
    rou << "    <vType id=\"car\" accel=\"2.6\" decel=\"4.5\" sigma=\"0.0\" length=\"5\" maxSpeed=\"13.89\"/>\n";
    for (Movement m : kAllMovements) {
        rou << "    <route id=\"" << to_string(m) << "\" edges=\"" << origin_of(m) << "2C C2" << destination_of(m)
            << "\"/>\n";
    }
    for (const Vehicle& v : scenario.vehicles) {
        rou << "    <vehicle id=\"" << v.id << "\" type=\"car\" route=\"" << to_string(v.movement) << "\" depart=\""
            << v.entrance_time << "\"/>\n";
    }
    rou << "</routes>\n";

    write_file_atomic(dir / "grid.nod.xml", nod.str());
    write_file_atomic(dir / "grid.edg.xml", edg.str());
    write_file_atomic(dir / "grid.rou.xml", rou.str());
}

}  // namespace signalga
