#include "signalga/artifacts.hpp"
#include "signalga/errors.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace signalga {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
    const std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), {}));
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("signalga_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

SimResult single_vehicle() {
    const Scenario s = make_scenario({{Movement::NS, 0}}, 100);
    return simulate(s, SignalProgram::parse("GGrr:10;yyrr:3;rrGG:10;rryy:3"));
}

TEST(VehicleTable, HeaderAndRows) {
    EXPECT_EQ(render_vehicle_table(single_vehicle()), "Car Number,Entrance Time,Departure Time,Total Time\n1,0,5,5\n");
    EXPECT_EQ(render_vehicle_table(SimResult{}), "Car Number,Entrance Time,Departure Time,Total Time\n");
    SimResult unserved;
    unserved.outcomes.push_back({1, 4, std::nullopt});
    EXPECT_EQ(render_vehicle_table(unserved), std::string(kVehicleTableHeader) + "\n1,4,,\n");
}

TEST(GenerationLog, Rows) {
    EvolutionLog log;
    log.generations.push_back({0, {0, 597, Rational(461, 60)}, Rational(12591, 20), "GGrr:37;yyrr:3;rrGG:5;rryy:3"});
    EXPECT_EQ(render_generation_log(log),
              "generation,unserved,best_makespan,best_mean,mean_makespan,best_program\n"
              "0,0,597,7.6833,629.5500,GGrr:37;yyrr:3;rrGG:5;rryy:3\n");
}

TEST(PlotData, RowsThenBaselineComment) {
    EvolutionLog log;
    for (std::size_t g = 0; g < 3; ++g) log.generations.push_back({g, {0, 700 - static_cast<int>(g), Rational(1)}, Rational(1), "x"});
    EXPECT_EQ(render_plot_data(log, {0, 705, Rational(9)}), "0\t700\n1\t699\n2\t698\n# baseline_makespan 705\n");
    EXPECT_EQ(render_plot_data(EvolutionLog{}, {0, 12, Rational(1)}), "# baseline_makespan 12\n");
}

TEST(OracleTable, Header) {
    OracleResult r;
    r.table.push_back({5, 10, {1, 40, Rational(7, 2)}});
    EXPECT_EQ(render_oracle_table(r), "g_ns\tg_ew\tunserved\tmakespan\tmean_total\n5\t10\t1\t40\t3.5000\n");
}

TEST_F(TempDir, AtomicWriteReplacesAndLeavesNoTemp) {
    write_file_atomic(dir_ / "a.txt", "first");
    write_file_atomic(dir_ / "a.txt", "second");
    EXPECT_EQ(slurp(dir_ / "a.txt"), "second");
    EXPECT_FALSE(fs::exists(dir_ / "a.txt.tmp"));
    EXPECT_THROW(write_file_atomic(dir_ / "missing" / "a.txt", "x"), IoError);
}

TEST_F(TempDir, WritersProduceRenderedContent) {
    write_vehicle_table(single_vehicle(), dir_ / "vehicles.csv");
    EXPECT_EQ(slurp(dir_ / "vehicles.csv"), render_vehicle_table(single_vehicle()));
}

TEST_F(TempDir, SumoExport) {
    const Scenario s = make_scenario({{Movement::NS, 0}, {Movement::EW, 4}, {Movement::WE, 9}}, 100);
    export_sumo_files(s, dir_ / "sumo");
    const std::string nod = slurp(dir_ / "sumo" / "grid.nod.xml");
    const std::string edg = slurp(dir_ / "sumo" / "grid.edg.xml");
    const std::string rou = slurp(dir_ / "sumo" / "grid.rou.xml");

    EXPECT_EQ(count_matches(nod, "<node "), 5u);
    EXPECT_EQ(count_matches(nod, "type=\"traffic_light\""), 1u);
    EXPECT_NE(nod.find("id=\"N\" x=\"0.00\" y=\"200.00\""), std::string::npos);
    EXPECT_NE(nod.find("id=\"W\" x=\"-200.00\" y=\"0.00\""), std::string::npos);
    EXPECT_EQ(count_matches(edg, "<edge "), 8u);
    EXPECT_EQ(count_matches(edg, "numLanes=\"1\""), 8u);
    EXPECT_EQ(count_matches(rou, "<route "), 4u);
    EXPECT_EQ(count_matches(rou, "<vehicle "), 3u);
    EXPECT_NE(rou.find("<route id=\"NS\" edges=\"N2C C2S\"/>"), std::string::npos);
    EXPECT_NE(rou.find("<vehicle id=\"2\" type=\"car\" route=\"EW\" depart=\"4\"/>"), std::string::npos);

    // every file opens and closes its root element
    EXPECT_EQ(count_matches(nod, "<nodes[ >]"), 1u);
    EXPECT_NE(nod.rfind("</nodes>\n"), std::string::npos);
    EXPECT_NE(edg.rfind("</edges>\n"), std::string::npos);
    EXPECT_NE(rou.rfind("</routes>\n"), std::string::npos);
}

}  // namespace
}  // namespace signalga
