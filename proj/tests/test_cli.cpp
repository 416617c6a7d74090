#include "signalga/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace signalga {
namespace {

namespace fs = std::filesystem;

const std::string kAsym = (fs::path(SIGNALGA_SCENARIO_DIR) / "asym-1.scn").string();

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("signalga_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

TEST_F(CliTest, EvolveRequiresSeed) {
    const CliRun r = invoke({"evolve", "--scenario", kAsym});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--seed"), std::string::npos);
}

TEST_F(CliTest, UnknownFlagAndMissingSubcommand) {
    EXPECT_EQ(invoke({"simulate", "--scenario", kAsym, "--program", "GGrr:30;yyrr:3;rrGG:30;rryy:3", "--bogus"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"evolve", "--scenario", kAsym, "--seed", "1", "--mode", "sideways"}).code, 1);
}

TEST_F(CliTest, HelpExitsZero) {
    const CliRun r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("compare"), std::string::npos);
}

TEST_F(CliTest, SimulateInvalidProgramNamesViolation) {
    const CliRun r = invoke({"simulate", "--scenario", kAsym, "--program", "GGrr:30;rrGG:30"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("MissingYellow"), std::string::npos);
    const CliRun malformed = invoke({"simulate", "--scenario", kAsym, "--program", "GGxx:30"});
    EXPECT_EQ(malformed.code, 1);
}

TEST_F(CliTest, SimulatePrintsTableOrWritesFile) {
    const CliRun r = invoke({"simulate", "--scenario", kAsym, "--program", "GGrr:30;yyrr:3;rrGG:30;rryy:3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Car Number,Entrance Time,Departure Time,Total Time"), std::string::npos);
    EXPECT_EQ(invoke({"simulate", "--scenario", kAsym, "--program", "GGrr:30;yyrr:3;rrGG:30;rryy:3", "--out",
                   dir_.string()})
                  .code,
              0);
    EXPECT_TRUE(fs::exists(dir_ / "vehicles.csv"));
}

TEST_F(CliTest, MissingScenarioIsIoError) {
    EXPECT_EQ(invoke({"simulate", "--scenario", "/no/such/file.scn", "--program", "GGrr:1"}).code, 2);
}

TEST_F(CliTest, ParseErrorInScenarioExitsOne) {
    fs::create_directories(dir_);
    std::ofstream(dir_ / "bad.scn") << "horizon 10\nvehicle XX 0\n";
    const CliRun r = invoke({"oracle", "--scenario", (dir_ / "bad.scn").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, OracleWritesTable) {
    const CliRun r = invoke({"oracle", "--scenario", kAsym, "--grid", "5..60:5", "--out", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(dir_ / "oracle.tsv");
    std::string line;
    std::size_t rows = 0;
    std::getline(in, line);
    EXPECT_EQ(line, "g_ns\tg_ew\tunserved\tmakespan\tmean_total");
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 144u);
}

TEST_F(CliTest, ExportSumo) {
    ASSERT_EQ(invoke({"export-sumo", "--scenario", kAsym, "--out", dir_.string()}).code, 0);
    for (const char* f : {"grid.nod.xml", "grid.edg.xml", "grid.rou.xml"}) EXPECT_TRUE(fs::exists(dir_ / f)) << f;
}

TEST_F(CliTest, CompareWritesAllArtifacts) {
    const CliRun r = invoke({"compare", "--scenario", kAsym, "--seed", "42", "--generations", "20", "--out", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* f : {"vehicles.csv", "generations.csv", "plot.tsv", "report.txt"}) {
        EXPECT_TRUE(fs::exists(dir_ / f)) << f;
    }
    EXPECT_TRUE(fs::exists(dir_ / "sumo" / "grid.rou.xml"));
    EXPECT_NE(r.out.find("metric=makespan"), std::string::npos);
}

TEST_F(CliTest, EvolveStringModeWithTemplate) {
    const CliRun r = invoke({"evolve", "--scenario", kAsym, "--seed", "7", "--generations", "10", "--mode", "string",
                       "--template", "GGrr:20;yyrr:3;rrrr:2;rrGG:20;rryy:3", "--out", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(dir_ / "generations.csv");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 12u);  // header + generations 0..10
}

TEST_F(CliTest, EvolveRejectsUnsafeTemplate) {
    EXPECT_EQ(invoke({"evolve", "--scenario", kAsym, "--seed", "7", "--template", "GGGG:20", "--out", dir_.string()}).code,
              1);
}

}  // namespace
}  // namespace signalga
