#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks of the command line tool; the binary path comes from the
// build system.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string cli = HEXALINK_CLI_PATH;

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hexalink_cli_test_" + name);
}

} // namespace

TEST_CASE("example1 | classify") {
    const auto r = run(cli + " example1 | " + cli + " classify 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"rank\":3") != std::string::npos);
    CHECK(r.out.find("\"family\":\"ParallelProperty\"") != std::string::npos);
}

TEST_CASE("generate linesym | rank --mode exact") {
    const auto r = run(cli + " generate linesym --seed 7 | " + cli + " rank --mode exact");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("generate cubic and parallel ranks") {
    CHECK(run(cli + " generate cubic --seed 3 | " + cli + " rank").out == "4\n");
    CHECK(run(cli + " generate parallel --seed 5 | " + cli + " rank").out == "3\n");
    CHECK(run(cli + " generate cubic --seed 1 --pairs 0,1,1,2,-1,3 | " + cli + " rank").out == "4\n");
}

TEST_CASE("deterministic output for identical seeds") {
    const auto a = run(cli + " generate parallel --seed 11");
    const auto b = run(cli + " generate parallel --seed 11");
    const auto c = run(cli + " generate parallel --seed 12");
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("exit code 4 for invariant violations") {
    const auto bad = temp_file("bad.json");
    std::ofstream(bad) << R"({"scalar":"rational","joints":[
      {"primal":["1","1","0"],"dual":["0","0","0"]},
      {"primal":["1","0","0"],"dual":["0","0","0"]},
      {"primal":["0","1","0"],"dual":["0","0","0"]},
      {"primal":["0","0","1"],"dual":["0","0","0"]},
      {"primal":["1","0","0"],"dual":["0","1","0"]},
      {"primal":["0","1","0"],"dual":["1","0","0"]}]})";
    const auto r = run(cli + " classify " + bad.string() + " 2>" + temp_file("err4.txt").string());
    CHECK(r.exit_code == 4);
    std::ifstream err(temp_file("err4.txt"));
    std::string diag;
    std::getline(err, diag);
    CHECK(diag.find("\"error\":\"invalid-input\"") != std::string::npos);
}

TEST_CASE("exit code 3 for malformed JSON") {
    const auto bad = temp_file("malformed.json");
    std::ofstream(bad) << "{this is not json";
    const auto r = run(cli + " rank " + bad.string() + " 2>/dev/null");
    CHECK(r.exit_code == 3);
}

TEST_CASE("exit code 2 for undetermined classifications") {
    // a rigid generic linkage: rank outside {2,3,4}
    const auto path = temp_file("generic.json");
    std::ofstream(path) << R"({"scalar":"rational","joints":[
      {"primal":["3/5","4/5","0"],"dual":["4","-3","0"]},
      {"primal":["0","3/5","4/5"],"dual":["1","4","-3"]},
      {"primal":["4/5","0","3/5"],"dual":["3","2","-4"]},
      {"primal":["12/13","5/13","0"],"dual":["5","-12","1"]},
      {"primal":["0","12/13","5/13"],"dual":["2","5","-12"]},
      {"primal":["5/13","0","12/13"],"dual":["12","3","-5"]}]})";
    const auto r = run(cli + " classify " + path.string() + " 2>/dev/null");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("\"family\":\"Undetermined\"") != std::string::npos);
}

TEST_CASE("rank --dump-matrix writes the CSV") {
    const auto csv = temp_file("matrix.csv");
    std::filesystem::remove(csv);
    const auto r = run(cli + " example1 | " + cli + " rank --dump-matrix " + csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 48);
}

TEST_CASE("trace and poses round trip through files") {
    const auto linkage = temp_file("ex1.json");
    const auto configs = temp_file("configs.json");
    const auto poses = temp_file("out.poses");
    REQUIRE(run(cli + " example1 > " + linkage.string()).exit_code == 0);
    const auto tr = run(cli + " trace " + linkage.string() + " --grid -2:3:9 > " + configs.string());
    CHECK(tr.exit_code == 0);
    const auto ps =
        run(cli + " poses " + linkage.string() + " --configs " + configs.string() + " -o " + poses.string());
    CHECK(ps.exit_code == 0);
    std::ifstream in(poses);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "# hexalink poses v1");
}

TEST_CASE("trace finds the reference parametrization") {
    const auto r = run(cli + " example1 | " + cli + " trace - --grid 1:1:1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.25") != std::string::npos);
}

TEST_CASE("HEXALINK_SCALAR overrides the document mode") {
    const auto r = run("HEXALINK_SCALAR=float " + cli + " example1 | HEXALINK_SCALAR=float " + cli +
                       " classify 2>" + temp_file("warn.txt").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"family\":\"ParallelProperty\"") != std::string::npos);
    std::ifstream warn(temp_file("warn.txt"));
    std::string line;
    std::getline(warn, line);
    CHECK(line.find("advisory") != std::string::npos);
}
