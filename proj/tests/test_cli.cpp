// Exercises the built binary end to end: output formats, exit codes, and
// determinism across worker counts. The binary path arrives in K4SAT_CLI.

#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "k4sat/constructions.hpp"
#include "k4sat/graph6.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* path = std::getenv("K4SAT_CLI");
    REQUIRE(path != nullptr);
    return path;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream file(p);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::filesystem::path out_path =
        std::filesystem::temp_directory_path() / ("k4sat_cli_out_" + std::to_string(counter++) + ".txt");
    const std::string command = std::string(cli_path()) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    std::filesystem::remove(out_path);
    return result;
}

}  // namespace

TEST_CASE("construct emits the documented formats") {
    SECTION("edge list with the n m header") {
        const RunResult r = run_cli("construct f --n 10 --a 0 --b 2 --format edges");
        REQUIRE(r.exit_code == 0);
        std::istringstream lines(r.out);
        std::string header;
        std::getline(lines, header);
        CHECK(header == "10 19");
        int count = 0;
        for (std::string line; std::getline(lines, line);)
            if (!line.empty()) ++count;
        CHECK(count == 19);
        CHECK(k4sat::parse_edge_list(r.out) == k4sat::construct_f({10, 0, 2}).graph);
    }
    SECTION("graph6") {
        const RunResult r = run_cli("construct star-matching --n 10 --format graph6");
        REQUIRE(r.exit_code == 0);
        std::string line = r.out;
        while (!line.empty() && line.back() == '\n') line.pop_back();
        CHECK(k4sat::graph6_decode(line) == k4sat::construct_star_matching(10));
    }
    SECTION("json carries the part labels for family f") {
        const RunResult r = run_cli("construct f --n 10 --a 0 --b 2");
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        CHECK(out.at("edge_count") == 19);
        CHECK(out.at("parts").at("I") == json::array({0}));
        CHECK(out.at("parts").at("B2") == json::array({5, 6}));
        CHECK(out.at("parts").at("M") == json::array({{1, 3}, {2, 4}}));
    }
    SECTION("complete bipartite") {
        const RunResult r = run_cli("construct complete-bipartite --n 10 --i 5");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out).at("edge_count") == 25);
    }
    SECTION("invalid parameters exit 2") {
        CHECK(run_cli("construct f --n 5 --a 3 --b 3").exit_code == 2);
        CHECK(run_cli("construct complete-bipartite --n 10").exit_code == 2);
        CHECK(run_cli("construct nonsense --n 5").exit_code == 2);
    }
}

TEST_CASE("check verdicts and exit codes") {
    SECTION("saturated family graph exits 0") {
        const std::string g6 = k4sat::graph6_encode(k4sat::construct_f({12, 3, 2}).graph);
        const RunResult r = run_cli("check '" + g6 + "' --mode both");
        REQUIRE(r.exit_code == 0);
        const json verdict = json::parse(r.out);
        CHECK(verdict.at("saturated") == true);
        CHECK(verdict.at("h_free") == true);
        CHECK(verdict.at("modes_agree") == true);
    }
    SECTION("a star is not saturated: exit 1 with a witness") {
        const std::string g6 = k4sat::graph6_encode(k4sat::construct_complete_bipartite(10, 1));
        const RunResult r = run_cli("check '" + g6 + "'");
        REQUIRE(r.exit_code == 1);
        const json verdict = json::parse(r.out);
        CHECK(verdict.at("saturated") == false);
        CHECK(verdict.at("nonedge_witness") == json::array({1, 2}));
    }
    SECTION("malformed bytes exit 3") {
        CHECK(run_cli("check 'not graph6 at all!'").exit_code == 3);
    }
    SECTION("reading from standard input") {
        const std::string g6 = k4sat::graph6_encode(k4sat::construct_complete_bipartite(8, 4));
        const std::filesystem::path path = std::filesystem::temp_directory_path() / "k4sat_cli_stdin.g6";
        {
            std::ofstream file(path);
            file << g6 << "\n";
        }
        const RunResult r = run_cli("check - < " + path.string());
        std::filesystem::remove(path);
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out).at("saturated") == true);
    }
    SECTION("reading a file of graphs") {
        const std::filesystem::path path = std::filesystem::temp_directory_path() / "k4sat_cli_batch.g6";
        {
            std::ofstream file(path);
            file << k4sat::graph6_encode(k4sat::construct_complete_bipartite(8, 4)) << "\n";
            file << k4sat::graph6_encode(k4sat::construct_star_matching(9)) << "\n";
        }
        const RunResult r = run_cli("check " + path.string());
        std::filesystem::remove(path);
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        REQUIRE(out.contains("graphs"));
        CHECK(out.at("graphs").size() == 2);
    }
}

TEST_CASE("spectrum commands") {
    SECTION("formula at n = 10") {
        const RunResult r = run_cli("spectrum formula --n 10");
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        CHECK(out.at("sizes") == json::array({9, 13, 16, 17, 18, 19, 20, 21, 22, 24, 25}));
        CHECK(out.at("unwitnessed_sizes") == json::array({9}));
        CHECK_FALSE(out.contains("warning"));
    }
    SECTION("formula below its stated range carries a warning") {
        const RunResult r = run_cli("spectrum formula --n 8");
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        CHECK(out.contains("warning"));
        CHECK(out.at("formula_out_of_range") == true);
    }
    SECTION("coverage at n = 12") {
        const RunResult r = run_cli("spectrum coverage --n 12");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out).at("sizes") == json::array({25, 26, 27, 28, 29, 30, 31, 32}));
    }
    SECTION("enumerate census at n = 4") {
        const RunResult r = run_cli("spectrum enumerate --n 4");
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        CHECK(out.at("sizes").at("4").at("labeled_count") == 15);
        CHECK(out.at("sizes").at("4").at("unlabeled_count") == 2);
    }
    SECTION("enumerate beyond the cap exits 2") {
        CHECK(run_cli("spectrum enumerate --n 9").exit_code == 2);
    }
}

TEST_CASE("verify targets") {
    SECTION("edge formula sweep") {
        const RunResult r = run_cli("verify lemma1 --n-min 10 --n-max 20");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out).at("outcome") == "pass");
    }
    SECTION("family saturation sweep") {
        CHECK(run_cli("verify lemma2 --n-min 10 --n-max 16").exit_code == 0);
    }
    SECTION("coverage and overlap sweeps") {
        CHECK(run_cli("verify lemma3 --n-min 10 --n-max 80").exit_code == 0);
        CHECK(run_cli("verify overlap --n-min 11 --n-max 80").exit_code == 0);
    }
    SECTION("enumeration-backed targets at small n") {
        CHECK(run_cli("verify theorem-a --n 7").exit_code == 0);
        CHECK(run_cli("verify proof-bound --n 7").exit_code == 0);
    }
    SECTION("the n = 6 prism exception is reported as a failure with its certificate") {
        const RunResult r = run_cli("verify theorem-a --n 6");
        REQUIRE(r.exit_code == 1);
        const json out = json::parse(r.out);
        CHECK(out.at("outcome") == "fail");
        CHECK(out.at("payload").at("sweep").at("counterexamples").size() == 1);
    }
    SECTION("checker equivalence, reduced load") {
        const RunResult r = run_cli("verify checker-equiv --n 5 --random 400");
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        CHECK(out.at("payload").at("checked") == (1 << 10) + 400);
    }
    SECTION("usage errors exit 2") {
        CHECK(run_cli("verify nonsense").exit_code == 2);
        CHECK(run_cli("verify lemma1 --n-min 10 --n-max 70").exit_code == 2);
    }
}

TEST_CASE("output is byte-identical across worker counts") {
    const RunResult one = run_cli("spectrum enumerate --n 6 --jobs 1");
    const RunResult two = run_cli("spectrum enumerate --n 6 --jobs 2");
    const RunResult five = run_cli("spectrum enumerate --n 6 --jobs 5");
    REQUIRE(one.exit_code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == five.out);

    const RunResult v1 = run_cli("verify lemma2 --n-min 10 --n-max 14 --jobs 1");
    const RunResult v2 = run_cli("verify lemma2 --n-min 10 --n-max 14 --jobs 2");
    CHECK(v1.out == v2.out);
}

TEST_CASE("no subcommand is a usage error") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("worker count can come from the environment") {
    const RunResult env_jobs = run_cli("spectrum enumerate --n 5 --jobs 1");
    static int counter = 0;
    const std::filesystem::path out_path =
        std::filesystem::temp_directory_path() / ("k4sat_env_out_" + std::to_string(counter++) + ".txt");
    const std::string command =
        std::string("K4SAT_JOBS=3 ") + cli_path() + " spectrum enumerate --n 5 > " + out_path.string();
    REQUIRE(std::system(command.c_str()) == 0);
    CHECK(slurp(out_path) == env_jobs.out);
    std::filesystem::remove(out_path);
}
