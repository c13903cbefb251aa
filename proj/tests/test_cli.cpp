#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef BURGE_CLI_PATH
#error "BURGE_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_payload = "") {
    std::string cmd = std::string(BURGE_CLI_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_payload.empty()) {
        auto path = std::filesystem::temp_directory_path() / "burge_cli_stdin.json";
        std::ofstream(path) << stdin_payload;
        cmd = "cat " + path.string() + " | " + cmd;
    }
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int raw = pclose(pipe);
    result.status = WEXITSTATUS(raw);
    return result;
}

std::string write_temp(const std::string& name, const std::string& payload) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << payload;
    return path.string();
}

const char* kFigGraph = R"({"n": 4, "edges": [[2,1],[3,1],[3,2],[4,2]]})";

} // namespace

TEST_CASE("cli encode") {
    auto graph = write_temp("burge_fig_graph.json", kFigGraph);
    auto result = run_cli("encode --graph " + graph);
    CHECK(result.status == 0);
    CHECK(result.out == "[[1,1,2],[2,2],[3,3],[4]]\n");
}

TEST_CASE("cli encode from stdin") {
    auto result = run_cli("encode --graph -", kFigGraph);
    CHECK(result.status == 0);
    CHECK(result.out == "[[1,1,2],[2,2],[3,3],[4]]\n");
}

TEST_CASE("cli decode inverts encode") {
    auto tableau = write_temp("burge_fig_tableau.json", "[[1,1,2],[2,2],[3,3],[4]]");
    auto result = run_cli("decode --tableau " + tableau + " --n 4");
    CHECK(result.status == 0);
    CHECK(result.out == R"({"n":4,"edges":[[2,1],[3,1],[3,2],[4,2]]})"
                        "\n");
}

TEST_CASE("cli shape") {
    auto graph = write_temp("burge_fig_graph.json", kFigGraph);
    auto result = run_cli("shape --graph " + graph);
    CHECK(result.status == 0);
    CHECK(result.out == "[3,2,2,1]\n");
}

TEST_CASE("cli pvcheck") {
    auto tree = write_temp("burge_tree_array.json", R"({"top": [2,4,4], "bottom": [1,3,2]})");
    auto result = run_cli("pvcheck --array " + tree);
    CHECK(result.status == 0);
    CHECK(result.out ==
          R"({"peak":[1,2,3],"valley":null,"pv_free":false,"hook_shape":false})"
          "\n");

    auto free_array = write_temp("burge_free_array.json",
                                 R"({"top": [4,5,6,7], "bottom": [1,3,5,2]})");
    auto free_result = run_cli("pvcheck --array " + free_array);
    CHECK(free_result.status == 0);
    CHECK(free_result.out ==
          R"({"peak":null,"valley":null,"pv_free":true,"hook_shape":true})"
          "\n");
}

TEST_CASE("cli standardize") {
    auto array = write_temp("burge_std_array.json", R"({"top": [2,3,3,4], "bottom": [1,2,1,2]})");
    auto result = run_cli("standardize --array " + array);
    CHECK(result.status == 0);
    CHECK(result.out == R"({"top":[3,6,7,8],"bottom":[1,4,2,5]})"
                        "\n");

    auto word = write_temp("burge_std_word.json", "[2,1]");
    auto word_result = run_cli("standardize --word " + word + " --alphabet 5,9");
    CHECK(word_result.status == 0);
    CHECK(word_result.out == "[9,5]\n");
}

TEST_CASE("cli crystal counts and determinism") {
    auto first = run_cli("crystal --objects arrays --shape 2,1,1 --max-letter 4");
    CHECK(first.status == 0);
    auto second = run_cli("crystal --objects arrays --shape 2,1,1 --max-letter 4");
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"edges\"") != std::string::npos);

    auto dot = run_cli("crystal --objects arrays --shape 2,1,1 --max-letter 4 --format dot");
    CHECK(dot.status == 0);
    CHECK(dot.out.rfind("digraph crystal {", 0) == 0);
    // 15 nodes and 18 labelled arrows.
    std::size_t arrows = 0, pos = 0;
    while ((pos = dot.out.find("->", pos)) != std::string::npos) {
        ++arrows;
        pos += 2;
    }
    CHECK(arrows == 18);

    auto tableaux = run_cli("crystal --objects tableaux --shape 2,1,1 --max-letter 4");
    CHECK(tableaux.status == 0);

    auto rejected = run_cli("crystal --objects arrays --shape 2,2 --max-letter 4");
    CHECK(rejected.status == 2);
}

TEST_CASE("cli malformed input exits with status two") {
    auto bad = write_temp("burge_bad_array.json", R"({"top": [3,2], "bottom": [1,1]})");
    auto result = run_cli("pvcheck --array " + bad);
    CHECK(result.status == 2);

    auto not_json = write_temp("burge_not_json.txt", "nonsense");
    CHECK(run_cli("encode --graph " + not_json).status == 2);

    CHECK(run_cli("decode --tableau " + write_temp("burge_nonthr.json", "[[1,1]]") + " --n 2")
              .status == 2);
}

TEST_CASE("cli verify") {
    auto result = run_cli("verify all --max-n 4");
    CHECK(result.status == 0);
    CHECK(result.out.find("PASS burge-roundtrip") != std::string::npos);
    CHECK(result.out.find("FAIL") == std::string::npos);

    auto json = run_cli("verify littlewood-identity --max-n 3 --json");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"all_passed\":true") != std::string::npos);

    auto broken = run_cli("verify hook-pv-equivalence --max-n 4 --inject-fault disable-peak");
    CHECK(broken.status == 1);
    CHECK(broken.out.find("FAIL hook-pv-equivalence") != std::string::npos);
}
