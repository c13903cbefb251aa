#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burge/correspondence.hpp"
#include "burge/crystal.hpp"
#include "burge/crystal_checks.hpp"
#include "burge/graph.hpp"
#include "burge/json_io.hpp"
#include "burge/pvfree.hpp"
#include "burge/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadInput = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

burge::Json parse_json(const std::string& path) {
    try {
        return burge::Json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + err.what());
    }
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + ": " + csv);
        }
    }
    return out;
}

void emit(const burge::Json& j) { std::cout << j.dump() << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"Burge correspondence toolkit: simple labelled graphs, threshold tableaux, "
                 "peak/valley analysis, crystal operators, exhaustive verification"};
    app.require_subcommand(1);

    // encode
    std::string encode_graph;
    auto* cmd_encode = app.add_subcommand("encode", "Graph to its threshold tableau");
    cmd_encode->add_option("--graph", encode_graph, "graph JSON file or - for stdin")->required();

    // decode
    std::string decode_tableau;
    int decode_n = 0;
    auto* cmd_decode = app.add_subcommand("decode", "Threshold tableau back to the graph");
    cmd_decode->add_option("--tableau", decode_tableau, "tableau JSON file or -")->required();
    cmd_decode->add_option("--n", decode_n, "vertex count of the target graph")->required();

    // shape
    std::string shape_graph;
    auto* cmd_shape = app.add_subcommand("shape", "Shape of a graph under the correspondence");
    cmd_shape->add_option("--graph", shape_graph, "graph JSON file or -")->required();

    // pvcheck
    std::string pv_array;
    auto* cmd_pv = app.add_subcommand("pvcheck", "Peak/valley analysis of a Burge array");
    cmd_pv->add_option("--array", pv_array, "Burge array JSON file or -")->required();

    // standardize
    std::string std_array, std_tableau, std_word, std_alphabet;
    auto* cmd_std = app.add_subcommand("standardize", "Relabel onto a strictly increasing alphabet");
    cmd_std->add_option("--array", std_array, "Burge array JSON file or -");
    cmd_std->add_option("--tableau", std_tableau, "tableau JSON file or -");
    cmd_std->add_option("--word", std_word, "word JSON file or -");
    cmd_std->add_option("--alphabet", std_alphabet,
                        "comma separated target letters (default 1..size)");

    // crystal
    std::string cr_objects = "arrays", cr_shape, cr_format = "json";
    int cr_max_letter = 0;
    auto* cmd_crystal = app.add_subcommand("crystal", "Generate a crystal graph");
    cmd_crystal->add_option("--objects", cr_objects, "arrays or tableaux")
        ->check(CLI::IsMember({"arrays", "tableaux"}));
    cmd_crystal->add_option("--shape", cr_shape, "comma separated partition, e.g. 2,1,1")
        ->required();
    cmd_crystal->add_option("--max-letter", cr_max_letter, "largest letter allowed")->required();
    cmd_crystal->add_option("--format", cr_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // verify
    std::string verify_suite = "all", inject_fault;
    int verify_max_n = 5;
    bool verify_json = false, verify_timings = false;
    auto* cmd_verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
    cmd_verify->add_option("suite", verify_suite, "suite name or all");
    cmd_verify->add_option("--max-n", verify_max_n, "exhaustive vertex bound (default 5)")
        ->check(CLI::Range(1, 7));
    cmd_verify->add_flag("--json", verify_json, "emit a JSON report");
    cmd_verify->add_flag("--timings", verify_timings, "print per-suite timings to stderr");
    cmd_verify->add_option("--inject-fault", inject_fault,
                           "testing aid: disable-peak weakens the peak scan")
        ->check(CLI::IsMember({"disable-peak"}));

    CLI11_PARSE(app, argc, argv);

    if (cmd_encode->parsed()) {
        auto g = burge::graph_from_json(parse_json(encode_graph));
        emit(burge::tableau_to_json(burge::encode(burge::to_burge_array(g))));
        return 0;
    }
    if (cmd_decode->parsed()) {
        auto t = burge::tableau_from_json(parse_json(decode_tableau));
        auto a = burge::decode(t);
        emit(burge::graph_to_json(burge::from_burge_array(a, decode_n)));
        return 0;
    }
    if (cmd_shape->parsed()) {
        auto g = burge::graph_from_json(parse_json(shape_graph));
        emit(burge::partition_to_json(burge::shape_of_graph(g)));
        return 0;
    }
    if (cmd_pv->parsed()) {
        auto a = burge::burge_array_from_json(parse_json(pv_array));
        auto peak = burge::find_peak(a);
        auto valley = burge::find_valley(a);
        burge::Json out;
        out["peak"] = peak ? burge::Json::array({peak->i, peak->j, peak->k})
                           : burge::Json(nullptr);
        out["valley"] = valley ? burge::Json::array({valley->i, valley->j, valley->k})
                               : burge::Json(nullptr);
        out["pv_free"] = !peak && !valley;
        out["hook_shape"] = burge::is_hook(burge::encode(a).shape());
        emit(out);
        return 0;
    }
    if (cmd_std->parsed()) {
        int provided = (std_array.empty() ? 0 : 1) + (std_tableau.empty() ? 0 : 1) +
                       (std_word.empty() ? 0 : 1);
        if (provided != 1)
            throw std::invalid_argument(
                "standardize needs exactly one of --array, --tableau, --word");
        auto alphabet_or_default = [&](int size) {
            if (std_alphabet.empty()) {
                std::vector<int> c(static_cast<std::size_t>(size));
                for (int i = 0; i < size; ++i)
                    c[static_cast<std::size_t>(i)] = i + 1;
                return c;
            }
            return parse_int_list(std_alphabet, "alphabet");
        };
        if (!std_array.empty()) {
            auto a = burge::burge_array_from_json(parse_json(std_array));
            emit(burge::burge_array_to_json(
                burge::standardize_burge_array(a, alphabet_or_default(2 * a.columns()))));
        } else if (!std_tableau.empty()) {
            auto t = burge::tableau_from_json(parse_json(std_tableau));
            emit(burge::tableau_to_json(
                burge::standardize_tableau(t, alphabet_or_default(t.cell_count()))));
        } else {
            auto w = burge::word_from_json(parse_json(std_word));
            emit(burge::word_to_json(
                burge::standardize_word(w, alphabet_or_default(static_cast<int>(w.size())))));
        }
        return 0;
    }
    if (cmd_crystal->parsed()) {
        auto shape = burge::Partition(parse_int_list(cr_shape, "shape"));
        if (cr_max_letter < 1)
            throw std::invalid_argument("--max-letter must be positive");
        if (cr_objects == "arrays") {
            if (!burge::is_threshold(shape))
                throw std::invalid_argument(
                    "array crystals need a threshold shape; no Burge array has this one");
            if (!burge::is_hook(shape))
                throw std::invalid_argument(
                    "array crystals need a hook shape; the operators live on PV-free arrays");
            std::vector<burge::BurgeArray> seeds;
            for (const burge::Tableau& t : burge::enumerate_ssyt(shape, cr_max_letter))
                seeds.push_back(burge::decode(t));
            auto crystal = burge::generate_crystal<burge::BurgeCrystalOps>(seeds, cr_max_letter);
            if (cr_format == "dot")
                std::cout << burge::crystal_to_dot(crystal, burge::BurgeCrystalOps::key);
            else
                emit(burge::crystal_to_json(crystal, [](const burge::BurgeArray& a) {
                    return burge::burge_array_to_json(a);
                }));
        } else {
            auto seeds = burge::enumerate_ssyt(shape, cr_max_letter);
            auto crystal = burge::generate_crystal<burge::TableauCrystalOps>(seeds, cr_max_letter);
            if (cr_format == "dot")
                std::cout << burge::crystal_to_dot(crystal, burge::TableauCrystalOps::key);
            else
                emit(burge::crystal_to_json(
                    crystal, [](const burge::Tableau& t) { return burge::tableau_to_json(t); }));
        }
        return 0;
    }
    if (cmd_verify->parsed()) {
        burge::VerifyConfig cfg;
        cfg.max_n = verify_max_n;
        cfg.littlewood_max_n = std::min(verify_max_n, 5);
        cfg.inject_disable_peak = (inject_fault == "disable-peak");
        burge::VerifyReport report;
        if (verify_suite == "all") {
            report = burge::run_all(cfg);
        } else {
            report.suites.push_back(burge::run_suite(verify_suite, cfg));
        }
        if (verify_timings)
            for (const auto& s : report.suites)
                std::cerr << s.name << ": " << s.millis << " ms\n";
        if (verify_json) {
            burge::Json suites = burge::Json::array();
            for (const auto& s : report.suites)
                suites.push_back(burge::Json{{"name", s.name},
                                             {"passed", s.passed},
                                             {"checked", s.checked},
                                             {"failures", s.failures}});
            emit(burge::Json{{"suites", suites}, {"all_passed", report.all_passed()}});
        } else {
            for (const auto& s : report.suites) {
                if (s.passed) {
                    std::cout << "PASS " << s.name << " (checked " << s.checked << ")\n";
                } else {
                    std::cout << "FAIL " << s.name << " (checked " << s.checked << ")\n";
                    for (const auto& f : s.failures)
                        std::cout << "     " << f << "\n";
                }
            }
        }
        return report.all_passed() ? 0 : kExitVerifyFailure;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitBadInput;
    }
}
