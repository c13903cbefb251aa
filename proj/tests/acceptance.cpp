// Acceptance suite: every headline behaviour of the library, checked exactly
// and printed one line per criterion. Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "burge/correspondence.hpp"
#include "burge/crystal.hpp"
#include "burge/crystal_checks.hpp"
#include "burge/graph.hpp"
#include "burge/partition.hpp"
#include "burge/pvfree.hpp"
#include "burge/tableau.hpp"
#include "burge/verify.hpp"

using namespace burge;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string description;
    std::function<void(std::ostringstream&)> body; // throws on failure
};

int failures = 0;

void run(int number, const Criterion& criterion) {
    std::ostringstream notes;
    auto start = Clock::now();
    bool ok = true;
    std::string reason;
    try {
        criterion.body(notes);
    } catch (const std::exception& err) {
        ok = false;
        reason = err.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::printf("[%s] %02d %s (%s%.1f ms)\n", ok ? "PASS" : "FAIL", number,
                criterion.description.c_str(),
                notes.str().empty() ? "" : (notes.str() + ", ").c_str(), ms);
    if (!ok) {
        std::printf("       reason: %s\n", reason.c_str());
        ++failures;
    }
}

void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::runtime_error(message);
}

SimpleGraph fig_graph() { return SimpleGraph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}}); }

std::vector<int> iota(int n) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] = i + 1;
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"fixed four-vertex graph encodes to the expected tableau and decodes back",
                        [](std::ostringstream& notes) {
                            BurgeArray a = to_burge_array(fig_graph());
                            require(a.top() == std::vector<int>{2, 3, 3, 4} &&
                                        a.bottom() == std::vector<int>{1, 2, 1, 2},
                                    "array mismatch");
                            auto start = Clock::now();
                            Tableau t = encode(a);
                            BurgeArray back = decode(t);
                            double ms = std::chrono::duration<double, std::milli>(Clock::now() -
                                                                                  start)
                                            .count();
                            require(t == Tableau({{1, 1, 2}, {2, 2}, {3, 3}, {4}}),
                                    "tableau mismatch");
                            require(back == a, "decode does not invert");
                            require(ms < 1.0, "encode+decode exceeded one millisecond");
                            notes << "round trip " << ms << " ms";
                        }});

    criteria.push_back(
        {"hook shape coincides with peak/valley freedom on all 32768 six-vertex graphs",
         [](std::ostringstream& notes) {
             auto start = Clock::now();
             auto report = hook_equivalence_sweep(6);
             double secs = std::chrono::duration<double>(Clock::now() - start).count();
             require(report.checked == 32768, "expected 32768 graphs");
             require(report.mismatches == 0, "found counterexamples");
             require(secs < 30.0, "sweep exceeded thirty seconds");
             notes << report.checked << " graphs";
         }});

    criteria.push_back(
        {"round trips: all graphs on up to six vertices and all threshold tableaux with up to "
         "eight cells and entries up to six",
         [](std::ostringstream& notes) {
             auto start = Clock::now();
             std::uint64_t graphs = 0, tableaux = 0;
             for (int n = 1; n <= 6; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     BurgeArray a = to_burge_array(g);
                     Tableau t = encode(a, Validate::fast);
                     require(decode(t) == a, "decode(encode) mismatch");
                     require(is_threshold(t.shape()), "non-threshold shape");
                     ++graphs;
                 }
             for (int m = 0; m <= 8; m += 2)
                 for (const Partition& shape : threshold_partitions(m))
                     for (const Tableau& t : enumerate_ssyt(shape, 6)) {
                         require(encode(decode(t)) == t, "encode(decode) mismatch");
                         ++tableaux;
                     }
             require(std::chrono::duration<double>(Clock::now() - start).count() < 60.0,
                     "round trips exceeded sixty seconds");
             notes << graphs << " graphs, " << tableaux << " tableaux";
         }});

    criteria.push_back({"Littlewood identity holds exactly in 2, 3, 4 and 5 variables",
                        [](std::ostringstream& notes) {
                            auto start = Clock::now();
                            for (int n = 2; n <= 5; ++n)
                                require(littlewood_check(n),
                                        "identity fails at n=" + std::to_string(n));
                            require(std::chrono::duration<double>(Clock::now() - start).count() <
                                        10.0,
                                    "identity check exceeded ten seconds");
                            notes << "multisets equal";
                        }});

    criteria.push_back(
        {"standardization intertwines with the correspondence for every graph on up to five "
         "vertices",
         [](std::ostringstream& notes) {
             auto start = Clock::now();
             std::uint64_t checked = 0;
             for (int n = 1; n <= 5; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     BurgeArray a = to_burge_array(g);
                     auto c = iota(2 * a.columns());
                     require(encode(standardize_burge_array(a, c)) ==
                                 standardize_tableau(encode(a), c),
                             "intertwining fails");
                     ++checked;
                 }
             require(std::chrono::duration<double>(Clock::now() - start).count() < 30.0,
                     "intertwining sweep exceeded thirty seconds");
             notes << checked << " graphs";
         }});

    criteria.push_back(
        {"fixed reading words and operator images on three-column arrays reproduce exactly",
         [](std::ostringstream&) {
             BurgeArray a = BurgeArray::from_rows({3, 3, 4}, {2, 1, 3});
             require(burge_reading_word(a, 1) == Word{2, 1}, "reading word i=1");
             require(burge_reading_word(a, 2) == Word{3, 2, 3, 3}, "reading word i=2");
             require(burge_reading_word(a, 3) == Word{4, 3, 3, 3}, "reading word i=3");
             require(burge_reading_word(BurgeArray::from_rows({3, 4}, {2, 1}), 3) == Word{3, 4},
                     "reading word of the two-column array");
             BurgeArray base = BurgeArray::from_rows({2, 3, 4}, {1, 2, 3});
             auto f2 = f_burge(base, 2);
             require(f2 && *f2 == a, "lowering with label 2");
             auto f3 = f_burge(base, 3);
             require(f3 && *f3 == BurgeArray::from_rows({3, 4, 4}, {2, 2, 1}),
                     "lowering with label 3");
             auto e2 = e_burge(a, 2);
             require(e2 && *e2 == base, "raising with label 2");
             auto e3 = e_burge(BurgeArray::from_rows({3, 4, 4}, {2, 2, 1}), 3);
             require(e3 && *e3 == base, "raising with label 3");
             auto two_col = f_burge(BurgeArray::from_rows({2, 3}, {1, 1}), 3);
             require(two_col && *two_col == BurgeArray::from_rows({2, 4}, {1, 1}),
                     "lowering the lone top-row letter");
             require(!f_burge(BurgeArray::from_rows({2, 3}, {1, 1}), 4),
                     "empty reading word must annihilate");
         }});

    criteria.push_back(
        {"array and tableau operators intertwine with matching definedness on up to six vertices",
         [](std::ostringstream& notes) {
             auto start = Clock::now();
             std::uint64_t checked = 0;
             for (int n = 1; n <= 6; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     BurgeArray a = to_burge_array(g);
                     if (!is_pv_free(a))
                         continue;
                     Tableau t = encode(a, Validate::fast);
                     for (int i = 1; i < n; ++i) {
                         auto fa = f_burge(a, i);
                         auto ft = f_tableau(t, i);
                         require(fa.has_value() == ft.has_value(), "lowering definedness");
                         if (fa)
                             require(encode(*fa, Validate::fast) == *ft, "lowering image");
                         auto ea = e_burge(a, i);
                         auto et = e_tableau(t, i);
                         require(ea.has_value() == et.has_value(), "raising definedness");
                         if (ea)
                             require(encode(*ea, Validate::fast) == *et, "raising image");
                         ++checked;
                     }
                 }
             require(std::chrono::duration<double>(Clock::now() - start).count() < 60.0,
                     "operator sweep exceeded sixty seconds");
             notes << checked << " operator pairs";
         }});

    criteria.push_back(
        {"restricted reading words of PV-free arrays on up to six vertices pair at most once",
         [](std::ostringstream& notes) {
             std::uint64_t checked = 0;
             for (int n = 1; n <= 6; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     BurgeArray a = to_burge_array(g);
                     if (!is_pv_free(a))
                         continue;
                     for (int i = 1; i < n; ++i) {
                         require(burge_reading_pair_count(a, i) <= 1, "two pairings");
                         ++checked;
                     }
                 }
             notes << checked << " reading words";
         }});

    criteria.push_back(
        {"array reading words are Knuth equivalent to the tableau reading words on up to five "
         "vertices",
         [](std::ostringstream& notes) {
             std::uint64_t checked = 0;
             for (int n = 1; n <= 5; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     BurgeArray a = to_burge_array(g);
                     if (!is_pv_free(a))
                         continue;
                     Tableau t = encode(a, Validate::fast);
                     for (int i = 1; i < n; ++i) {
                         require(knuth_equivalent(burge_reading_word(a, i),
                                                  restricted_reading_word(t, i)),
                                 "insertion tableaux differ");
                         ++checked;
                     }
                 }
             notes << checked << " word pairs";
         }});

    criteria.push_back(
        {"the two four-letter crystals have 15 and 10 vertices with 18 and 12 drawn arrows",
         [](std::ostringstream& notes) {
             std::size_t idx = 0;
             for (const auto& expected : detail::expected_small_crystals()) {
                 auto seeds = detail::arrays_of_shape(expected.shape.length(), expected.shape);
                 auto crystal = generate_crystal<BurgeCrystalOps>(seeds, expected.max_letter);
                 require(crystal.vertices.size() == expected.vertices.size(),
                         "vertex count mismatch");
                 require(crystal.edges.size() == expected.edges.size(), "edge count mismatch");
                 std::set<std::tuple<std::string, std::string, int>> got;
                 std::vector<int> per_label(static_cast<std::size_t>(expected.max_letter - 1), 0);
                 for (const auto& e : crystal.edges) {
                     got.emplace(BurgeCrystalOps::key(
                                     crystal.vertices[static_cast<std::size_t>(e.src)]),
                                 BurgeCrystalOps::key(
                                     crystal.vertices[static_cast<std::size_t>(e.dst)]),
                                 e.label);
                     ++per_label[static_cast<std::size_t>(e.label - 1)];
                 }
                 std::set<std::tuple<std::string, std::string, int>> want(expected.edges.begin(),
                                                                          expected.edges.end());
                 require(got == want, "labelled edge sets differ");
                 std::vector<int> expected_per_label =
                     idx == 0 ? std::vector<int>{6, 6, 6} : std::vector<int>{4, 4, 4};
                 require(per_label == expected_per_label, "label multiset mismatch");
                 ++idx;
             }
             notes << "both edge sets match arrow for arrow";
         }});

    criteria.push_back(
        {"connected hook-graphs on up to six vertices are trees; stars on up to seven vertices "
         "are hook-graphs",
         [](std::ostringstream& notes) {
             std::uint64_t trees = 0, stars = 0;
             for (int n = 2; n <= 6; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     if (!is_connected(g) || g.edge_count() == 0)
                         continue;
                     if (is_hook_graph(g)) {
                         require(g.edge_count() == g.vertex_count() - 1 && is_acyclic(g),
                                 "connected hook-graph is not a tree");
                         ++trees;
                     }
                 }
             for (int n = 1; n <= 7; ++n)
                 for (int center = 1; center <= n; ++center) {
                     require(is_hook_graph(star(n, center)), "star is not a hook-graph");
                     ++stars;
                 }
             notes << trees << " trees, " << stars << " stars";
         }});

    criteria.push_back(
        {"no axiom violations on any generated crystal with letters up to five; a corrupted edge "
         "is caught",
         [](std::ostringstream& notes) {
             int components = 0;
             for (int m = 2; m <= 5; ++m)
                 for (const Partition& shape : detail::hook_threshold_shapes(m)) {
                     auto burge_crystal = generate_crystal<BurgeCrystalOps>(
                         detail::arrays_of_shape(m, shape), m);
                     require(check_stembridge(burge_crystal).ok(), "array crystal violation");
                     auto tab_crystal =
                         generate_crystal<TableauCrystalOps>(enumerate_ssyt(shape, m), m);
                     require(check_stembridge(tab_crystal).ok(), "tableau crystal violation");
                     components += 2;
                 }
             auto crystal = generate_crystal<BurgeCrystalOps>(
                 detail::arrays_of_shape(4, Partition({2, 1, 1})), 4);
             auto corrupted = crystal;
             corrupted.edges.front().label = corrupted.edges.front().label % 3 + 1;
             require(!check_stembridge(corrupted).ok(), "corrupted crystal slipped through");
             notes << components << " crystals clean, mutation caught";
         }});

    criteria.push_back(
        {"highest weight arrays on up to six vertices are exactly the stars centred at vertex one",
         [](std::ostringstream& notes) {
             std::uint64_t checked = 0;
             for (int n = 1; n <= 6; ++n)
                 for (const SimpleGraph& g : GraphEnumeration(n)) {
                     BurgeArray a = to_burge_array(g);
                     if (!is_pv_free(a))
                         continue;
                     require(is_highest_weight<BurgeCrystalOps>(a, n) ==
                                 detail::is_initial_star_at_one(g),
                             "highest weight mismatch");
                     ++checked;
                 }
             notes << checked << " arrays";
         }});

    criteria.push_back(
        {"the five-column counterexample: shape (3,3,2,2), a PV-free four-column subsequence, "
         "longest PV-free subsequence four",
         [](std::ostringstream&) {
             BurgeArray a = BurgeArray::from_rows({4, 8, 8, 9, 9}, {1, 3, 2, 5, 2});
             Tableau t = encode(a);
             require(t.shape() == Partition({3, 3, 2, 2}), "shape mismatch");
             BurgeArray sub = subarray(a, {0, 1, 3, 4});
             require(is_pv_free(sub), "displayed subsequence not PV-free");
             require(encode(sub).shape() == Partition({4, 1, 1, 1, 1}),
                     "subsequence shape mismatch");
             require(longest_pv_free_subarray(a) == 4, "longest subsequence wrong");
             int largest_hook = t.shape().part(1) + conjugate(t.shape()).part(1) - 1;
             require(largest_hook == 6 && 2 * 4 > largest_hook,
                     "subsequence does not beat the largest contained hook");
         }});

    criteria.push_back(
        {"threshold dominance agrees with the classical inequalities on every weakly decreasing "
         "sequence with up to six entries of size up to five",
         [](std::ostringstream& notes) {
             std::uint64_t checked = 0;
             for (const auto& d : detail::weakly_decreasing_sequences(6, 5)) {
                 require(is_graphic(d) == erdos_gallai_oracle(d), "oracles disagree");
                 ++checked;
             }
             notes << checked << " sequences";
         }});

    for (std::size_t idx = 0; idx < criteria.size(); ++idx)
        run(static_cast<int>(idx + 1), criteria[idx]);

    if (failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
