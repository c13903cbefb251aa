#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "burge/correspondence.hpp"
#include "burge/crystal.hpp"
#include "burge/crystal_checks.hpp"
#include "burge/graph.hpp"
#include "burge/partition.hpp"
#include "burge/pvfree.hpp"
#include "burge/tableau.hpp"

namespace burge {

// Exponent vector (fixed variable count) -> coefficient.
using Monomials = std::map<std::vector<int>, long long>;

// Sum of x^wt(T) over all semistandard fillings of the shape in n variables.
inline Monomials schur_polynomial(const Partition& shape, int n) {
    if (n < 1)
        throw std::invalid_argument("Schur polynomials need at least one variable");
    Monomials out;
    for (const Tableau& t : enumerate_ssyt(shape, n)) {
        auto w = weight(t);
        w.resize(static_cast<std::size_t>(n), 0);
        ++out[w];
    }
    return out;
}

namespace detail {

// Threshold partitions of every even size contributing to n variables, by the
// filter generator, cross-checked against the direct construction. Nonzero
// contributions have length at most n, and a nonempty threshold partition has
// length exactly one more than its first part.
inline std::vector<Partition> threshold_partitions_for_variables(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n * (n - 1); m += 2) {
        std::vector<Partition> filtered;
        for (const Partition& p : all_partitions(m))
            if (is_threshold(p))
                filtered.push_back(p);
        std::sort(filtered.begin(), filtered.end());
        if (filtered != threshold_partitions(m))
            throw std::logic_error("threshold partition generators disagree");
        for (const Partition& p : filtered)
            if (p.length() <= n)
                out.push_back(p);
    }
    return out;
}

} // namespace detail

// Exact multiset identity: degree-sequence monomials of all simple graphs on
// [n] against 1 plus the Schur polynomials of all threshold partitions.
inline bool littlewood_check(int n, int cap = 6) {
    if (n < 1 || n > cap)
        throw std::invalid_argument("Littlewood check outside the configured range");
    Monomials lhs;
    for (const SimpleGraph& g : GraphEnumeration(n, cap))
        ++lhs[degree_sequence(g)];
    Monomials rhs;
    for (const Partition& p : detail::threshold_partitions_for_variables(n))
        for (const auto& [mono, coeff] : schur_polynomial(p, n))
            rhs[mono] += coeff;
    return lhs == rhs;
}

struct SweepReport {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::vector<SimpleGraph> counterexamples; // first few
};

// Hook shape against peak/valley freedom for every graph on [n].
inline SweepReport hook_equivalence_sweep(int n, bool disable_peak_check = false) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("exhaustive hook check capped at seven vertices");
    SweepReport report;
    for (const SimpleGraph& g : GraphEnumeration(n)) {
        BurgeArray a = to_burge_array(g);
        bool pv_free = disable_peak_check ? !find_valley(a).has_value() : is_pv_free(a);
        bool hook = is_hook(encode(a, Validate::fast).shape());
        ++report.checked;
        if (pv_free != hook) {
            ++report.mismatches;
            if (report.counterexamples.size() < 8)
                report.counterexamples.push_back(g);
        }
    }
    return report;
}

// Classical inequalities: even sum and prefix bounds.
inline bool erdos_gallai_oracle(std::vector<int> d) {
    long long sum = 0;
    for (int v : d) {
        if (v < 0)
            throw std::invalid_argument("degree sequences are nonnegative");
        sum += v;
    }
    if (sum % 2 != 0)
        return false;
    std::sort(d.begin(), d.end(), std::greater<int>());
    int n = static_cast<int>(d.size());
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += d[static_cast<std::size_t>(k - 1)];
        long long bound = static_cast<long long>(k) * (k - 1);
        for (int i = k + 1; i <= n; ++i)
            bound += std::min(d[static_cast<std::size_t>(i - 1)], k);
        if (prefix > bound)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

struct VerifyConfig {
    int max_n = 5;                   // exhaustive graph vertex bound
    int littlewood_max_n = 5;        // identity checked for 2..this
    int tableau_cells = 8;           // tableau-side round trip: cell bound
    int tableau_max_entry = 6;       //   and entry bound
    int star_max_n = 7;
    int stembridge_max_letter = 5;
    int graph_cap = 7;
    bool inject_disable_peak = false; // fault injection for mutation testing
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::vector<std::string> failures; // truncated at a few entries
    double millis = 0.0;

    void fail(const std::string& message) {
        passed = false;
        if (failures.size() < 8)
            failures.push_back(message);
    }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool all_passed() const {
        for (const auto& s : suites)
            if (!s.passed)
                return false;
        return true;
    }
};

namespace detail {

template <typename Fn>
SuiteResult timed_suite(const std::string& name, Fn&& body) {
    SuiteResult result;
    result.name = name;
    auto start = std::chrono::steady_clock::now();
    body(result);
    auto stop = std::chrono::steady_clock::now();
    result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
}

inline std::string describe(const SimpleGraph& g) {
    std::ostringstream os;
    os << "graph n=" << g.vertex_count() << " edges=";
    for (const Edge& e : g.edges())
        os << "(" << e.hi << "," << e.lo << ")";
    return os.str();
}

inline std::vector<int> iota_alphabet(int count) {
    std::vector<int> c(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        c[static_cast<std::size_t>(i)] = i + 1;
    return c;
}

// Hook threshold shapes with at most max_letter rows: (k, 1^k).
inline std::vector<Partition> hook_threshold_shapes(int max_letter) {
    std::vector<Partition> shapes;
    for (int k = 1; k + 1 <= max_letter; ++k) {
        std::vector<int> parts{k};
        parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
        shapes.push_back(Partition(std::move(parts)));
    }
    return shapes;
}

// All weakly decreasing sequences with at most max_len entries from [0, max_value].
inline std::vector<std::vector<int>> weakly_decreasing_sequences(int max_len, int max_value) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        out.push_back(cur);
        if (remaining == 0)
            return;
        for (int v = bound; v >= 1; --v) {
            cur.push_back(v);
            rec(remaining - 1, v);
            cur.pop_back();
        }
    };
    rec(max_len, max_value);
    return out;
}

// Expected small Burge crystals: vertex keys and labelled edges between keys.
struct ExpectedCrystal {
    Partition shape;
    int max_letter;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, int>> edges;
};

inline std::vector<ExpectedCrystal> expected_small_crystals() {
    std::vector<ExpectedCrystal> out;
    {
        ExpectedCrystal c;
        c.shape = Partition({2, 1, 1});
        c.max_letter = 4;
        c.vertices = {"24/13", "34/23", "24/12", "34/22", "34/13", "24/11", "34/21", "23/12",
                      "34/12", "34/11", "23/11", "33/21", "44/21", "44/31", "44/32"};
        c.edges = {
            {"24/13", "34/13", 2}, {"34/23", "44/32", 3}, {"24/12", "24/13", 2},
            {"34/22", "34/23", 2}, {"34/13", "34/23", 1}, {"34/13", "44/31", 3},
            {"24/11", "24/12", 1}, {"24/11", "34/11", 2}, {"34/21", "44/21", 3},
            {"23/12", "24/12", 3}, {"23/12", "33/21", 2}, {"34/12", "34/22", 1},
            {"34/11", "34/12", 1}, {"23/11", "24/11", 3}, {"23/11", "23/12", 1},
            {"33/21", "34/21", 3}, {"44/21", "44/31", 2}, {"44/31", "44/32", 1},
        };
        out.push_back(std::move(c));
    }
    {
        ExpectedCrystal c;
        c.shape = Partition({3, 1, 1, 1});
        c.max_letter = 4;
        c.vertices = {"234/111", "344/121", "234/113", "334/213", "344/221",
                      "234/123", "444/321", "234/112", "344/231", "234/122"};
        c.edges = {
            {"234/111", "234/112", 1}, {"344/121", "344/221", 1}, {"234/113", "344/121", 3},
            {"234/113", "234/123", 1}, {"334/213", "344/231", 3}, {"344/221", "344/231", 2},
            {"234/123", "334/213", 2}, {"234/123", "344/221", 3}, {"234/112", "234/113", 2},
            {"234/112", "234/122", 1}, {"344/231", "444/321", 3}, {"234/122", "234/123", 2},
        };
        out.push_back(std::move(c));
    }
    return out;
}

// Burge arrays of all graphs on [n] whose tableau has the given shape.
inline std::vector<BurgeArray> arrays_of_shape(int n, const Partition& shape, int cap = 7) {
    std::vector<BurgeArray> out;
    for (const SimpleGraph& g : GraphEnumeration(n, cap)) {
        BurgeArray a = to_burge_array(g);
        if (encode(a, Validate::fast).shape() == shape)
            out.push_back(std::move(a));
    }
    return out;
}

// Star with centre 1 whose leaves are exactly 2..k, everything above being
// singletons; the degree sequence is then weakly decreasing.
inline bool is_initial_star_at_one(const SimpleGraph& g) {
    int k = 1;
    for (const Edge& e : g.edges())
        if (e.lo != 1 || e.hi != ++k)
            return false;
    return true;
}

} // namespace detail

// --- individual suites -----------------------------------------------------

inline SuiteResult suite_burge_roundtrip(const VerifyConfig& cfg) {
    return detail::timed_suite("burge-roundtrip", [&](SuiteResult& r) {
        for (int n = 1; n <= cfg.max_n; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                Tableau t = encode(a); // full validation exercises every step
                ++r.checked;
                if (decode(t) != a)
                    r.fail("decode(encode) mismatch: " + detail::describe(g));
                if (from_burge_array(a, n) != g)
                    r.fail("array/graph round trip mismatch: " + detail::describe(g));
                if (!is_threshold(t.shape()))
                    r.fail("non-threshold shape: " + detail::describe(g));
                if (!dominates(t.shape(), degree_sequence(g)))
                    r.fail("degree sequence not dominated by shape: " + detail::describe(g));
                if (is_threshold_graph(g) && t.shape() != degree_partition(g))
                    r.fail("threshold graph shape differs from degree partition: " +
                           detail::describe(g));
                auto w = weight(t);
                auto d = degree_sequence(g);
                while (!d.empty() && d.back() == 0)
                    d.pop_back();
                if (!t.empty() && w != d)
                    r.fail("tableau weight differs from degree sequence: " + detail::describe(g));
            }
        // Tableau side: every threshold-shape filling decodes and re-encodes.
        for (int m = 0; m <= cfg.tableau_cells; m += 2)
            for (const Partition& shape : threshold_partitions(m))
                for (const Tableau& t : enumerate_ssyt(shape, cfg.tableau_max_entry)) {
                    ++r.checked;
                    if (encode(decode(t)) != t)
                        r.fail("encode(decode) mismatch on a tableau with " +
                               std::to_string(t.cell_count()) + " cells");
                }
    });
}

inline SuiteResult suite_hook_pv_equivalence(const VerifyConfig& cfg) {
    return detail::timed_suite("hook-pv-equivalence", [&](SuiteResult& r) {
        for (int n = 1; n <= cfg.max_n; ++n) {
            auto report = hook_equivalence_sweep(n, cfg.inject_disable_peak);
            r.checked += report.checked;
            if (!report.counterexamples.empty())
                r.fail("hook/PV mismatch at n=" + std::to_string(n) + ", first " +
                       detail::describe(report.counterexamples.front()));
        }
    });
}

inline SuiteResult suite_littlewood(const VerifyConfig& cfg) {
    return detail::timed_suite("littlewood-identity", [&](SuiteResult& r) {
        for (int n = 2; n <= cfg.littlewood_max_n; ++n) {
            ++r.checked;
            if (!littlewood_check(n))
                r.fail("identity fails in " + std::to_string(n) + " variables");
        }
    });
}

inline SuiteResult suite_standardization(const VerifyConfig& cfg) {
    return detail::timed_suite("standardization-intertwining", [&](SuiteResult& r) {
        // Words: standardization commutes with insertion.
        std::vector<Word> words{{}};
        for (int len = 1; len <= 5; ++len) {
            std::vector<Word> next;
            for (const Word& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int letter = 1; letter <= 4; ++letter) {
                        Word ext = w;
                        ext.push_back(letter);
                        next.push_back(ext);
                    }
            for (const Word& w : next) {
                auto c = detail::iota_alphabet(static_cast<int>(w.size()));
                ++r.checked;
                if (standardize_tableau(schensted_p(w), c) != schensted_p(standardize_word(w, c)))
                    r.fail("word standardization fails to intertwine");
            }
            words.insert(words.end(), next.begin(), next.end());
        }
        // Arrays: standardization commutes with the Burge correspondence.
        int bound = std::min(cfg.max_n, 5);
        for (int n = 1; n <= bound; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                auto c = detail::iota_alphabet(2 * a.columns());
                ++r.checked;
                if (encode(standardize_burge_array(a, c)) != standardize_tableau(encode(a), c))
                    r.fail("array standardization fails to intertwine: " + detail::describe(g));
            }
    });
}

inline SuiteResult suite_operator_intertwining(const VerifyConfig& cfg) {
    return detail::timed_suite("operator-intertwining", [&](SuiteResult& r) {
        for (int n = 1; n <= cfg.max_n; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                if (!is_pv_free(a))
                    continue;
                Tableau t = encode(a, Validate::fast);
                for (int i = 1; i < n; ++i) {
                    ++r.checked;
                    auto fa = f_burge(a, i);
                    auto ft = f_tableau(t, i);
                    if (fa.has_value() != ft.has_value())
                        r.fail("lowering definedness differs: i=" + std::to_string(i) + " " +
                               detail::describe(g));
                    else if (fa) {
                        if (encode(*fa, Validate::fast) != *ft)
                            r.fail("lowering images differ: i=" + std::to_string(i) + " " +
                                   detail::describe(g));
                        if (!is_pv_free(*fa))
                            r.fail("lowering image not PV-free: " + detail::describe(g));
                        auto back = e_burge(*fa, i);
                        if (!back || *back != a)
                            r.fail("raising fails to invert lowering: " + detail::describe(g));
                    }
                    auto ea = e_burge(a, i);
                    auto et = e_tableau(t, i);
                    if (ea.has_value() != et.has_value())
                        r.fail("raising definedness differs: i=" + std::to_string(i) + " " +
                               detail::describe(g));
                    else if (ea) {
                        if (encode(*ea, Validate::fast) != *et)
                            r.fail("raising images differ: i=" + std::to_string(i) + " " +
                                   detail::describe(g));
                        if (!is_pv_free(*ea))
                            r.fail("raising image not PV-free: " + detail::describe(g));
                        auto back = f_burge(*ea, i);
                        if (!back || *back != a)
                            r.fail("lowering fails to invert raising: " + detail::describe(g));
                    }
                }
            }
    });
}

inline SuiteResult suite_reading_word_pairing(const VerifyConfig& cfg) {
    return detail::timed_suite("reading-word-pairing", [&](SuiteResult& r) {
        for (int n = 1; n <= cfg.max_n; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                if (!is_pv_free(a))
                    continue;
                for (int i = 1; i < n; ++i) {
                    ++r.checked;
                    if (burge_reading_pair_count(a, i) > 1)
                        r.fail("restricted reading word pairs twice: i=" + std::to_string(i) +
                               " " + detail::describe(g));
                }
            }
    });
}

inline SuiteResult suite_reading_word_knuth(const VerifyConfig& cfg) {
    return detail::timed_suite("reading-word-knuth", [&](SuiteResult& r) {
        int bound = std::min(cfg.max_n, 5);
        for (int n = 1; n <= bound; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                if (!is_pv_free(a))
                    continue;
                Tableau t = encode(a, Validate::fast);
                for (int i = 1; i < n; ++i) {
                    ++r.checked;
                    if (!knuth_equivalent(burge_reading_word(a, i),
                                          restricted_reading_word(t, i)))
                        r.fail("array and tableau reading words differ: i=" + std::to_string(i) +
                               " " + detail::describe(g));
                }
            }
    });
}

inline SuiteResult suite_tree_and_star(const VerifyConfig& cfg) {
    return detail::timed_suite("tree-and-star", [&](SuiteResult& r) {
        for (int n = 2; n <= cfg.max_n; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                if (!is_connected(g) || g.edge_count() == 0)
                    continue;
                ++r.checked;
                if (is_hook_graph(g) &&
                    (g.edge_count() != g.vertex_count() - 1 || !is_acyclic(g)))
                    r.fail("connected hook-graph is not a tree: " + detail::describe(g));
            }
        for (int n = 1; n <= cfg.star_max_n; ++n)
            for (int center = 1; center <= n; ++center) {
                ++r.checked;
                if (!is_hook_graph(star(n, center)))
                    r.fail("star graph not hook: n=" + std::to_string(n) +
                           " center=" + std::to_string(center));
            }
    });
}

inline SuiteResult suite_highest_weight_stars(const VerifyConfig& cfg) {
    return detail::timed_suite("highest-weight-stars", [&](SuiteResult& r) {
        for (int n = 1; n <= cfg.max_n; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                if (!is_pv_free(a))
                    continue;
                ++r.checked;
                bool hw = is_highest_weight<BurgeCrystalOps>(a, n);
                if (hw != detail::is_initial_star_at_one(g))
                    r.fail("highest weight does not match star-at-one: " + detail::describe(g));
            }
    });
}

inline SuiteResult suite_extremal_threshold(const VerifyConfig& cfg) {
    return detail::timed_suite("extremal-threshold", [&](SuiteResult& r) {
        int bound = std::min(cfg.max_n, 5);
        for (int n = 1; n <= bound; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray a = to_burge_array(g);
                if (!is_pv_free(a))
                    continue;
                ++r.checked;
                bool extremal = is_extremal<BurgeCrystalOps>(a, n);
                if (extremal != is_threshold(degree_partition(g)))
                    r.fail("extremal does not match threshold degree partition: " +
                           detail::describe(g));
            }
    });
}

inline SuiteResult suite_crystal_axioms(const VerifyConfig& cfg) {
    return detail::timed_suite("crystal-axioms", [&](SuiteResult& r) {
        for (int m = 2; m <= cfg.stembridge_max_letter; ++m)
            for (const Partition& shape : detail::hook_threshold_shapes(m)) {
                // Arrays with letters in [m] of this shape.
                auto seeds = detail::arrays_of_shape(m, shape, cfg.graph_cap);
                auto burge_crystal = generate_crystal<BurgeCrystalOps>(seeds, m);
                auto burge_report = check_stembridge(burge_crystal);
                ++r.checked;
                if (!burge_report.ok())
                    r.fail("array crystal violates axioms: shape with " +
                           std::to_string(shape.size()) + " cells, m=" + std::to_string(m) +
                           ", first " + burge_report.violations.front().axiom);
                auto tab_crystal =
                    generate_crystal<TableauCrystalOps>(enumerate_ssyt(shape, m), m);
                auto tab_report = check_stembridge(tab_crystal);
                ++r.checked;
                if (!tab_report.ok())
                    r.fail("tableau crystal violates axioms: shape with " +
                           std::to_string(shape.size()) + " cells, m=" + std::to_string(m));
                if (!crystal_isomorphic(burge_crystal, tab_crystal))
                    r.fail("array and tableau crystals not isomorphic at m=" + std::to_string(m));
            }
        // Mutation control: corrupting one edge label must be caught.
        auto expected = detail::expected_small_crystals().front();
        auto seeds = detail::arrays_of_shape(4, expected.shape, cfg.graph_cap);
        auto crystal = generate_crystal<BurgeCrystalOps>(seeds, expected.max_letter);
        if (!crystal.edges.empty()) {
            auto corrupted = crystal;
            corrupted.edges.front().label =
                corrupted.edges.front().label % (corrupted.max_letter - 1) + 1;
            ++r.checked;
            if (check_stembridge(corrupted).ok())
                r.fail("corrupted crystal passed the axiom check");
        }
    });
}

inline SuiteResult suite_crystal_census(const VerifyConfig& cfg) {
    return detail::timed_suite("crystal-census", [&](SuiteResult& r) {
        for (const auto& expected : detail::expected_small_crystals()) {
            auto seeds = detail::arrays_of_shape(expected.shape.length(), expected.shape,
                                                 cfg.graph_cap);
            auto crystal = generate_crystal<BurgeCrystalOps>(seeds, expected.max_letter);
            ++r.checked;
            std::set<std::string> got_vertices;
            for (const auto& v : crystal.vertices)
                got_vertices.insert(BurgeCrystalOps::key(v));
            std::set<std::string> want_vertices(expected.vertices.begin(),
                                                expected.vertices.end());
            if (got_vertices != want_vertices)
                r.fail("crystal vertex set mismatch (" + std::to_string(got_vertices.size()) +
                       " vs " + std::to_string(want_vertices.size()) + ")");
            std::set<std::tuple<std::string, std::string, int>> got_edges;
            for (const auto& e : crystal.edges)
                got_edges.emplace(
                    BurgeCrystalOps::key(crystal.vertices[static_cast<std::size_t>(e.src)]),
                    BurgeCrystalOps::key(crystal.vertices[static_cast<std::size_t>(e.dst)]),
                    e.label);
            std::set<std::tuple<std::string, std::string, int>> want_edges(
                expected.edges.begin(), expected.edges.end());
            if (got_edges != want_edges)
                r.fail("crystal edge set mismatch (" + std::to_string(got_edges.size()) + " vs " +
                       std::to_string(want_edges.size()) + ")");
            // The tableau crystal on the same shape is isomorphic through the
            // Burge correspondence, vertex by vertex.
            auto tab_crystal = generate_crystal<TableauCrystalOps>(
                enumerate_ssyt(expected.shape, expected.max_letter), expected.max_letter);
            auto mapping = crystal_isomorphic(crystal, tab_crystal);
            ++r.checked;
            if (!mapping) {
                r.fail("array crystal not isomorphic to the tableau crystal");
            } else {
                for (std::size_t v = 0; v < crystal.vertices.size(); ++v)
                    if (encode(crystal.vertices[v], Validate::fast) !=
                        tab_crystal.vertices[static_cast<std::size_t>((*mapping)[v])])
                        r.fail("isomorphism does not agree with the Burge correspondence");
            }
            // Decoding the tableau family reproduces the same seed set.
            std::set<std::string> decoded;
            for (const Tableau& t : enumerate_ssyt(expected.shape, expected.max_letter))
                decoded.insert(BurgeCrystalOps::key(decode(t)));
            ++r.checked;
            if (decoded != want_vertices)
                r.fail("decoded tableau family differs from the graph enumeration");
        }
    });
}

inline SuiteResult suite_pv_subsequence(const VerifyConfig& cfg) {
    return detail::timed_suite("pv-subsequence", [&](SuiteResult& r) {
        // Fixed counterexample instance: the longest PV-free subsequence can
        // exceed the largest hook contained in the shape.
        BurgeArray a = BurgeArray::from_rows({4, 8, 8, 9, 9}, {1, 3, 2, 5, 2});
        Tableau t = encode(a);
        ++r.checked;
        if (t.shape() != Partition({3, 3, 2, 2}))
            r.fail("fixed instance has the wrong shape");
        BurgeArray sub = subarray(a, {0, 1, 3, 4});
        if (!is_pv_free(sub))
            r.fail("selected four-column subsequence is not PV-free");
        if (encode(sub).shape() != Partition({4, 1, 1, 1, 1}))
            r.fail("selected subsequence has the wrong hook shape");
        if (longest_pv_free_subarray(a) != 4)
            r.fail("longest PV-free subsequence is not four columns");
        // Largest hook inside (3,3,2,2) spans 6 cells; the subsequence's hook
        // spans 8, strictly more.
        Partition shape = t.shape();
        int largest_hook_cells = shape.part(1) + conjugate(shape).part(1) - 1;
        if (largest_hook_cells != 6 || 2 * longest_pv_free_subarray(a) <= largest_hook_cells)
            r.fail("subsequence bound does not exceed the largest contained hook");

        // Column deletion keeps every Burge-array invariant, and every column
        // subsequence still satisfies the hook equivalence as an array in its
        // own right. PV-freeness itself is NOT monotone under deletion: peak
        // minimality is re-derived inside the subsequence, so removing the
        // minimal middle column can expose a peak. The fixed witness below
        // pins that behaviour down.
        BurgeArray witness = BurgeArray::from_rows({3, 4, 5, 5}, {1, 2, 3, 1});
        ++r.checked;
        if (!is_pv_free(witness))
            r.fail("witness array should be PV-free");
        if (is_pv_free(subarray(witness, {0, 2, 3})))
            r.fail("witness subsequence should have a peak");
        if (find_peak(subarray(witness, {0, 2, 3})) !=
            std::optional<IndexTriple>{IndexTriple{1, 2, 3}})
            r.fail("witness subsequence peak is not the expected triple");

        int bound = std::min(cfg.max_n, 5);
        for (int n = 1; n <= bound; ++n)
            for (const SimpleGraph& g : GraphEnumeration(n, cfg.graph_cap)) {
                BurgeArray arr = to_burge_array(g);
                int r_cols = arr.columns();
                if (r_cols > 10)
                    continue;
                for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r_cols); ++mask) {
                    std::vector<int> cols;
                    for (int k = 0; k < r_cols; ++k)
                        if (mask & (std::uint32_t{1} << k))
                            cols.push_back(k);
                    ++r.checked;
                    BurgeArray s;
                    try {
                        s = subarray(arr, cols);
                    } catch (const std::invalid_argument&) {
                        r.fail("column deletion broke the array invariants: " +
                               detail::describe(g));
                        continue;
                    }
                    if (is_pv_free(s) != is_hook(encode(s, Validate::fast).shape()))
                        r.fail("subsequence breaks the hook equivalence: " +
                               detail::describe(g));
                }
            }
    });
}

inline SuiteResult suite_graphic_sequences(const VerifyConfig& cfg) {
    return detail::timed_suite("graphic-sequences", [&](SuiteResult& r) {
        for (const auto& d : detail::weakly_decreasing_sequences(6, 5)) {
            ++r.checked;
            if (is_graphic(d) != erdos_gallai_oracle(d)) {
                std::ostringstream os;
                os << "threshold-dominance and inequality oracles disagree on (";
                for (int v : d)
                    os << v << ",";
                os << ")";
                r.fail(os.str());
            }
        }
        // Against exhaustive realizability on five vertices.
        std::set<std::vector<int>> realized;
        for (const SimpleGraph& g : GraphEnumeration(5, cfg.graph_cap)) {
            auto d = degree_sequence(g);
            std::sort(d.begin(), d.end(), std::greater<int>());
            while (!d.empty() && d.back() == 0)
                d.pop_back();
            realized.insert(d);
        }
        for (const auto& d : detail::weakly_decreasing_sequences(5, 4)) {
            auto trimmed = d;
            while (!trimmed.empty() && trimmed.back() == 0)
                trimmed.pop_back();
            ++r.checked;
            if (is_graphic(d) != (realized.count(trimmed) > 0))
                r.fail("graphic test disagrees with exhaustive realizability");
        }
    });
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "burge-roundtrip",       "hook-pv-equivalence",  "littlewood-identity",
        "standardization-intertwining", "operator-intertwining", "reading-word-pairing",
        "reading-word-knuth",    "tree-and-star",        "highest-weight-stars",
        "extremal-threshold",    "crystal-axioms",       "crystal-census",
        "pv-subsequence",        "graphic-sequences",
    };
    return names;
}

inline SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "burge-roundtrip")
        return suite_burge_roundtrip(cfg);
    if (name == "hook-pv-equivalence")
        return suite_hook_pv_equivalence(cfg);
    if (name == "littlewood-identity")
        return suite_littlewood(cfg);
    if (name == "standardization-intertwining")
        return suite_standardization(cfg);
    if (name == "operator-intertwining")
        return suite_operator_intertwining(cfg);
    if (name == "reading-word-pairing")
        return suite_reading_word_pairing(cfg);
    if (name == "reading-word-knuth")
        return suite_reading_word_knuth(cfg);
    if (name == "tree-and-star")
        return suite_tree_and_star(cfg);
    if (name == "highest-weight-stars")
        return suite_highest_weight_stars(cfg);
    if (name == "extremal-threshold")
        return suite_extremal_threshold(cfg);
    if (name == "crystal-axioms")
        return suite_crystal_axioms(cfg);
    if (name == "crystal-census")
        return suite_crystal_census(cfg);
    if (name == "pv-subsequence")
        return suite_pv_subsequence(cfg);
    if (name == "graphic-sequences")
        return suite_graphic_sequences(cfg);
    throw std::invalid_argument("unknown verification suite: " + name);
}

inline VerifyReport run_all(const VerifyConfig& cfg = {}) {
    VerifyReport report;
    for (const std::string& name : suite_names())
        report.suites.push_back(run_suite(name, cfg));
    return report;
}

} // namespace burge
