#include <doctest.h>

#include "burge/verify.hpp"

using namespace burge;

TEST_CASE("Schur polynomials by tableau enumeration") {
    Monomials single = schur_polynomial(Partition({1}), 2);
    CHECK(single == Monomials{{{1, 0}, 1}, {{0, 1}, 1}});
    Monomials two_one = schur_polynomial(Partition({2, 1}), 2);
    CHECK(two_one == Monomials{{{2, 1}, 1}, {{1, 2}, 1}});
    Monomials empty = schur_polynomial(Partition(), 3);
    CHECK(empty == Monomials{{{0, 0, 0}, 1}});
}

TEST_CASE("Littlewood identity at small variable counts") {
    CHECK(littlewood_check(2));
    CHECK(littlewood_check(3));
    CHECK(littlewood_check(4));
    CHECK_THROWS_AS(littlewood_check(7), std::invalid_argument);
}

TEST_CASE("hook equivalence sweep") {
    auto one = hook_equivalence_sweep(1);
    CHECK(one.checked == 1);
    CHECK(one.mismatches == 0);
    auto four = hook_equivalence_sweep(4);
    CHECK(four.checked == 64);
    CHECK(four.mismatches == 0);
}

TEST_CASE("disabling the peak scan breaks the sweep") {
    auto report = hook_equivalence_sweep(4, true);
    CHECK(report.mismatches > 0);
}

TEST_CASE("inequality oracle") {
    CHECK(erdos_gallai_oracle({3, 2, 2, 1}));
    CHECK_FALSE(erdos_gallai_oracle({3, 3}));
    CHECK(erdos_gallai_oracle({0, 0, 0}));
    CHECK_FALSE(erdos_gallai_oracle({1}));
}

TEST_CASE("threshold dominance matches the inequality oracle") {
    for (const auto& d : detail::weakly_decreasing_sequences(6, 5))
        CHECK(is_graphic(d) == erdos_gallai_oracle(d));
}

TEST_CASE("full harness passes at a reduced bound") {
    VerifyConfig cfg;
    cfg.max_n = 4;
    cfg.littlewood_max_n = 4;
    cfg.star_max_n = 5;
    cfg.stembridge_max_letter = 4;
    auto report = run_all(cfg);
    for (const auto& suite : report.suites) {
        INFO(suite.name);
        CHECK(suite.passed);
        CHECK(suite.checked > 0);
    }
    CHECK(report.all_passed());
    CHECK(report.suites.size() == suite_names().size());
}

TEST_CASE("fault injection makes the hook suite fail") {
    VerifyConfig cfg;
    cfg.max_n = 4;
    cfg.inject_disable_peak = true;
    auto suite = run_suite("hook-pv-equivalence", cfg);
    CHECK_FALSE(suite.passed);
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("no-such-suite", VerifyConfig{}), std::invalid_argument);
}
