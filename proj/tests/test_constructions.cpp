#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "radiolab/constructions.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/exact_solver.hpp"
#include "radiolab/io.hpp"
#include "support.hpp"

using namespace radiolab;

namespace {

// Spans written out from the closed forms, evaluated independently here.
long long petersen_span(long long n) { return 5 * n * n - n + (n % 2 == 0 ? 1 : 6); }
long long km_span(long long n, long long m) {
    return n % 2 == 0 ? (m * n * n - 2 * n + 2) / 2 : (m * n * n - 2 * n + m + 2) / 2;
}

void check_scheme(const SchemeResult& s, long long expected_span, int expected_jump) {
    const auto& g = s.graph;
    const DistanceMatrix dm(g);
    const auto ref = oracle::fw(g);
    CHECK(s.labeling.span() == expected_span);
    CHECK(s.claimed_span == expected_span);
    CHECK(verify_radio(g, dm, s.labeling).valid);
    CHECK(oracle::radio_ok(ref, {s.labeling.labels().begin(), s.labeling.labels().end()}));
    CHECK(ordering_of(s.labeling) == s.ordering);

    const auto dec = decompose(g, dm, s.center);
    CHECK(canonical_labeling(g, dm, dec, s.ordering, s.jumps) == s.labeling);
    const auto t2 = check_theorem2(g, dm, dec, s.labeling);
    CHECK(t2.radio_valid);
    CHECK(t2.cond_a_ok());
    CHECK(t2.cond_b_ok);
    CHECK(t2.first_label_zero);
    const long long bound = lower_bound(g, dm, dec).bound;
    if (s.n % 2 == 0) {
        CHECK(t2.cond_c_failures.empty());
        CHECK(s.jumps.empty());
        CHECK(bound == expected_span);
    } else {
        REQUIRE(t2.cond_c_failures.size() == 1);
        CHECK(t2.cond_c_failures[0] == IncrementDeviation{expected_jump, 1});
        REQUIRE(s.jumps.size() == 1);
        CHECK(s.jumps[0] == Jump{expected_jump, 1});
        CHECK(bound + 1 == expected_span);
    }
}

// Even schemes alternate sides of the center and step between factor
// vertices at distance k - 1.
void check_even_pairs(const SchemeResult& s, int factor_step) {
    const auto& g = s.graph;
    const int half = s.n / 2;
    for (int t = 0; t + 1 < s.ordering.size(); ++t) {
        const Coord a = g.coord(s.ordering[t]), b = g.coord(s.ordering[t + 1]);
        CHECK((a.i <= half) != (b.i <= half));
        const Vertex fa = a.j - 1, fb = b.j - 1;
        const Graph& f = s.family == Family::pn_petersen ? petersen() : complete(s.m);
        CHECK(distances(f)(fa, fb) == factor_step);
    }
}

}  // namespace

TEST_CASE("the n = 5, 6, 7 fixtures are reproduced cell for cell") {
    const std::tuple<const char*, int> tables[] = {
        {"table1_p6_petersen.csv", 6}, {"table2_p5_petersen.csv", 5}, {"table3_p7_petersen.csv", 7}};
    for (const auto& [file, n] : tables) {
        auto expected = oracle::load_fixture(file, "pn-petersen", n, 10);
        validate_fixture(expected);
        auto s = construct_pn_petersen(n);
        CHECK(s.method == ConstructionMethod::closed_form);
        auto diffs = compare_fixtures(expected, fixture_from_scheme(s));
        CHECK(diffs.empty());
    }
}

TEST_CASE("P_n x Petersen, n = 3..16") {
    for (int n = 3; n <= 16; ++n) {
        CAPTURE(n);
        auto s = construct_pn_petersen(n);
        const int p = 10 * n;
        const int jump = n % 2 == 0 ? 0 : (n % 4 == 1 ? p - 3 * n : p - n);
        check_scheme(s, petersen_span(n), jump);
        if (n % 2 == 0) check_even_pairs(s, 2);
        if (n % 2 == 1) CHECK(s.center.size() == 10);
        if (n % 2 == 0) CHECK(s.center.size() == 20);
    }
}

TEST_CASE("odd closed form holds for n = 5, 7 and is repaired for n = 3, 9, 11") {
    CHECK(construct_pn_petersen(5).method == ConstructionMethod::closed_form);
    CHECK(construct_pn_petersen(7).method == ConstructionMethod::closed_form);
    for (int n : {3, 9, 11}) {
        auto a = construct_pn_petersen(n);
        auto b = construct_pn_petersen(n);
        CHECK(a.method == ConstructionMethod::repaired);
        CHECK(a.ordering == b.ordering);  // seeded, deterministic
    }
}

TEST_CASE("repair keeps the column schedule and fixes a scrambled start") {
    auto s = construct_pn_petersen(5);
    const auto& g = s.graph;
    const DistanceMatrix dm(g);
    const auto dec = decompose(g, dm, s.center);
    std::mt19937_64 rng(1);
    auto seq = s.ordering.sequence();
    // shuffle which vertex of a column sits at each of that column's slots
    for (int col = 1; col <= 5; ++col) {
        std::vector<int> slots;
        for (int t = 0; t < static_cast<int>(seq.size()); ++t)
            if (g.coord(seq[t]).i == col) slots.push_back(t);
        std::vector<Vertex> members;
        for (int t : slots) members.push_back(seq[t]);
        std::shuffle(members.begin(), members.end(), rng);
        for (std::size_t q = 0; q < slots.size(); ++q) seq[slots[q]] = members[q];
    }
    Ordering scrambled(seq);
    REQUIRE_FALSE(verify_radio(g, dm, canonical_labeling(g, dm, dec, scrambled, s.jumps)).valid);
    auto fixed = repair_column_coordinates(g, dm, dec, scrambled, s.jumps);
    REQUIRE(fixed.has_value());
    for (int t = 0; t < fixed->size(); ++t) CHECK(g.coord((*fixed)[t]).i == g.coord(seq[t]).i);
    auto lab = canonical_labeling(g, dm, dec, *fixed, s.jumps);
    CHECK(verify_radio(g, dm, lab).valid);
    CHECK(lab.span() == 126);
    CHECK(check_theorem2(g, dm, dec, lab).cond_a_ok());

    auto plain = petersen();
    auto pdm = distances(plain);
    CHECK_THROWS_AS(repair_column_coordinates(plain, pdm, decompose(plain, pdm, {0}), Ordering({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), {}),
                    InputError);
}

TEST_CASE("P_n x K_m over n = 4..13, m = 3..8") {
    for (int n = 4; n <= 13; ++n)
        for (int m = 3; m <= 8; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            auto s = construct_pn_km(n, m);
            CHECK(s.method == ConstructionMethod::closed_form);
            check_scheme(s, km_span(n, m), n % 2 ? n * m - n : 0);
            if (n % 2 == 0) check_even_pairs(s, 1);
        }
}

TEST_CASE("P_n x K_m examples") {
    CHECK(construct_pn_km(4, 3).labeling.span() == 21);
    CHECK(construct_pn_km(5, 3).labeling.span() == 35);
    CHECK(construct_pn_km(6, 4).labeling.span() == 67);
    CHECK(pn_km_radio_number(5, 3) == 35);
    CHECK(pn_petersen_radio_number(6) == 175);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(construct_pn_petersen(2), InputError);
    CHECK_THROWS_AS(construct_pn_km(3, 3), InputError);
    CHECK_THROWS_AS(construct_pn_km(4, 2), InputError);
    CHECK_THROWS_AS(parse_family("pn-cycle"), InputError);
    CHECK(parse_family("pn-km") == Family::pn_km);
}

TEST_CASE("improved_odd_bound") {
    CHECK(improved_odd_bound(Family::pn_petersen, 5) == 126);
    CHECK(improved_odd_bound(Family::pn_km, 5, 3) == 35);
    CHECK(improved_odd_bound(Family::pn_petersen, 7) == 244);
    CHECK_THROWS_AS(improved_odd_bound(Family::pn_petersen, 6), InputError);
    CHECK_THROWS_AS(improved_odd_bound(Family::pn_km, 5, 2), InputError);
    CHECK_THROWS_AS(improved_odd_bound(Family::pn_petersen, 1), InputError);
    // one more than the level bound of the middle column
    for (int n = 3; n <= 11; n += 2) {
        auto g = cartesian_product(path(n), petersen());
        auto dm = distances(g);
        CHECK(improved_odd_bound(Family::pn_petersen, n) ==
              lower_bound(g, dm, decompose(g, dm, pn_center(g, n))).bound + 1);
    }
    for (int n = 5; n <= 11; n += 2)
        for (int m = 3; m <= 6; ++m) {
            auto g = cartesian_product(path(n), complete(m));
            auto dm = distances(g);
            CHECK(improved_odd_bound(Family::pn_km, n, m) ==
                  lower_bound(g, dm, decompose(g, dm, pn_center(g, n))).bound + 1);
        }
}

TEST_CASE("certify_gap") {
    SUBCASE("P4 x K3, two middle columns") {
        auto g = cartesian_product(path(4), complete(3));
        auto dm = distances(g);
        auto dec = decompose(g, dm, pn_center(g, 4));
        auto cert = certify_gap(g, dm, dec, 10'000'000);
        CHECK(cert.bound == 21);
        REQUIRE(cert.verdict == GapVerdict::bound_achievable);
        CHECK(cert.witness->span() == 21);
        CHECK(verify_radio(g, dm, *cert.witness).valid);
        CHECK(check_theorem2(g, dm, dec, *cert.witness).holds());
    }
    SUBCASE("K4, center = V") {
        auto g = complete(4);
        auto dm = distances(g);
        auto cert = certify_gap(g, dm, decompose(g, dm, {0, 1, 2, 3}), 1000);
        REQUIRE(cert.verdict == GapVerdict::bound_achievable);
        auto sorted = cert.witness->labels();
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<Label>{0, 1, 2, 3});
    }
    SUBCASE("K1,3 with the hub as center agrees with the exact solver") {
        auto g = star(3);
        auto dm = distances(g);
        auto dec = decompose(g, dm, {0});
        auto cert = certify_gap(g, dm, dec, 100000);
        CHECK(cert.bound == 4);
        const auto rn = exact_radio_number(g, dm).radio_number;
        CHECK(rn == oracle::brute_force_radio_number(oracle::fw(g)));
        if (cert.verdict == GapVerdict::bound_achievable)
            CHECK(rn == cert.bound);
        else
            CHECK((cert.verdict == GapVerdict::bound_unachievable && rn > cert.bound));
    }
    SUBCASE("odd P5 x K3 cannot reach the level bound") {
        auto g = cartesian_product(path(5), complete(3));
        auto dm = distances(g);
        auto cert = certify_gap(g, dm, decompose(g, dm, pn_center(g, 5)), 50'000'000);
        CHECK(cert.bound == 34);
        CHECK(cert.verdict == GapVerdict::bound_unachievable);
    }
    SUBCASE("tiny budget is inconclusive") {
        auto g = cartesian_product(path(5), complete(3));
        auto dm = distances(g);
        auto cert = certify_gap(g, dm, decompose(g, dm, pn_center(g, 5)), 10);
        CHECK(cert.verdict == GapVerdict::budget_exhausted);
        CHECK_FALSE(cert.witness.has_value());
    }
}

TEST_CASE("search_ordering") {
    SUBCASE("target below the bound is rejected") {
        auto g = cartesian_product(path(6), petersen());
        auto dm = distances(g);
        auto res = search_ordering(g, dm, decompose(g, dm, pn_center(g, 6)), 174, 1000);
        CHECK(res.rejected);
        CHECK_FALSE(res.ordering.has_value());
        CHECK(res.nodes == 0);
    }
    SUBCASE("P4 x K3 reaches 21") {
        auto g = cartesian_product(path(4), complete(3));
        auto dm = distances(g);
        auto res = search_ordering(g, dm, decompose(g, dm, pn_center(g, 4)), 21, 10'000'000);
        REQUIRE(res.ordering.has_value());
        CHECK(res.labeling.span() <= 21);
        CHECK(verify_radio(g, dm, res.labeling).valid);
    }
    SUBCASE("P5 x K3 reaches 35 with one surplus step") {
        auto g = cartesian_product(path(5), complete(3));
        auto dm = distances(g);
        auto dec = decompose(g, dm, pn_center(g, 5));
        auto res = search_ordering(g, dm, dec, 35, 50'000'000);
        REQUIRE(res.ordering.has_value());
        CHECK(res.labeling.span() == 35);
        CHECK(verify_radio(g, dm, res.labeling).valid);
        Label surplus = 0;
        for (const auto& dev : check_theorem2(g, dm, dec, res.labeling).cond_c_failures) surplus += dev.deviation;
        CHECK(surplus <= 1);
    }
}
