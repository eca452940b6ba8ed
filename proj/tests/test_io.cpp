#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "radiolab/errors.hpp"
#include "radiolab/io.hpp"
#include "support.hpp"

using namespace radiolab;

namespace {

Graph reread(const Graph& g) {
    std::stringstream ss;
    write_edge_list(ss, g);
    return read_edge_list(ss);
}

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace

TEST_CASE("edge list round trips") {
    for (const auto& g : {petersen(), path(1), wheel(5), cartesian_product(path(6), petersen()),
                          cartesian_product(path(4), complete(3))}) {
        auto h = reread(g);
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edges() == g.edges());
        CHECK(h.coords() == g.coords());
        // idempotent text
        std::stringstream a, b;
        write_edge_list(a, g);
        write_edge_list(b, h);
        CHECK(a.str() == b.str());
    }
    std::stringstream one;
    write_edge_list(one, path(1));
    CHECK(one.str() == "1 0\n");
    std::stringstream pet;
    write_edge_list(pet, petersen());
    int lines = 0;
    for (std::string l; std::getline(pet, l);) ++lines;
    CHECK(lines == 16);
}

TEST_CASE("edge list parsing") {
    auto g = parse("# triangle\n3 3\n0 1\n1 2  # last\n\n2 0\n");
    CHECK(g.edge_count() == 3);
    auto c = parse("2 1\n0 1\ncoords\n1 1 2\n0 1 1\n");
    CHECK(c.coord(1) == Coord{1, 2});
    CHECK_THROWS_AS(parse(""), InputError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 1\n0 x\n"), InputError);
    CHECK_THROWS_AS(parse("2 1\n0 1 5\n"), InputError);
    CHECK_THROWS_AS(parse("3 1\n0 1\n"), InputError);  // disconnected
    CHECK_THROWS_AS(parse("2 1\n0 1\n1 0\n"), InputError);
    CHECK_THROWS_AS(parse("2 1\n0 1\ncoords\n0 1 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 1\n0 1\ncoords\n0 1 1\n0 1 2\n"), InputError);
}

TEST_CASE("labeling JSON round trip") {
    auto g = cartesian_product(path(3), complete(3));
    Labeling lab({0, 5, 10, 2, 7, 12, 4, 9, 14});
    auto j = labeling_to_json(g, lab);
    CHECK(j["span"] == 14);
    CHECK(j["labels"][0]["vertex"] == 0);
    CHECK(j["labels"][1]["label"] == 2);
    CHECK(j["labels"][1]["coord"] == json::array({2, 1}));
    CHECK(labeling_from_json(j, g) == lab);

    // coordinates alone name the vertex
    json by_coord = j;
    for (auto& e : by_coord["labels"]) e.erase("vertex");
    CHECK(labeling_from_json(by_coord, g) == lab);

    json missing = j;
    missing["labels"].erase(missing["labels"].begin());
    CHECK_THROWS_AS(labeling_from_json(missing, g), InputError);
    json dup = j;
    dup["labels"][1]["vertex"] = 0;
    CHECK_THROWS_AS(labeling_from_json(dup, g), InputError);
    CHECK_THROWS_AS(labeling_from_json(json::object(), g), InputError);
    json neg = j;
    neg["labels"][0]["label"] = -1;
    CHECK_THROWS_AS(labeling_from_json(neg, g), InputError);
    json wrong_type = j;
    wrong_type["labels"][0]["label"] = "zero";
    CHECK_THROWS_AS(labeling_from_json(wrong_type, g), InputError);
}

TEST_CASE("bound report JSON fields") {
    auto g = cartesian_product(path(6), petersen());
    auto dm = distances(g);
    std::vector<Vertex> center;
    for (int c : {3, 4})
        for (Vertex v : g.column(c)) center.push_back(v);
    auto j = to_json(lower_bound(g, dm, decompose(g, dm, center)));
    for (const char* key : {"bound", "p", "d", "k", "delta", "h", "weight", "terms", "center"}) CHECK(j.contains(key));
    CHECK(j["bound"] == 175);
    CHECK(j["terms"]["p_minus_1"] == 59);
    CHECK(j["terms"]["d_minus_k_plus_1"] == 5);
    CHECK(j["terms"]["delta"] == 0);
    CHECK(j["terms"]["twice_weight"] == 120);
}

TEST_CASE("scheme JSON is a labeling JSON") {
    auto s = construct_pn_petersen(5);
    auto j = to_json(s);
    CHECK(j["span"] == 126);
    CHECK(j["method"] == "closed_form");
    CHECK(j["jumps"][0]["index"] == 35);
    CHECK(j["labels"][35]["label"] == 90);
    CHECK(j["labels"][35]["coord"] == json::array({5, 7}));
    CHECK(labeling_from_json(j, s.graph) == s.labeling);
}

TEST_CASE("fixtures") {
    auto t = oracle::load_fixture("table1_p6_petersen.csv", "pn-petersen", 6, 10);
    CHECK(t.cells.size() == 60);
    CHECK_NOTHROW(validate_fixture(t));
    std::stringstream ss;
    write_fixture_csv(ss, t);
    auto back = read_fixture_csv(ss, "pn-petersen", 6, 10);
    CHECK(back.cells == t.cells);
    CHECK(compare_fixtures(t, back).empty());

    auto broken = t;
    broken.cells[0].label += 1;
    auto diffs = compare_fixtures(t, broken);
    CHECK(diffs.size() == 1);
    broken = t;
    broken.cells[1].t = broken.cells[0].t;
    CHECK_THROWS_AS(validate_fixture(broken), InputError);
    broken = t;
    broken.cells.pop_back();
    CHECK_THROWS_AS(validate_fixture(broken), InputError);
    broken = t;
    broken.cells[0].i = 7;
    CHECK_THROWS_AS(validate_fixture(broken), InputError);

    std::istringstream bad_header("a,b,c,d\n1,1,0,0\n");
    CHECK_THROWS_AS(read_fixture_csv(bad_header, "x", 1, 1), InputError);
    std::istringstream bad_row("i,j,t,label\n1,1,zero,0\n");
    CHECK_THROWS_AS(read_fixture_csv(bad_row, "x", 1, 1), InputError);
}

TEST_CASE("table layout") {
    auto s = construct_pn_petersen(6);
    std::stringstream ss;
    write_table(ss, fixture_from_scheme(s));
    std::vector<std::string> rows;
    for (std::string l; std::getline(ss, l);) rows.push_back(l);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0].rfind("j\\i", 0) == 0);
    // row j = 1, column 3 holds x0:0; column 4 row 10 holds x59:175
    CHECK(rows[1].find("x0:0") != std::string::npos);
    CHECK(rows[10].find("x59:175") != std::string::npos);
    for (const auto& r : rows) CHECK((r.empty() || r.back() != ' '));
}
