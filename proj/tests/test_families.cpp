#include "azi/families.hpp"

#include "azi/canonical.hpp"
#include "azi/errors.hpp"
#include "azi/graph.hpp"
#include "azi/indices.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace azi;

namespace {

ErrorKind kind_of_throw(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::UsageError; // sentinel: no throw
}

Graph fam(const std::string& s) { return construct(parse_family_spec(s)); }

} // namespace

TEST_CASE("parse_family_spec round-trips and validates") {
    auto spec = parse_family_spec("g0:9,3");
    CHECK(spec.kind == FamilySpec::Kind::G0);
    CHECK(spec.n == 9);
    CHECK(spec.k == 3);
    CHECK(spec.to_string() == "g0:9,3");
    CHECK(parse_family_spec("path:10").to_string() == "path:10");
    CHECK(parse_family_spec("star:7").to_string() == "star:7");
    CHECK(parse_family_spec("cycle:5").to_string() == "cycle:5");
    CHECK(parse_family_spec("tplus:12").to_string() == "tplus:12");

    for (const char* bad : {"", "path", "path:", "path:x", "path:-3", "g0:5", "g0:5,",
                            "g0:5,2,1", "star:4,4", "blob:3", "path:4 ", "PATH:4"})
        CHECK(kind_of_throw([bad] { parse_family_spec(bad); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("construct: stars, paths, cycles") {
    Graph s = fam("star:5");
    CHECK(s.vertex_count() == 5);
    CHECK(s.degree(0) == 4);
    for (int v = 1; v < 5; ++v) CHECK(s.degree(v) == 1);

    Graph p = fam("path:6");
    CHECK(p.edge_count() == 5);
    CHECK(is_tree(p));
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(5) == 1);

    Graph c = fam("cycle:5");
    CHECK(c.edge_count() == 5);
    CHECK(is_cactus(c));
    CHECK(cycle_count(c) == 1);
    CHECK(kind_of_throw([] { fam("cycle:2"); }) == ErrorKind::InvalidSpec);
    CHECK(fam("path:1").vertex_count() == 1);
    CHECK(kind_of_throw([] { fam("path:0"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("construct: G0(n,k) is the star plus k independent leaf-pair edges") {
    Graph g = fam("g0:9,3");
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 8 + 3);
    CHECK(is_cactus(g));
    CHECK(cycle_count(g) == 3);
    CHECK(g.degree(0) == 8);
    // Paired leaves have degree 2, unpaired ones degree 1.
    int deg2 = 0, deg1 = 0;
    for (int v = 1; v < 9; ++v) (g.degree(v) == 2 ? deg2 : deg1)++;
    CHECK(deg2 == 6);
    CHECK(deg1 == 2);
    CHECK(augmented_zagreb_index(g) == f_bound(9, 3));

    // k = 0 degenerates to the star.
    CHECK(isomorphic(fam("g0:7,0"), fam("star:7")));
    // Feasibility edge: 2k <= n-1.
    CHECK(fam("g0:5,2").edge_count() == 6);
    CHECK(kind_of_throw([] { fam("g0:5,3"); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of_throw([] { fam("g0:2,0"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("construct: TPlus structure") {
    for (int n : {10, 11, 12, 13, 21}) {
        Graph t = fam("tplus:" + std::to_string(n));
        CHECK(t.vertex_count() == n);
        CHECK(is_tree(t));
        // Exactly two degree-3 hubs, adjacent; everything else degree <= 2.
        std::vector<int> hubs;
        for (int v = 0; v < n; ++v)
            if (t.degree(v) == 3) hubs.push_back(v);
        REQUIRE(hubs.size() == 2);
        CHECK(t.has_edge(hubs[0], hubs[1]));
        // The hub edge is the only edge with no degree-2 endpoint; chains
        // have length >= 2, so every other edge touches a degree-2 vertex.
        int bad_edges = 0;
        for (auto [u, v] : t.edges())
            if (t.degree(u) != 2 && t.degree(v) != 2) ++bad_edges;
        CHECK(bad_edges == 1);
        CHECK(augmented_zagreb_index(t) ==
              Rational(729, 64) + Rational(8 * (n - 2), 1));
    }
    CHECK(kind_of_throw([] { fam("tplus:9"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("pendent and internal path discovery") {
    // Spider T(2,2,2): center 0, legs 0-1-2, 0-3-4, 0-5-6.
    Graph spider =
        Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    auto paths = pendent_and_internal_paths(spider);
    REQUIRE(paths.size() == 3);
    for (const auto& p : paths) {
        CHECK(p.kind == PathWitness::Kind::Pendent);
        CHECK(p.length() == 2);
        // Pendent witnesses start at the degree-1 end.
        CHECK(spider.degree(p.vertices.front()) == 1);
        CHECK(p.vertices.back() == 0);
    }

    // H-tree: hubs 0 and 4 joined through 3; internal path 0-3-4 of length 2.
    Graph h = Graph::from_edge_list(
        7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto hpaths = pendent_and_internal_paths(h);
    int internal = 0, pendent = 0;
    for (const auto& p : hpaths) {
        if (p.kind == PathWitness::Kind::Internal) {
            ++internal;
            CHECK(p.length() == 2);
            CHECK(p.vertices == std::vector<int>{0, 3, 4});
        } else {
            ++pendent;
            CHECK(p.length() == 1);
        }
    }
    CHECK(internal == 1);
    CHECK(pendent == 4);

    // A cycle contributes no paths (closed degree-2 walk).
    CHECK(pendent_and_internal_paths(fam("cycle:6")).empty());
    // Tadpole: triangle 0-1-2 with tail 2-3-4: one pendent path of length 2.
    Graph tadpole =
        Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    auto tp = pendent_and_internal_paths(tadpole);
    REQUIRE(tp.size() == 1);
    CHECK(tp[0].kind == PathWitness::Kind::Pendent);
    CHECK(tp[0].vertices == std::vector<int>{4, 3, 2});
}

TEST_CASE("star_type_pendent_vertices") {
    // Broom: path 0-1-2 with extra leaves 3,4 at vertex 2.
    Graph broom = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    CHECK(star_type_pendent_vertices(broom) == std::vector<int>{3, 4});
    CHECK(star_type_pendent_vertices(fam("path:5")).empty());
    CHECK(star_type_pendent_vertices(fam("star:5")) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("theorem2_report flags") {
    // TPlus(10): no internal path >= 2 (hubs adjacent), chains of length 2.
    CHECK(theorem2_report(fam("tplus:10")) == Theorem2Report{false, false, 0});
    // TPlus(14): chains of length 3 -> four pendent paths of length 3.
    CHECK(theorem2_report(fam("tplus:14")) == Theorem2Report{false, false, 4});
    // H-tree: internal path of length 2.
    Graph h = Graph::from_edge_list(
        7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
    CHECK(theorem2_report(h) == Theorem2Report{true, false, 0});
    // Spider with a long leg: pendent path of length 4 (and none of length 3).
    Graph sp = Graph::from_edge_list(
        7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(theorem2_report(sp) == Theorem2Report{false, true, 0});
    // Spider T(1,1,3): exactly one pendent path of length 3.
    Graph sp3 = Graph::from_edge_list(
        6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(theorem2_report(sp3) == Theorem2Report{false, false, 1});
    // Paths have no branch vertex at all: nothing to flag.
    CHECK(theorem2_report(fam("path:12")) == Theorem2Report{false, false, 0});
    CHECK(kind_of_throw([] { theorem2_report(fam("cycle:5")); }) == ErrorKind::NotATree);
}

TEST_CASE("every_edge_deg2_incident") {
    CHECK(every_edge_deg2_incident(fam("path:7")));
    CHECK(every_edge_deg2_incident(fam("cycle:9")));
    CHECK_FALSE(every_edge_deg2_incident(fam("star:4")));
    CHECK_FALSE(every_edge_deg2_incident(fam("tplus:10"))); // the hub edge
    // Spider T(2,2,2): all edges touch a degree-2 vertex.
    Graph spider =
        Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(every_edge_deg2_incident(spider));
}
