#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cgx/graph.hpp"
#include "cgx/graph_algo.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace cgx;
using namespace cgx::graphcore;
using helpers::cycle_graph;
using helpers::path_graph;

namespace {

SubsetFamily family_of(const Graph& g,
                       std::vector<std::vector<std::string>> members) {
    std::vector<std::pair<std::string, std::vector<std::string>>> fam;
    for (std::size_t i = 0; i < members.size(); ++i)
        fam.emplace_back("Y" + std::to_string(i), members[i]);
    return SubsetFamily(g, fam);
}

}  // namespace

TEST_CASE("electrify: coned path has diameter one") {
    Graph g = path_graph(5);
    auto e = electrify(g, family_of(g, {{"v0", "v1", "v2", "v3", "v4"}}));
    CHECK(distance(e.weighted(), g.require("v0"), g.require("v4")) ==
          HalfDistance::finite(2));
}

TEST_CASE("electrify: empty family leaves distances unchanged") {
    Graph g = cycle_graph(8);
    auto e = electrify(g, SubsetFamily{});
    auto base = g.weighted();
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto d_base = distances_from(base, u);
        auto d_elec = distances_from(e.weighted(), u);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(d_base.half_units[v] == d_elec.half_units[v]);
    }
}

TEST_CASE("electrify: C8 with two coned arcs") {
    Graph g = cycle_graph(8);
    auto e = electrify(g, family_of(g, {{"v0", "v1", "v2"}, {"v4", "v5", "v6"}}));
    // Frozen from the half-unit BFS oracle over the explicit electrified graph.
    auto oracle = oracle::half_unit_bfs(e.weighted(), g.require("v0"));
    CHECK(oracle[g.require("v4")] == 6);
    CHECK(distance(e.weighted(), g.require("v0"), g.require("v4")) ==
          HalfDistance::finite(6));
}

TEST_CASE("distance basics and error paths") {
    Graph g = path_graph(5);
    auto w = g.weighted();
    CHECK(distance(w, 0, 0) == HalfDistance::finite(0));
    CHECK(distance(w, g.require("v0"), g.require("v4")) == HalfDistance::finite(8));
    CHECK_THROWS_AS(g.require("nope"), UnknownVertexError);

    // Cap pruning is distinct from disconnection.
    Graph two(std::vector<std::string>{"a", "b", "c"}, {{"a", "b"}});
    auto tw = two.weighted();
    CHECK(distance(tw, 0, 2).is_unreachable());
    CHECK(distance(tw, 0, 1, 1).is_cap_exceeded());
    CHECK(distance(tw, 0, 1, 2) == HalfDistance::finite(2));
}

TEST_CASE("dijkstra agrees with the half-unit BFS oracle on random graphs") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = helpers::random_connected_graph(2 + rng.next_below(30),
                                                 rng.next_below(20), rng);
        auto fam = helpers::random_family(g, rng.next_below(4), rng);
        auto e = electrify(g, fam);
        for (VertexId src = 0; src < e.total_vertex_count(); ++src) {
            auto field = distances_from(e.weighted(), src);
            auto oracle = oracle::half_unit_bfs(e.weighted(), src);
            REQUIRE(field.half_units == oracle);
        }
    }
}

TEST_CASE("parity: base distances are even, odd distances need a cone") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = helpers::random_connected_graph(2 + rng.next_below(20),
                                                 rng.next_below(10), rng);
        auto w = g.weighted();
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (std::int64_t d : distances_from(w, u).half_units)
                CHECK(d % 2 == 0);
    }
}

TEST_CASE("electrification contracts distances") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = helpers::random_connected_graph(2 + rng.next_below(25),
                                                 rng.next_below(15), rng);
        auto fam = helpers::random_family(g, 1 + rng.next_below(3), rng);
        auto e = electrify(g, fam);
        auto base = g.weighted();
        auto elec = e.weighted();
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            auto db = distances_from(base, u);
            auto de = distances_from(elec, u);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (db.half_units[v] < 0) continue;
                CHECK(de.half_units[v] <= db.half_units[v]);
            }
        }
        // Members have electrified diameter <= 2 half-units.
        for (const auto& m : fam.members())
            for (VertexId a : m.vertices) {
                auto da = distances_from(elec, a);
                for (VertexId b : m.vertices) CHECK(da.half_units[b] <= 2);
            }
    }
}

TEST_CASE("four-point delta: trees are 0, C4 matches brute force") {
    SplitMix64 rng(17);
    QuadrupleSpec spec;
    spec.mode = QuadrupleSpec::Mode::Exhaustive;
    for (int trial = 0; trial < 10; ++trial) {
        auto t = helpers::random_tree(4 + rng.next_below(12), rng);
        CHECK(delta_four_point(t.weighted(), {}, spec).quarter_units == 0);
    }

    Graph c4 = cycle_graph(4);
    // Oracle: brute force over all quadruples with oracle distances.
    auto w = c4.weighted();
    std::vector<std::vector<std::int64_t>> table;
    for (VertexId v = 0; v < 4; ++v) table.push_back(oracle::half_unit_bfs(w, v));
    std::int64_t best = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                for (int d = c + 1; d < 4; ++d) {
                    std::int64_t s1 = table[a][b] + table[c][d];
                    std::int64_t s2 = table[a][c] + table[b][d];
                    std::int64_t s3 = table[a][d] + table[b][c];
                    std::int64_t hi = std::max({s1, s2, s3});
                    std::int64_t lo = std::min({s1, s2, s3});
                    best = std::max(best, hi - (s1 + s2 + s3 - hi - lo));
                }
    CHECK(best == 4);  // frozen: the single quadruple has sums (4,4,8)
    auto delta = delta_four_point(w, {}, spec);
    CHECK(delta.quarter_units == best);
    CHECK(delta.str() == "1");
    CHECK(delta.exhaustive);
}

TEST_CASE("four-point delta: disconnected input throws") {
    Graph g(std::vector<std::string>{"a", "b", "c", "d", "e"},
            {{"a", "b"}, {"c", "d"}, {"d", "e"}});
    QuadrupleSpec spec;
    CHECK_THROWS_AS(delta_four_point(g.weighted(), {}, spec),
                    DisconnectedInputError);
}

TEST_CASE("quasiconvexity constant") {
    Graph p = path_graph(6);
    std::vector<VertexId> all(6);
    for (VertexId v = 0; v < 6; ++v) all[v] = v;
    CHECK(quasiconvexity_constant(p.weighted(), all, 100) ==
          HalfDistance::finite(0));

    Graph c8 = cycle_graph(8);
    CHECK(quasiconvexity_constant(c8.weighted(),
                                  {c8.require("v0"), c8.require("v4")}, 100) ==
          HalfDistance::finite(4));
    CHECK(quasiconvexity_constant(c8.weighted(),
                                  {c8.require("v0"), c8.require("v4")}, 6)
              .is_cap_exceeded());
}

TEST_CASE("nearest point projection and diameter") {
    Graph p = path_graph(5);
    auto wp = p.weighted();
    // Source inside the target projects to itself.
    CHECK(nearest_point_projection(wp, {0, 1, 2, 3, 4}, {3}) ==
          std::vector<VertexId>{3});

    Graph c8 = cycle_graph(8);
    auto w = c8.weighted();
    std::vector<VertexId> target = {c8.require("v0"), c8.require("v1"),
                                    c8.require("v2")};
    // Frozen from the brute-force distance table: v5 is 6 half-units from both
    // v0 and v2 and 8 from v1.
    auto table = oracle::half_unit_bfs(w, c8.require("v5"));
    CHECK(table[c8.require("v0")] == 6);
    CHECK(table[c8.require("v1")] == 8);
    CHECK(table[c8.require("v2")] == 6);
    CHECK(nearest_point_projection(w, target, {c8.require("v5")}) ==
          std::vector<VertexId>{c8.require("v0"), c8.require("v2")});

    // Projection set {v0, v2} has diameter d(v0, v2) = 4 half-units.
    CHECK(projection_diameter(w, target, {c8.require("v5")}) ==
          HalfDistance::finite(4));

    // Singleton subset against a geodesic axis: tie set {v0}, diameter 0.
    std::vector<VertexId> axis = {c8.require("v0"), c8.require("v1"),
                                  c8.require("v2"), c8.require("v3")};
    CHECK(projection_diameter(w, axis, {c8.require("v6")}) ==
          HalfDistance::finite(0));

    Graph split(std::vector<std::string>{"a", "b"}, {});
    CHECK_THROWS_AS(nearest_point_projection(split.weighted(), {0}, {1}),
                    DisconnectedInputError);
}

TEST_CASE("vertex maps: validation, isometry, equivariance") {
    Graph c8 = cycle_graph(8);
    std::vector<VertexId> rot(8), bad(8);
    for (VertexId v = 0; v < 8; ++v) rot[v] = (v + 1) % 8;
    VertexMap rotation(rot, "rot");
    rotation.validate(c8);

    // Rotation is an isometry.
    auto w = c8.weighted();
    for (VertexId u = 0; u < 8; ++u) {
        auto du = distances_from(w, u);
        auto dfu = distances_from(w, rotation.apply(u));
        for (VertexId v = 0; v < 8; ++v)
            CHECK(du.half_units[v] == dfu.half_units[rotation.apply(v)]);
    }

    for (VertexId v = 0; v < 8; ++v) bad[v] = v;
    std::swap(bad[0], bad[4]);  // transposition breaks edges of C8
    CHECK_THROWS_AS(VertexMap(bad, "bad").validate(c8), NotAutomorphismError);

    auto fam = family_of(c8, {{"v0", "v1"}, {"v1", "v2"}});
    CHECK_FALSE(rotation.permutes_family(fam));
    auto fam2 = family_of(c8, {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"},
                               {"v3", "v4"}, {"v4", "v5"}, {"v5", "v6"},
                               {"v6", "v7"}, {"v7", "v0"}});
    CHECK(rotation.permutes_family(fam2));
}

TEST_CASE("wpd census on the identity candidate set") {
    Graph c8 = cycle_graph(8);
    std::vector<VertexMap> H = {VertexMap::identity(8)};
    std::vector<VertexId> rot(8);
    for (VertexId v = 0; v < 8; ++v) rot[v] = (v + 1) % 8;
    VertexMap mover(rot, "rot");

    auto census = wpd_census(c8, H, mover, 0, 2, 3);
    CHECK(census.count == 1);  // identity moves nothing, any r >= 1 counts it
    CHECK(census.witnesses == std::vector<std::size_t>{0});
    CHECK(wpd_census(c8, H, mover, 0, 0, 3).count == 0);  // strict inequality
}

TEST_CASE("count_parallel_translates dedups set-equal members") {
    Graph c8 = cycle_graph(8);
    CHECK(count_parallel_translates(c8, SubsetFamily{}, 0, 4, 100) == 0);

    auto fam = family_of(c8, {{"v1", "v2"}, {"v2", "v1"}});
    CHECK(count_parallel_translates(c8, fam, c8.require("v0"), c8.require("v4"),
                                    100) == 1);

    // Four 2-element members on C8, a=v0, b=v4, D0=2: frozen by brute force.
    auto fam4 = family_of(c8, {{"v0", "v1"}, {"v2", "v3"}, {"v4", "v5"},
                               {"v6", "v7"}});
    // d(v0, {v0,v1}) = 0 < 2 but d(v4, {v0,v1}) = 6; only members touching
    // both balls of radius <2 half-units count: none do.
    CHECK(count_parallel_translates(c8, fam4, c8.require("v0"), c8.require("v4"),
                                    2) == 0);
    CHECK(count_parallel_translates(c8, fam4, c8.require("v0"), c8.require("v4"),
                                    5) == 2);
}

TEST_CASE("translation growth") {
    Graph c8 = cycle_graph(8);
    auto growth = translation_growth(c8, VertexMap::identity(8), 0, 5);
    for (const auto& [n, d] : growth.records) CHECK(d == HalfDistance::finite(0));

    std::vector<VertexId> rot(8);
    for (VertexId v = 0; v < 8; ++v) rot[v] = (v + 1) % 8;
    auto g2 = translation_growth(c8, VertexMap(rot, "rot"), 0, 10);
    std::vector<std::int64_t> expect = {2, 4, 6, 8, 6, 4, 2, 0, 2, 4};
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(g2.records[i].second == HalfDistance::finite(expect[i]));
    CHECK_FALSE(g2.cap_exceeded);
}

TEST_CASE("automorphism isometry is preserved on the electrification") {
    // Mirror-symmetric graph: two copies of a random graph joined through a
    // symmetric bridge; the swap is an automorphism.
    SplitMix64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 3 + rng.next_below(8);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < 2 * n; ++i) names.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t p = rng.next_below(i);
            edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(p));
            edges.emplace_back("v" + std::to_string(n + i), "v" + std::to_string(n + p));
        }
        edges.emplace_back("v0", "v" + std::to_string(n));
        Graph g(names, edges);

        std::vector<VertexId> swap_map(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            swap_map[i] = static_cast<VertexId>(n + i);
            swap_map[n + i] = static_cast<VertexId>(i);
        }
        VertexMap swap(swap_map, "swap");
        swap.validate(g);

        // Equivariant family: a random member plus its mirror image.
        std::size_t size = 1 + rng.next_below(n);
        std::vector<std::string> member, mirror;
        for (std::size_t i = 0; i < size; ++i) {
            auto v = rng.next_below(n);
            member.push_back("v" + std::to_string(v));
            mirror.push_back("v" + std::to_string(n + v));
        }
        auto fam = family_of(g, {member, mirror});
        CHECK(swap.permutes_family(fam));

        auto e = electrify(g, fam);
        auto w = e.weighted();
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            auto du = distances_from(w, u);
            auto dfu = distances_from(w, swap.apply(u));
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                CHECK(du.half_units[v] == dfu.half_units[swap.apply(v)]);
        }
    }
}
