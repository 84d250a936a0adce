#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "doctest.h"
#include "plk/graphs.hpp"
#include "plk/lattice.hpp"
#include "plk/pair_index.hpp"

using plk::CliqueIntervalSystem;
using plk::Graph;
using plk::PairIndex;
using plk::Sublattice;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::set<PairIndex> edges;
    for (const auto& [i, j] : pairs) edges.emplace(i, j);
    return Graph(n, std::move(edges));
}

CliqueIntervalSystem sys(int n, std::vector<std::pair<int, int>> intervals) {
    return CliqueIntervalSystem(n, std::move(intervals));
}

// Overlapping four-cycle chord pattern on five vertices whose maximal
// cliques are the runs [1,4] and [3,5].
Graph interval_example() {
    return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5},
                          {4, 5}});
}

// Isomorphic relabeling of the same graph; the clique {2,4,5} is no run.
Graph relabeled_example() {
    return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                          {4, 5}});
}

// Subposet on [6] used as the running non-example.
Graph scattered_example() {
    return make_graph(6, {{1, 4}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 6},
                          {4, 5}});
}

}  // namespace

TEST_CASE("graphs mirror pair sets") {
    const Sublattice s = plk::full_pair_lattice(5);
    const Graph g = plk::graph_of(s);
    CHECK(g.n == 5);
    CHECK(g.edges == s.members);
    CHECK(plk::pair_set_of(g) == s);
    CHECK(plk::graph_of(plk::pair_set_of(scattered_example())).edges ==
          scattered_example().edges);
    CHECK(make_graph(4, {}).edges.empty());
}

TEST_CASE("graph construction validates the vertex range") {
    CHECK_THROWS_WITH_AS(make_graph(4, {{2, 5}}), doctest::Contains("outside"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("isolated vertices") {
    CHECK(make_graph(4, {{1, 2}}).isolated_vertices() == std::vector<int>{3, 4});
    CHECK(plk::graph_of(plk::full_pair_lattice(4)).isolated_vertices().empty());
    CHECK(make_graph(3, {}).isolated_vertices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("maximal cliques by exhaustive sweep") {
    CHECK(plk::maximal_cliques(plk::graph_of(plk::full_pair_lattice(5))) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
    CHECK(plk::maximal_cliques(interval_example()) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}, {3, 4, 5}});
    CHECK(plk::maximal_cliques(relabeled_example()) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 4, 5}});
    CHECK(plk::maximal_cliques(make_graph(3, {})) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK_THROWS_WITH_AS(plk::maximal_cliques(Graph(13, {})),
                         doctest::Contains("budget"), std::invalid_argument);
}

TEST_CASE("interval system recognition") {
    const auto found = plk::interval_system(interval_example());
    REQUIRE(found.has_value());
    CHECK(*found == sys(5, {{1, 4}, {3, 5}}));
    CHECK(found->str() == "[1,4][3,5]");

    CHECK_FALSE(plk::interval_system(relabeled_example()).has_value());
    CHECK_FALSE(plk::interval_system(scattered_example()).has_value());

    const auto complete = plk::interval_system(plk::graph_of(plk::full_pair_lattice(6)));
    REQUIRE(complete.has_value());
    CHECK(*complete == sys(6, {{1, 6}}));

    // An isolated vertex leaves a singleton maximal clique.
    CHECK_FALSE(plk::interval_system(make_graph(4, {{1, 2}, {2, 3}})).has_value());

    // Disconnected but covering: two runs meeting nowhere.
    const auto split = plk::interval_system(
        make_graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}));
    REQUIRE(split.has_value());
    CHECK(*split == sys(6, {{1, 3}, {4, 6}}));
}

TEST_CASE("interval system validation") {
    CHECK_THROWS_WITH_AS(sys(5, {}), doctest::Contains("no intervals"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(sys(5, {{2, 4}}), doctest::Contains("start at 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(sys(5, {{1, 1}}), doctest::Contains("two vertices"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(sys(5, {{1, 6}}), doctest::Contains("outside"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(sys(5, {{1, 4}, {2, 4}}), doctest::Contains("maximality"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(sys(5, {{1, 4}, {1, 5}}),
                         doctest::Contains("left endpoints"), std::invalid_argument);
}

TEST_CASE("edge closure condition") {
    CHECK(plk::condition_star(interval_example()));
    CHECK_FALSE(plk::condition_star(make_graph(5, {{1, 3}, {1, 5}})));
    // Edges {3,6} and {3,4} share a lower endpoint but {4,6} is missing.
    CHECK_FALSE(plk::condition_star(scattered_example()));
    CHECK(plk::condition_star(make_graph(4, {})));
}

TEST_CASE("closure condition matches recognition on connected graphs") {
    // Every no-isolated-vertex graph on up to six vertices. The closure
    // condition follows from run-shaped cliques unconditionally; the
    // converse needs connectivity, since interleaved components such as
    // {1,3},{2,4} satisfy the condition vacuously.
    for (int n = 2; n <= 6; ++n) {
        std::vector<PairIndex> all;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
            std::set<PairIndex> edges;
            for (std::size_t t = 0; t < all.size(); ++t)
                if (mask >> t & 1) edges.insert(all[t]);
            const Graph g(n, std::move(edges));
            if (!g.isolated_vertices().empty()) continue;
            const bool star = plk::condition_star(g);
            const bool interval = plk::interval_system(g).has_value();
            if (interval) REQUIRE(star);
            if (plk::is_connected(g)) REQUIRE(star == interval);
        }
    }
    const Graph interleaved = make_graph(4, {{1, 3}, {2, 4}});
    const Graph nested = make_graph(4, {{1, 4}, {2, 3}});
    for (const Graph* g : {&interleaved, &nested}) {
        CHECK_FALSE(plk::is_connected(*g));
        CHECK(plk::condition_star(*g));
        CHECK_FALSE(plk::interval_system(*g).has_value());
    }
}

TEST_CASE("connectivity") {
    CHECK(plk::is_connected(interval_example()));
    CHECK_FALSE(plk::is_connected(make_graph(4, {{1, 2}})));
    CHECK_FALSE(
        plk::is_connected(make_graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}})));
    CHECK(plk::is_connected(make_graph(2, {{1, 2}})));
}

TEST_CASE("complement ideals of pair sets match interval recognition") {
    for (int n = 3; n <= 5; ++n) {
        std::vector<PairIndex> all;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
            std::set<PairIndex> members;
            for (std::size_t t = 0; t < all.size(); ++t)
                if (mask >> t & 1) members.insert(all[t]);
            const Sublattice s(n, std::move(members));
            const Graph g = plk::graph_of(s);
            if (!g.isolated_vertices().empty()) continue;
            REQUIRE(plk::complement_is_poset_ideal(s) ==
                    plk::interval_system(g).has_value());
        }
    }
}

TEST_CASE("chordality by simplicial elimination") {
    CHECK(plk::is_chordal(interval_example()));
    CHECK(plk::is_chordal(plk::graph_of(plk::full_pair_lattice(5))));
    CHECK(plk::is_chordal(make_graph(4, {})));
    // Trees are chordal even when no run structure exists.
    CHECK(plk::is_chordal(make_graph(4, {{1, 2}, {2, 3}, {2, 4}})));
    CHECK_FALSE(plk::is_chordal(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
    CHECK_FALSE(
        plk::is_chordal(make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})));
}

TEST_CASE("every covering system yields an interval graph and round-trips") {
    for (int n = 4; n <= 7; ++n) {
        const auto systems = plk::enumerate_covering_systems(n, 0, n);
        for (const CliqueIntervalSystem& s : systems) {
            const Graph g = plk::graph_of(plk::lattice_of_system(s));
            CHECK(g.isolated_vertices().empty());
            CHECK(plk::condition_star(g));
            CHECK(plk::is_chordal(g));
            const auto back = plk::interval_system(g);
            REQUIRE(back.has_value());
            CHECK(*back == s);
        }
    }
}

TEST_CASE("overlaps of consecutive cliques") {
    CHECK(plk::overlaps(sys(5, {{1, 4}, {3, 5}})) == std::vector<int>{2});
    CHECK(plk::overlaps(sys(6, {{1, 6}})) == std::vector<int>{});
    CHECK(plk::overlaps(sys(5, {{1, 3}, {2, 4}, {3, 5}})) == std::vector<int>{2, 2});
    CHECK(plk::overlaps(sys(6, {{1, 3}, {4, 6}})) == std::vector<int>{0});
    CHECK(plk::overlaps(sys(9, {{1, 5}, {2, 9}})) == std::vector<int>{4});
}

TEST_CASE("perfect and bounded-overlap criteria") {
    const auto perfect5 = plk::enumerate_covering_systems(5, 2, 5);
    CHECK(perfect5.size() == 5);
    for (const CliqueIntervalSystem& s : perfect5) CHECK(plk::perfect_criterion(s));

    CHECK_FALSE(plk::gorenstein_criterion(sys(9, {{1, 5}, {2, 9}})));
    CHECK(plk::perfect_criterion(sys(9, {{1, 5}, {2, 9}})));
    CHECK(plk::perfect_criterion(sys(5, {{1, 4}, {2, 5}})));
    CHECK(plk::gorenstein_criterion(sys(5, {{1, 4}, {2, 5}})));
    CHECK_FALSE(plk::perfect_criterion(sys(6, {{1, 3}, {4, 6}})));
    CHECK(plk::gorenstein_criterion(sys(6, {{1, 3}, {4, 6}})));
}

TEST_CASE("lattices of systems") {
    const Sublattice expected = [] {
        Sublattice s = plk::full_pair_lattice(5);
        s.members.erase(PairIndex(1, 5));
        s.members.erase(PairIndex(2, 5));
        return s;
    }();
    CHECK(plk::lattice_of_system(sys(5, {{1, 4}, {3, 5}})) == expected);

    // The five perfect systems on [5] produce the five perfect sublattices.
    std::set<std::set<PairIndex>> produced;
    for (const CliqueIntervalSystem& s : plk::enumerate_covering_systems(5, 2, 5))
        produced.insert(plk::lattice_of_system(s).members);
    std::set<std::set<PairIndex>> enumerated;
    for (const Sublattice& s : plk::enumerate_perfect_compatible(5))
        enumerated.insert(s.members);
    CHECK(produced == enumerated);
}

TEST_CASE("interval-supported sublattices satisfy the clique criteria") {
    for (int n = 4; n <= 7; ++n) {
        for (const CliqueIntervalSystem& s : plk::enumerate_covering_systems(n, 0, n)) {
            const Sublattice lat = plk::lattice_of_system(s);
            CHECK(plk::is_sublattice(lat));
            CHECK(plk::complement_is_poset_ideal(lat));
            CHECK(plk::perfect_criterion(s) == plk::is_perfect(lat));
        }
    }
}

TEST_CASE("bounded-overlap criterion matches purity of join irreducibles") {
    for (int n = 4; n <= 8; ++n) {
        for (const CliqueIntervalSystem& s : plk::enumerate_covering_systems(n, 0, n)) {
            const Sublattice lat = plk::lattice_of_system(s);
            REQUIRE(plk::gorenstein_criterion(s) ==
                    plk::is_pure(plk::join_irreducibles(lat)));
        }
    }
}

TEST_CASE("counting systems with every overlap 2 or 3") {
    const long long expected[] = {2, 5, 13, 34, 89, 233, 610};
    for (int n = 4; n <= 10; ++n) {
        const plk::BigInt want(expected[n - 4]);
        CHECK(plk::count_gorenstein_perfect_recurrence(n) == want);
        CHECK(plk::count_gorenstein_perfect_closed_form(n) == want);
        CHECK(plk::count_gorenstein_perfect_brute(n) == want);
        CHECK(plk::count_gorenstein_perfect(n) == want);
    }
    for (int n = 11; n <= 12; ++n)
        CHECK(plk::count_gorenstein_perfect_recurrence(n) ==
              plk::count_gorenstein_perfect_closed_form(n));
    CHECK(plk::count_gorenstein_perfect_recurrence(11) == plk::BigInt(1597));
    CHECK(plk::count_gorenstein_perfect_recurrence(12) == plk::BigInt(4181));
    CHECK(plk::count_gorenstein_perfect(12) == plk::BigInt(4181));

    CHECK_THROWS_WITH_AS(plk::count_gorenstein_perfect(3),
                         doctest::Contains("at least 4"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(plk::count_gorenstein_perfect_brute(11),
                         doctest::Contains("budget"), std::invalid_argument);
}

TEST_CASE("graph files round trip") {
    const Graph g = scattered_example();
    std::ostringstream out;
    plk::write_graph_file(out, g);
    std::istringstream in(out.str());
    const Graph back = plk::read_graph_file(in);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);

    std::istringstream reversed("n: 4\n3 1\n");
    CHECK(plk::read_graph_file(reversed).has_edge(1, 3));

    const auto reject = [](const std::string& text, const char* what) {
        std::istringstream bad(text);
        CHECK_THROWS_WITH_AS(plk::read_graph_file(bad), doctest::Contains(what),
                             std::runtime_error);
    };
    reject("", "expected header");
    reject("n: 4\n1 2 3\n", "bad edge line");
    reject("n: 4\n1 2\n2 1\n", "bad edge line");
}
