#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "doctest.h"
#include "plk/lattice.hpp"
#include "plk/pair_index.hpp"

using plk::PairIndex;
using plk::Sublattice;

namespace {

Sublattice make(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::set<PairIndex> members;
    for (const auto& [i, j] : pairs) members.emplace(i, j);
    return Sublattice(n, std::move(members));
}

Sublattice full_minus(int n, const std::vector<std::pair<int, int>>& pairs) {
    Sublattice s = plk::full_pair_lattice(n);
    for (const auto& [i, j] : pairs) s.members.erase(PairIndex(i, j));
    return s;
}

unsigned long long catalan(int m) {
    unsigned long long value = 1;
    for (int k = 0; k < m; ++k) value = value * 2 * (2 * k + 1) / (k + 2);
    return value;
}

std::set<std::set<PairIndex>> member_sets(const std::vector<Sublattice>& list) {
    std::set<std::set<PairIndex>> out;
    for (const Sublattice& s : list) out.insert(s.members);
    return out;
}

// The walk's running example: the sublattice on [7] missing exactly
// (1,6), (1,7), (2,7), (3,7).
Sublattice example_l7() { return full_minus(7, {{1, 6}, {1, 7}, {2, 7}, {3, 7}}); }

}  // namespace

TEST_CASE("componentwise and nesting order predicates") {
    CHECK(plk::pair_le(PairIndex(1, 2), PairIndex(1, 3)));
    CHECK_FALSE(plk::pair_le(PairIndex(1, 4), PairIndex(2, 3)));
    CHECK_FALSE(plk::pair_le(PairIndex(2, 3), PairIndex(1, 4)));
    CHECK(plk::nest_le(PairIndex(1, 5), PairIndex(2, 3)));
    CHECK_FALSE(plk::nest_le(PairIndex(2, 3), PairIndex(1, 5)));
    CHECK(plk::pair_meet(PairIndex(1, 4), PairIndex(2, 3)) == PairIndex(1, 3));
    CHECK(plk::pair_join(PairIndex(1, 4), PairIndex(2, 3)) == PairIndex(2, 4));
    CHECK(plk::pair_meet(PairIndex(2, 5), PairIndex(2, 5)) == PairIndex(2, 5));
}

TEST_CASE("sublattice closure") {
    CHECK(plk::is_sublattice(plk::full_pair_lattice(5)));
    CHECK_FALSE(plk::is_sublattice(make(4, {{1, 4}, {2, 3}})));
    CHECK(plk::is_sublattice(make(4, {{1, 4}, {2, 3}, {1, 3}, {2, 4}})));
    CHECK(plk::is_sublattice(make(4, {})));
    CHECK(plk::is_sublattice(example_l7()));
}

TEST_CASE("sublattice construction validates the ambient range") {
    CHECK_THROWS_WITH_AS(make(4, {{2, 5}}), doctest::Contains("outside ambient"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Sublattice(1, {}), std::invalid_argument);
}

TEST_CASE("complement downward closure in the nesting order") {
    CHECK(plk::complement_is_poset_ideal(plk::full_pair_lattice(6)));
    // Members require all their sub-interval pairs: (3,6) demands (3,5).
    CHECK_FALSE(plk::complement_is_poset_ideal(
        make(6, {{1, 4}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}})));
    CHECK(plk::complement_is_poset_ideal(example_l7()));
    CHECK(plk::complement_is_poset_ideal(make(6, {})));
}

TEST_CASE("rank is the longest chain length") {
    CHECK(plk::rank(plk::full_pair_lattice(5)) == 6);
    CHECK(plk::rank(plk::full_pair_lattice(4)) == 4);
    CHECK(plk::rank(make(5, {{3, 4}})) == 0);
    CHECK(plk::rank(make(5, {{1, 2}, {4, 5}, {2, 3}})) == 2);
    CHECK(plk::rank(example_l7()) == 10);
    CHECK_THROWS_WITH_AS(plk::rank(make(4, {})), doctest::Contains("empty poset"),
                         std::invalid_argument);
}

TEST_CASE("hasse edges are the transitive reduction") {
    const auto covers = plk::hasse_edges(plk::full_pair_lattice(4));
    const std::vector<std::pair<PairIndex, PairIndex>> expected = {
        {PairIndex(1, 2), PairIndex(1, 3)}, {PairIndex(1, 3), PairIndex(1, 4)},
        {PairIndex(1, 3), PairIndex(2, 3)}, {PairIndex(1, 4), PairIndex(2, 4)},
        {PairIndex(2, 3), PairIndex(2, 4)}, {PairIndex(2, 4), PairIndex(3, 4)}};
    CHECK(covers == expected);
}

TEST_CASE("purity via exhaustive maximal chains") {
    CHECK(plk::is_pure(plk::full_pair_lattice(4)));
    CHECK(plk::is_pure(plk::full_pair_lattice(6)));
    CHECK(plk::is_pure(make(5, {{2, 4}})));
    // Two maximal chains of different lengths: 12 < 13 < 23 < 24 and
    // 12 < 13 < 15.
    CHECK_FALSE(plk::is_pure(make(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 5}})));
    CHECK_THROWS_WITH_AS(plk::is_pure(make(4, {})), doctest::Contains("empty poset"),
                         std::invalid_argument);
}

TEST_CASE("compatibility under both rank readings") {
    CHECK(plk::is_compatible(plk::full_pair_lattice(5)));
    CHECK(plk::is_compatible(example_l7()));
    CHECK_FALSE(plk::is_compatible(make(5, {})));
    // Too small a rank: a single pair.
    CHECK_FALSE(plk::is_compatible(make(5, {{1, 2}})));
    // Not a sublattice.
    CHECK_FALSE(plk::is_compatible(make(4, {{1, 4}, {2, 3}})));

    // Strict reading wants rank == n exactly; the full lattice has 2n-4.
    CHECK_FALSE(plk::is_compatible(plk::full_pair_lattice(5), true));
    const Sublattice two_blocks =
        make(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(plk::rank(two_blocks) == 5);
    CHECK(plk::is_compatible(two_blocks));
    CHECK(plk::is_compatible(two_blocks, true));
}

TEST_CASE("perfection wants every step-1 and step-2 diagonal") {
    CHECK(plk::is_perfect(plk::full_pair_lattice(5)));
    CHECK(plk::is_perfect(example_l7()));
    CHECK(plk::is_perfect(full_minus(5, {{1, 5}})));
    CHECK_FALSE(plk::is_perfect(full_minus(5, {{2, 4}})));
    CHECK_FALSE(plk::is_perfect(full_minus(5, {{4, 5}})));
    // Dropping only the longest pair keeps every diagonal.
    CHECK(plk::is_perfect(make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}})));
    // All pairs inside [1,3] on ambient 4: misses the diagonal (3,4).
    CHECK_FALSE(plk::is_perfect(make(4, {{1, 2}, {1, 3}, {2, 3}})));
    // Perfect even though the minimum-rank reading would reject ambient 3.
    CHECK(plk::is_perfect(plk::full_pair_lattice(3)));
}

TEST_CASE("join irreducibles") {
    const Sublattice l4 = plk::full_pair_lattice(4);
    CHECK(plk::join_irreducibles(l4).members ==
          make(4, {{1, 3}, {1, 4}, {2, 3}, {3, 4}}).members);

    const Sublattice chain = make(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK(plk::join_irreducibles(chain).members ==
          make(5, {{1, 3}, {1, 4}, {1, 5}}).members);

    CHECK(plk::join_irreducibles(example_l7()).members ==
          make(7, {{1, 3}, {1, 4}, {1, 5}, {2, 6}, {4, 7}, {2, 3}, {3, 4}, {4, 5},
                   {5, 6}, {6, 7}})
              .members);
    // The cliques [1,5] and [2,6] of this sublattice overlap in four
    // vertices, so its join irreducibles carry maximal chains of lengths
    // 4 (via 23 < 26) and 5 (via 34 < 45): not pure.
    CHECK_FALSE(plk::is_pure(plk::join_irreducibles(example_l7())));

    CHECK_THROWS_WITH_AS(plk::join_irreducibles(make(4, {{1, 4}, {2, 3}})),
                         doctest::Contains("not a lattice"), std::invalid_argument);
}

TEST_CASE("join irreducibles of a wide double cover are not pure") {
    // Pairs inside [1,5] plus pairs inside [2,6]: consecutive cliques
    // overlapping in four vertices.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j <= 5; ++j) pairs.push_back({i, j});
    for (int i = 2; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j) pairs.push_back({i, j});
    const Sublattice wide = make(6, pairs);
    CHECK(plk::is_sublattice(wide));
    CHECK(plk::is_perfect(wide));
    CHECK_FALSE(plk::is_pure(plk::join_irreducibles(wide)));
}

TEST_CASE("fundamental chain") {
    CHECK(plk::fundamental_chain(example_l7()) ==
          plk::Chain{PairIndex(1, 2), PairIndex(1, 3), PairIndex(1, 4),
                     PairIndex(1, 5), PairIndex(2, 5), PairIndex(2, 6),
                     PairIndex(3, 6), PairIndex(4, 6), PairIndex(4, 7),
                     PairIndex(5, 7), PairIndex(6, 7)});
    CHECK(plk::fundamental_chain(plk::full_pair_lattice(4)) ==
          plk::Chain{PairIndex(1, 2), PairIndex(1, 3), PairIndex(1, 4),
                     PairIndex(2, 4), PairIndex(3, 4)});
    CHECK(plk::fundamental_chain(plk::full_pair_lattice(6)) ==
          plk::Chain{PairIndex(1, 2), PairIndex(1, 3), PairIndex(1, 4),
                     PairIndex(1, 5), PairIndex(1, 6), PairIndex(2, 6),
                     PairIndex(3, 6), PairIndex(4, 6), PairIndex(5, 6)});
    CHECK_THROWS_WITH_AS(plk::fundamental_chain(make(4, {{1, 2}, {1, 3}, {2, 3}})),
                         doctest::Contains("not perfect"), std::invalid_argument);
}

TEST_CASE("fundamental chains of every perfect sublattice are full-length") {
    for (int n = 3; n <= 7; ++n) {
        for (const Sublattice& s : plk::enumerate_perfect_compatible(n)) {
            const plk::Chain chain = plk::fundamental_chain(s);
            REQUIRE(chain.size() == static_cast<std::size_t>(2 * n - 3));
            for (std::size_t k = 1; k < chain.size(); ++k) {
                CHECK(plk::pair_le(chain[k - 1], chain[k]));
                CHECK(chain[k - 1] != chain[k]);
                CHECK(s.contains(chain[k]));
            }
        }
    }
}

TEST_CASE("enumeration of perfect sublattices hits the Catalan count") {
    const unsigned long long expected[] = {1, 2, 5, 14, 42, 132, 429};
    for (int n = 3; n <= 9; ++n) {
        const auto list = plk::enumerate_perfect_compatible(n);
        CHECK(list.size() == expected[n - 3]);
        CHECK(list.size() == catalan(n - 2));
        CHECK(member_sets(list).size() == list.size());
        for (const Sublattice& s : list) CHECK(plk::is_perfect(s));
    }
}

TEST_CASE("the five perfect sublattices on [5]") {
    const auto list = plk::enumerate_perfect_compatible(5);
    const std::set<std::set<PairIndex>> expected = {
        plk::full_pair_lattice(5).members,
        full_minus(5, {{1, 5}}).members,
        full_minus(5, {{1, 4}, {1, 5}}).members,
        full_minus(5, {{1, 5}, {2, 5}}).members,
        full_minus(5, {{1, 4}, {1, 5}, {2, 5}}).members,
    };
    CHECK(member_sets(list) == expected);
}

TEST_CASE("compatible enumeration agrees with the subset sweep") {
    for (int n = 3; n <= 5; ++n) {
        for (bool strict : {false, true}) {
            const auto fast = plk::enumerate_compatible(n, strict);
            const auto brute = plk::enumerate_compatible_brute(n, strict);
            CHECK(member_sets(fast) == member_sets(brute));
        }
        CHECK(member_sets(plk::enumerate_perfect_compatible(n)) ==
              member_sets(plk::enumerate_perfect_compatible_brute(n)));
    }
    // Rank at least 3 is unreachable inside the three-pair lattice.
    CHECK(plk::enumerate_compatible(3).empty());
}

TEST_CASE("compatible enumeration reaches sets whose cover skips a vertex") {
    std::vector<std::pair<int, int>> inner;
    for (int i = 2; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j) inner.push_back({i, j});
    const Sublattice no_vertex_one = make(6, inner);
    CHECK(plk::is_compatible(no_vertex_one));
    const auto all = plk::enumerate_compatible(6);
    CHECK(member_sets(all).count(no_vertex_one.members) == 1);
}

TEST_CASE("among compatible sublattices, perfection is maximal rank") {
    for (int n = 4; n <= 6; ++n)
        for (const Sublattice& s : plk::enumerate_compatible(n))
            CHECK(plk::is_perfect(s) == (plk::rank(s) == 2 * n - 4));
}

TEST_CASE("enumeration budgets are enforced") {
    CHECK_THROWS_WITH_AS(plk::enumerate_compatible(10),
                         doctest::Contains("out of budget"), std::invalid_argument);
    CHECK_THROWS_AS(plk::enumerate_perfect_compatible(2), std::invalid_argument);
    CHECK_THROWS_WITH_AS(plk::enumerate_compatible_brute(6),
                         doctest::Contains("out of budget"), std::invalid_argument);
}

TEST_CASE("meet and join distribute over each other on [6]") {
    const Sublattice l6 = plk::full_pair_lattice(6);
    const std::vector<PairIndex> elems(l6.members.begin(), l6.members.end());
    for (const PairIndex& a : elems)
        for (const PairIndex& b : elems)
            for (const PairIndex& c : elems) {
                REQUIRE(plk::pair_meet(a, plk::pair_join(b, c)) ==
                        plk::pair_join(plk::pair_meet(a, b), plk::pair_meet(a, c)));
                REQUIRE(plk::pair_join(a, plk::pair_meet(b, c)) ==
                        plk::pair_meet(plk::pair_join(a, b), plk::pair_join(a, c)));
            }
}

TEST_CASE("sublattice files round trip") {
    const Sublattice original = example_l7();
    std::ostringstream out;
    plk::write_sublattice_file(out, original);
    std::istringstream in(out.str());
    const Sublattice back = plk::read_sublattice_file(in);
    CHECK(back == original);

    std::istringstream unordered("n: 4\n3 4\n1 2\n");
    CHECK(plk::read_sublattice_file(unordered) == make(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("sublattice files reject malformed input") {
    const auto reject = [](const std::string& text, const char* what) {
        std::istringstream in(text);
        CHECK_THROWS_WITH_AS(plk::read_sublattice_file(in), doctest::Contains(what),
                             std::runtime_error);
    };
    reject("m: 4\n1 2\n", "expected header");
    reject("", "expected header");
    reject("n: 4 extra\n", "trailing text");
    reject("n: 4\n1 2 3\n", "bad member line");
    reject("n: 4\n2 1\n", "bad member line");
    reject("n: 4\n1 2\n1 2\n", "bad member line");
}
