#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plk/lattice.hpp"
#include "plk/pair_index.hpp"
#include "plk/rational.hpp"

namespace plk {

/// Simple undirected graph on vertices 1..n, edges stored as index pairs.
struct Graph {
    int n = 0;
    std::set<PairIndex> edges;

    Graph(int n_, std::set<PairIndex> edges_);

    bool has_edge(PairIndex e) const { return edges.count(e) != 0; }
    bool has_edge(int i, int j) const;  // accepts either endpoint order
    std::vector<int> isolated_vertices() const;
};

/// Graph whose edges are exactly the member pairs.
Graph graph_of(const Sublattice& s);

/// Inverse of graph_of: the edge set viewed as a subset of the pair lattice.
Sublattice pair_set_of(const Graph& g);

/// All maximal cliques, each sorted ascending, listed lexicographically.
/// Exhaustive subset sweep; refuses n > 12.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

/// Maximal cliques of a graph in which every one of them is a run of
/// consecutive vertices [a_t, b_t] with a_t < b_t. Both endpoint sequences
/// strictly increase (containment would break maximality) and the first
/// interval starts at vertex 1.
struct CliqueIntervalSystem {
    int n = 0;
    std::vector<std::pair<int, int>> intervals;

    CliqueIntervalSystem(int n_, std::vector<std::pair<int, int>> intervals_);

    /// "[a1,b1][a2,b2]..."
    std::string str() const;

    bool operator==(const CliqueIntervalSystem&) const = default;
};

/// The system of maximal cliques when every one is a consecutive interval
/// of at least two vertices; empty otherwise. An isolated vertex yields a
/// singleton maximal clique, so graphs with isolated vertices never have a
/// system.
std::optional<CliqueIntervalSystem> interval_system(const Graph& g);

/// Closure condition on edge pairs: edges {i,j}, {k,l} sharing their lower
/// endpoint demand the edge on the two upper endpoints, and edges sharing
/// their upper endpoint demand the edge on the two lower endpoints.
bool condition_star(const Graph& g);

/// Simplicial-elimination test: repeatedly strip a vertex whose remaining
/// neighbours form a clique; succeeds exactly on chordal graphs.
bool is_chordal(const Graph& g);

/// Single connected component spanning all n vertices.
bool is_connected(const Graph& g);

/// Sizes of consecutive clique intersections: max(0, b_t - a_{t+1} + 1).
std::vector<int> overlaps(const CliqueIntervalSystem& sys);

/// Every consecutive overlap at least 2 / at most 3.
bool perfect_criterion(const CliqueIntervalSystem& sys);
bool gorenstein_criterion(const CliqueIntervalSystem& sys);

/// All pairs lying within one of the cliques, as a sublattice candidate.
Sublattice lattice_of_system(const CliqueIntervalSystem& sys);

/// All systems whose cliques cover 1..n (first starts at 1, last ends at n,
/// no gaps) with every consecutive overlap in [min_overlap, max_overlap].
/// min_overlap 0 admits disconnected covers such as [1,3][4,6].
std::vector<CliqueIntervalSystem> enumerate_covering_systems(int n, int min_overlap,
                                                             int max_overlap);

/// Number of covering systems with all overlaps in [2,3], by three routes.
BigInt count_gorenstein_perfect_recurrence(int n);   // paired linear recurrence
BigInt count_gorenstein_perfect_closed_form(int n);  // exact a + b*sqrt(5) arithmetic
BigInt count_gorenstein_perfect_brute(int n);        // direct enumeration, n <= 10
/// All applicable routes computed and compared; throws if they disagree.
BigInt count_gorenstein_perfect(int n);

/// File format: header line "n: <int>", then one edge per line as "i j".
Graph read_graph_file(std::istream& in);
void write_graph_file(std::ostream& out, const Graph& g);

}  // namespace plk
