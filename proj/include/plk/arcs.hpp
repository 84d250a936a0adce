#pragma once

#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "plk/pair_index.hpp"
#include "plk/rational.hpp"

namespace plk {

/// Arcs (a, b) with 1 <= a < b <= n drawn over n collinear points.
struct ArcArrangement {
    int n = 2;
    std::set<PairIndex> arcs;

    ArcArrangement(int n_, std::set<PairIndex> arcs_);

    bool contains(PairIndex a) const { return arcs.count(a) > 0; }
    bool operator==(const ArcArrangement&) const = default;
};

/// Relative position of two distinct arcs. Every pair is exactly one of
/// disjoint / nested / crossing; sharing a single endpoint counts as crossing
/// unless one interval contains the other.
inline bool arcs_disjoint(PairIndex p, PairIndex q) { return p.j < q.i || q.j < p.i; }
inline bool arcs_nested(PairIndex p, PairIndex q) {
    return (p.i <= q.i && q.j <= p.j) || (q.i <= p.i && p.j <= q.j);
}
inline bool arcs_crossing(PairIndex p, PairIndex q) {
    return !arcs_disjoint(p, q) && !arcs_nested(p, q);
}

/// True iff none of the three excluded patterns occurs:
///   - two disjoint arcs (i,j), (k,l) with i < j < k < l;
///   - arcs (i,k), (j,l), (k,m) with i < j < k < l < m;
///   - arcs (i,l), (j,m), (k,s) with i < j < k < l < m < s.
bool is_allowed(const ArcArrangement& a);

/// Largest possible size of an allowed arrangement on n points: 2n - 3.
int max_arcs(int n);

/// All allowed arrangements with exactly max_arcs(n) arcs; their number is
/// the Catalan number C_{n-2}. Budget: 2 <= n <= 10.
std::vector<ArcArrangement> enumerate_maximal(int n);

/// Independent oracle: filter all arc subsets of size 2n - 3. 2 <= n <= 5.
std::vector<ArcArrangement> enumerate_maximal_brute(int n);

/// Grow an allowed, non-maximal arrangement to one with 2n - 3 arcs that
/// contains it. Throws if the input is not allowed or is already maximal.
ArcArrangement extend_to_maximal(const ArcArrangement& a);

/// Full binary tree with arc labels: every node has both children or neither.
struct ArcTree {
    PairIndex label;
    std::unique_ptr<ArcTree> left;
    std::unique_ptr<ArcTree> right;

    bool is_leaf() const { return left == nullptr; }
    int node_count() const;
    int leaf_count() const;

    /// Leaf: "[a,b]". Internal node: "(<left><right>)@[a,b]".
    std::string str() const;
};

bool tree_equal(const ArcTree& s, const ArcTree& t);

/// Decompose a maximal allowed arrangement into a full binary tree, rooted at
/// (1, n). A node (a, b) is internal iff the arrangement has arcs (a, j) with
/// j < b and (i, b) with i > a; its children are then (a, j_max) and
/// (i_min, b). Throws "not a maximal allowed arrangement" when the walk does
/// not visit every arc exactly once.
ArcTree to_tree(const ArcArrangement& a);

/// Collect all node labels; the ambient point count is the root's right end.
ArcArrangement from_tree(const ArcTree& t);

/// C_k = binom(2k, k) / (k + 1).
BigInt catalan_number(int k);

/// Text format: "n=<int>; arcs=(a1,b1),(a2,b2),..." (arcs sorted, possibly empty).
std::string arrangement_str(const ArcArrangement& a);
ArcArrangement read_arc_arrangement(std::istream& in);
void write_arc_arrangement(std::ostream& out, const ArcArrangement& a);

}  // namespace plk
