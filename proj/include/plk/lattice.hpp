#pragma once

#include <iosfwd>
#include <set>
#include <utility>
#include <vector>

#include "plk/pair_index.hpp"

namespace plk {

/// Subset of the pair lattice on [n]. The same container doubles as a plain
/// subposet of the componentwise order; closure under meet/join is a checked
/// property (is_sublattice), not a constructor guarantee.
struct Sublattice {
    int n = 0;
    std::set<PairIndex> members;

    Sublattice(int n_, std::set<PairIndex> members_);

    bool contains(PairIndex p) const { return members.count(p) != 0; }
    bool operator==(const Sublattice&) const = default;
};

/// All pairs (i,j) with 1 <= i < j <= n.
Sublattice full_pair_lattice(int n);

/// Closed under componentwise meet and join.
bool is_sublattice(const Sublattice& s);

/// The complement within the full pair lattice is downward closed in the
/// nesting order; equivalently every sub-interval pair of a member is a
/// member.
bool complement_is_poset_ideal(const Sublattice& s);

/// Largest chain length (number of covers walked, not elements) of the
/// induced componentwise order. Throws on an empty member set.
int rank(const Sublattice& s);

/// All maximal chains of the induced componentwise order have equal length,
/// checked by exhaustive walk of the cover digraph. Throws on empty.
bool is_pure(const Sublattice& s);

/// Cover relations (transitive reduction) of the induced componentwise
/// order, each pair listed as (lower, upper).
std::vector<std::pair<PairIndex, PairIndex>> hasse_edges(const Sublattice& s);

/// Sublattice whose complement is downward closed in the nesting order and
/// whose rank clears the ambient size. The default reading is rank >= n;
/// strict_rank demands rank == n exactly.
bool is_compatible(const Sublattice& s, bool strict_rank = false);

/// Sublattice with downward-closed complement containing every (i,i+1) and
/// every (i,i+2). Those members alone force a chain of length 2n-4, the
/// maximum possible, so for n >= 4 a perfect sublattice is compatible under
/// either rank reading.
bool is_perfect(const Sublattice& s);

/// Members that are neither the minimum nor the join of two strictly
/// smaller members, returned with the induced order.
Sublattice join_irreducibles(const Sublattice& s);

using Chain = std::vector<PairIndex>;

/// Walk from (1,2), stepping to (i,j+1) when that pair is a member and to
/// (i+1,j) otherwise, for exactly 2n-4 steps. Requires a perfect sublattice;
/// the walk can leave the member set otherwise.
Chain fundamental_chain(const Sublattice& s);

/// Every compatible sublattice of the pair lattice on [n], 3 <= n <= 9,
/// generated from antichains of intervals (the candidate maximal cliques)
/// and filtered by is_compatible. Sorted by member set.
std::vector<Sublattice> enumerate_compatible(int n, bool strict_rank = false);

/// Every perfect sublattice on [n], 3 <= n <= 9; there are exactly
/// Catalan(n-2) of them. Sorted by member set.
std::vector<Sublattice> enumerate_perfect_compatible(int n);

/// Independent oracles sweeping all 2^binom(n,2) subsets, n <= 5.
std::vector<Sublattice> enumerate_compatible_brute(int n, bool strict_rank = false);
std::vector<Sublattice> enumerate_perfect_compatible_brute(int n);

/// File format: header line "n: <int>", then one member per line as "i j".
/// Output is sorted lexicographically; input accepts any order.
Sublattice read_sublattice_file(std::istream& in);
void write_sublattice_file(std::ostream& out, const Sublattice& s);

}  // namespace plk
