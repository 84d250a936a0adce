#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "plk/order.hpp"
#include "plk/pair_index.hpp"

namespace plk {

/// All pairs (i,j), 1 <= i < j <= n, sorted lexicographically.
std::vector<PairIndex> all_pairs(int n);

/// Pair variables p[i,j] of the full ring on n indices, in lex index order.
std::vector<Variable> pair_variables(int n);

/// Canonical linear extension of the componentwise order, ascending
/// (stable: ties between incomparable elements fall back to lex index order,
/// which here is itself a linear extension).
std::vector<PairIndex> lattice_extension(int n);

/// Canonical linear extension of the nesting order, ascending; sorting by
/// (i ascending, j descending) realizes it.
std::vector<PairIndex> nest_extension(int n);

/// Pseudo-random linear extensions drawn with a seeded generator: repeatedly
/// pick a uniformly random minimal element among the remainder.
std::vector<PairIndex> seeded_lattice_extension(int n, std::uint64_t seed);
std::vector<PairIndex> seeded_nest_extension(int n, std::uint64_t seed);

/// Degree-graded reverse lexicographic order whose variable order ascends
/// with the given linear extension of the componentwise order.
MonomialOrder revlex_lattice_order(const std::vector<PairIndex>& ascending);
MonomialOrder revlex_lattice_order(int n);

/// Lexicographic order in which nest-smaller pairs are the larger variables;
/// the variable order descends along the given ascending nest extension.
MonomialOrder lex_nest_order(const std::vector<PairIndex>& ascending);
MonomialOrder lex_nest_order(int n);

/// Lexicographic order with p[1,2] > p[1,3] > ... > p[1,n] > p[2,3] > ...,
/// i.e. variables descending in lex index order.
MonomialOrder rowmajor_lex_order(int n);

/// Block elimination order for the pair ring on n indices: the variables
/// outside `keep` form the leading block, and each block is internally
/// ordered by the canonical nest extension. When the complement of `keep`
/// is downward closed in the nesting order the whole variable order is a
/// single nest extension, matching the lex orders above.
MonomialOrder elimination_order(int n, const std::set<PairIndex>& keep);

}  // namespace plk
