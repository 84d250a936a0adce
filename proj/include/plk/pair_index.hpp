#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace plk {

/// Index pair (i, j) with 1 <= i < j, the label set of the pair lattice on
/// [n] and the vertex labels p[i,j] of the minor ring.
struct PairIndex {
    int i = 0;
    int j = 0;

    PairIndex() = default;
    PairIndex(int i_, int j_) : i(i_), j(j_) {
        if (i < 1 || j <= i)
            throw std::invalid_argument("PairIndex requires 1 <= i < j");
    }

    auto operator<=>(const PairIndex&) const = default;

    std::string str() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

/// Componentwise order: (i,j) <= (k,l) iff i <= k and j <= l. Under this
/// order the full pair set is a distributive lattice.
inline bool pair_le(PairIndex a, PairIndex b) { return a.i <= b.i && a.j <= b.j; }

/// Nesting order: a <= b iff the interval [b.i, b.j] sits inside [a.i, a.j],
/// i.e. a.i <= b.i and a.j >= b.j. Linear extensions of this order drive the
/// elimination-friendly lex orders.
inline bool nest_le(PairIndex a, PairIndex b) { return a.i <= b.i && a.j >= b.j; }

inline bool pair_comparable(PairIndex a, PairIndex b) { return pair_le(a, b) || pair_le(b, a); }

inline PairIndex pair_meet(PairIndex a, PairIndex b) {
    return PairIndex(a.i < b.i ? a.i : b.i, a.j < b.j ? a.j : b.j);
}

inline PairIndex pair_join(PairIndex a, PairIndex b) {
    return PairIndex(a.i > b.i ? a.i : b.i, a.j > b.j ? a.j : b.j);
}

}  // namespace plk
