#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "plk/arcs.hpp"
#include "plk/format.hpp"
#include "plk/graphs.hpp"
#include "plk/groebner.hpp"
#include "plk/lattice.hpp"
#include "plk/ring.hpp"

namespace plk {

/// The three-term quadric p[i,l]p[j,k] - p[i,k]p[j,l] + p[i,j]p[k,l].
/// Requires i < j < k < l.
Polynomial quadric(int i, int j, int k, int l);

/// Four-term cubics that arise as S-polynomials of quadrics sharing three,
/// respectively two, indices. Requires strictly increasing indices.
///   cubic5 = p[i,k]p[j,l]p[k,m] - p[i,k]p[j,m]p[k,l]
///          - p[i,l]p[j,k]p[k,m] + p[i,m]p[j,k]p[k,l]
///   cubic6 = p[i,l]p[j,m]p[k,s] - p[i,l]p[j,s]p[k,m]
///          - p[i,m]p[j,k]p[l,s] + p[i,s]p[j,k]p[l,m]
Polynomial cubic5(int i, int j, int k, int l, int m);
Polynomial cubic6(int i, int j, int k, int l, int m, int s);

/// Tail reduction of cubic6 by the quadrics: the six-term 3x3 determinant
/// det(p[r,c]) over rows i,j,k and columns l,m,s. Same leading monomial
/// p[i,l]p[j,m]p[k,s] under the row-major lex order.
Polynomial cubic6_reduced(int i, int j, int k, int l, int m, int s);

/// All binom(n,4) quadrics over the full pair ring on n indices.
Ideal quadric_ideal(int n);

/// Quadrics quadric(i,j,k,l) with (i,l) a member of L, over the subring on
/// L's members. When L's members are closed under sub-intervals all six
/// variables of each generator automatically lie in L; otherwise throws.
Ideal quadric_ideal(const Sublattice& l);

/// Quadrics all six of whose pair variables are edges of g, over the subring
/// on g's edges.
Ideal edge_quadric_ideal(const Graph& g);

/// Expected Groebner basis of quadric_ideal(n) under rowmajor_lex_order(n):
/// quadrics, cubic5 over all 5-subsets, and cubic6 over all 6-subsets.
/// The plain form uses cubic6 as listed (a valid basis, not tail-reduced);
/// the reduced form substitutes cubic6_reduced and is the reduced basis.
std::vector<Polynomial> rowmajor_lex_basis(int n);
std::vector<Polynomial> rowmajor_lex_reduced_basis(int n);

/// Substitute p[i,j] -> x[i]y[j] - x[j]y[i] and expand. Input must use pair
/// variables only. A polynomial lies in the pair-relation ideal of the full
/// ring exactly when its image vanishes, so this is an independent
/// membership oracle for every basis this project constructs.
Polynomial plucker_image(const Polynomial& f);
bool plucker_kernel_member(const Polynomial& f);

/// Weakly increasing chain in the componentwise order, with repeats; the
/// exponent multiset of a standard monomial.
struct StandardMonomial {
    std::vector<PairIndex> chain;

    explicit StandardMonomial(std::vector<PairIndex> chain_);
    Monomial monomial() const;
    int degree() const { return static_cast<int>(chain.size()); }
    bool operator==(const StandardMonomial&) const = default;
};

bool is_standard_monomial(const Monomial& m);
std::optional<StandardMonomial> as_standard(const Monomial& m);

/// All standard monomials of total degree d on the full pair ring.
std::vector<Monomial> standard_monomials(int n, int d);

/// Normal form modulo the quadrics under the graded revlex order; the result
/// is supported on standard monomials only.
Polynomial straighten_polynomial(const Polynomial& f, int n);
std::vector<std::pair<Rational, StandardMonomial>> straighten(const Polynomial& f, int n);

/// Same result, computed by repeatedly rewriting one incomparable factor
/// pair p[i,l]p[j,k] -> p[i,k]p[j,l] - p[i,j]p[k,l]. At every rewrite the
/// replacement monomials' componentwise-smaller factors are verified to lie
/// below both rewritten factors; a violation throws std::logic_error.
Polynomial straighten_stepwise(const Polynomial& f, int n);

/// The degree-d standard monomials are counted by the monomials outside the
/// incomparable-product initial ideal and their images under plucker_image
/// are linearly independent (exact rational rank). Budget: n <= 6, d <= 3.
bool standard_monomial_basis_check(int n, int d);

/// The elimination ideal of the full quadric ideal onto L's members equals
/// the ideal of quadrics quadric(i,j,k,l) with (i,l) in L. Requires
/// is_compatible(L).
bool elimination_vs_quadrics(const Sublattice& l,
                             const BuchbergerOptions& opts = {});

/// True when the non-edges of g, read as pair indices, form an initial
/// segment of the row-major variable order. Such a graph's edge subring is
/// a trailing block of rowmajor_lex_order(g.n).
bool complement_is_initial_segment(const Graph& g);

/// For a graph whose complement is an initial segment: eliminating the
/// missing variables from the full quadric ideal under the row-major lex
/// order yields exactly edge_quadric_ideal(g). Throws when the complement is
/// not an initial segment.
bool elimination_vs_edge_quadrics(const Graph& g,
                                  const BuchbergerOptions& opts = {});

/// Squarefree monomial ideal over an ambient variable list. The constructor
/// checks squarefreeness and support, discards duplicate and divisible
/// generators, and sorts what remains.
struct SquarefreeMonomialIdeal {
    std::vector<Monomial> generators;
    std::vector<Variable> ambient;

    SquarefreeMonomialIdeal(std::vector<Monomial> gens, std::vector<Variable> ambient_vars);
};

/// The leading monomials of rowmajor_lex_reduced_basis(n): p[i,j]p[k,l] for
/// i<j<k<l, p[i,k]p[j,l]p[k,m] for i<j<k<l<m, p[i,l]p[j,m]p[k,s] for
/// i<j<k<l<m<s, over the full pair ring.
SquarefreeMonomialIdeal rowmajor_initial_ideal(int n);

struct SimplicialComplex {
    std::vector<Variable> vertices;
    std::vector<std::set<Variable>> facets;
};

/// Faces are the squarefree monomials no generator divides; facets are the
/// maximal faces. At most 63 vertices; throws BudgetExceeded past 2*10^7
/// faces.
SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& m);

/// dimension follows the facet-cardinality (Krull) convention: the number of
/// vertices in the largest facet, one more than its simplicial dimension.
/// degree counts facets of that size.
struct ComplexSummary {
    int dimension = 0;
    BigInt degree = 0;
    bool equidimensional = true;
};

ComplexSummary summarize(const SimplicialComplex& sc);
ComplexSummary stanley_reisner_analysis(const SquarefreeMonomialIdeal& m);

/// Read each facet {p[a1,b1], ...} of a complex on pair variables as the arc
/// set {(a1,b1), ...} on n points.
std::vector<ArcArrangement> facets_as_arcs(const SimplicialComplex& sc, int n);

}  // namespace plk
