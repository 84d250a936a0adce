#pragma once

#include <vector>

#include "plk/polynomial.hpp"

namespace plk {

enum class OrderScheme { Lex, RevLex, BlockElimLex };

/// Total order on monomials over a fixed, finite variable list.
///
/// Lex: plain lexicographic order over the variable list (largest variable
/// first); the larger exponent on the most significant differing variable
/// wins.
///
/// RevLex: degree-graded reverse lexicographic order; higher total degree
/// wins, ties are broken so that the monomial with the smaller exponent on
/// the least variable is the larger one.
///
/// BlockElimLex: lexicographic order over a permutation split into a leading
/// block of eliminated variables and a trailing block of kept variables, so
/// any monomial meeting the eliminated block outranks every monomial in the
/// kept variables alone.
class MonomialOrder {
public:
    static MonomialOrder lex(std::vector<Variable> descending);
    static MonomialOrder revlex(std::vector<Variable> descending);
    static MonomialOrder block_elim(std::vector<Variable> eliminated_descending,
                                    std::vector<Variable> kept_descending);

    OrderScheme scheme() const { return scheme_; }
    /// Variable list, most significant first.
    const std::vector<Variable>& variables() const { return vars_; }
    /// Eliminated block (empty unless BlockElimLex).
    const std::vector<Variable>& eliminated() const { return eliminated_; }

    bool contains(const Variable& v) const;
    /// Position in the significance order, 0 = most significant. Throws
    /// std::invalid_argument("variable not in order") for foreign variables.
    int rank_of(const Variable& v) const;

    /// Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return scheme_ == o.scheme_ && vars_ == o.vars_ && eliminated_ == o.eliminated_;
    }

private:
    MonomialOrder(OrderScheme scheme, std::vector<Variable> vars, std::vector<Variable> elim);

    OrderScheme scheme_;
    std::vector<Variable> vars_;
    std::vector<Variable> eliminated_;
    std::vector<int> rank_by_id_;  // var id -> rank, -1 when absent
};

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Largest term of f under ord; throws on the zero polynomial.
Term leading_term(const Polynomial& f, const MonomialOrder& ord);
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord);

/// f scaled so its leading coefficient is 1.
Polynomial monic(const Polynomial& f, const MonomialOrder& ord);

}  // namespace plk
