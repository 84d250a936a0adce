#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "plk/order.hpp"

namespace plk {

/// Finitely generated ideal in the polynomial ring spanned by `ambient`.
/// Generators are non-zero and supported on the ambient variables; the empty
/// generator list is the zero ideal.
struct Ideal {
    std::vector<Polynomial> generators;
    std::vector<Variable> ambient;

    Ideal() = default;
    Ideal(std::vector<Polynomial> gens, std::vector<Variable> ambient_vars);
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
/// descending under `order`.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
};

/// Thrown when a computation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BuchbergerOptions {
    /// Maximum number of S-pair reductions before aborting.
    long long spair_budget = 200000;
};

/// Remainder of f under multivariate division by `basis` (scanned in the
/// given order, first divisor wins). No monomial of the result is divisible
/// by any leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);

/// S(f, g) = (lcm/lt f) f - (lcm/lt g) g, with both summands made monic.
/// Throws std::invalid_argument when either input is zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties broken by the generator index pair) and the coprime
/// leading-term criterion. Returns the unique reduced basis and certifies it
/// via is_groebner before returning.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& opts = {});

/// True when every S-polynomial of the set reduces to zero.
bool is_groebner(std::span<const Polynomial> basis, const MonomialOrder& ord);

/// Intersection of `ideal` with the subring on `keep`, computed from a
/// Groebner basis under `ord`. Requires a lexicographic-type order in which
/// every discarded ambient variable outranks every kept one.
Ideal eliminate(const Ideal& ideal, const std::vector<Variable>& keep, const MonomialOrder& ord,
                const BuchbergerOptions& opts = {});

/// Equality of ideals via uniqueness of the reduced Groebner basis.
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                 const BuchbergerOptions& opts = {});

}  // namespace plk
