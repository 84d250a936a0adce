#pragma once

#include <utility>
#include <vector>

#include "plk/variable.hpp"

namespace plk {

/// Sparse power product: a sorted list of (variable, exponent) factors with
/// all exponents positive. The empty product is the monomial 1.
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial of(Variable v, int exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(const Variable& v) const;
    bool contains(const Variable& v) const { return exponent(v) > 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Exact quotient; throws std::invalid_argument when *this does not divide o.
    static Monomial quotient(const Monomial& o, const Monomial& divisor);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// Canonical container order (degree, then factor list); independent of
    /// any monomial order used for division.
    bool operator<(const Monomial& o) const;

private:
    std::vector<Factor> factors_;
};

}  // namespace plk
