#pragma once

#include <map>
#include <set>

#include "plk/monomial.hpp"
#include "plk/rational.hpp"

namespace plk {

/// Sparse polynomial with exact rational coefficients. Terms are stored in
/// the canonical container order of Monomial; no zero coefficients are kept.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    static Polynomial term(Rational c, Monomial m);
    static Polynomial variable(Variable v) { return term(Rational(1), Monomial::of(v)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // throws on the zero polynomial
    std::set<Variable> variables() const;
    const Rational& coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial times(const Rational& c, const Monomial& m) const;  // c*m*this
    Polynomial scaled(const Rational& c) const;

    /// Replace every variable by its assigned polynomial and expand. Every
    /// variable occurring in *this must have an assignment.
    Polynomial substitute(const std::map<Variable, Polynomial>& assignment) const;

    void add_term(const Rational& c, const Monomial& m);

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    std::map<Monomial, Rational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);

}  // namespace plk
