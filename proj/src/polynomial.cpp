#include "plk/polynomial.hpp"

#include <stdexcept>

namespace plk {

Polynomial Polynomial::constant(Rational c) { return term(std::move(c), Monomial::one()); }

Polynomial Polynomial::term(Rational c, Monomial m) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int Polynomial::total_degree() const {
    if (is_zero()) throw std::invalid_argument("total_degree: zero polynomial");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::set<Variable> Polynomial::variables() const {
    std::set<Variable> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vs.insert(v);
    return vs;
}

const Rational& Polynomial::coefficient(const Monomial& m) const {
    static const Rational kZero;
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(c1 * c2, m1.times(m2));
    return r;
}

Polynomial Polynomial::times(const Rational& c, const Monomial& m) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1.times(m), c1 * c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    return times(c, Monomial::one());
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& assignment) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("substitute: missing assignment for " + v.str());
            for (int k = 0; k < e; ++k) prod = prod * it->second;
        }
        result += prod;
    }
    return result;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

}  // namespace plk
