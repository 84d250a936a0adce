#include "plk/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace plk {

Monomial Monomial::of(Variable v, int exp) {
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(v, exp);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(const Variable& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : factors_)
        if (o.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o, const Monomial& divisor) {
    Monomial r;
    auto a = o.factors_.begin();
    for (const auto& [v, e] : divisor.factors_) {
        while (a != o.factors_.end() && a->first < v) r.factors_.push_back(*a++);
        if (a == o.factors_.end() || a->first != v || a->second < e)
            throw std::invalid_argument("Monomial: quotient is not exact");
        if (a->second > e) r.factors_.emplace_back(v, a->second - e);
        ++a;
    }
    while (a != o.factors_.end()) r.factors_.push_back(*a++);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            r.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.emplace_back(i->first, std::max(i->second, j->second));
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (const auto& [v, e] : factors_)
        if (o.exponent(v) > 0) return false;
    return true;
}

bool Monomial::operator<(const Monomial& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return factors_ < o.factors_;
}

}  // namespace plk
