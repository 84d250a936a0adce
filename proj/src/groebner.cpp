#include "plk/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace plk {

Ideal::Ideal(std::vector<Polynomial> gens, std::vector<Variable> ambient_vars)
    : generators(std::move(gens)), ambient(std::move(ambient_vars)) {
    std::set<Variable> scope(ambient.begin(), ambient.end());
    for (const Polynomial& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("Ideal: zero generator");
        for (const Variable& v : g.variables())
            if (!scope.count(v))
                throw std::invalid_argument("Ideal: generator uses foreign variable " + v.str());
    }
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
    Polynomial remainder;
    Polynomial p = f;
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const Polynomial& g : basis) lms.push_back(leading_monomial(g, ord));

    while (!p.is_zero()) {
        Term lt = leading_term(p, ord);
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!lms[k].divides(lt.monomial)) continue;
            Monomial q = Monomial::quotient(lt.monomial, lms[k]);
            Rational c = lt.coefficient / basis[k].coefficient(lms[k]);
            p -= basis[k].times(c, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lt.coefficient, lt.monomial);
            p.add_term(-lt.coefficient, lt.monomial);
        }
    }
    return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    Term lf = leading_term(f, ord);
    Term lg = leading_term(g, ord);
    Monomial l = Monomial::lcm(lf.monomial, lg.monomial);
    Polynomial a = f.times(lf.coefficient.inverse(), Monomial::quotient(l, lf.monomial));
    Polynomial b = g.times(lg.coefficient.inverse(), Monomial::quotient(l, lg.monomial));
    return a - b;
}

namespace {

struct PairKey {
    int lcm_degree;
    std::size_t a, b;
    bool operator<(const PairKey& o) const {
        return std::tie(lcm_degree, a, b) < std::tie(o.lcm_degree, o.a, o.b);
    }
};

// Normal selection strategy: smallest lcm degree first, deterministic
// tie-break by the generator index pair.
class PairQueue {
public:
    void push(std::size_t a, std::size_t b, int lcm_degree) {
        pairs_.insert(PairKey{lcm_degree, a, b});
    }
    bool empty() const { return pairs_.empty(); }
    PairKey pop() {
        PairKey k = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        return k;
    }

private:
    std::set<PairKey> pairs_;
};

// Drop elements whose leading monomial is divisible by another's, make the
// rest monic, reduce every tail fully, and sort by leading monomial
// descending. The result is the unique reduced basis of the ideal.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& ord) {
    std::vector<Monomial> lms;
    lms.reserve(g.size());
    for (const Polynomial& p : g) lms.push_back(leading_monomial(p, ord));

    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (keep[i]) minimal.push_back(monic(g[i], ord));

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others, ord);
            if (r != minimal[i]) {
                minimal[i] = monic(r, ord);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(leading_monomial(a, ord), leading_monomial(b, ord));
    });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& opts) {
    std::vector<Polynomial> g = ideal.generators;
    std::vector<Monomial> lms;
    for (const Polynomial& p : g) lms.push_back(leading_monomial(p, ord));

    PairQueue queue;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            queue.push(a, b, Monomial::lcm(lms[a], lms[b]).degree());

    long long reductions = 0;
    while (!queue.empty()) {
        PairKey k = queue.pop();
        if (lms[k.a].coprime_with(lms[k.b])) continue;  // S-pair reduces to zero
        if (++reductions > opts.spair_budget)
            throw BudgetExceeded("buchberger: S-pair budget of " +
                                 std::to_string(opts.spair_budget) + " reductions exceeded");
        Polynomial s = s_polynomial(g[k.a], g[k.b], ord);
        Polynomial r = normal_form(s, g, ord);
        if (r.is_zero()) continue;
        g.push_back(r);
        lms.push_back(leading_monomial(r, ord));
        std::size_t fresh = g.size() - 1;
        for (std::size_t a = 0; a < fresh; ++a)
            queue.push(a, fresh, Monomial::lcm(lms[a], lms[fresh]).degree());
    }

    GroebnerBasis basis{reduce_basis(std::move(g), ord), ord};
    if (!is_groebner(basis.elements, ord))
        throw std::logic_error("buchberger: certification failed");
    return basis;
}

bool is_groebner(std::span<const Polynomial> basis, const MonomialOrder& ord) {
    std::vector<Monomial> lms;
    for (const Polynomial& g : basis) lms.push_back(leading_monomial(g, ord));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            if (lms[a].coprime_with(lms[b])) continue;
            Polynomial s = s_polynomial(basis[a], basis[b], ord);
            if (!normal_form(s, basis, ord).is_zero()) return false;
        }
    }
    return true;
}

namespace {

void check_elimination_order(const std::vector<Variable>& ambient,
                             const std::vector<Variable>& keep, const MonomialOrder& ord) {
    if (ord.scheme() == OrderScheme::RevLex)
        throw std::invalid_argument("eliminate: order cannot eliminate (graded scheme)");
    std::set<Variable> kept(keep.begin(), keep.end());
    int min_keep_rank = static_cast<int>(ord.variables().size());
    for (const Variable& v : keep) min_keep_rank = std::min(min_keep_rank, ord.rank_of(v));
    for (const Variable& v : ambient) {
        if (kept.count(v)) continue;
        if (ord.rank_of(v) >= min_keep_rank)
            throw std::invalid_argument("eliminate: discarded variable " + v.str() +
                                        " does not outrank the kept block");
    }
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<Variable>& keep, const MonomialOrder& ord,
                const BuchbergerOptions& opts) {
    check_elimination_order(ideal.ambient, keep, ord);
    GroebnerBasis gb = buchberger(ideal, ord, opts);
    std::set<Variable> kept(keep.begin(), keep.end());
    std::vector<Polynomial> retained;
    for (const Polynomial& g : gb.elements) {
        bool inside = true;
        for (const Variable& v : g.variables())
            if (!kept.count(v)) {
                inside = false;
                break;
            }
        if (inside) retained.push_back(g);
    }
    return Ideal(std::move(retained), keep);
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                 const BuchbergerOptions& opts) {
    GroebnerBasis ga = buchberger(a, ord, opts);
    GroebnerBasis gb = buchberger(b, ord, opts);
    return ga.elements == gb.elements;
}

}  // namespace plk
