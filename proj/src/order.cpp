#include "plk/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace plk {

MonomialOrder::MonomialOrder(OrderScheme scheme, std::vector<Variable> vars,
                             std::vector<Variable> elim)
    : scheme_(scheme), vars_(std::move(vars)), eliminated_(std::move(elim)) {
    if (vars_.empty()) throw std::invalid_argument("MonomialOrder: empty variable list");
    int max_id = 0;
    for (const auto& v : vars_) max_id = std::max(max_id, v.id());
    rank_by_id_.assign(max_id + 1, -1);
    for (std::size_t r = 0; r < vars_.size(); ++r) {
        int id = vars_[r].id();
        if (rank_by_id_[id] != -1)
            throw std::invalid_argument("MonomialOrder: duplicate variable " + vars_[r].str());
        rank_by_id_[id] = static_cast<int>(r);
    }
}

MonomialOrder MonomialOrder::lex(std::vector<Variable> descending) {
    return MonomialOrder(OrderScheme::Lex, std::move(descending), {});
}

MonomialOrder MonomialOrder::revlex(std::vector<Variable> descending) {
    return MonomialOrder(OrderScheme::RevLex, std::move(descending), {});
}

MonomialOrder MonomialOrder::block_elim(std::vector<Variable> eliminated_descending,
                                        std::vector<Variable> kept_descending) {
    std::vector<Variable> all = eliminated_descending;
    all.insert(all.end(), kept_descending.begin(), kept_descending.end());
    return MonomialOrder(OrderScheme::BlockElimLex, std::move(all),
                         std::move(eliminated_descending));
}

bool MonomialOrder::contains(const Variable& v) const {
    int id = v.id();
    return id < static_cast<int>(rank_by_id_.size()) && rank_by_id_[id] != -1;
}

int MonomialOrder::rank_of(const Variable& v) const {
    int id = v.id();
    if (id >= static_cast<int>(rank_by_id_.size()) || rank_by_id_[id] == -1)
        throw std::invalid_argument("variable not in order: " + v.str());
    return rank_by_id_[id];
}

namespace {

// (rank, exponent) pairs sorted by rank ascending, i.e. most significant first.
std::vector<std::pair<int, int>> ranked(const Monomial& m, const MonomialOrder& ord) {
    std::vector<std::pair<int, int>> r;
    r.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) r.emplace_back(ord.rank_of(v), e);
    std::sort(r.begin(), r.end());
    return r;
}

// First difference scanning most significant variables first; the monomial
// with the larger exponent there is lex-larger.
int lex_compare(const std::vector<std::pair<int, int>>& a,
                const std::vector<std::pair<int, int>>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return 1;
        if (i == a.size() || b[j].first < a[i].first) return -1;
        if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    auto ra = ranked(a, *this);
    auto rb = ranked(b, *this);
    if (ra == rb) return 0;
    if (scheme_ != OrderScheme::RevLex) return lex_compare(ra, rb);

    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // Scan least significant variables first; the smaller exponent there
    // belongs to the larger monomial.
    auto i = ra.rbegin();
    auto j = rb.rbegin();
    while (i != ra.rend() || j != rb.rend()) {
        if (j == rb.rend() || (i != ra.rend() && i->first > j->first)) return -1;
        if (i == ra.rend() || j->first > i->first) return 1;
        if (i->second != j->second) return i->second < j->second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

Term leading_term(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    const std::map<Monomial, Rational>& terms = f.terms();
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return Term{best->first, best->second};
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord) {
    return leading_term(f, ord).monomial;
}

Polynomial monic(const Polynomial& f, const MonomialOrder& ord) {
    Term lt = leading_term(f, ord);
    if (lt.coefficient.is_one()) return f;
    return f.scaled(lt.coefficient.inverse());
}

}  // namespace plk
