#include "plk/ring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace plk {

std::vector<PairIndex> all_pairs(int n) {
    if (n < 2) throw std::invalid_argument("all_pairs: n must be at least 2");
    std::vector<PairIndex> ps;
    ps.reserve(n * (n - 1) / 2);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) ps.emplace_back(i, j);
    return ps;
}

std::vector<Variable> pair_variables(int n) {
    std::vector<Variable> vars;
    for (PairIndex p : all_pairs(n)) vars.push_back(Variable::pair(p));
    return vars;
}

std::vector<PairIndex> lattice_extension(int n) {
    return all_pairs(n);  // lex index order extends the componentwise order
}

std::vector<PairIndex> nest_extension(int n) {
    auto ps = all_pairs(n);
    std::sort(ps.begin(), ps.end(), [](PairIndex a, PairIndex b) {
        if (a.i != b.i) return a.i < b.i;
        return a.j > b.j;
    });
    return ps;
}

namespace {

template <class Le>
std::vector<PairIndex> seeded_extension(int n, std::uint64_t seed, Le le) {
    std::vector<PairIndex> rest = all_pairs(n);
    std::vector<PairIndex> out;
    out.reserve(rest.size());
    std::mt19937_64 rng(seed);
    while (!rest.empty()) {
        std::vector<std::size_t> minima;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            bool minimal = true;
            for (std::size_t l = 0; l < rest.size(); ++l)
                if (l != k && le(rest[l], rest[k])) {
                    minimal = false;
                    break;
                }
            if (minimal) minima.push_back(k);
        }
        std::uniform_int_distribution<std::size_t> pick(0, minima.size() - 1);
        std::size_t chosen = minima[pick(rng)];
        out.push_back(rest[chosen]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    return out;
}

std::vector<Variable> to_vars(const std::vector<PairIndex>& ps) {
    std::vector<Variable> vs;
    vs.reserve(ps.size());
    for (PairIndex p : ps) vs.push_back(Variable::pair(p));
    return vs;
}

template <class Le>
void check_extension(const std::vector<PairIndex>& ascending, Le le, const char* what) {
    for (std::size_t a = 0; a < ascending.size(); ++a)
        for (std::size_t b = a + 1; b < ascending.size(); ++b)
            if (le(ascending[b], ascending[a]) && ascending[b] != ascending[a])
                throw std::invalid_argument(std::string(what) + ": not a linear extension");
}

}  // namespace

std::vector<PairIndex> seeded_lattice_extension(int n, std::uint64_t seed) {
    return seeded_extension(n, seed, [](PairIndex a, PairIndex b) { return pair_le(a, b); });
}

std::vector<PairIndex> seeded_nest_extension(int n, std::uint64_t seed) {
    return seeded_extension(n, seed, [](PairIndex a, PairIndex b) { return nest_le(a, b); });
}

MonomialOrder revlex_lattice_order(const std::vector<PairIndex>& ascending) {
    check_extension(ascending, [](PairIndex a, PairIndex b) { return pair_le(a, b); },
                    "revlex_lattice_order");
    std::vector<PairIndex> descending(ascending.rbegin(), ascending.rend());
    return MonomialOrder::revlex(to_vars(descending));
}

MonomialOrder revlex_lattice_order(int n) { return revlex_lattice_order(lattice_extension(n)); }

MonomialOrder lex_nest_order(const std::vector<PairIndex>& ascending) {
    check_extension(ascending, [](PairIndex a, PairIndex b) { return nest_le(a, b); },
                    "lex_nest_order");
    // Nest-minimal pairs are the most significant variables.
    return MonomialOrder::lex(to_vars(ascending));
}

MonomialOrder lex_nest_order(int n) { return lex_nest_order(nest_extension(n)); }

MonomialOrder rowmajor_lex_order(int n) { return MonomialOrder::lex(pair_variables(n)); }

MonomialOrder elimination_order(int n, const std::set<PairIndex>& keep) {
    for (PairIndex p : keep)
        if (p.j > n) throw std::invalid_argument("elimination_order: pair outside ring");
    std::vector<Variable> elim, kept;
    for (PairIndex p : nest_extension(n)) {
        if (keep.count(p))
            kept.push_back(Variable::pair(p));
        else
            elim.push_back(Variable::pair(p));
    }
    if (kept.empty()) throw std::invalid_argument("elimination_order: nothing kept");
    return MonomialOrder::block_elim(std::move(elim), std::move(kept));
}

}  // namespace plk
