#include "plk/plucker.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace plk {

namespace {

Polynomial pv(int i, int j) { return Polynomial::variable(Variable::pair(i, j)); }

void require_increasing(std::initializer_list<int> idx, const char* who) {
    int prev = 0;
    for (int v : idx) {
        if (v <= prev)
            throw std::invalid_argument(std::string(who) +
                                        ": indices must be strictly increasing from 1");
        prev = v;
    }
}

}  // namespace

Polynomial quadric(int i, int j, int k, int l) {
    require_increasing({i, j, k, l}, "quadric");
    return pv(i, l) * pv(j, k) - pv(i, k) * pv(j, l) + pv(i, j) * pv(k, l);
}

Polynomial cubic5(int i, int j, int k, int l, int m) {
    require_increasing({i, j, k, l, m}, "cubic5");
    return pv(i, k) * pv(j, l) * pv(k, m) - pv(i, k) * pv(j, m) * pv(k, l) -
           pv(i, l) * pv(j, k) * pv(k, m) + pv(i, m) * pv(j, k) * pv(k, l);
}

Polynomial cubic6(int i, int j, int k, int l, int m, int s) {
    require_increasing({i, j, k, l, m, s}, "cubic6");
    return pv(i, l) * pv(j, m) * pv(k, s) - pv(i, l) * pv(j, s) * pv(k, m) -
           pv(i, m) * pv(j, k) * pv(l, s) + pv(i, s) * pv(j, k) * pv(l, m);
}

Polynomial cubic6_reduced(int i, int j, int k, int l, int m, int s) {
    require_increasing({i, j, k, l, m, s}, "cubic6_reduced");
    return pv(i, l) * pv(j, m) * pv(k, s) - pv(i, l) * pv(j, s) * pv(k, m) -
           pv(i, m) * pv(j, l) * pv(k, s) + pv(i, m) * pv(j, s) * pv(k, l) +
           pv(i, s) * pv(j, l) * pv(k, m) - pv(i, s) * pv(j, m) * pv(k, l);
}

Ideal quadric_ideal(int n) {
    if (n < 2) throw std::invalid_argument("quadric_ideal: at least 2 indices");
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) gens.push_back(quadric(i, j, k, l));
    return Ideal(std::move(gens), pair_variables(n));
}

Ideal quadric_ideal(const Sublattice& lat) {
    std::vector<Variable> ambient;
    for (const PairIndex& p : all_pairs(lat.n))
        if (lat.contains(p)) ambient.push_back(Variable::pair(p));
    std::vector<Polynomial> gens;
    for (int i = 1; i <= lat.n; ++i)
        for (int j = i + 1; j <= lat.n; ++j)
            for (int k = j + 1; k <= lat.n; ++k)
                for (int l = k + 1; l <= lat.n; ++l) {
                    if (!lat.contains(PairIndex(i, l))) continue;
                    for (PairIndex q : {PairIndex(i, j), PairIndex(i, k), PairIndex(j, k),
                                        PairIndex(j, l), PairIndex(k, l)})
                        if (!lat.contains(q))
                            throw std::invalid_argument(
                                "quadric_ideal: generator variable " + q.str() +
                                " outside the member subring");
                    gens.push_back(quadric(i, j, k, l));
                }
    return Ideal(std::move(gens), std::move(ambient));
}

Ideal edge_quadric_ideal(const Graph& g) {
    std::vector<Variable> ambient;
    for (const PairIndex& p : all_pairs(g.n))
        if (g.has_edge(p)) ambient.push_back(Variable::pair(p));
    std::vector<Polynomial> gens;
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            for (int k = j + 1; k <= g.n; ++k)
                for (int l = k + 1; l <= g.n; ++l) {
                    const bool all_in = g.has_edge(i, j) && g.has_edge(i, k) &&
                                        g.has_edge(i, l) && g.has_edge(j, k) &&
                                        g.has_edge(j, l) && g.has_edge(k, l);
                    if (all_in) gens.push_back(quadric(i, j, k, l));
                }
    return Ideal(std::move(gens), std::move(ambient));
}

namespace {

std::vector<Polynomial> rowmajor_basis_impl(int n, bool reduced) {
    if (n < 2) throw std::invalid_argument("rowmajor_lex_basis: at least 2 indices");
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) out.push_back(quadric(i, j, k, l));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int m = l + 1; m <= n; ++m) out.push_back(cubic5(i, j, k, l, m));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int m = l + 1; m <= n; ++m)
                        for (int s = m + 1; s <= n; ++s)
                            out.push_back(reduced ? cubic6_reduced(i, j, k, l, m, s)
                                                  : cubic6(i, j, k, l, m, s));
    return out;
}

}  // namespace

std::vector<Polynomial> rowmajor_lex_basis(int n) { return rowmajor_basis_impl(n, false); }

std::vector<Polynomial> rowmajor_lex_reduced_basis(int n) {
    return rowmajor_basis_impl(n, true);
}

Polynomial plucker_image(const Polynomial& f) {
    std::map<Variable, Polynomial> assign;
    for (const Variable& v : f.variables()) {
        if (!v.is_pair())
            throw std::invalid_argument("plucker_image: input must use pair variables only");
        const Polynomial xi = Polynomial::variable(Variable::aux_x(v.i()));
        const Polynomial xj = Polynomial::variable(Variable::aux_x(v.j()));
        const Polynomial yi = Polynomial::variable(Variable::aux_y(v.i()));
        const Polynomial yj = Polynomial::variable(Variable::aux_y(v.j()));
        assign.emplace(v, xi * yj - xj * yi);
    }
    return f.substitute(assign);
}

bool plucker_kernel_member(const Polynomial& f) { return plucker_image(f).is_zero(); }

StandardMonomial::StandardMonomial(std::vector<PairIndex> chain_) : chain(std::move(chain_)) {
    std::sort(chain.begin(), chain.end());
    for (std::size_t t = 1; t < chain.size(); ++t)
        if (!pair_le(chain[t - 1], chain[t]))
            throw std::invalid_argument("StandardMonomial: factors are not a chain");
}

Monomial StandardMonomial::monomial() const {
    Monomial m;
    for (const PairIndex& p : chain) m = m.times(Monomial::of(Variable::pair(p)));
    return m;
}

std::optional<StandardMonomial> as_standard(const Monomial& m) {
    std::vector<PairIndex> chain;
    for (const auto& [v, e] : m.factors()) {
        if (!v.is_pair()) return std::nullopt;
        for (int t = 0; t < e; ++t) chain.push_back(v.pair_index());
    }
    // Factors come sorted by variable id, which is lex on (i,j); a chain test
    // on consecutive entries therefore covers all pairs.
    for (std::size_t t = 1; t < chain.size(); ++t)
        if (!pair_le(chain[t - 1], chain[t])) return std::nullopt;
    StandardMonomial s({});
    s.chain = std::move(chain);
    return s;
}

bool is_standard_monomial(const Monomial& m) { return as_standard(m).has_value(); }

std::vector<Monomial> standard_monomials(int n, int d) {
    if (n < 2) throw std::invalid_argument("standard_monomials: at least 2 indices");
    if (d < 0) throw std::invalid_argument("standard_monomials: negative degree");
    const std::vector<PairIndex> pairs = all_pairs(n);
    std::vector<Monomial> out;
    std::vector<PairIndex> chain;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            StandardMonomial s({});
            s.chain = chain;
            out.push_back(s.monomial());
            return;
        }
        for (std::size_t idx = start; idx < pairs.size(); ++idx) {
            if (!chain.empty() && !pair_le(chain.back(), pairs[idx])) continue;
            chain.push_back(pairs[idx]);
            self(self, idx, remaining - 1);
            chain.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

Polynomial straighten_polynomial(const Polynomial& f, int n) {
    const Ideal quads = quadric_ideal(n);
    return normal_form(f, quads.generators, revlex_lattice_order(n));
}

std::vector<std::pair<Rational, StandardMonomial>> straighten(const Polynomial& f, int n) {
    const Polynomial nf = straighten_polynomial(f, n);
    std::vector<std::pair<Rational, StandardMonomial>> out;
    for (const auto& [m, c] : nf.terms()) {
        std::optional<StandardMonomial> s = as_standard(m);
        if (!s)
            throw std::logic_error("straighten: normal form contains a non-standard monomial");
        out.emplace_back(c, std::move(*s));
    }
    return out;
}

Polynomial straighten_stepwise(const Polynomial& f, int n) {
    if (n < 2) throw std::invalid_argument("straighten_stepwise: at least 2 indices");
    for (const Variable& v : f.variables())
        if (!v.is_pair() || v.j() > n)
            throw std::invalid_argument(
                "straighten_stepwise: input must use pair variables within the point range");
    std::map<Monomial, Rational> pending(f.terms().begin(), f.terms().end());
    Polynomial out;
    long long steps = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Monomial mon = node.key();
        const Rational coeff = node.mapped();
        if (coeff.is_zero()) continue;

        // Hunt for an incomparable pair of distinct factors.
        std::optional<std::pair<PairIndex, PairIndex>> hit;
        const auto& factors = mon.factors();
        for (std::size_t u = 0; u < factors.size() && !hit; ++u)
            for (std::size_t v = u + 1; v < factors.size() && !hit; ++v) {
                const PairIndex a = factors[u].first.pair_index();
                const PairIndex b = factors[v].first.pair_index();
                if (!pair_comparable(a, b)) hit = {a, b};
            }
        if (!hit) {
            out.add_term(coeff, mon);
            continue;
        }
        if (++steps > 2000000)
            throw BudgetExceeded("straighten_stepwise: rewrite budget exceeded");

        PairIndex a = hit->first, b = hit->second;
        if (b.i < a.i) std::swap(a, b);
        const int i = a.i, j = b.i, k = b.j, l = a.j;  // i<j<k<l by incomparability

        // Rewrite p[i,l]p[j,k] -> p[i,k]p[j,l] - p[i,j]p[k,l]; both replacement
        // monomials must start below the two rewritten factors.
        for (PairIndex first : {PairIndex(i, k), PairIndex(i, j)})
            if (!pair_le(first, a) || !pair_le(first, b))
                throw std::logic_error("straighten_stepwise: dominance violated");

        const Monomial rest = Monomial::quotient(
            mon, Monomial::of(Variable::pair(a)).times(Monomial::of(Variable::pair(b))));
        const Monomial keep =
            rest.times(Monomial::of(Variable::pair(i, k))).times(Monomial::of(Variable::pair(j, l)));
        const Monomial drop =
            rest.times(Monomial::of(Variable::pair(i, j))).times(Monomial::of(Variable::pair(k, l)));
        auto bump = [&](const Monomial& m, const Rational& c) {
            auto [it, fresh] = pending.emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        bump(keep, coeff);
        bump(drop, -coeff);
    }
    return out;
}

namespace {

/// Rank of a sparse rational matrix given as rows {column -> entry}.
int sparse_rank(std::vector<std::map<Monomial, Rational>> rows) {
    std::map<Monomial, std::map<Monomial, Rational>> pivots;
    int rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto hit = pivots.find(row.begin()->first);
            if (hit == pivots.end()) break;
            const Rational c = row.begin()->second;
            for (const auto& [col, val] : hit->second) {
                auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -(c * val));
                } else {
                    it->second -= c * val;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
        if (row.empty()) continue;
        const Rational lead = row.begin()->second;
        for (auto& [col, val] : row) val /= lead;
        pivots.emplace(row.begin()->first, std::move(row));
        ++rank;
    }
    return rank;
}

void monomials_of_degree(const std::vector<Variable>& vars, int d,
                         std::vector<Monomial>& out) {
    std::vector<int> exp(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == vars.size()) {
            Monomial m;
            for (std::size_t t = 0; t < vars.size(); ++t) {
                const int e = (t + 1 == vars.size()) ? remaining : exp[t];
                if (e > 0) m = m.times(Monomial::of(vars[t], e));
            }
            out.push_back(m);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exp[idx] = e;
            self(self, idx + 1, remaining - e);
        }
        exp[idx] = 0;
    };
    if (vars.empty()) {
        if (d == 0) out.push_back(Monomial::one());
        return;
    }
    rec(rec, 0, d);
}

}  // namespace

bool standard_monomial_basis_check(int n, int d) {
    if (n < 2 || n > 6 || d < 0 || d > 3)
        throw std::invalid_argument("standard_monomial_basis_check: budget is n <= 6, d <= 3");
    const std::vector<Monomial> standard = standard_monomials(n, d);

    // The monomials no incomparable product divides must be exactly as many.
    std::vector<Monomial> lead_terms;
    for (const PairIndex& a : all_pairs(n))
        for (const PairIndex& b : all_pairs(n))
            if (a < b && !pair_comparable(a, b))
                lead_terms.push_back(
                    Monomial::of(Variable::pair(a)).times(Monomial::of(Variable::pair(b))));
    std::vector<Monomial> all;
    monomials_of_degree(pair_variables(n), d, all);
    long outside = 0;
    for (const Monomial& m : all) {
        bool divisible = false;
        for (const Monomial& lt : lead_terms)
            if (lt.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++outside;
    }
    if (outside != static_cast<long>(standard.size())) return false;

    // Exact rank of the substituted images.
    std::vector<std::map<Monomial, Rational>> rows;
    for (const Monomial& m : standard) {
        const Polynomial img = plucker_image(Polynomial::term(Rational(1), m));
        rows.emplace_back(img.terms().begin(), img.terms().end());
    }
    return sparse_rank(std::move(rows)) == static_cast<int>(standard.size());
}

bool elimination_vs_quadrics(const Sublattice& lat, const BuchbergerOptions& opts) {
    if (!is_compatible(lat))
        throw std::invalid_argument("elimination_vs_quadrics: sublattice is not compatible");
    std::vector<Variable> keep;
    for (const PairIndex& p : all_pairs(lat.n))
        if (lat.contains(p)) keep.push_back(Variable::pair(p));
    const Ideal left =
        eliminate(quadric_ideal(lat.n), keep, elimination_order(lat.n, lat.members), opts);
    const Ideal right = quadric_ideal(lat);
    std::vector<PairIndex> ascending;
    for (const PairIndex& p : lattice_extension(lat.n))
        if (lat.contains(p)) ascending.push_back(p);
    return ideal_equal(left, right, revlex_lattice_order(ascending), opts);
}

bool complement_is_initial_segment(const Graph& g) {
    bool seen_edge = false;
    for (const PairIndex& p : all_pairs(g.n)) {
        if (g.has_edge(p))
            seen_edge = true;
        else if (seen_edge)
            return false;
    }
    return true;
}

bool elimination_vs_edge_quadrics(const Graph& g, const BuchbergerOptions& opts) {
    if (!complement_is_initial_segment(g))
        throw std::invalid_argument(
            "elimination_vs_edge_quadrics: complement is not an initial segment of the "
            "variable order");
    std::vector<Variable> keep;
    for (const PairIndex& p : all_pairs(g.n))
        if (g.has_edge(p)) keep.push_back(Variable::pair(p));
    const Ideal right = edge_quadric_ideal(g);
    if (keep.empty()) return right.generators.empty();
    const Ideal left = eliminate(quadric_ideal(g.n), keep, rowmajor_lex_order(g.n), opts);
    const std::vector<Variable> descending(keep.rbegin(), keep.rend());
    return ideal_equal(left, right, MonomialOrder::lex(descending), opts);
}

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(std::vector<Monomial> gens,
                                                 std::vector<Variable> ambient_vars)
    : ambient(std::move(ambient_vars)) {
    const std::set<Variable> amb(ambient.begin(), ambient.end());
    for (const Monomial& g : gens) {
        if (g.is_one())
            throw std::invalid_argument("SquarefreeMonomialIdeal: constant generator");
        for (const auto& [v, e] : g.factors()) {
            if (e != 1)
                throw std::invalid_argument(
                    "SquarefreeMonomialIdeal: generator is not squarefree");
            if (amb.count(v) == 0)
                throw std::invalid_argument(
                    "SquarefreeMonomialIdeal: generator outside the ambient ring");
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : gens)
            if (!(h == g) && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) generators.push_back(g);
    }
}

SquarefreeMonomialIdeal rowmajor_initial_ideal(int n) {
    if (n < 2) throw std::invalid_argument("rowmajor_initial_ideal: at least 2 indices");
    auto mono = [](std::initializer_list<PairIndex> ps) {
        Monomial m;
        for (const PairIndex& p : ps) m = m.times(Monomial::of(Variable::pair(p)));
        return m;
    };
    std::vector<Monomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    gens.push_back(mono({PairIndex(i, j), PairIndex(k, l)}));
                    for (int m = l + 1; m <= n; ++m) {
                        gens.push_back(
                            mono({PairIndex(i, k), PairIndex(j, l), PairIndex(k, m)}));
                        for (int s = m + 1; s <= n; ++s)
                            gens.push_back(mono(
                                {PairIndex(i, l), PairIndex(j, m), PairIndex(k, s)}));
                    }
                }
    return SquarefreeMonomialIdeal(std::move(gens), pair_variables(n));
}

SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& m) {
    const int v_count = static_cast<int>(m.ambient.size());
    if (v_count > 63)
        throw std::invalid_argument("stanley_reisner_complex: at most 63 vertices");
    std::map<Variable, int> index;
    for (int t = 0; t < v_count; ++t) index.emplace(m.ambient[t], t);

    std::vector<std::vector<std::uint64_t>> by_vertex(v_count);
    for (const Monomial& g : m.generators) {
        std::uint64_t mask = 0;
        for (const auto& [v, e] : g.factors()) mask |= std::uint64_t(1) << index.at(v);
        for (const auto& [v, e] : g.factors()) by_vertex[index.at(v)].push_back(mask);
    }

    SimplicialComplex sc;
    sc.vertices = m.ambient;
    long long faces = 0;
    auto blocked = [&](int v, std::uint64_t cur) {
        const std::uint64_t with = cur | (std::uint64_t(1) << v);
        for (std::uint64_t gen : by_vertex[v])
            if ((gen & ~with) == 0) return true;
        return false;
    };
    auto dfs = [&](auto&& self, int idx, std::uint64_t cur) -> void {
        if (idx == v_count) {
            if (++faces > 20000000)
                throw BudgetExceeded("stanley_reisner_complex: face budget exceeded");
            for (int v = 0; v < v_count; ++v)
                if (((cur >> v) & 1) == 0 && !blocked(v, cur)) return;
            std::set<Variable> facet;
            for (int v = 0; v < v_count; ++v)
                if ((cur >> v) & 1) facet.insert(m.ambient[v]);
            sc.facets.push_back(std::move(facet));
            return;
        }
        if (!blocked(idx, cur)) self(self, idx + 1, cur | (std::uint64_t(1) << idx));
        self(self, idx + 1, cur);
    };
    dfs(dfs, 0, 0);
    std::sort(sc.facets.begin(), sc.facets.end());
    return sc;
}

ComplexSummary summarize(const SimplicialComplex& sc) {
    ComplexSummary out;
    if (sc.facets.empty()) return out;
    std::size_t biggest = 0, smallest = sc.vertices.size() + 1;
    for (const auto& f : sc.facets) {
        biggest = std::max(biggest, f.size());
        smallest = std::min(smallest, f.size());
    }
    out.dimension = static_cast<int>(biggest);
    out.equidimensional = biggest == smallest;
    long long top = 0;
    for (const auto& f : sc.facets)
        if (f.size() == biggest) ++top;
    out.degree = top;
    return out;
}

ComplexSummary stanley_reisner_analysis(const SquarefreeMonomialIdeal& m) {
    return summarize(stanley_reisner_complex(m));
}

std::vector<ArcArrangement> facets_as_arcs(const SimplicialComplex& sc, int n) {
    std::vector<ArcArrangement> out;
    for (const auto& facet : sc.facets) {
        std::set<PairIndex> arcs;
        for (const Variable& v : facet) {
            if (!v.is_pair())
                throw std::invalid_argument("facets_as_arcs: vertex is not a pair variable");
            arcs.insert(v.pair_index());
        }
        out.emplace_back(n, std::move(arcs));
    }
    return out;
}

}  // namespace plk
