#include "plk/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "plk/arcs.hpp"
#include "plk/graphs.hpp"
#include "plk/lattice.hpp"
#include "plk/plucker.hpp"
#include "plk/ring.hpp"

namespace plk {

namespace {

using Clock = std::chrono::steady_clock;

int cap_n(const CheckOptions& o, int documented) {
    return o.max_n > 0 ? std::min(documented, o.max_n) : documented;
}

CheckReport below_range(const std::string& id, int need) {
    return {id, "max-n below " + std::to_string(need) + ": nothing to run", "skipped", false,
            0.0};
}

template <class Body>
CheckReport run_case(const std::string& id, std::string detail, Body&& body) {
    CheckReport r{id, std::move(detail), "fail", false, 0.0};
    const auto t0 = Clock::now();
    try {
        r.verdict = body(r) ? "pass" : "fail";
    } catch (const BudgetExceeded& e) {
        r.verdict = "skipped";
        r.budget_exceeded = true;
        r.detail += std::string("; budget: ") + e.what();
    } catch (const std::exception& e) {
        r.verdict = "fail";
        r.detail += std::string("; error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
    return out;
}

std::string members_str(const std::set<PairIndex>& members) {
    std::string out;
    for (const PairIndex& p : members) out += p.str();
    return out;
}

Polynomial pvar(PairIndex p) { return Polynomial::variable(Variable::pair(p)); }

std::set<PairIndex> mask_members(std::uint64_t mask, const std::vector<PairIndex>& pairs) {
    std::set<PairIndex> members;
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (mask & (std::uint64_t(1) << t)) members.insert(pairs[t]);
    return members;
}

std::vector<Variable> member_variables(const Sublattice& s) {
    std::vector<Variable> keep;
    for (const PairIndex& p : all_pairs(s.n))
        if (s.contains(p)) keep.push_back(Variable::pair(p));
    return keep;
}

}  // namespace

std::vector<CheckReport> check_oracle_gate(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi = cap_n(o, 7);
    if (hi < 4) {
        out.push_back(below_range("oracle-gate", 4));
        return out;
    }
    for (int n = 4; n <= hi; ++n) {
        out.push_back(run_case(
            "oracle-gate", "n=" + std::to_string(n) + " constructed generators",
            [&, n](CheckReport& r) {
                long count = 0;
                auto vanish = [&](const Polynomial& f, const std::string& what) {
                    if (plucker_kernel_member(f)) {
                        ++count;
                        return true;
                    }
                    r.detail += "; nonvanishing " + what;
                    return false;
                };
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (int k = j + 1; k <= n; ++k)
                            for (int l = k + 1; l <= n; ++l) {
                                if (!vanish(quadric(i, j, k, l), "quadric")) return false;
                                for (int m = l + 1; m <= n; ++m) {
                                    if (!vanish(cubic5(i, j, k, l, m), "five-point cubic"))
                                        return false;
                                    for (int s = m + 1; s <= n; ++s) {
                                        if (!vanish(cubic6(i, j, k, l, m, s),
                                                    "six-point cubic"))
                                            return false;
                                        if (!vanish(cubic6_reduced(i, j, k, l, m, s),
                                                    "reduced six-point cubic"))
                                            return false;
                                    }
                                }
                            }
                for (const Polynomial& f : rowmajor_lex_basis(n))
                    if (!vanish(f, "listed basis element")) return false;
                for (const Polynomial& f : rowmajor_lex_reduced_basis(n))
                    if (!vanish(f, "reduced basis element")) return false;
                r.detail += ": " + std::to_string(count) + " polynomials vanish";
                return true;
            }));
    }
    if (hi >= 5) {
        out.push_back(run_case(
            "oracle-gate", "n=5 computed bases and elimination generators",
            [&](CheckReport& r) {
                long count = 0;
                for (const Polynomial& f :
                     buchberger(quadric_ideal(5), rowmajor_lex_order(5), o.buchberger)
                         .elements) {
                    if (!plucker_kernel_member(f)) {
                        r.detail += "; nonvanishing row-major basis element";
                        return false;
                    }
                    ++count;
                }
                for (const Polynomial& f :
                     buchberger(quadric_ideal(5), revlex_lattice_order(5), o.buchberger)
                         .elements) {
                    if (!plucker_kernel_member(f)) {
                        r.detail += "; nonvanishing revlex basis element";
                        return false;
                    }
                    ++count;
                }
                for (const Sublattice& l : enumerate_compatible(5)) {
                    const Ideal left = eliminate(quadric_ideal(5), member_variables(l),
                                                 elimination_order(5, l.members), o.buchberger);
                    for (const Polynomial& f : left.generators) {
                        if (!plucker_kernel_member(f)) {
                            r.detail +=
                                "; nonvanishing elimination generator at " +
                                members_str(l.members);
                            return false;
                        }
                        ++count;
                    }
                }
                r.detail += ": " + std::to_string(count) + " polynomials vanish";
                return true;
            }));
    }
    out.push_back(run_case("oracle-gate", "negative control", [](CheckReport& r) {
        if (plucker_kernel_member(Polynomial::variable(Variable::pair(1, 2)))) {
            r.detail += "; p[1,2] wrongly reported in the kernel";
            return false;
        }
        r.detail += ": p[1,2] maps to a nonzero minor";
        return true;
    }));
    return out;
}

std::vector<CheckReport> check_gb_quadrics(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi = cap_n(o, 7);
    if (hi < 4) {
        out.push_back(below_range("gb-quadrics", 4));
        return out;
    }
    for (int n = 4; n <= hi; ++n) {
        out.push_back(run_case(
            "gb-quadrics",
            "n=" + std::to_string(n) + " graded revlex, canonical + 5 seeded extensions",
            [&, n](CheckReport& r) {
                const auto quads = quadric_ideal(n).generators;
                if (!is_groebner(quads, revlex_lattice_order(n))) {
                    r.detail += "; canonical extension fails";
                    return false;
                }
                for (int t = 0; t < 5; ++t)
                    if (!is_groebner(quads, revlex_lattice_order(
                                                seeded_lattice_extension(n, o.seed + t)))) {
                        r.detail += "; seed offset " + std::to_string(t) + " fails";
                        return false;
                    }
                r.detail += ": " + std::to_string(quads.size()) + " quadrics";
                return true;
            }));
        out.push_back(run_case(
            "gb-quadrics",
            "n=" + std::to_string(n) + " nest-poset lex, canonical + 5 seeded extensions",
            [&, n](CheckReport& r) {
                const auto quads = quadric_ideal(n).generators;
                if (!is_groebner(quads, lex_nest_order(n))) {
                    r.detail += "; canonical extension fails";
                    return false;
                }
                for (int t = 0; t < 5; ++t)
                    if (!is_groebner(quads,
                                     lex_nest_order(seeded_nest_extension(n, o.seed + t)))) {
                        r.detail += "; seed offset " + std::to_string(t) + " fails";
                        return false;
                    }
                r.detail += ": " + std::to_string(quads.size()) + " quadrics";
                return true;
            }));
    }
    const int hi6 = cap_n(o, 6);
    for (int n = 4; n <= hi6; ++n) {
        out.push_back(run_case(
            "gb-quadrics", "n=" + std::to_string(n) + " initial ideals coincide",
            [&, n](CheckReport& r) {
                const MonomialOrder rev = revlex_lattice_order(n);
                const MonomialOrder lex = lex_nest_order(n);
                std::set<Monomial> lts;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (int k = j + 1; k <= n; ++k)
                            for (int l = k + 1; l <= n; ++l) {
                                const Polynomial q = quadric(i, j, k, l);
                                const Monomial expect =
                                    Monomial::of(Variable::pair(i, l))
                                        .times(Monomial::of(Variable::pair(j, k)));
                                if (leading_monomial(q, rev) != expect ||
                                    leading_monomial(q, lex) != expect) {
                                    r.detail += "; divergent leading term at quadric " +
                                                PairIndex(i, l).str() + PairIndex(j, k).str();
                                    return false;
                                }
                                lts.insert(expect);
                            }
                if (static_cast<long long>(lts.size()) != binom(n, 4)) {
                    r.detail += "; expected " + std::to_string(binom(n, 4)) +
                                " distinct products, got " + std::to_string(lts.size());
                    return false;
                }
                r.detail +=
                    ": " + std::to_string(lts.size()) + " incomparable products shared";
                return true;
            }));
    }
    return out;
}

std::vector<CheckReport> check_gb_appendix(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi = cap_n(o, 7);
    if (hi < 5) {
        out.push_back(below_range("gb-appendix", 5));
        return out;
    }
    for (int n = 5; n <= hi; ++n) {
        out.push_back(run_case(
            "gb-appendix", "n=" + std::to_string(n) + " row-major lex reduced basis",
            [&, n](CheckReport& r) {
                const GroebnerBasis gb =
                    buchberger(quadric_ideal(n), rowmajor_lex_order(n), o.buchberger);
                const auto mine = rowmajor_lex_reduced_basis(n);
                const long long q = binom(n, 4), c5 = binom(n, 5), c6 = binom(n, 6);
                if (static_cast<long long>(gb.elements.size()) != q + c5 + c6 ||
                    gb.elements.size() != mine.size()) {
                    r.detail += "; expected " + std::to_string(q + c5 + c6) +
                                " elements, computed " + std::to_string(gb.elements.size());
                    return false;
                }
                for (const Polynomial& f : mine) {
                    bool found = false;
                    for (const Polynomial& g : gb.elements)
                        if (f == g) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        r.detail += "; a constructed element is missing from the computed basis";
                        return false;
                    }
                }
                if (!is_groebner(rowmajor_lex_basis(n), rowmajor_lex_order(n))) {
                    r.detail += "; listed (unreduced) set is not a basis";
                    return false;
                }
                r.detail += ": " + std::to_string(q) + " quadrics + " + std::to_string(c5) +
                            " + " + std::to_string(c6) + " cubics, element for element";
                return true;
            }));
    }
    return out;
}

std::vector<CheckReport> check_elimination(const CheckOptions& o) {
    std::vector<CheckReport> out;
    if (cap_n(o, 5) < 5) {
        out.push_back(below_range("elimination", 5));
        return out;
    }
    out.push_back(run_case(
        "elimination", "compatible 5-point sublattices", [&](CheckReport& r) {
            const auto lattices = enumerate_compatible(5, o.strict_rank);
            for (const Sublattice& l : lattices)
                if (!elimination_vs_quadrics(l, o.buchberger)) {
                    r.detail += "; disagreement at members " + members_str(l.members);
                    return false;
                }
            r.detail += ": " + std::to_string(lattices.size()) + " cases agree";
            return true;
        }));
    if (cap_n(o, 6) >= 6) {
        out.push_back(run_case(
            "elimination", "perfect 6-point sublattices", [&](CheckReport& r) {
                const auto lattices = enumerate_perfect_compatible(6);
                for (const Sublattice& l : lattices)
                    if (!elimination_vs_quadrics(l, o.buchberger)) {
                        r.detail += "; disagreement at members " + members_str(l.members);
                        return false;
                    }
                r.detail += ": " + std::to_string(lattices.size()) + " cases agree";
                return true;
            }));
    }
    out.push_back(run_case(
        "elimination", "initial-segment deletions", [&](CheckReport& r) {
            auto drop_prefix = [](int n, int count) {
                const auto pairs = all_pairs(n);
                std::set<PairIndex> edges(pairs.begin() + count, pairs.end());
                return Graph(n, edges);
            };
            long cases = 0;
            for (int drop = 0; drop <= 2; ++drop) {
                if (!elimination_vs_edge_quadrics(drop_prefix(5, drop), o.buchberger)) {
                    r.detail += "; n=5 deleting " + std::to_string(drop) + " variables fails";
                    return false;
                }
                ++cases;
            }
            if (cap_n(o, 6) >= 6) {
                if (!elimination_vs_edge_quadrics(drop_prefix(6, 3), o.buchberger)) {
                    r.detail += "; n=6 deleting 3 variables fails";
                    return false;
                }
                ++cases;
            }
            r.detail += ": " + std::to_string(cases) + " cases agree";
            return true;
        }));
    const int hic = cap_n(o, 5);
    out.push_back(run_case(
        "elimination",
        "closure condition vs quadric generation, meet/join-closed subsets n<=" +
            std::to_string(hic),
        [&, hic](CheckReport& r) {
            long closed = 0, open = 0;
            for (int n = 4; n <= hic; ++n) {
                const auto pairs = all_pairs(n);
                for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << pairs.size());
                     ++mask) {
                    const Sublattice s(n, mask_members(mask, pairs));
                    if (!is_sublattice(s)) continue;
                    bool closure = true;
                    std::vector<Polynomial> gens;
                    for (int i = 1; i <= n; ++i)
                        for (int j = i + 1; j <= n; ++j)
                            for (int k = j + 1; k <= n; ++k)
                                for (int l = k + 1; l <= n; ++l) {
                                    if (!s.contains(PairIndex(i, l)) ||
                                        !s.contains(PairIndex(j, k)))
                                        continue;
                                    gens.push_back(quadric(i, j, k, l));
                                    if (!s.contains(PairIndex(i, j)) ||
                                        !s.contains(PairIndex(k, l)))
                                        closure = false;
                                }
                    if (!closure) {
                        // Some generator variable escapes the member set, so the
                        // member quadrics cannot generate the elimination ideal;
                        // the equivalence holds structurally on this side.
                        ++open;
                        continue;
                    }
                    const auto keep = member_variables(s);
                    const Ideal left = eliminate(quadric_ideal(n), keep,
                                                 elimination_order(n, s.members), o.buchberger);
                    const Ideal right(gens, keep);
                    const std::vector<Variable> desc(keep.rbegin(), keep.rend());
                    if (!ideal_equal(left, right, MonomialOrder::revlex(desc), o.buchberger)) {
                        r.detail += "; closure holds but quadrics miss the elimination "
                                    "ideal at members " +
                                    members_str(s.members);
                        return false;
                    }
                    ++closed;
                }
            }
            r.detail += ": " + std::to_string(closed) +
                        " closure-closed cases generate their elimination ideals, " +
                        std::to_string(open) + " non-closure cases excluded structurally";
            return true;
        }));
    out.push_back(run_case(
        "elimination", "rank-clause readings", [&](CheckReport& r) {
            std::string divergent;
            for (int n = 3; n <= cap_n(o, 6); ++n) {
                const auto dflt = enumerate_compatible(n, false).size();
                const auto strict = enumerate_compatible(n, true).size();
                r.detail += " n=" + std::to_string(n) + ": " + std::to_string(dflt) +
                            " at rank>=n, " + std::to_string(strict) + " at rank==n;";
                if (dflt != strict) divergent += " n=" + std::to_string(n);
            }
            r.detail += divergent.empty()
                            ? " readings never differ"
                            : " readings differ at" + divergent +
                                  " (every perfect sublattice has rank 2n-4)";
            return true;
        }));
    return out;
}

std::vector<CheckReport> check_sydney(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi5 = cap_n(o, 5);
    if (hi5 < 3) {
        out.push_back(below_range("sydney", 3));
        return out;
    }

    // Shared evaluation of one subposet; returns false only on a hard failure.
    auto examine = [&](const Sublattice& s, const Graph& g, long& disc_systems,
                       long& core_disc, long& rank_conn, long& rank_disc,
                       CheckReport& r) {
        const bool ideal = complement_is_poset_ideal(s);
        const bool iv = interval_system(g).has_value();
        const bool conn = is_connected(g);
        if (iv && !conn) ++disc_systems;
        if (ideal != iv) {
            if (conn) {
                r.detail += "; interval correspondence breaks at members " +
                            members_str(s.members);
                return false;
            }
            ++core_disc;
        }
        if (is_sublattice(s)) {
            const bool compat = is_compatible(s, o.strict_rank);
            if (compat != iv) {
                if (compat) {
                    r.detail += "; compatible sublattice without interval system: " +
                                members_str(s.members);
                    return false;
                }
                if (!complement_is_poset_ideal(s)) {
                    r.detail += "; non-rank compatibility discrepancy at members " +
                                members_str(s.members);
                    return false;
                }
                (conn ? rank_conn : rank_disc)++;
            }
        }
        return true;
    };

    for (int n = 3; n <= hi5; ++n) {
        out.push_back(run_case(
            "sydney", "n=" + std::to_string(n) + " exhaustive subposets",
            [&, n](CheckReport& r) {
                const auto pairs = all_pairs(n);
                long cases = 0, disc_systems = 0, core_disc = 0, rank_conn = 0,
                     rank_disc = 0;
                for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << pairs.size());
                     ++mask) {
                    const Sublattice s(n, mask_members(mask, pairs));
                    const Graph g = graph_of(s);
                    if (!g.isolated_vertices().empty()) continue;
                    ++cases;
                    if (!examine(s, g, disc_systems, core_disc, rank_conn, rank_disc, r))
                        return false;
                }
                r.detail += ": " + std::to_string(cases) +
                            " cases, poset-ideal matches interval recognition; " +
                            std::to_string(disc_systems) + " disconnected systems (" +
                            std::to_string(core_disc) +
                            " mismatches there); rank-clause exclusions " +
                            std::to_string(rank_conn) + " connected / " +
                            std::to_string(rank_disc) + " disconnected";
                return true;
            }));
    }
    for (int n = 6; n <= cap_n(o, 7); ++n) {
        out.push_back(run_case(
            "sydney",
            "n=" + std::to_string(n) + " sampled subposets, seed " + std::to_string(o.seed),
            [&, n](CheckReport& r) {
                const auto pairs = all_pairs(n);
                std::mt19937_64 rng(o.seed ^ (std::uint64_t(n) * 0x9e3779b97f4a7c15ULL));
                long cases = 0, disc_systems = 0, core_disc = 0, rank_conn = 0,
                     rank_disc = 0;
                while (cases < 10000) {
                    const std::uint64_t mask =
                        rng() & ((std::uint64_t(1) << pairs.size()) - 1);
                    if (mask == 0) continue;
                    const Sublattice s(n, mask_members(mask, pairs));
                    const Graph g = graph_of(s);
                    if (!g.isolated_vertices().empty()) continue;
                    ++cases;
                    if (!examine(s, g, disc_systems, core_disc, rank_conn, rank_disc, r))
                        return false;
                }
                r.detail += ": 10000 cases, poset-ideal matches interval recognition; " +
                            std::to_string(disc_systems) + " disconnected systems (" +
                            std::to_string(core_disc) +
                            " mismatches there); rank-clause exclusions " +
                            std::to_string(rank_conn) + " connected / " +
                            std::to_string(rank_disc) + " disconnected";
                return true;
            }));
    }
    return out;
}

std::vector<CheckReport> check_gorenstein(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi = cap_n(o, 8);
    if (hi < 4) {
        out.push_back(below_range("gorenstein", 4));
        return out;
    }
    for (int n = 4; n <= hi; ++n) {
        out.push_back(run_case(
            "gorenstein",
            "n=" + std::to_string(n) + " overlap criterion vs join-irreducible purity",
            [&, n](CheckReport& r) {
                const auto systems = enumerate_covering_systems(n, 2, n);
                long gor = 0;
                for (const auto& sys : systems) {
                    const bool by_overlaps = gorenstein_criterion(sys);
                    const bool by_purity =
                        is_pure(join_irreducibles(lattice_of_system(sys)));
                    if (by_overlaps != by_purity) {
                        r.detail += "; criteria disagree at " + sys.str();
                        return false;
                    }
                    if (by_overlaps) ++gor;
                }
                if (BigInt(gor) != count_gorenstein_perfect(n)) {
                    r.detail += "; enumerated " + std::to_string(gor) +
                                " but the counting routes give " +
                                count_gorenstein_perfect(n).str();
                    return false;
                }
                r.detail += ": " + std::to_string(systems.size()) + " perfect systems, " +
                            std::to_string(gor) + " of them Gorenstein";
                return true;
            }));
    }
    const int hic = cap_n(o, 10);
    if (hic >= 4) {
        out.push_back(run_case(
            "gorenstein", "counting routes n=4.." + std::to_string(hic),
            [&, hic](CheckReport& r) {
                static const long expected[] = {2, 5, 13, 34, 89, 233, 610};
                for (int n = 4; n <= hic; ++n) {
                    const BigInt got = count_gorenstein_perfect(n);
                    if (got != BigInt(expected[n - 4])) {
                        r.detail += "; n=" + std::to_string(n) + " gives " + got.str() +
                                    ", expected " + std::to_string(expected[n - 4]);
                        return false;
                    }
                }
                r.detail += ": recurrence, closed form, and enumeration agree";
                return true;
            }));
    }
    return out;
}

std::vector<CheckReport> check_asl_basis(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi5 = cap_n(o, 5);
    if (hi5 < 2) {
        out.push_back(below_range("asl-basis", 2));
        return out;
    }
    out.push_back(run_case(
        "asl-basis", "dimension and rank grid n<=" + std::to_string(hi5) + ", d<=3",
        [&, hi5](CheckReport& r) {
            long cells = 0;
            for (int n = 2; n <= hi5; ++n)
                for (int d = 0; d <= 3; ++d) {
                    if (!standard_monomial_basis_check(n, d)) {
                        r.detail += "; failure at n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d);
                        return false;
                    }
                    ++cells;
                }
            r.detail += ": " + std::to_string(cells) + " (n,d) cells";
            return true;
        }));
    const int hi6 = cap_n(o, 6);
    if (hi6 >= 4) {
        out.push_back(run_case(
            "asl-basis",
            "straightening dominance on incomparable products n<=" + std::to_string(hi6),
            [&, hi6](CheckReport& r) {
                long products = 0;
                for (int n = 4; n <= hi6; ++n) {
                    const auto pairs = all_pairs(n);
                    for (const PairIndex& a : pairs)
                        for (const PairIndex& b : pairs) {
                            if (!(a < b) || pair_comparable(a, b)) continue;
                            const Polynomial f = pvar(a) * pvar(b);
                            // The stepwise rewriter throws if a replacement
                            // monomial fails the dominance condition.
                            if (straighten_stepwise(f, n) != straighten_polynomial(f, n)) {
                                r.detail += "; rewrite disagrees with the normal form at " +
                                            a.str() + b.str();
                                return false;
                            }
                            ++products;
                        }
                }
                r.detail += ": " + std::to_string(products) + " incomparable products";
                return true;
            }));
    }
    out.push_back(run_case("asl-basis", "pinned rewrite of p[1,4]p[2,3]", [](CheckReport& r) {
        const Polynomial lhs = pvar(PairIndex(1, 4)) * pvar(PairIndex(2, 3));
        const Polynomial rhs = pvar(PairIndex(1, 3)) * pvar(PairIndex(2, 4)) -
                               pvar(PairIndex(1, 2)) * pvar(PairIndex(3, 4));
        if (straighten_polynomial(lhs, 4) != rhs) {
            r.detail += "; rewrite does not match p[1,3]p[2,4] - p[1,2]p[3,4]";
            return false;
        }
        r.detail += ": equals p[1,3]p[2,4] - p[1,2]p[3,4]";
        return true;
    }));
    return out;
}

std::vector<CheckReport> check_stanley_reisner(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi = cap_n(o, 8);
    if (hi < 4) {
        out.push_back(below_range("stanley-reisner", 4));
        return out;
    }
    for (int n = 4; n <= hi; ++n) {
        out.push_back(run_case(
            "stanley-reisner", "n=" + std::to_string(n) + " facet data",
            [&, n](CheckReport& r) {
                const ComplexSummary sum =
                    stanley_reisner_analysis(rowmajor_initial_ideal(n));
                const BigInt expect_degree = catalan_number(n - 2);
                if (sum.dimension != 2 * n - 3 || sum.degree != expect_degree ||
                    !sum.equidimensional) {
                    r.detail += "; got dim " + std::to_string(sum.dimension) + ", degree " +
                                sum.degree.str() +
                                (sum.equidimensional ? "" : ", not equidimensional");
                    return false;
                }
                r.detail += ": dim " + std::to_string(sum.dimension) + ", degree " +
                            sum.degree.str() + ", equidimensional";
                return true;
            }));
    }
    return out;
}

std::vector<CheckReport> check_arcs_bijection(const CheckOptions& o) {
    std::vector<CheckReport> out;
    const int hi9 = cap_n(o, 9);
    if (hi9 < 2) {
        out.push_back(below_range("arcs-bijection", 2));
        return out;
    }
    if (hi9 >= 3) {
        out.push_back(run_case(
            "arcs-bijection", "perfect sublattice Catalan counts n=3.." + std::to_string(hi9),
            [&, hi9](CheckReport& r) {
                for (int n = 3; n <= hi9; ++n) {
                    const auto count = enumerate_perfect_compatible(n).size();
                    if (BigInt(static_cast<long>(count)) != catalan_number(n - 2)) {
                        r.detail += "; n=" + std::to_string(n) + " gives " +
                                    std::to_string(count) + ", expected " +
                                    catalan_number(n - 2).str();
                        return false;
                    }
                }
                r.detail += ": matches the Catalan numbers";
                return true;
            }));
    }
    out.push_back(run_case(
        "arcs-bijection", "maximal arc arrangements n=2.." + std::to_string(hi9),
        [&, hi9](CheckReport& r) {
            for (int n = 2; n <= hi9; ++n) {
                const auto arrangements = enumerate_maximal(n);
                if (BigInt(static_cast<long>(arrangements.size())) != catalan_number(n - 2)) {
                    r.detail += "; n=" + std::to_string(n) + " gives " +
                                std::to_string(arrangements.size()) + ", expected " +
                                catalan_number(n - 2).str();
                    return false;
                }
                for (const ArcArrangement& a : arrangements)
                    if (static_cast<int>(a.arcs.size()) != max_arcs(n) || !is_allowed(a)) {
                        r.detail += "; malformed maximal arrangement at n=" +
                                    std::to_string(n);
                        return false;
                    }
            }
            r.detail += ": counts and sizes match";
            return true;
        }));
    const int hi8 = cap_n(o, 8);
    out.push_back(run_case(
        "arcs-bijection", "facet sets equal maximal arc sets n=2.." + std::to_string(hi8),
        [&, hi8](CheckReport& r) {
            for (int n = 2; n <= hi8; ++n) {
                const auto sr = stanley_reisner_complex(rowmajor_initial_ideal(n));
                std::set<std::set<PairIndex>> facets, maximal;
                for (const ArcArrangement& a : facets_as_arcs(sr, n)) facets.insert(a.arcs);
                for (const ArcArrangement& a : enumerate_maximal(n)) maximal.insert(a.arcs);
                if (facets != maximal) {
                    r.detail += "; facet/arc divergence at n=" + std::to_string(n);
                    return false;
                }
            }
            r.detail += ": identical families";
            return true;
        }));
    const int hi7 = cap_n(o, 7);
    out.push_back(run_case(
        "arcs-bijection", "full binary tree round trip n=2.." + std::to_string(hi7),
        [&, hi7](CheckReport& r) {
            for (int n = 2; n <= hi7; ++n) {
                std::set<std::string> trees;
                for (const ArcArrangement& a : enumerate_maximal(n)) {
                    const ArcTree t = to_tree(a);
                    if (!(from_tree(t) == a)) {
                        r.detail += "; round trip fails at n=" + std::to_string(n);
                        return false;
                    }
                    trees.insert(t.str());
                }
                if (BigInt(static_cast<long>(trees.size())) != catalan_number(n - 2)) {
                    r.detail += "; tree images not distinct at n=" + std::to_string(n);
                    return false;
                }
            }
            r.detail += ": bijective on every size";
            return true;
        }));
    return out;
}

std::vector<CheckReport> run_all_checks(const CheckOptions& o) {
    std::vector<CheckReport> out = check_oracle_gate(o);
    if (!all_passed(out)) return out;  // nothing else is meaningful
    for (auto* family : {&check_gb_quadrics, &check_gb_appendix, &check_elimination,
                         &check_sydney, &check_gorenstein, &check_asl_basis,
                         &check_stanley_reisner, &check_arcs_bijection}) {
        const auto reports = (*family)(o);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (r.verdict == "fail") return false;
    return true;
}

bool any_budget_exceeded(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (r.budget_exceeded) return true;
    return false;
}

}  // namespace plk
