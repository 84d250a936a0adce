#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "plk/format.hpp"
#include "plk/groebner.hpp"
#include "plk/ring.hpp"

using namespace plk;

namespace {

Polynomial pvar(int i, int j) { return Polynomial::variable(Variable::pair(i, j)); }

Polynomial quad(int i, int j, int k, int l) {
    return pvar(i, l) * pvar(j, k) - pvar(i, k) * pvar(j, l) + pvar(i, j) * pvar(k, l);
}

Monomial pmono(std::initializer_list<std::pair<int, int>> pairs) {
    Monomial m;
    for (auto [i, j] : pairs) m = m.times(Monomial::of(Variable::pair(i, j)));
    return m;
}

std::vector<Polynomial> all_quadrics(int n) {
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) out.push_back(quad(i, j, k, l));
    return out;
}

}  // namespace

TEST_CASE("normal form reduces by leading terms") {
    MonomialOrder ord = revlex_lattice_order(4);
    std::vector<Polynomial> basis{quad(1, 2, 3, 4)};
    // p13*p24 is a product of comparable pairs; nothing divides it.
    Polynomial f = pvar(1, 3) * pvar(2, 4);
    CHECK(normal_form(f, basis, ord) == f);
    // p14*p23 is the incomparable product and rewrites in one step.
    Polynomial g = pvar(1, 4) * pvar(2, 3);
    CHECK(to_string(normal_form(g, basis, ord)) == "p[1,3]*p[2,4] - p[1,2]*p[3,4]");
    CHECK(normal_form(basis[0], basis, ord).is_zero());
}

TEST_CASE("frozen normal form of a mixed element") {
    MonomialOrder ord = revlex_lattice_order(4);
    std::vector<Polynomial> basis{quad(1, 2, 3, 4)};
    Polynomial f = pvar(1, 4) * pvar(2, 3) + pvar(1, 3) * pvar(2, 4);
    CHECK(to_string(normal_form(f, basis, ord)) == "2*p[1,3]*p[2,4] - p[1,2]*p[3,4]");
}

TEST_CASE("s-polynomial of overlapping quadrics is the five-index cubic") {
    // Two quadrics sharing three of four indices, i<j<k<l<m, under row-major
    // lex: the S-polynomial is already the irreducible cubic with leading
    // monomial p[i,k]*p[j,l]*p[k,m].
    int i = 1, j = 2, k = 3, l = 4, m = 5;
    MonomialOrder ord = rowmajor_lex_order(5);
    Polynomial s = s_polynomial(quad(i, k, l, m), quad(j, k, l, m), ord);
    Polynomial c5 = pvar(i, k) * pvar(j, l) * pvar(k, m) - pvar(i, k) * pvar(j, m) * pvar(k, l) -
                    pvar(i, l) * pvar(j, k) * pvar(k, m) + pvar(i, m) * pvar(j, k) * pvar(k, l);
    CHECK(s == c5);
    CHECK(leading_monomial(c5, ord) == pmono({{1, 3}, {2, 4}, {3, 5}}));
    CHECK(normal_form(s, all_quadrics(5), ord) == c5);
}

TEST_CASE("s-polynomial of distant quadrics is the six-index cubic") {
    // Quadrics on index sets {i,l,m,s} and {j,k,m,s}, i<j<k<l<m<s, under
    // row-major lex. The raw S-polynomial is the four-term cubic; one of its
    // tails is still divisible by a quadric leading term, and full reduction
    // gives the six-term element of the reduced basis.
    int i = 1, j = 2, k = 3, l = 4, m = 5, s6 = 6;
    MonomialOrder ord = rowmajor_lex_order(6);
    Polynomial s = s_polynomial(quad(i, l, m, s6), quad(j, k, m, s6), ord);
    Polynomial c6 = pvar(i, l) * pvar(j, m) * pvar(k, s6) - pvar(i, l) * pvar(j, s6) * pvar(k, m) -
                    pvar(i, m) * pvar(j, k) * pvar(l, s6) + pvar(i, s6) * pvar(j, k) * pvar(l, m);
    CHECK(s == c6);
    Polynomial reduced = normal_form(s, all_quadrics(6), ord);
    // The fully reduced element is the 3x3 determinant of (p[r,c]) with rows
    // i,j,k and columns l,m,s.
    Polynomial det = pvar(i, l) * (pvar(j, m) * pvar(k, s6) - pvar(j, s6) * pvar(k, m)) -
                     pvar(i, m) * (pvar(j, l) * pvar(k, s6) - pvar(j, s6) * pvar(k, l)) +
                     pvar(i, s6) * (pvar(j, l) * pvar(k, m) - pvar(j, m) * pvar(k, l));
    CHECK(reduced == det);
    CHECK(leading_monomial(reduced, ord) == leading_monomial(c6, ord));
}

TEST_CASE("one quadric is already a reduced basis") {
    MonomialOrder ord = rowmajor_lex_order(4);
    GroebnerBasis gb = buchberger(Ideal({quad(1, 2, 3, 4)}, pair_variables(4)), ord);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == quad(1, 2, 3, 4));
    CHECK(is_groebner(gb.elements, ord));
}

TEST_CASE("reduced basis for all quadrics at five points") {
    MonomialOrder ord = rowmajor_lex_order(5);
    GroebnerBasis gb = buchberger(Ideal(all_quadrics(5), pair_variables(5)), ord);
    CHECK(gb.elements.size() == 6);
    int cubic_count = 0;
    for (const Polynomial& g : gb.elements)
        if (g.total_degree() == 3) ++cubic_count;
    CHECK(cubic_count == 1);
    CHECK(is_groebner(gb.elements, ord));
}

TEST_CASE("buchberger output is idempotent and presentation-independent") {
    MonomialOrder ord = rowmajor_lex_order(5);
    auto gens = all_quadrics(5);
    GroebnerBasis gb = buchberger(Ideal(gens, pair_variables(5)), ord);
    GroebnerBasis gb2 = buchberger(Ideal(gb.elements, pair_variables(5)), ord);
    CHECK(gb.elements == gb2.elements);
    std::reverse(gens.begin(), gens.end());
    gens[0] = gens[0].scaled(Rational(-7, 2));
    GroebnerBasis gb3 = buchberger(Ideal(gens, pair_variables(5)), ord);
    CHECK(gb.elements == gb3.elements);
}

TEST_CASE("quadrics alone: basis under graded revlex, not under row-major lex") {
    // Under any graded revlex order from a linear extension of the
    // componentwise order the incomparable products are exactly the quadric
    // leading monomials, so the quadrics form a basis on their own. Under
    // the lex orders the cubics are genuinely needed.
    CHECK(is_groebner(all_quadrics(5), revlex_lattice_order(5)));
    CHECK_FALSE(is_groebner(all_quadrics(5), rowmajor_lex_order(5)));
    for (std::uint64_t seed : {11ull, 12ull}) {
        CHECK(is_groebner(all_quadrics(5), revlex_lattice_order(seeded_lattice_extension(5, seed))));
    }
}

TEST_CASE("ideal membership via normal form") {
    MonomialOrder ord = rowmajor_lex_order(5);
    GroebnerBasis gb = buchberger(Ideal(all_quadrics(5), pair_variables(5)), ord);
    Polynomial f = quad(1, 2, 3, 4) * pvar(1, 5) - quad(2, 3, 4, 5).scaled(Rational(3, 7));
    CHECK(normal_form(f, gb.elements, ord).is_zero());
    CHECK_FALSE(normal_form(pvar(1, 2), gb.elements, ord).is_zero());
}

TEST_CASE("ideal equality is insensitive to generator presentation") {
    MonomialOrder ord = rowmajor_lex_order(4);
    Polynomial q = quad(1, 2, 3, 4);
    Ideal a({q}, pair_variables(4));
    Ideal b({q.scaled(Rational(-5, 3)), q * pvar(1, 2)}, pair_variables(4));
    CHECK(ideal_equal(a, b, ord));
    Ideal c({pvar(1, 2)}, pair_variables(4));
    CHECK_FALSE(ideal_equal(a, c, ord));
}

TEST_CASE("ideal construction validates its input") {
    CHECK_THROWS_AS(Ideal({Polynomial::zero()}, pair_variables(4)), std::invalid_argument);
    CHECK_THROWS_AS(Ideal({pvar(1, 5)}, pair_variables(4)), std::invalid_argument);
}

TEST_CASE("budget exhaustion throws rather than silently truncating") {
    BuchbergerOptions opts;
    opts.spair_budget = 1;
    CHECK_THROWS_AS(
        buchberger(Ideal(all_quadrics(5), pair_variables(5)), revlex_lattice_order(5), opts),
        BudgetExceeded);
}

TEST_CASE("elimination discards everything touching the first index") {
    std::set<PairIndex> keep_set;
    std::vector<Variable> keep;
    for (PairIndex p : all_pairs(5))
        if (p.i != 1) keep_set.insert(p);
    for (PairIndex p : nest_extension(5))
        if (keep_set.count(p)) keep.push_back(Variable::pair(p));

    MonomialOrder ord = elimination_order(5, keep_set);
    Ideal E = eliminate(Ideal(all_quadrics(5), pair_variables(5)), keep, ord);
    REQUIRE(E.generators.size() == 1);
    CHECK(E.generators[0] == quad(2, 3, 4, 5));

    MonomialOrder small = MonomialOrder::lex(keep);
    GroebnerBasis expect = buchberger(Ideal({quad(2, 3, 4, 5)}, keep), small);
    GroebnerBasis got = buchberger(E, small);
    CHECK(got.elements == expect.elements);
}

TEST_CASE("elimination can produce the zero ideal") {
    std::set<PairIndex> keep_set{PairIndex(2, 3), PairIndex(2, 4), PairIndex(3, 4)};
    std::vector<Variable> keep;
    for (PairIndex p : nest_extension(4))
        if (keep_set.count(p)) keep.push_back(Variable::pair(p));
    Ideal E = eliminate(Ideal({quad(1, 2, 3, 4)}, pair_variables(4)), keep,
                        elimination_order(4, keep_set));
    CHECK(E.generators.empty());
}

TEST_CASE("elimination rejects a graded order") {
    std::vector<Variable> keep{Variable::pair(2, 3), Variable::pair(2, 4), Variable::pair(3, 4)};
    Ideal I(all_quadrics(4), pair_variables(4));
    CHECK_THROWS_AS(eliminate(I, keep, revlex_lattice_order(4)), std::invalid_argument);
}

TEST_CASE("elimination rejects an order that interleaves kept and discarded variables") {
    std::vector<Variable> keep{Variable::pair(1, 2)};
    Ideal I({quad(1, 2, 3, 4)}, pair_variables(4));
    // Under row-major lex, p[1,2] outranks the discarded variables.
    CHECK_THROWS_AS(eliminate(I, keep, rowmajor_lex_order(4)), std::invalid_argument);
}

TEST_CASE("ideal file io round trip") {
    std::ostringstream out;
    write_ideal_file(out, Ideal(all_quadrics(4), pair_variables(4)), rowmajor_lex_order(4));
    std::istringstream in(out.str());
    IdealFile back = read_ideal_file(in);
    CHECK(back.ideal.generators == all_quadrics(4));
    CHECK(back.ideal.ambient == pair_variables(4));
    CHECK(back.order == rowmajor_lex_order(4));
}

TEST_CASE("ideal file io for an elimination header") {
    std::set<PairIndex> keep_set{PairIndex(2, 3), PairIndex(2, 4), PairIndex(3, 4)};
    MonomialOrder ord = elimination_order(4, keep_set);
    std::ostringstream out;
    write_ideal_file(out, Ideal({quad(1, 2, 3, 4)}, pair_variables(4)), ord);
    std::istringstream in(out.str());
    IdealFile back = read_ideal_file(in);
    CHECK(back.order.scheme() == OrderScheme::BlockElimLex);
    CHECK(back.order == ord);
    std::vector<Variable> keep;
    for (PairIndex p : nest_extension(4))
        if (keep_set.count(p)) keep.push_back(Variable::pair(p));
    Ideal E = eliminate(back.ideal, keep, back.order);
    CHECK(E.generators.empty());
}

TEST_CASE("ideal file parsing rejects bad headers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_ideal_file(in);
    };
    CHECK_THROWS_AS(parse("p[1,2]\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("order: weird vars=[p[1,2]]\np[1,2]\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("order: elim keep=[p[1,2]] vars=[p[1,2],p[1,3]]\np[1,2]\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse("order: lex vars=[p[1,2]]\np[1,3]\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("order: elim keep=[p[9,9]] vars=[p[1,2]]\np[1,2]\n"),
                    std::invalid_argument);
}
