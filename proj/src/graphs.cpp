#include "plk/graphs.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace plk {

Graph::Graph(int n_, std::set<PairIndex> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    for (const PairIndex& e : edges)
        if (e.j > n)
            throw std::invalid_argument("Graph: edge " + e.str() + " outside 1.." +
                                        std::to_string(n));
}

bool Graph::has_edge(int i, int j) const {
    return has_edge(PairIndex(std::min(i, j), std::max(i, j)));
}

std::vector<int> Graph::isolated_vertices() const {
    std::vector<bool> touched(n + 1, false);
    for (const PairIndex& e : edges) touched[e.i] = touched[e.j] = true;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!touched[v]) out.push_back(v);
    return out;
}

Graph graph_of(const Sublattice& s) { return Graph(s.n, s.members); }

Sublattice pair_set_of(const Graph& g) { return Sublattice(g.n, g.edges); }

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    if (g.n > 12)
        throw std::invalid_argument("maximal_cliques: vertex budget is 12");
    std::vector<unsigned> adj(g.n, 0);
    for (const PairIndex& e : g.edges) {
        adj[e.i - 1] |= 1u << (e.j - 1);
        adj[e.j - 1] |= 1u << (e.i - 1);
    }
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        bool clique = true;
        for (int v = 0; v < g.n && clique; ++v)
            if (mask >> v & 1)
                if ((mask & ~(adj[v] | (1u << v))) != 0) clique = false;
        if (!clique) continue;
        bool maximal = true;
        for (int v = 0; v < g.n && maximal; ++v)
            if (!(mask >> v & 1) && (mask & ~adj[v]) == 0) maximal = false;
        if (!maximal) continue;
        std::vector<int> members;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) members.push_back(v + 1);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueIntervalSystem::CliqueIntervalSystem(int n_,
                                           std::vector<std::pair<int, int>> intervals_)
    : n(n_), intervals(std::move(intervals_)) {
    if (intervals.empty())
        throw std::invalid_argument("interval system: no intervals");
    for (const auto& [a, b] : intervals) {
        if (a < 1 || b > n)
            throw std::invalid_argument("interval system: interval outside 1.." +
                                        std::to_string(n));
        if (a >= b)
            throw std::invalid_argument(
                "interval system: interval needs at least two vertices");
    }
    if (intervals.front().first != 1)
        throw std::invalid_argument("interval system: first interval must start at 1");
    for (std::size_t t = 1; t < intervals.size(); ++t) {
        if (intervals[t - 1].first >= intervals[t].first)
            throw std::invalid_argument(
                "interval system: left endpoints must strictly increase");
        if (intervals[t - 1].second >= intervals[t].second)
            throw std::invalid_argument(
                "interval system: right endpoints must strictly increase "
                "(containment breaks maximality)");
    }
}

std::string CliqueIntervalSystem::str() const {
    std::string out;
    for (const auto& [a, b] : intervals)
        out += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    return out;
}

std::optional<CliqueIntervalSystem> interval_system(const Graph& g) {
    std::vector<std::pair<int, int>> ivs;
    for (const std::vector<int>& c : maximal_cliques(g)) {
        if (c.size() < 2) return std::nullopt;
        if (c.back() - c.front() + 1 != static_cast<int>(c.size())) return std::nullopt;
        ivs.emplace_back(c.front(), c.back());
    }
    std::sort(ivs.begin(), ivs.end());
    return CliqueIntervalSystem(g.n, std::move(ivs));
}

bool condition_star(const Graph& g) {
    for (const PairIndex& e1 : g.edges) {
        for (const PairIndex& e2 : g.edges) {
            if (e1 == e2) continue;
            if (e1.i == e2.i && e1.j != e2.j && !g.has_edge(e1.j, e2.j)) return false;
            if (e1.j == e2.j && e1.i != e2.i && !g.has_edge(e1.i, e2.i)) return false;
        }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    std::vector<std::set<int>> adj(g.n + 1);
    for (const PairIndex& e : g.edges) {
        adj[e.i].insert(e.j);
        adj[e.j].insert(e.i);
    }
    std::vector<bool> alive(g.n + 1, true);
    for (int round = 0; round < g.n; ++round) {
        int found = 0;
        for (int v = 1; v <= g.n && !found; ++v) {
            if (!alive[v]) continue;
            bool simplicial = true;
            for (auto it = adj[v].begin(); it != adj[v].end() && simplicial; ++it)
                for (auto jt = std::next(it); jt != adj[v].end() && simplicial; ++jt)
                    if (!adj[*it].count(*jt)) simplicial = false;
            if (simplicial) found = v;
        }
        if (!found) return false;
        alive[found] = false;
        for (int u : adj[found]) adj[u].erase(found);
        adj[found].clear();
    }
    return true;
}

bool is_connected(const Graph& g) {
    std::vector<int> parent(g.n + 1);
    for (int v = 1; v <= g.n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const PairIndex& e : g.edges) parent[find(e.i)] = find(e.j);
    for (int v = 2; v <= g.n; ++v)
        if (find(v) != find(1)) return false;
    return true;
}

std::vector<int> overlaps(const CliqueIntervalSystem& sys) {
    std::vector<int> out;
    for (std::size_t t = 1; t < sys.intervals.size(); ++t)
        out.push_back(
            std::max(0, sys.intervals[t - 1].second - sys.intervals[t].first + 1));
    return out;
}

bool perfect_criterion(const CliqueIntervalSystem& sys) {
    for (int ov : overlaps(sys))
        if (ov < 2) return false;
    return true;
}

bool gorenstein_criterion(const CliqueIntervalSystem& sys) {
    for (int ov : overlaps(sys))
        if (ov > 3) return false;
    return true;
}

Sublattice lattice_of_system(const CliqueIntervalSystem& sys) {
    std::set<PairIndex> members;
    for (const auto& [a, b] : sys.intervals)
        for (int i = a; i < b; ++i)
            for (int j = i + 1; j <= b; ++j) members.emplace(i, j);
    return Sublattice(sys.n, std::move(members));
}

std::vector<CliqueIntervalSystem> enumerate_covering_systems(int n, int min_overlap,
                                                             int max_overlap) {
    if (n < 2)
        throw std::invalid_argument(
            "enumerate_covering_systems: need at least two vertices");
    if (min_overlap < 0 || max_overlap < min_overlap)
        throw std::invalid_argument("enumerate_covering_systems: bad overlap bounds");
    std::vector<CliqueIntervalSystem> out;
    std::vector<std::pair<int, int>> sys;
    std::function<void(int, int)> extend = [&](int a, int b) {
        if (b == n) {
            out.emplace_back(n, sys);
            return;
        }
        for (int ov = min_overlap; ov <= std::min(max_overlap, b - a); ++ov) {
            const int a2 = b + 1 - ov;
            for (int b2 = std::max(b, a2) + 1; b2 <= n; ++b2) {
                sys.emplace_back(a2, b2);
                extend(a2, b2);
                sys.pop_back();
            }
        }
    };
    for (int b = 2; b <= n; ++b) {
        sys.assign(1, {1, b});
        extend(1, b);
    }
    return out;
}

namespace {

void check_count_domain(const char* who, int n) {
    if (n < 4)
        throw std::invalid_argument(std::string(who) + ": n must be at least 4");
}

// Exact arithmetic in the field extension by sqrt(5): value a + b*sqrt(5).
struct Quad5 {
    Rational a, b;

    Quad5 operator*(const Quad5& o) const {
        return {a * o.a + Rational(5) * b * o.b, a * o.b + b * o.a};
    }
    Quad5 operator+(const Quad5& o) const { return {a + o.a, b + o.b}; }
};

Quad5 power(Quad5 base, int exp) {
    Quad5 acc{Rational(1), Rational(0)};
    for (int k = 0; k < exp; ++k) acc = acc * base;
    return acc;
}

}  // namespace

BigInt count_gorenstein_perfect_recurrence(int n) {
    check_count_domain("count_gorenstein_perfect_recurrence", n);
    BigInt p = 1, q = 1;
    for (int k = 0; k < n - 4; ++k) {
        const BigInt p_next = 2 * p + q;
        q = p + q;
        p = p_next;
    }
    return p + q;
}

BigInt count_gorenstein_perfect_closed_form(int n) {
    check_count_domain("count_gorenstein_perfect_closed_form", n);
    const Quad5 u{Rational(BigInt(3), BigInt(2)), Rational(BigInt(1), BigInt(2))};
    const Quad5 v{Rational(BigInt(3), BigInt(2)), Rational(BigInt(-1), BigInt(2))};
    const Quad5 cu{Rational(5), Rational(2)};
    const Quad5 cv{Rational(5), Rational(-2)};
    const Quad5 sum = cu * power(u, n - 4) + cv * power(v, n - 4);
    const Rational value = sum.a / Rational(5);
    if (!sum.b.is_zero() || !value.is_integer())
        throw std::logic_error(
            "count_gorenstein_perfect_closed_form: non-integral value");
    return value.numerator();
}

BigInt count_gorenstein_perfect_brute(int n) {
    check_count_domain("count_gorenstein_perfect_brute", n);
    if (n > 10)
        throw std::invalid_argument(
            "count_gorenstein_perfect_brute: enumeration budget is n <= 10");
    return BigInt(enumerate_covering_systems(n, 2, 3).size());
}

BigInt count_gorenstein_perfect(int n) {
    const BigInt by_recurrence = count_gorenstein_perfect_recurrence(n);
    const BigInt by_closed_form = count_gorenstein_perfect_closed_form(n);
    if (by_recurrence != by_closed_form)
        throw std::logic_error("count_gorenstein_perfect: methods disagree");
    if (n <= 10 && count_gorenstein_perfect_brute(n) != by_recurrence)
        throw std::logic_error("count_gorenstein_perfect: methods disagree");
    return by_recurrence;
}

Graph read_graph_file(std::istream& in) {
    std::string line;
    bool have_header = false;
    int n = 0;
    std::set<PairIndex> edges;
    while (std::getline(in, line)) {
        std::istringstream iss(line);
        if (!have_header) {
            std::string tag;
            if (!(iss >> tag)) continue;
            if (tag != "n:" || !(iss >> n))
                throw std::runtime_error("graph file: expected header 'n: <int>'");
            std::string rest;
            if (iss >> rest)
                throw std::runtime_error("graph file: trailing text after header");
            have_header = true;
            continue;
        }
        int i = 0, j = 0;
        if (!(iss >> i)) continue;
        std::string rest;
        if (!(iss >> j) || (iss >> rest))
            throw std::runtime_error("graph file: bad edge line '" + line + "'");
        try {
            if (!edges.emplace(std::min(i, j), std::max(i, j)).second)
                throw std::runtime_error("duplicate");
        } catch (const std::exception&) {
            throw std::runtime_error("graph file: bad edge line '" + line + "'");
        }
    }
    if (!have_header)
        throw std::runtime_error("graph file: expected header 'n: <int>'");
    return Graph(n, std::move(edges));
}

void write_graph_file(std::ostream& out, const Graph& g) {
    out << "n: " << g.n << "\n";
    for (const PairIndex& e : g.edges) out << e.i << " " << e.j << "\n";
}

}  // namespace plk
