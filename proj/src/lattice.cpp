#include "plk/lattice.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace plk {

Sublattice::Sublattice(int n_, std::set<PairIndex> members_)
    : n(n_), members(std::move(members_)) {
    if (n < 2)
        throw std::invalid_argument("Sublattice: ambient size must be at least 2");
    for (const PairIndex& p : members)
        if (p.j > n)
            throw std::invalid_argument("Sublattice: member " + p.str() +
                                        " outside ambient range");
}

Sublattice full_pair_lattice(int n) {
    std::set<PairIndex> members;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) members.emplace(i, j);
    return Sublattice(n, std::move(members));
}

bool is_sublattice(const Sublattice& s) {
    for (const PairIndex& a : s.members)
        for (const PairIndex& b : s.members)
            if (!s.contains(pair_meet(a, b)) || !s.contains(pair_join(a, b)))
                return false;
    return true;
}

bool complement_is_poset_ideal(const Sublattice& s) {
    for (const PairIndex& p : s.members)
        for (int k = p.i; k < p.j; ++k)
            for (int l = k + 1; l <= p.j; ++l)
                if (!s.contains(PairIndex(k, l))) return false;
    return true;
}

namespace {

// Members in set order; a strict componentwise predecessor always sorts
// earlier, so one forward pass computes longest chains.
std::vector<PairIndex> sorted_members(const Sublattice& s) {
    return std::vector<PairIndex>(s.members.begin(), s.members.end());
}

}  // namespace

int rank(const Sublattice& s) {
    if (s.members.empty()) throw std::invalid_argument("rank: empty poset");
    const std::vector<PairIndex> elems = sorted_members(s);
    std::vector<int> longest(elems.size(), 0);
    int best = 0;
    for (std::size_t b = 0; b < elems.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a)
            if (pair_le(elems[a], elems[b]))
                longest[b] = std::max(longest[b], longest[a] + 1);
        best = std::max(best, longest[b]);
    }
    return best;
}

std::vector<std::pair<PairIndex, PairIndex>> hasse_edges(const Sublattice& s) {
    const std::vector<PairIndex> elems = sorted_members(s);
    std::vector<std::pair<PairIndex, PairIndex>> covers;
    for (const PairIndex& a : elems) {
        for (const PairIndex& b : elems) {
            if (a == b || !pair_le(a, b)) continue;
            bool direct = true;
            for (const PairIndex& c : elems) {
                if (c == a || c == b) continue;
                if (pair_le(a, c) && pair_le(c, b)) {
                    direct = false;
                    break;
                }
            }
            if (direct) covers.emplace_back(a, b);
        }
    }
    return covers;
}

bool is_pure(const Sublattice& s) {
    if (s.members.empty()) throw std::invalid_argument("is_pure: empty poset");
    std::map<PairIndex, std::vector<PairIndex>> up;
    std::set<PairIndex> has_lower;
    for (const auto& [lo, hi] : hasse_edges(s)) {
        up[lo].push_back(hi);
        has_lower.insert(hi);
    }
    int expected = -1;
    std::function<bool(PairIndex, int)> walk = [&](PairIndex v, int len) {
        auto it = up.find(v);
        if (it == up.end()) {
            if (expected < 0) expected = len;
            return expected == len;
        }
        for (const PairIndex& w : it->second)
            if (!walk(w, len + 1)) return false;
        return true;
    };
    for (const PairIndex& v : s.members)
        if (!has_lower.count(v) && !walk(v, 0)) return false;
    return true;
}

bool is_compatible(const Sublattice& s, bool strict_rank) {
    if (s.members.empty()) return false;
    if (!is_sublattice(s) || !complement_is_poset_ideal(s)) return false;
    const int r = rank(s);
    return strict_rank ? r == s.n : r >= s.n;
}

bool is_perfect(const Sublattice& s) {
    if (!is_sublattice(s) || !complement_is_poset_ideal(s)) return false;
    for (int i = 1; i + 1 <= s.n; ++i)
        if (!s.contains(PairIndex(i, i + 1))) return false;
    for (int i = 1; i + 2 <= s.n; ++i)
        if (!s.contains(PairIndex(i, i + 2))) return false;
    return true;
}

Sublattice join_irreducibles(const Sublattice& s) {
    if (!is_sublattice(s))
        throw std::invalid_argument("join_irreducibles: not a lattice");
    std::set<PairIndex> out;
    if (s.members.empty()) return Sublattice(s.n, out);
    PairIndex minimum = *s.members.begin();
    for (const PairIndex& p : s.members) minimum = pair_meet(minimum, p);
    std::vector<PairIndex> below;
    for (const PairIndex& a : s.members) {
        if (a == minimum) continue;
        below.clear();
        for (const PairIndex& b : s.members)
            if (b != a && pair_le(b, a)) below.push_back(b);
        bool reducible = false;
        for (std::size_t x = 0; x < below.size() && !reducible; ++x)
            for (std::size_t y = x + 1; y < below.size() && !reducible; ++y)
                if (pair_join(below[x], below[y]) == a) reducible = true;
        if (!reducible) out.insert(a);
    }
    return Sublattice(s.n, std::move(out));
}

Chain fundamental_chain(const Sublattice& s) {
    if (!is_perfect(s))
        throw std::invalid_argument("fundamental_chain: sublattice is not perfect");
    Chain chain;
    PairIndex cur(1, 2);
    chain.push_back(cur);
    const int steps = 2 * s.n - 4;
    for (int k = 0; k < steps; ++k) {
        if (cur.j < s.n && s.contains(PairIndex(cur.i, cur.j + 1)))
            cur = PairIndex(cur.i, cur.j + 1);
        else
            cur = PairIndex(cur.i + 1, cur.j);
        chain.push_back(cur);
    }
    return chain;
}

namespace {

void check_enumeration_budget(const char* who, int n) {
    if (n < 3 || n > 9)
        throw std::invalid_argument(std::string(who) +
                                    ": ambient size out of budget (3 <= n <= 9)");
}

// Antichains of intervals [a,b] within [1,n] with both endpoints strictly
// increasing. Every set whose complement is downward closed in the nesting
// order is the pair set of such a system (its non-singleton maximal
// cliques), so filtering these candidates misses nothing.
void for_each_interval_antichain(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    std::vector<std::pair<int, int>> sys;
    std::function<void(int, int)> extend = [&](int last_a, int last_b) {
        if (!sys.empty()) emit(sys);
        for (int a = last_a + 1; a < n; ++a) {
            for (int b = std::max(last_b + 1, a + 1); b <= n; ++b) {
                sys.emplace_back(a, b);
                extend(a, b);
                sys.pop_back();
            }
        }
    };
    extend(0, 0);
}

std::set<PairIndex> members_of_system(const std::vector<std::pair<int, int>>& sys) {
    std::set<PairIndex> members;
    for (const auto& [a, b] : sys)
        for (int i = a; i < b; ++i)
            for (int j = i + 1; j <= b; ++j) members.emplace(i, j);
    return members;
}

void sort_by_members(std::vector<Sublattice>& out) {
    std::sort(out.begin(), out.end(), [](const Sublattice& x, const Sublattice& y) {
        return x.members < y.members;
    });
}

template <typename Keep>
std::vector<Sublattice> enumerate_filtered(int n, const Keep& keep) {
    std::vector<Sublattice> out;
    for_each_interval_antichain(n, [&](const std::vector<std::pair<int, int>>& sys) {
        Sublattice cand(n, members_of_system(sys));
        if (keep(cand)) out.push_back(std::move(cand));
    });
    sort_by_members(out);
    return out;
}

template <typename Keep>
std::vector<Sublattice> enumerate_brute(const char* who, int n, const Keep& keep) {
    if (n < 3 || n > 5)
        throw std::invalid_argument(std::string(who) +
                                    ": ambient size out of budget (3 <= n <= 5)");
    std::vector<PairIndex> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<Sublattice> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::set<PairIndex> members;
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (mask >> t & 1) members.insert(pairs[t]);
        Sublattice cand(n, std::move(members));
        if (keep(cand)) out.push_back(std::move(cand));
    }
    sort_by_members(out);
    return out;
}

}  // namespace

std::vector<Sublattice> enumerate_compatible(int n, bool strict_rank) {
    check_enumeration_budget("enumerate_compatible", n);
    return enumerate_filtered(
        n, [&](const Sublattice& s) { return is_compatible(s, strict_rank); });
}

std::vector<Sublattice> enumerate_perfect_compatible(int n) {
    check_enumeration_budget("enumerate_perfect_compatible", n);
    return enumerate_filtered(n, [](const Sublattice& s) { return is_perfect(s); });
}

std::vector<Sublattice> enumerate_compatible_brute(int n, bool strict_rank) {
    return enumerate_brute("enumerate_compatible_brute", n, [&](const Sublattice& s) {
        return is_compatible(s, strict_rank);
    });
}

std::vector<Sublattice> enumerate_perfect_compatible_brute(int n) {
    return enumerate_brute("enumerate_perfect_compatible_brute", n,
                           [](const Sublattice& s) { return is_perfect(s); });
}

Sublattice read_sublattice_file(std::istream& in) {
    std::string line;
    bool have_header = false;
    int n = 0;
    std::set<PairIndex> members;
    while (std::getline(in, line)) {
        std::istringstream iss(line);
        if (!have_header) {
            std::string tag;
            if (!(iss >> tag)) continue;  // skip leading blank lines
            if (tag != "n:" || !(iss >> n))
                throw std::runtime_error("sublattice file: expected header 'n: <int>'");
            std::string rest;
            if (iss >> rest)
                throw std::runtime_error("sublattice file: trailing text after header");
            have_header = true;
            continue;
        }
        int i = 0, j = 0;
        if (!(iss >> i)) continue;  // blank line
        std::string rest;
        if (!(iss >> j) || (iss >> rest))
            throw std::runtime_error("sublattice file: bad member line '" + line + "'");
        try {
            if (!members.emplace(i, j).second)
                throw std::runtime_error("duplicate");
        } catch (const std::exception&) {
            throw std::runtime_error("sublattice file: bad member line '" + line + "'");
        }
    }
    if (!have_header)
        throw std::runtime_error("sublattice file: expected header 'n: <int>'");
    return Sublattice(n, std::move(members));
}

void write_sublattice_file(std::ostream& out, const Sublattice& s) {
    out << "n: " << s.n << "\n";
    for (const PairIndex& p : s.members) out << p.i << " " << p.j << "\n";
}

}  // namespace plk
