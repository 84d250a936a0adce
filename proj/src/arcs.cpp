#include "plk/arcs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace plk {

ArcArrangement::ArcArrangement(int n_, std::set<PairIndex> arcs_)
    : n(n_), arcs(std::move(arcs_)) {
    if (n < 2)
        throw std::invalid_argument("ArcArrangement: point count must be at least 2");
    for (const PairIndex& a : arcs)
        if (a.j > n)
            throw std::invalid_argument("ArcArrangement: arc " + a.str() +
                                        " outside point range");
}

namespace {

/// Excluded triple patterns, tried over every role assignment:
///   (i,k),(j,l),(k,m) with i<j<k<l<m  (two arcs meeting at k, one across);
///   (i,l),(j,m),(k,s) with i<j<k<l<m<s (three pairwise crossing arcs).
bool bad_triple(PairIndex a, PairIndex b, PairIndex c) {
    const std::array<PairIndex, 3> arr = {a, b, c};
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 3; ++z) {
            if (x == z) continue;
            const int y = 3 - x - z;
            if (arr[x].j == arr[z].i && arr[x].i < arr[y].i && arr[y].i < arr[x].j &&
                arr[x].j < arr[y].j && arr[y].j < arr[z].j)
                return true;
        }
    std::array<PairIndex, 3> s = arr;
    std::sort(s.begin(), s.end());
    return s[0].i < s[1].i && s[1].i < s[2].i && s[2].i < s[0].j && s[0].j < s[1].j &&
           s[1].j < s[2].j;
}

/// Would adding x to the (allowed) arcs in `have` create an excluded pattern?
bool creates_pattern(const std::vector<PairIndex>& have, PairIndex x) {
    for (std::size_t u = 0; u < have.size(); ++u) {
        if (arcs_disjoint(have[u], x)) return true;
        for (std::size_t v = u + 1; v < have.size(); ++v)
            if (bad_triple(have[u], have[v], x)) return true;
    }
    return false;
}

std::vector<PairIndex> all_arcs(int n) {
    std::vector<PairIndex> out;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
    return out;
}

}  // namespace

bool is_allowed(const ArcArrangement& a) {
    const std::vector<PairIndex> v(a.arcs.begin(), a.arcs.end());
    for (std::size_t p = 0; p < v.size(); ++p)
        for (std::size_t q = p + 1; q < v.size(); ++q) {
            if (arcs_disjoint(v[p], v[q])) return false;
            for (std::size_t r = q + 1; r < v.size(); ++r)
                if (bad_triple(v[p], v[q], v[r])) return false;
        }
    return true;
}

int max_arcs(int n) {
    if (n < 2) throw std::invalid_argument("max_arcs: point count must be at least 2");
    return 2 * n - 3;
}

std::vector<ArcArrangement> enumerate_maximal(int n) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("enumerate_maximal: supported range is 2 <= n <= 10");
    const std::vector<PairIndex> pool = all_arcs(n);
    const int target = max_arcs(n);

    // An arrangement has at most one arc of full length n-1 and at most two of
    // each shorter length; at size 2n-3 every quota is exact, which prunes hard.
    std::vector<int> quota(n, 2);
    quota[n - 1] = 1;
    std::vector<int> cnt(n, 0);

    // suffix[p][len] = arcs of the given length among pool[p..].
    std::vector<std::vector<int>> suffix(pool.size() + 1, std::vector<int>(n, 0));
    for (int p = static_cast<int>(pool.size()) - 1; p >= 0; --p) {
        suffix[p] = suffix[p + 1];
        ++suffix[p][pool[p].j - pool[p].i];
    }

    std::vector<ArcArrangement> out;
    std::vector<PairIndex> chosen;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(chosen.size()) == target) {
            out.emplace_back(n, std::set<PairIndex>(chosen.begin(), chosen.end()));
            return;
        }
        int reachable = 0;
        for (int len = 1; len < n; ++len)
            reachable += std::min(suffix[start][len], quota[len] - cnt[len]);
        if (static_cast<int>(chosen.size()) + reachable < target) return;
        for (std::size_t idx = start; idx < pool.size(); ++idx) {
            const PairIndex x = pool[idx];
            const int len = x.j - x.i;
            if (cnt[len] == quota[len]) continue;
            if (creates_pattern(chosen, x)) continue;
            chosen.push_back(x);
            ++cnt[len];
            self(self, idx + 1);
            --cnt[len];
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<ArcArrangement> enumerate_maximal_brute(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("enumerate_maximal_brute: supported range is 2 <= n <= 5");
    const std::vector<PairIndex> pool = all_arcs(n);
    const int target = max_arcs(n);
    std::vector<ArcArrangement> out;
    for (unsigned long mask = 0; mask < (1ul << pool.size()); ++mask) {
        if (std::popcount(mask) != target) continue;
        std::set<PairIndex> arcs;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if (mask & (1ul << k)) arcs.insert(pool[k]);
        ArcArrangement cand(n, std::move(arcs));
        if (is_allowed(cand)) out.push_back(std::move(cand));
    }
    return out;
}

ArcArrangement extend_to_maximal(const ArcArrangement& a) {
    if (!is_allowed(a))
        throw std::invalid_argument("extend_to_maximal: arrangement is not allowed");
    const int target = max_arcs(a.n);
    if (static_cast<int>(a.arcs.size()) >= target)
        throw std::invalid_argument("extend_to_maximal: arrangement is already maximal");

    // (1,n), (1,n-1), (2,n) never create an excluded pattern, so commit to them
    // greedily, then backtrack over the remaining arcs in order.
    std::vector<PairIndex> chosen(a.arcs.begin(), a.arcs.end());
    std::vector<PairIndex> preferred = {PairIndex(1, a.n)};
    if (a.n >= 3) {
        preferred.emplace_back(1, a.n - 1);
        preferred.emplace_back(2, a.n);
    }
    for (PairIndex p : preferred)
        if (!a.contains(p) && static_cast<int>(chosen.size()) < target) chosen.push_back(p);

    std::vector<int> quota(a.n, 2);
    quota[a.n - 1] = 1;
    std::vector<int> cnt(a.n, 0);
    for (PairIndex p : chosen) ++cnt[p.j - p.i];

    std::vector<PairIndex> pool;
    for (PairIndex p : all_arcs(a.n))
        if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) pool.push_back(p);

    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == target) return true;
        for (std::size_t idx = start; idx < pool.size(); ++idx) {
            const PairIndex x = pool[idx];
            const int len = x.j - x.i;
            if (cnt[len] == quota[len]) continue;
            if (creates_pattern(chosen, x)) continue;
            chosen.push_back(x);
            ++cnt[len];
            if (self(self, idx + 1)) return true;
            --cnt[len];
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0))
        throw std::logic_error("extend_to_maximal: search found no completion");
    return ArcArrangement(a.n, std::set<PairIndex>(chosen.begin(), chosen.end()));
}

int ArcTree::node_count() const {
    return is_leaf() ? 1 : 1 + left->node_count() + right->node_count();
}

int ArcTree::leaf_count() const {
    return is_leaf() ? 1 : left->leaf_count() + right->leaf_count();
}

std::string ArcTree::str() const {
    const std::string me =
        "[" + std::to_string(label.i) + "," + std::to_string(label.j) + "]";
    if (is_leaf()) return me;
    return "(" + left->str() + right->str() + ")@" + me;
}

bool tree_equal(const ArcTree& s, const ArcTree& t) {
    if (s.label != t.label || s.is_leaf() != t.is_leaf()) return false;
    if (s.is_leaf()) return true;
    return tree_equal(*s.left, *t.left) && tree_equal(*s.right, *t.right);
}

namespace {

ArcTree build_node(PairIndex arc, const ArcArrangement& a, std::set<PairIndex>& seen) {
    if (!seen.insert(arc).second)
        throw std::invalid_argument("to_tree: not a maximal allowed arrangement");
    int j_max = 0, i_min = 0;
    for (const PairIndex& p : a.arcs) {
        if (p.i == arc.i && p.j < arc.j) j_max = std::max(j_max, p.j);
        if (p.j == arc.j && p.i > arc.i) i_min = (i_min == 0) ? p.i : std::min(i_min, p.i);
    }
    ArcTree node{arc, nullptr, nullptr};
    if (j_max == 0 || i_min == 0) return node;
    if (j_max < i_min)
        throw std::invalid_argument("to_tree: not a maximal allowed arrangement");
    node.left = std::make_unique<ArcTree>(build_node(PairIndex(arc.i, j_max), a, seen));
    node.right = std::make_unique<ArcTree>(build_node(PairIndex(i_min, arc.j), a, seen));
    return node;
}

}  // namespace

ArcTree to_tree(const ArcArrangement& a) {
    const PairIndex root(1, a.n);
    if (static_cast<int>(a.arcs.size()) != max_arcs(a.n) || !a.contains(root) ||
        !is_allowed(a))
        throw std::invalid_argument("to_tree: not a maximal allowed arrangement");
    std::set<PairIndex> seen;
    ArcTree tree = build_node(root, a, seen);
    if (static_cast<int>(seen.size()) != max_arcs(a.n))
        throw std::invalid_argument("to_tree: not a maximal allowed arrangement");
    return tree;
}

namespace {

void collect_labels(const ArcTree& t, std::set<PairIndex>& out) {
    if ((t.left == nullptr) != (t.right == nullptr))
        throw std::invalid_argument("from_tree: node with exactly one child");
    out.insert(t.label);
    if (!t.is_leaf()) {
        collect_labels(*t.left, out);
        collect_labels(*t.right, out);
    }
}

}  // namespace

ArcArrangement from_tree(const ArcTree& t) {
    std::set<PairIndex> labels;
    collect_labels(t, labels);
    return ArcArrangement(t.label.j, std::move(labels));
}

BigInt catalan_number(int k) {
    if (k < 0) throw std::invalid_argument("catalan_number: negative index");
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (k + i);
        r /= i;
    }
    return r / (k + 1);
}

std::string arrangement_str(const ArcArrangement& a) {
    std::string s = "n=" + std::to_string(a.n) + "; arcs=";
    bool first = true;
    for (const PairIndex& p : a.arcs) {
        if (!first) s += ",";
        s += p.str();
        first = false;
    }
    return s;
}

void write_arc_arrangement(std::ostream& out, const ArcArrangement& a) {
    out << arrangement_str(a) << "\n";
}

ArcArrangement read_arc_arrangement(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) != 0)
            throw std::runtime_error("arc file: expected '" + tok + "'");
        pos += tok.size();
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t len = 0;
        while (pos + len < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos + len])))
            ++len;
        if (len == 0) throw std::runtime_error("arc file: expected an integer");
        const int v = std::stoi(text.substr(pos, len));
        pos += len;
        return v;
    };

    expect("n");
    expect("=");
    const int n = read_int();
    expect(";");
    expect("arcs");
    expect("=");
    std::set<PairIndex> arcs;
    skip_ws();
    while (pos < text.size() && text[pos] == '(') {
        expect("(");
        const int a = read_int();
        expect(",");
        const int b = read_int();
        expect(")");
        const int lo = std::min(a, b), hi = std::max(a, b);
        if (lo == hi || lo < 1)
            throw std::runtime_error("arc file: bad arc (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
        const PairIndex arc(lo, hi);
        if (!arcs.insert(arc).second)
            throw std::runtime_error("arc file: duplicate arc " + arc.str());
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '(')
                throw std::runtime_error("arc file: expected an arc after ','");
        }
    }
    skip_ws();
    if (pos != text.size()) throw std::runtime_error("arc file: trailing text");
    return ArcArrangement(n, std::move(arcs));
}

}  // namespace plk
