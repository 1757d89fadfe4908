#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/enumerate.hpp"
#include "rbsym/partitions.hpp"
#include "rbsym/set_partition.hpp"

namespace rbsym {

// Simple graph on vertex set [n]; edges stored as pairs with first < second.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& es) : n(n) {
        for (auto [u, v] : es) add_edge(u, v);
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-pair in a graph");
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("edge endpoint outside [n]");
        edges.insert({std::min(u, v), std::max(u, v)});
    }

    bool has_edge(int u, int v) const {
        return edges.count({std::min(u, v), std::max(u, v)}) > 0;
    }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Digraph on [n]; ordered pairs, loops allowed.
struct Digraph {
    int n = 0;
    std::set<std::pair<int, int>> arcs;

    Digraph() = default;
    Digraph(int n, const std::vector<std::pair<int, int>>& as) : n(n) {
        for (auto [u, v] : as) add_arc(u, v);
    }

    void add_arc(int u, int v) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("arc endpoint outside [n]");
        arcs.insert({u, v});
    }

    bool has_arc(int u, int v) const { return arcs.count({u, v}) > 0; }

    bool loopless() const {
        for (auto& [u, v] : arcs)
            if (u == v) return false;
        return true;
    }

    bool operator==(const Digraph& o) const { return n == o.n && arcs == o.arcs; }
};

// Strict partial order on [n], verified at construction.
class Poset {
public:
    Poset() = default;

    // When from_covers is set, input pairs are covering relations and the
    // strict order is their transitive closure.
    Poset(int n, const std::vector<std::pair<int, int>>& pairs, bool from_covers = false)
        : n_(n) {
        for (auto [u, v] : pairs) {
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("relation outside [n]");
            strict_.insert({u, v});
        }
        if (from_covers) close();
        verify();
    }

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& strict() const { return strict_; }
    bool less(int u, int v) const { return strict_.count({u, v}) > 0; }
    bool incomparable(int u, int v) const { return u != v && !less(u, v) && !less(v, u); }

    // Covering pairs: u < v with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (auto& [u, v] : strict_) {
            bool covering = true;
            for (int w = 1; w <= n_ && covering; ++w)
                if (less(u, w) && less(w, v)) covering = false;
            if (covering) out.push_back({u, v});
        }
        return out;
    }

    Poset dual() const {
        std::vector<std::pair<int, int>> rev;
        for (auto& [u, v] : strict_) rev.push_back({v, u});
        return Poset(n_, rev);
    }

    bool operator==(const Poset& o) const { return n_ == o.n_ && strict_ == o.strict_; }

private:
    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::pair<int, int>> add;
            for (auto& [u, v] : strict_)
                for (auto& [x, w] : strict_)
                    if (v == x && !strict_.count({u, w})) add.push_back({u, w});
            for (auto& p : add) strict_.insert(p), changed = true;
        }
    }

    void verify() const {
        for (auto& [u, v] : strict_) {
            if (u == v) throw std::invalid_argument("strict order must be irreflexive");
            if (strict_.count({v, u}))
                throw std::invalid_argument("strict order must be antisymmetric");
        }
        for (auto& [u, v] : strict_)
            for (auto& [x, w] : strict_)
                if (v == x && !strict_.count({u, w}))
                    throw std::invalid_argument("strict order must be transitive");
    }

    int n_ = 0;
    std::set<std::pair<int, int>> strict_;
};

// ---------------------------------------------------------------- basic maps

inline Graph inc(const Poset& P) {
    Graph G;
    G.n = P.n();
    for (int u = 1; u <= P.n(); ++u)
        for (int v = u + 1; v <= P.n(); ++v)
            if (P.incomparable(u, v)) G.add_edge(u, v);
    return G;
}

inline Digraph digraph_of(const Poset& P) {
    Digraph X;
    X.n = P.n();
    for (auto& [u, v] : P.strict()) X.add_arc(u, v);
    return X;
}

inline Digraph complement(const Digraph& X) {
    Digraph Y;
    Y.n = X.n;
    for (int u = 1; u <= X.n; ++u)
        for (int v = 1; v <= X.n; ++v)
            if (!X.has_arc(u, v)) Y.add_arc(u, v);
    return Y;
}

inline Digraph opposite(const Digraph& X) {
    Digraph Y;
    Y.n = X.n;
    for (auto& [u, v] : X.arcs) Y.add_arc(v, u);
    return Y;
}

inline Digraph restrict_to(const Digraph& X, const std::vector<int>& S) {
    std::map<int, int> idx;
    for (size_t i = 0; i < S.size(); ++i) idx[S[i]] = static_cast<int>(i) + 1;
    Digraph Y;
    Y.n = static_cast<int>(S.size());
    for (auto& [u, v] : X.arcs)
        if (idx.count(u) && idx.count(v)) Y.add_arc(idx[u], idx[v]);
    return Y;
}

inline Graph restrict_to(const Graph& G, const std::vector<int>& S) {
    std::map<int, int> idx;
    for (size_t i = 0; i < S.size(); ++i) idx[S[i]] = static_cast<int>(i) + 1;
    Graph H;
    H.n = static_cast<int>(S.size());
    for (auto& [u, v] : G.edges)
        if (idx.count(u) && idx.count(v)) H.add_edge(idx[u], idx[v]);
    return H;
}

// X . Y : Y relabeled above X, all arcs from X to Y added.
inline Digraph product(const Digraph& X, const Digraph& Y) {
    Digraph Z;
    Z.n = X.n + Y.n;
    for (auto& [u, v] : X.arcs) Z.add_arc(u, v);
    for (auto& [u, v] : Y.arcs) Z.add_arc(u + X.n, v + X.n);
    for (int u = 1; u <= X.n; ++u)
        for (int v = 1; v <= Y.n; ++v) Z.add_arc(u, v + X.n);
    return Z;
}

inline Poset ordinal_sum(const Poset& P, const Poset& Q) {
    std::vector<std::pair<int, int>> rel;
    for (auto& [u, v] : P.strict()) rel.push_back({u, v});
    for (auto& [u, v] : Q.strict()) rel.push_back({u + P.n(), v + P.n()});
    for (int u = 1; u <= P.n(); ++u)
        for (int v = 1; v <= Q.n(); ++v) rel.push_back({u, v + P.n()});
    return Poset(P.n() + Q.n(), rel);
}

// --------------------------------------------------- deletion and contraction

inline Graph delete_edge(const Graph& G, std::pair<int, int> e) {
    auto key = std::minmax(e.first, e.second);
    Graph H = G;
    if (!H.edges.erase({key.first, key.second}))
        throw std::invalid_argument("edge not present");
    return H;
}

inline Digraph delete_arc(const Digraph& X, std::pair<int, int> e) {
    Digraph Y = X;
    if (!Y.arcs.erase(e)) throw std::invalid_argument("arc not present");
    return Y;
}

// Identify the endpoints of {u,v}; the merged vertex takes the smaller
// label, labels above the larger shift down by one.
inline Graph contract_edge(const Graph& G, std::pair<int, int> e) {
    auto [u, v] = std::minmax(e.first, e.second);
    if (!G.has_edge(u, v)) throw std::invalid_argument("edge not present");
    auto relabel = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
    Graph H;
    H.n = G.n - 1;
    for (auto& [a, b] : G.edges) {
        int x = relabel(a), y = relabel(b);
        if (x != y) H.add_edge(x, y);
    }
    return H;
}

// Directed contraction of e = (u,v): the merged vertex inherits the in-arcs
// of u and the out-arcs of v; arcs among other vertices are kept; no loop is
// created at the merged vertex. The merged vertex takes the smaller of the
// two labels, labels above the larger shift down by one.
inline Digraph contract_arc(const Digraph& X, std::pair<int, int> e) {
    auto [u, v] = e;
    if (u == v) throw std::invalid_argument("cannot contract a loop");
    if (!X.has_arc(u, v)) throw std::invalid_argument("arc not present");
    int hi = std::max(u, v);
    auto relabel = [&](int w) { return w > hi ? w - 1 : w; };
    int merged = std::min(u, v);
    Digraph Y;
    Y.n = X.n - 1;
    for (auto& [a, b] : X.arcs) {
        if (a == u || a == v || b == u || b == v) continue;
        Y.add_arc(relabel(a), relabel(b));
    }
    for (auto& [a, b] : X.arcs) {
        if (b == u && a != u && a != v) Y.add_arc(relabel(a), merged);
        if (a == v && b != u && b != v) Y.add_arc(merged, relabel(b));
    }
    return Y;
}

inline bool is_covering(const Poset& P, std::pair<int, int> e) {
    if (!P.less(e.first, e.second)) return false;
    for (int w = 1; w <= P.n(); ++w)
        if (P.less(e.first, w) && P.less(w, e.second)) return false;
    return true;
}

inline Poset poset_delete_covering(const Poset& P, std::pair<int, int> e) {
    if (!is_covering(P, e)) throw std::invalid_argument("not a covering pair");
    std::vector<std::pair<int, int>> rel;
    for (auto& p : P.strict())
        if (p != e) rel.push_back(p);
    return Poset(P.n(), rel);
}

// P/e via the directed contraction of its digraph; the result is re-verified
// as a poset.
inline Poset poset_contract_covering(const Poset& P, std::pair<int, int> e) {
    if (!is_covering(P, e)) throw std::invalid_argument("not a covering pair");
    Digraph D = contract_arc(digraph_of(P), e);
    std::vector<std::pair<int, int>> rel(D.arcs.begin(), D.arcs.end());
    return Poset(D.n, rel);
}

// ------------------------------------------------------------------ listings

inline std::vector<std::vector<int>> linear_extensions(const Poset& P) {
    std::vector<std::vector<int>> out;
    for (const auto& sigma : all_permutations(P.n())) {
        bool ok = true;
        for (int i = 0; i < P.n() && ok; ++i)
            for (int j = i + 1; j < P.n() && ok; ++j)
                if (P.less(sigma[j], sigma[i])) ok = false;
        if (ok) out.push_back(sigma);
    }
    return out;
}

// Listings where no element is directly followed by one it dominates.
inline std::vector<std::vector<int>> quasi_linear_extensions(const Poset& P) {
    std::vector<std::vector<int>> out;
    for (const auto& sigma : all_permutations(P.n())) {
        bool ok = true;
        for (int i = 0; i + 1 < P.n() && ok; ++i)
            if (P.less(sigma[i + 1], sigma[i])) ok = false;
        if (ok) out.push_back(sigma);
    }
    return out;
}

// ------------------------------------------------------------- hamiltonicity

inline long long hamiltonian_paths(const Digraph& X) {
    long long count = 0;
    for (const auto& sigma : all_permutations(X.n)) {
        bool ok = true;
        for (int i = 0; i + 1 < X.n && ok; ++i)
            if (!X.has_arc(sigma[i], sigma[i + 1])) ok = false;
        if (ok) ++count;
    }
    return count;
}

// Directed Hamiltonian cycles counted up to rotation: the first vertex is
// pinned to 1.
inline long long hamiltonian_cycles(const Digraph& X) {
    if (X.n == 0) return 0;
    long long count = 0;
    std::vector<int> rest;
    for (int v = 2; v <= X.n; ++v) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> cyc{1};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        bool ok = true;
        for (int i = 0; i < X.n && ok; ++i)
            if (!X.has_arc(cyc[i], cyc[(i + 1) % X.n])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return count;
}

inline bool is_tournament(const Digraph& X) {
    if (!X.loopless()) return false;
    for (int u = 1; u <= X.n; ++u)
        for (int v = u + 1; v <= X.n; ++v)
            if (X.has_arc(u, v) == X.has_arc(v, u)) return false;
    return true;
}

// Transitive tournament on [n]: arcs (i,j) for i < j.
inline Digraph transitive_tournament(int n) {
    Digraph X;
    X.n = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) X.add_arc(u, v);
    return X;
}

// ------------------------------------------------------------ stability

inline bool is_stable_block(const Graph& G, const std::vector<int>& block) {
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
            if (G.has_edge(block[i], block[j])) return false;
    return true;
}

inline bool is_stable_partition(const Graph& G, const SetPartition& pi) {
    for (const auto& b : pi.blocks())
        if (!is_stable_block(G, b)) return false;
    return true;
}

inline std::vector<SetPartition> stable_partitions(const Graph& G) {
    std::vector<SetPartition> out;
    for (const auto& pi : all_set_partitions(G.n))
        if (is_stable_partition(G, pi)) out.push_back(pi);
    return out;
}

// ------------------------------------------------------------ bags of sticks

// P_lambda: disjoint union of directed paths with sizes lambda_1, lambda_2, ...
// on consecutive labels.
inline Digraph bag_of_sticks(const IntPartition& lambda) {
    Digraph X;
    X.n = lambda.weight();
    int base = 0;
    for (int part : lambda.parts()) {
        for (int i = 1; i < part; ++i) X.add_arc(base + i, base + i + 1);
        base += part;
    }
    return X;
}

inline bool is_bag_of_sticks(const Digraph& X) {
    std::vector<int> out_deg(X.n + 1, 0), in_deg(X.n + 1, 0);
    for (auto& [u, v] : X.arcs) {
        if (u == v) return false;
        if (++out_deg[u] > 1 || ++in_deg[v] > 1) return false;
    }
    // in/out degrees <= 1: components are paths or cycles; a vertex lies on
    // a cycle exactly when no source-started walk reaches it
    std::vector<int> next(X.n + 1, 0);
    for (auto& [u, v] : X.arcs) next[u] = v;
    std::vector<bool> seen(X.n + 1, false);
    for (int s = 1; s <= X.n; ++s)
        if (in_deg[s] == 0) {
            int v = s;
            while (v != 0 && !seen[v]) {
                seen[v] = true;
                v = next[v];
            }
        }
    for (int v = 1; v <= X.n; ++v)
        if (!seen[v]) return false;  // lies on a cycle
    return true;
}

inline IntPartition stick_type(const Digraph& X) {
    if (!is_bag_of_sticks(X)) throw std::invalid_argument("not a bag of sticks");
    std::vector<int> next(X.n + 1, 0), in_deg(X.n + 1, 0);
    for (auto& [u, v] : X.arcs) next[u] = v, ++in_deg[v];
    std::vector<int> sizes;
    for (int s = 1; s <= X.n; ++s)
        if (in_deg[s] == 0) {
            int len = 0, v = s;
            while (v != 0) ++len, v = next[v];
            sizes.push_back(len);
        }
    return IntPartition(std::move(sizes));
}

// ------------------------------------------------------------- covers of X

struct PathCover {
    std::vector<std::pair<int, int>> edges;
    IntPartition type;  // path sizes
};

inline std::vector<PathCover> path_covers(const Digraph& X) {
    std::vector<std::pair<int, int>> E(X.arcs.begin(), X.arcs.end());
    int m = static_cast<int>(E.size());
    std::vector<PathCover> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Digraph S;
        S.n = X.n;
        std::vector<std::pair<int, int>> chosen;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) S.add_arc(E[i].first, E[i].second), chosen.push_back(E[i]);
        if (!is_bag_of_sticks(S)) continue;
        out.push_back({chosen, stick_type(S)});
    }
    return out;
}

struct PathCycleCover {
    std::vector<std::pair<int, int>> edges;
    IntPartition paths;   // pi(S): sizes of directed paths (singletons included)
    IntPartition cycles;  // sigma(S): sizes of directed cycles
};

inline std::vector<PathCycleCover> path_cycle_covers(const Digraph& X) {
    if (!X.loopless()) throw std::invalid_argument("path-cycle covers need a loopless digraph");
    std::vector<std::pair<int, int>> E(X.arcs.begin(), X.arcs.end());
    int m = static_cast<int>(E.size());
    std::vector<PathCycleCover> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> next(X.n + 1, 0), in_deg(X.n + 1, 0), out_deg(X.n + 1, 0);
        std::vector<std::pair<int, int>> chosen;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if (mask >> i & 1) {
                auto [u, v] = E[i];
                if (++out_deg[u] > 1 || ++in_deg[v] > 1) ok = false;
                next[u] = v;
                chosen.push_back(E[i]);
            }
        if (!ok) continue;
        std::vector<int> path_sizes, cycle_sizes;
        std::vector<bool> seen(X.n + 1, false);
        for (int s = 1; s <= X.n; ++s)
            if (in_deg[s] == 0 && !seen[s]) {
                int len = 0, v = s;
                while (v != 0) seen[v] = true, ++len, v = next[v];
                path_sizes.push_back(len);
            }
        for (int s = 1; s <= X.n; ++s)
            if (!seen[s]) {
                int len = 0, v = s;
                while (!seen[v]) seen[v] = true, ++len, v = next[v];
                cycle_sizes.push_back(len);
            }
        out.push_back({chosen, IntPartition(std::move(path_sizes)),
                       IntPartition(std::move(cycle_sizes))});
    }
    return out;
}

// ------------------------------------------------------- unit interval orders

// Natural unit interval order on [n] from a non-decreasing f on [n-2] with
// f(i) >= i and values in [n-1]: i is below exactly {f(i)+2, ..., n}.
inline Poset unit_interval_order(int n, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != std::max(0, n - 2))
        throw std::invalid_argument("f must be defined on [n-2]");
    for (int i = 1; i <= static_cast<int>(f.size()); ++i) {
        if (f[i - 1] < i || f[i - 1] > n - 1)
            throw std::invalid_argument("f must satisfy i <= f(i) <= n-1");
        if (i >= 2 && f[i - 1] < f[i - 2])
            throw std::invalid_argument("f must be non-decreasing");
    }
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n - 2; ++i)
        for (int j = f[i - 1] + 2; j <= n; ++j) rel.push_back({i, j});
    return Poset(n, rel);
}

inline std::vector<std::vector<int>> admissible_nuio_functions(int n) {
    std::vector<std::vector<int>> out;
    int len = std::max(0, n - 2);
    std::vector<int> f(len);
    std::function<void(int)> rec = [&](int i) {
        if (i == len) {
            out.push_back(f);
            return;
        }
        int lo = std::max(i + 1, i == 0 ? 1 : f[i - 1]);
        for (int v = lo; v <= n - 1; ++v) {
            f[i] = v;
            rec(i + 1);
        }
    };
    if (n >= 2)
        rec(0);
    else if (n == 1)
        out.push_back({});
    return out;
}

inline std::vector<Poset> enumerate_irreducible_nuio(int n) {
    std::vector<Poset> out;
    for (const auto& f : admissible_nuio_functions(n)) out.push_back(unit_interval_order(n, f));
    return out;
}

// All natural unit interval orders on [n] (irreducible or not): i is below
// exactly {h(i), ..., n} for a non-decreasing h on [n] with h(i) >= i+1 and
// values in [n+1] (h(i) = n+1 meaning nothing above i).
inline std::vector<Poset> enumerate_all_nuio(int n) {
    std::vector<Poset> out;
    std::vector<int> h(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<std::pair<int, int>> rel;
            for (int a = 1; a <= n; ++a)
                for (int b = h[a - 1]; b <= n; ++b) rel.push_back({a, b});
            out.push_back(Poset(n, rel));
            return;
        }
        int lo = std::max(i + 2, i == 0 ? 2 : h[i - 1]);
        for (int v = lo; v <= n + 1; ++v) {
            h[i] = v;
            rec(i + 1);
        }
    };
    if (n >= 1) rec(0);
    return out;
}

// Closure condition characterizing natural unit interval digraphs: whenever
// i <= j <= k <= l in the labels and (j,k) is an arc, so is (i,l) -- with i,l
// restricted to [n] and i <= j, k <= l.
inline bool is_natural_unit_interval_digraph(const Digraph& X) {
    if (!X.loopless()) return false;
    for (auto& [j, k] : X.arcs) {
        if (j >= k) return false;
        for (int i = 1; i <= j; ++i)
            for (int l = k; l <= X.n; ++l)
                if (!(i == j && l == k) && !X.has_arc(i, l)) return false;
    }
    // acyclicity is implied by j < k on every arc
    return true;
}

// --------------------------------------------------------------- enumeration

namespace detail {

inline std::uint64_t relation_mask(int n, const std::set<std::pair<int, int>>& rel) {
    std::uint64_t m = 0;
    for (auto& [u, v] : rel) m |= 1ull << ((u - 1) * n + (v - 1));
    return m;
}

inline std::uint64_t relabeled_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (mask >> ((u - 1) * n + (v - 1)) & 1)
                out |= 1ull << ((perm[u - 1] - 1) * n + (perm[v - 1] - 1));
    return out;
}

}  // namespace detail

// Minimum relation encoding over all relabelings. Works for any of the three
// structure kinds once reduced to an ordered-pair set.
inline std::uint64_t canonical_mask(int n, const std::set<std::pair<int, int>>& rel) {
    if (n > 8) throw std::invalid_argument("canonical forms limited to n <= 8");
    std::uint64_t base = detail::relation_mask(n, rel);
    std::uint64_t best = ~0ull;
    for (const auto& perm : all_permutations(n))
        best = std::min(best, detail::relabeled_mask(n, base, perm));
    return best;
}

inline std::uint64_t canonical_form(const Poset& P) { return canonical_mask(P.n(), P.strict()); }
inline std::uint64_t canonical_form(const Digraph& X) { return canonical_mask(X.n, X.arcs); }
inline std::uint64_t canonical_form(const Graph& G) {
    std::set<std::pair<int, int>> rel;
    for (auto& [u, v] : G.edges) rel.insert({u, v}), rel.insert({v, u});
    return canonical_mask(G.n, rel);
}

inline bool isomorphic(const Poset& P, const Poset& Q) {
    return P.n() == Q.n() && canonical_form(P) == canonical_form(Q);
}

// All labeled posets on [n]: backtracking over upper- and lower-triangular
// pairs would still be exponential, so we enumerate strict orders with a
// natural labeling (all relations increasing) and spread them over
// relabelings; this reproduces the labeled count exactly.
inline std::vector<Poset> enumerate_posets(int n, bool up_to_iso) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
    int m = static_cast<int>(slots.size());
    // naturally labeled strict orders
    std::vector<Poset> natural;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::set<std::pair<int, int>> rel;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) rel.insert(slots[i]);
        bool transitive = true;
        for (auto& [u, v] : rel) {
            for (auto& [x, w] : rel)
                if (v == x && !rel.count({u, w})) {
                    transitive = false;
                    break;
                }
            if (!transitive) break;
        }
        if (!transitive) continue;
        natural.push_back(Poset(n, {rel.begin(), rel.end()}));
    }
    if (up_to_iso) {
        std::set<std::uint64_t> seen;
        std::vector<Poset> out;
        for (auto& P : natural)
            if (seen.insert(canonical_form(P)).second) out.push_back(P);
        return out;
    }
    // spread over relabelings, deduplicating by exact relation mask
    std::set<std::uint64_t> seen;
    std::vector<Poset> out;
    for (auto& P : natural) {
        std::uint64_t base = detail::relation_mask(n, P.strict());
        for (const auto& perm : all_permutations(n)) {
            std::uint64_t mask = detail::relabeled_mask(n, base, perm);
            if (!seen.insert(mask).second) continue;
            std::vector<std::pair<int, int>> rel;
            for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v)
                    if (mask >> ((u - 1) * n + (v - 1)) & 1) rel.push_back({u, v});
            out.push_back(Poset(n, rel));
        }
    }
    return out;
}

inline std::vector<Graph> enumerate_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
    int m = static_cast<int>(slots.size());
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Graph G;
        G.n = n;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) G.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(G));
    }
    return out;
}

inline std::vector<Digraph> enumerate_digraphs(int n, bool loopless) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v || !loopless) slots.push_back({u, v});
    int m = static_cast<int>(slots.size());
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Digraph X;
        X.n = n;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) X.add_arc(slots[i].first, slots[i].second);
        out.push_back(std::move(X));
    }
    return out;
}

inline std::vector<Digraph> enumerate_tournaments(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
    int m = static_cast<int>(slots.size());
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Digraph X;
        X.n = n;
        for (int i = 0; i < m; ++i) {
            auto [u, v] = slots[i];
            if (mask >> i & 1)
                X.add_arc(u, v);
            else
                X.add_arc(v, u);
        }
        out.push_back(std::move(X));
    }
    return out;
}

// P is an ordinal sum of two nonempty posets iff V splits into A, B with
// every element of A below every element of B.
inline bool is_irreducible(const Poset& P) {
    int n = P.n();
    if (n <= 1) return true;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a) {
            if (!(mask >> (a - 1) & 1)) continue;
            for (int b = 1; b <= n && ok; ++b) {
                if (mask >> (b - 1) & 1) continue;
                if (!P.less(a, b)) ok = false;
            }
        }
        if (ok) return false;
    }
    return true;
}

inline bool is_connected(const Graph& G) {
    if (G.n == 0) return true;
    std::vector<bool> seen(G.n + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 1; v <= G.n; ++v)
            if (!seen[v] && G.has_edge(u, v)) seen[v] = true, stack.push_back(v);
    }
    for (int v = 1; v <= G.n; ++v)
        if (!seen[v]) return false;
    return true;
}

// Sizes of connected components of (V, S) for an edge subset of a graph.
inline IntPartition component_sizes(int n, const std::vector<std::pair<int, int>>& S) {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : S) parent[find(u)] = find(v);
    std::map<int, int> size;
    for (int v = 1; v <= n; ++v) ++size[find(v)];
    std::vector<int> sizes;
    for (auto& [r, s] : size) sizes.push_back(s);
    return IntPartition(std::move(sizes));
}

// ---------------------------------------------------------------- statistics

inline int independence_number(const Graph& G) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << G.n); ++mask) {
        std::vector<int> S;
        for (int v = 1; v <= G.n; ++v)
            if (mask >> (v - 1) & 1) S.push_back(v);
        if (is_stable_block(G, S)) best = std::max(best, static_cast<int>(S.size()));
    }
    return best;
}

inline Graph graph_complement(const Graph& G) {
    Graph H;
    H.n = G.n;
    for (int u = 1; u <= G.n; ++u)
        for (int v = u + 1; v <= G.n; ++v)
            if (!G.has_edge(u, v)) H.add_edge(u, v);
    return H;
}

inline int clique_number(const Graph& G) { return independence_number(graph_complement(G)); }

inline bool has_proper_coloring(const Graph& G, int m) {
    std::vector<int> color(G.n + 1, 0);
    std::function<bool(int)> rec = [&](int v) {
        if (v > G.n) return true;
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                if (G.has_edge(u, v) && color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (rec(v + 1)) return true;
        }
        color[v] = 0;
        return false;
    };
    return rec(1);
}

inline int chromatic_number(const Graph& G) {
    if (G.n == 0) return 0;
    for (int m = 1; m < G.n; ++m)
        if (has_proper_coloring(G, m)) return m;
    return G.n;
}

// i(P): largest antichain; c(P): longest chain.
inline int incomparability_number(const Poset& P) { return clique_number(inc(P)); }
inline int chain_number(const Poset& P) { return independence_number(inc(P)); }

// --------------------------------------------------------- broken cycles

// All cycles of G as edge sets (each cycle once).
inline std::vector<std::vector<std::pair<int, int>>> all_cycles(const Graph& G) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> path;
    std::vector<bool> used(G.n + 1, false);
    std::function<void(int, int)> rec = [&](int start, int v) {
        for (int w = 1; w <= G.n; ++w) {
            if (!G.has_edge(v, w)) continue;
            if (w == start && path.size() >= 3) {
                // close the cycle; record only in one orientation
                if (path[1] < path.back()) {
                    std::vector<std::pair<int, int>> cyc;
                    for (size_t i = 0; i + 1 < path.size(); ++i)
                        cyc.push_back(std::minmax(path[i], path[i + 1]));
                    cyc.push_back(std::minmax(path.back(), start));
                    out.push_back(std::move(cyc));
                }
                continue;
            }
            if (w <= start || used[w]) continue;  // start is the cycle minimum
            used[w] = true;
            path.push_back(w);
            rec(start, w);
            path.pop_back();
            used[w] = false;
        }
    };
    for (int s = 1; s <= G.n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), false);
        used[s] = true;
        rec(s, s);
    }
    return out;
}

struct BrokenCycleElement {
    std::vector<std::pair<int, int>> edges;
    IntPartition type;  // component sizes of (V, S)
};

// Subsets of E containing no broken cycle (cycle minus its largest edge
// under the labeling). The labeling maps each edge to a distinct rank;
// defaults to lexicographic edge order.
inline std::vector<BrokenCycleElement> broken_cycle_complex(
    const Graph& G,
    const std::optional<std::map<std::pair<int, int>, int>>& labeling = std::nullopt) {
    std::vector<std::pair<int, int>> E(G.edges.begin(), G.edges.end());
    int m = static_cast<int>(E.size());
    std::map<std::pair<int, int>, int> alpha;
    if (labeling) {
        alpha = *labeling;
        std::set<int> vals;
        for (auto& e : E) {
            auto it = alpha.find(e);
            if (it == alpha.end()) throw std::invalid_argument("labeling misses an edge");
            vals.insert(it->second);
        }
        if (static_cast<int>(vals.size()) != m)
            throw std::invalid_argument("labeling must be injective on edges");
    } else {
        for (int i = 0; i < m; ++i) alpha[E[i]] = i + 1;
    }
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < m; ++i) index[E[i]] = i;
    std::vector<std::uint64_t> broken;
    for (const auto& cyc : all_cycles(G)) {
        auto largest = *std::max_element(cyc.begin(), cyc.end(),
                                         [&](const auto& a, const auto& b) {
                                             return alpha.at(a) < alpha.at(b);
                                         });
        std::uint64_t mask = 0;
        for (auto& e : cyc)
            if (e != largest) mask |= 1ull << index[e];
        broken.push_back(mask);
    }
    std::vector<BrokenCycleElement> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        bool ok = true;
        for (std::uint64_t b : broken)
            if ((mask & b) == b) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::vector<std::pair<int, int>> S;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) S.push_back(E[i]);
        auto type = component_sizes(G.n, S);
        out.push_back({std::move(S), std::move(type)});
    }
    return out;
}

}  // namespace rbsym
