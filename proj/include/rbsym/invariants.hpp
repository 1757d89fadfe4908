#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rbsym/graph.hpp"
#include "rbsym/ncsym.hpp"
#include "rbsym/sym.hpp"
#include "rbsym/unipoly.hpp"

namespace rbsym {

// ------------------------------------------------------------ chromatic X_G

// X_G = sum over types mu of (#stable partitions of type mu) * r_1!r_2!... m_mu
inline SymElement chromatic_sym(const Graph& G) {
    std::map<IntPartition, long long> by_type;
    for (const auto& pi : stable_partitions(G)) ++by_type[pi.type()];
    SymElement r = SymElement::zero(G.n, SymBasis::m);
    for (auto& [mu, count] : by_type)
        r.add_term(mu, Rational(count) * Rational(mu.multiplicity_factorial()));
    return r;
}

inline BigInt count_proper_colorings(const Graph& G, int m) {
    BigInt count = 0;
    std::vector<int> color(G.n + 1, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > G.n) {
            ++count;
            return;
        }
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                if (G.has_edge(u, v) && color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            rec(v + 1);
        }
    };
    rec(1);
    return count;
}

// ------------------------------------------------------------- Redei-Berge U

// U_X = sum over all listings of F_{descent set}, where position i is a
// descent when (sigma_i, sigma_{i+1}) is an arc.
inline QSymElement redei_berge_qsym(const Digraph& X) {
    if (X.n == 0) return QSymElement::unit(0, QSymBasis::F, 0u);
    QSymElement r = QSymElement::zero(X.n, QSymBasis::F);
    for (const auto& sigma : all_permutations(X.n)) {
        unsigned mask = 0;
        for (int i = 0; i + 1 < X.n; ++i)
            if (X.has_arc(sigma[i], sigma[i + 1])) mask |= 1u << i;
        r.add_term(mask, 1);
    }
    return r;
}

// Symmetric form in the m basis; the projection succeeding is itself a
// theorem, so a NotSymmetricError here means a bug.
inline SymElement redei_berge(const Digraph& X) {
    return project_qsym_to_sym(redei_berge_qsym(X));
}

// Census expansion: permutations whose every cycle lies in X or in the
// complement, signed by the total length excess of the cycles lying in X.
inline SymElement redei_berge_p_expansion(const Digraph& X) {
    SymElement r = SymElement::zero(X.n, SymBasis::p);
    if (X.n == 0) return r;
    for (const auto& word : all_permutations(X.n)) {
        // word[i] = image of i+1
        std::vector<bool> seen(X.n + 1, false);
        std::vector<int> cycle_lengths;
        int phi = 0;
        bool admissible = true;
        for (int s = 1; s <= X.n && admissible; ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            int v = s;
            while (!seen[v]) {
                seen[v] = true;
                cyc.push_back(v);
                v = word[v - 1];
            }
            bool in_x = true, in_comp = true;
            for (size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                if (X.has_arc(a, b))
                    in_comp = false;
                else
                    in_x = false;
            }
            if (in_x)
                phi += static_cast<int>(cyc.size()) - 1;
            else if (!in_comp)
                admissible = false;
            cycle_lengths.push_back(static_cast<int>(cyc.size()));
        }
        if (!admissible) continue;
        r.add_term(IntPartition(std::move(cycle_lengths)), phi % 2 == 0 ? 1 : -1);
    }
    return r;
}

// Permutations of [n] whose every non-trivial cycle is a cycle of X,
// counted by cycle type.
inline std::map<IntPartition, long long> census_types(const Digraph& X) {
    std::map<IntPartition, long long> out;
    for (const auto& word : all_permutations(X.n)) {
        std::vector<bool> seen(X.n + 1, false);
        std::vector<int> cycle_lengths;
        bool admissible = true;
        for (int s = 1; s <= X.n && admissible; ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            int v = s;
            while (!seen[v]) {
                seen[v] = true;
                cyc.push_back(v);
                v = word[v - 1];
            }
            if (cyc.size() >= 2)
                for (size_t i = 0; i < cyc.size() && admissible; ++i)
                    if (!X.has_arc(cyc[i], cyc[(i + 1) % cyc.size()])) admissible = false;
            cycle_lengths.push_back(static_cast<int>(cyc.size()));
        }
        if (admissible) ++out[IntPartition(std::move(cycle_lengths))];
    }
    return out;
}

// No induced subposet is a 3-chain plus an element incomparable to all of it.
inline bool is_three_plus_one_free(const Poset& P) {
    int n = P.n();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                if (!(P.less(a, b) && P.less(b, c))) continue;
                for (int d = 1; d <= n; ++d)
                    if (d != a && d != b && d != c && P.incomparable(d, a) &&
                        P.incomparable(d, b) && P.incomparable(d, c))
                        return false;
            }
    return true;
}

// X_G as a signed sum over the broken-cycle complex.
inline SymElement chromatic_broken_cycle(
    const Graph& G,
    const std::optional<std::map<std::pair<int, int>, int>>& labeling = std::nullopt) {
    SymElement r = SymElement::zero(G.n, SymBasis::p);
    for (const auto& el : broken_cycle_complex(G, labeling))
        r.add_term(el.type, el.edges.size() % 2 == 0 ? 1 : -1);
    return r;
}

// --------------------------------------------------------------- polynomials

inline UniPolynomial chromatic_poly(const Graph& G) {
    return principal_specialization(chromatic_sym(G));
}

inline UniPolynomial redei_berge_poly(const Digraph& X) {
    return principal_specialization(redei_berge_qsym(X));
}

// ------------------------------------------------------- noncommutative lifts

// Y_G = sum of m_pi over stable set partitions of the vertex positions.
inline NCSymElement Y_chromatic(const Graph& G) {
    NCSymElement r = NCSymElement::zero(G.n, NCBasis::m);
    for (const auto& pi : stable_partitions(G)) r.add_term(pi, 1);
    return r;
}

namespace detail {

// Number of (f,X)-friendly listings: colors weakly increase along the
// listing and strictly increase across arcs.
inline long long friendly_listing_count(const Digraph& X, const std::vector<int>& color) {
    long long count = 0;
    for (const auto& sigma : all_permutations(X.n)) {
        bool ok = true;
        for (int i = 0; i + 1 < X.n && ok; ++i) {
            int a = color[sigma[i] - 1], b = color[sigma[i + 1] - 1];
            if (a > b) ok = false;
            if (a == b && X.has_arc(sigma[i], sigma[i + 1])) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

inline std::vector<int> canonical_coloring(const SetPartition& pi) {
    std::vector<int> color(pi.n());
    for (int j = 0; j < pi.num_blocks(); ++j)
        for (int v : pi.blocks()[j]) color[v - 1] = j + 1;
    return color;
}

}  // namespace detail

// W_X in the m basis: the coefficient of m_pi counts friendly listings for
// the coloring sending the j-th block of pi (blocks by minimum) to color j.
inline NCSymElement W_redei(const Digraph& X) {
    NCSymElement r = NCSymElement::zero(X.n, NCBasis::m);
    if (X.n == 0) {
        r.add_term(SetPartition(0, {}), 1);
        return r;
    }
    for (const auto& pi : all_set_partitions(X.n)) {
        long long c = detail::friendly_listing_count(X, detail::canonical_coloring(pi));
        if (c != 0) r.add_term(pi, Rational(c));
    }
    return r;
}

// The m_pi coefficient must not depend on which increasing color pattern is
// assigned to the blocks; checks every injective block-to-color order.
inline bool W_coefficients_well_defined(const Digraph& X) {
    for (const auto& pi : all_set_partitions(X.n)) {
        long long reference = -1;
        for (const auto& order : all_permutations(pi.num_blocks())) {
            std::vector<int> color(X.n);
            for (int j = 0; j < pi.num_blocks(); ++j)
                for (int v : pi.blocks()[j]) color[v - 1] = order[j];
            long long c = detail::friendly_listing_count(X, color);
            if (reference < 0)
                reference = c;
            else if (c != reference)
                return false;
        }
    }
    return true;
}

// ----------------------------------------------------------------- relabeling

inline Digraph relabel_digraph(const Digraph& X, const std::vector<int>& perm) {
    Digraph Y;
    Y.n = X.n;
    for (auto& [u, v] : X.arcs) Y.add_arc(perm[u - 1], perm[v - 1]);
    return Y;
}

inline Graph relabel_graph(const Graph& G, const std::vector<int>& perm) {
    Graph H;
    H.n = G.n;
    for (auto& [u, v] : G.edges) H.add_edge(perm[u - 1], perm[v - 1]);
    return H;
}

// Permutation moving the arc (u,v) to (n-1, n), for routing a distinguished
// edge into last position before deletion-contraction.
inline std::vector<int> move_edge_last(int n, std::pair<int, int> e) {
    auto [u, v] = e;
    if (u == v) throw std::invalid_argument("distinguished edge cannot be a loop");
    std::vector<int> perm(n);
    int next = 1;
    for (int w = 1; w <= n; ++w) {
        if (w == u)
            perm[w - 1] = n - 1;
        else if (w == v)
            perm[w - 1] = n;
        else
            perm[w - 1] = next++;
    }
    return perm;
}

// ----------------------------------------------------- deletion-contraction

struct NCDelConVerdict {
    bool ok = true;
    NCSymElement lhs, rhs;
    std::optional<SetPartition> first_mismatch;
};

// W_X = W_{X\e} - W_{X/e} up-arrow for the distinguished arc e = (n-1, n).
inline NCDelConVerdict deletion_contraction_W(const Digraph& X) {
    std::pair<int, int> e{X.n - 1, X.n};
    if (!X.has_arc(e.first, e.second))
        throw std::invalid_argument("distinguished arc (n-1, n) not present");
    NCDelConVerdict v;
    v.lhs = W_redei(X);
    v.rhs = W_redei(delete_arc(X, e)) - induct(W_redei(contract_arc(X, e)));
    if (!(v.lhs == v.rhs)) {
        v.ok = false;
        for (const auto& pi : all_set_partitions(X.n))
            if (v.lhs.coeff(pi) != v.rhs.coeff(pi)) {
                v.first_mismatch = pi;
                break;
            }
    }
    return v;
}

// Y_G = Y_{G\e} - Y_{G/e} up-arrow for the distinguished edge {n-1, n}.
inline NCDelConVerdict deletion_contraction_Y(const Graph& G) {
    std::pair<int, int> e{G.n - 1, G.n};
    if (!G.has_edge(e.first, e.second))
        throw std::invalid_argument("distinguished edge {n-1, n} not present");
    NCDelConVerdict v;
    v.lhs = Y_chromatic(G);
    v.rhs = Y_chromatic(delete_edge(G, e)) - induct(Y_chromatic(contract_edge(G, e)));
    if (!(v.lhs == v.rhs)) {
        v.ok = false;
        for (const auto& pi : all_set_partitions(G.n))
            if (v.lhs.coeff(pi) != v.rhs.coeff(pi)) {
                v.first_mismatch = pi;
                break;
            }
    }
    return v;
}

// -------------------------------------------------------------- h-positivity

struct NCPositivityVerdict {
    bool positive = true;
    std::optional<SetPartition> certificate;
    Rational coefficient;
};

inline NCPositivityVerdict ncsym_positivity(const NCSymElement& f, NCBasis basis) {
    NCSymElement g = ncsym_convert(f, basis);
    for (auto& [k, c] : g.coeffs)
        if (c < 0) return {false, k, c};
    return {};
}

struct GroupedPositivityVerdict {
    bool positive = true;
    std::optional<std::pair<IntPartition, int>> certificate;
    Rational coefficient;
};

// h-positivity after grouping coefficients over congruence classes mod i
// (same type, same size of the block containing i).
inline GroupedPositivityVerdict grouped_h_positivity(const NCSymElement& f, int i) {
    for (auto& [cls, c] : congruence_collapse(f, i))
        if (c < 0) return {false, cls, c};
    return {};
}

struct HPositivityStep {
    Digraph next;
    GroupedPositivityVerdict grouped;  // the notion the iteration preserves
    NCPositivityVerdict strict;
};

// Append an isolated vertex via the product with T_1, remove the arc from
// the old last vertex to it, and report h-positivity of the result's W —
// grouped over congruence classes mod the new last position, which is the
// notion preserved by the iteration. Requires the last vertex of X to have
// no outgoing arcs.
inline HPositivityStep h_positivity_step(const Digraph& X) {
    for (int i = 1; i <= X.n; ++i)
        if (X.has_arc(X.n, i))
            throw std::invalid_argument("last vertex must have no outgoing arcs");
    Digraph T1;
    T1.n = 1;
    Digraph Z = delete_arc(product(X, T1), {X.n, X.n + 1});
    auto W = W_redei(Z);
    return {Z, grouped_h_positivity(W, Z.n), ncsym_positivity(W, NCBasis::h)};
}

}  // namespace rbsym
