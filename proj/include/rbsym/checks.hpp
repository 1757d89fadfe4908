#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/decomp.hpp"
#include "rbsym/enumerate.hpp"
#include "rbsym/graph.hpp"
#include "rbsym/invariants.hpp"
#include "rbsym/matrix.hpp"
#include "rbsym/ncsym.hpp"
#include "rbsym/sym.hpp"

namespace rbsym {

struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, bool>> instances;

    void add(const std::string& label, bool ok) { instances.emplace_back(label, ok); }

    long long failures() const {
        long long f = 0;
        for (auto& [l, ok] : instances)
            if (!ok) ++f;
        return f;
    }

    bool all_pass() const { return failures() == 0; }
};

namespace detail {

inline std::string enc(const Graph& G) {
    std::string s = "G" + std::to_string(G.n) + "[";
    bool first = true;
    for (auto& [a, b] : G.edges) {
        if (!first) s += " ";
        s += std::to_string(a) + std::to_string(b);
        first = false;
    }
    return s + "]";
}

inline std::string enc(const Digraph& X) {
    std::string s = "D" + std::to_string(X.n) + "[";
    bool first = true;
    for (auto& [a, b] : X.arcs) {
        if (!first) s += " ";
        s += std::to_string(a) + std::to_string(b);
        first = false;
    }
    return s + "]";
}

inline std::string enc(const Poset& P) {
    std::string s = "P" + std::to_string(P.n()) + "[";
    bool first = true;
    for (int a = 1; a <= P.n(); ++a)
        for (int b = 1; b <= P.n(); ++b)
            if (P.less(a, b)) {
                if (!first) s += " ";
                s += std::to_string(a) + std::to_string(b);
                first = false;
            }
    return s + "]";
}

inline SymElement in_m(const SymElement& f) { return sym_convert(f, SymBasis::m); }

inline bool is_chain(const Poset& P) {
    for (int a = 1; a <= P.n(); ++a)
        for (int b = a + 1; b <= P.n(); ++b)
            if (!P.less(a, b) && !P.less(b, a)) return false;
    return true;
}

// all loopless digraphs on [n] with at most max_arcs arcs
inline std::vector<Digraph> sparse_digraphs(int n, int max_arcs) {
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) all.emplace_back(a, b);
    std::vector<Digraph> out;
    std::vector<int> pick;
    std::function<void(size_t)> rec = [&](size_t from) {
        Digraph X;
        X.n = n;
        for (int i : pick) X.add_arc(all[i].first, all[i].second);
        out.push_back(std::move(X));
        if (static_cast<int>(pick.size()) == max_arcs) return;
        for (size_t i = from; i < all.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

inline std::vector<Digraph> seeded_digraphs(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Digraph> out;
    std::set<std::set<std::pair<int, int>>> seen;
    while (static_cast<int>(out.size()) < count) {
        Digraph X;
        X.n = n;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (a != b && (rng() & 1)) X.add_arc(a, b);
        if (seen.insert(X.arcs).second) out.push_back(std::move(X));
    }
    return out;
}

inline std::vector<Poset> nuio_up_to_iso(int n) {
    std::vector<Poset> out;
    std::set<std::uint64_t> seen;
    for (const auto& P : enumerate_all_nuio(n))
        if (seen.insert(canonical_form(P)).second) out.push_back(P);
    return out;
}

}  // namespace detail

// X_{inc(P)} = omega(U_P) and the matching e/h coefficient bridge, posets up
// to isomorphism.
inline SuiteReport check_omega_bridge(int n, std::uint64_t) {
    SuiteReport r{"omega-bridge", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& P : enumerate_posets(k, true)) {
            auto X = chromatic_sym(inc(P));
            auto U = redei_berge(digraph_of(P));
            bool ok = detail::in_m(X) == detail::in_m(omega_sym(U));
            ok = ok && sym_convert(X, SymBasis::e).coeffs ==
                           sym_convert(U, SymBasis::h).coeffs;
            r.add(detail::enc(P), ok);
        }
    return r;
}

// Y_{inc(P)} = omega(W_{D_P}); rho(W_X) = U_X and rho(Y_G) = X_G.
inline SuiteReport check_ncsym_bridge(int n, std::uint64_t) {
    SuiteReport r{"ncsym-bridge", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& P : enumerate_posets(k, false)) {
            auto Y = Y_chromatic(inc(P));
            bool ok = Y == omega_ncsym(W_redei(digraph_of(P)));
            ok = ok && detail::in_m(rho(Y)) == detail::in_m(chromatic_sym(inc(P)));
            r.add(detail::enc(P), ok);
        }
    for (int k = 1; k <= std::min(n, 3); ++k)
        for (const auto& X : enumerate_digraphs(k, true)) {
            bool ok = W_coefficients_well_defined(X) &&
                      detail::in_m(rho(W_redei(X))) == detail::in_m(redei_berge(X));
            r.add(detail::enc(X), ok);
        }
    return r;
}

// W_X = W_{X \ e} - W_{X / e} raised, for every arc after relabeling.
inline SuiteReport check_del_con_W(int n, std::uint64_t) {
    SuiteReport r{"del-con-W", {}};
    for (int k = 2; k <= n; ++k)
        for (const auto& X : enumerate_digraphs(k, true)) {
            if (X.arcs.empty()) continue;
            bool ok = true;
            for (auto e : X.arcs) {
                auto Z = relabel_digraph(X, move_edge_last(k, e));
                if (!deletion_contraction_W(Z).ok) ok = false;
            }
            r.add(detail::enc(X), ok);
        }
    return r;
}

// Y_G = Y_{G \ e} - Y_{G / e} raised, for every edge after relabeling.
inline SuiteReport check_del_con_Y(int n, std::uint64_t) {
    SuiteReport r{"del-con-Y", {}};
    for (int k = 2; k <= n; ++k)
        for (const auto& G : enumerate_graphs(k)) {
            if (G.edges.empty()) continue;
            bool ok = true;
            for (auto e : G.edges) {
                auto H = relabel_graph(G, move_edge_last(k, e));
                if (!deletion_contraction_Y(H).ok) ok = false;
            }
            r.add(detail::enc(G), ok);
        }
    return r;
}

// Permutation-census p-expansion equals the listing definition of U_X;
// exhaustive through 4 vertices, seeded samples on 5.
inline SuiteReport check_p_expansion(int n, std::uint64_t seed) {
    SuiteReport r{"p-expansion", {}};
    auto one = [&](const Digraph& X) {
        r.add(detail::enc(X), detail::in_m(redei_berge_p_expansion(X)) ==
                                  detail::in_m(redei_berge(X)));
    };
    for (int k = 1; k <= std::min(n, 4); ++k)
        for (const auto& X : enumerate_digraphs(k, true)) one(X);
    if (n >= 5)
        for (const auto& X : detail::seeded_digraphs(5, 200, seed)) one(X);
    return r;
}

// Broken-cycle expansion equals the stable-partition expansion, and is
// independent of the edge labeling (three labelings per graph).
inline SuiteReport check_broken_cycle(int n, std::uint64_t) {
    SuiteReport r{"broken-cycle", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& G : enumerate_graphs(k)) {
            auto base = detail::in_m(chromatic_sym(G));
            std::vector<std::pair<int, int>> E(G.edges.begin(), G.edges.end());
            bool ok = true;
            for (int shift = 0; shift < 3; ++shift) {
                std::map<std::pair<int, int>, int> lab;
                int m = static_cast<int>(E.size());
                for (int i = 0; i < m; ++i) lab[E[i]] = (i + shift) % m;
                if (detail::in_m(chromatic_broken_cycle(G, lab)) != base) ok = false;
                if (E.empty()) {
                    if (detail::in_m(chromatic_broken_cycle(G)) != base) ok = false;
                    break;
                }
            }
            r.add(detail::enc(G), ok);
        }
    return r;
}

// Tournaments have odd Hamiltonian-path counts; non-chain posets have even
// quasi-linear extension counts, and u_P(1) counts them.
inline SuiteReport check_parity_redei(int n, std::uint64_t) {
    SuiteReport r{"parity-redei", {}};
    for (int k = 1; k <= std::min(n, 5); ++k)
        for (const auto& T : enumerate_tournaments(k))
            r.add(detail::enc(T), hamiltonian_paths(T) % 2 == 1);
    for (int k = 1; k <= n; ++k)
        for (const auto& P : enumerate_posets(k, true)) {
            long long q = static_cast<long long>(quasi_linear_extensions(P).size());
            bool ok = Rational(q) == redei_berge_poly(digraph_of(P)).eval(1);
            if (!detail::is_chain(P)) ok = ok && q % 2 == 0;
            r.add(detail::enc(P), ok);
        }
    return r;
}

// u_X(m) = (-1)^{|V|} u_{complement}( -m ) for all digraphs; the chromatic
// polynomial of inc(P) is the same reflection of u_P.
inline SuiteReport check_polynomial_antipode(int n, std::uint64_t) {
    SuiteReport r{"polynomial-antipode", {}};
    for (int k = 1; k <= std::min(n, 4); ++k)
        for (const auto& X : enumerate_digraphs(k, false)) {
            auto rhs = redei_berge_poly(complement(X)).substitute_negated();
            if (k % 2 != 0) rhs = UniPolynomial::zero() - rhs;
            r.add(detail::enc(X), redei_berge_poly(X) == rhs);
        }
    for (int k = 1; k <= std::min(n, 5); ++k)
        for (const auto& P : enumerate_posets(k, true)) {
            auto rhs = redei_berge_poly(digraph_of(P)).substitute_negated();
            if (k % 2 != 0) rhs = UniPolynomial::zero() - rhs;
            r.add(detail::enc(P), chromatic_poly(inc(P)) == rhs);
        }
    return r;
}

// linear_breakdown reassembles U_X; includes the star-digraph worked
// examples. Size 5 hosts are restricted to at most 6 arcs.
inline SuiteReport check_breakdown(int n, std::uint64_t) {
    SuiteReport r{"breakdown", {}};
    std::map<IntPartition, SymElement> bag_u;
    auto u_of = [&](const IntPartition& lam) -> const SymElement& {
        auto it = bag_u.find(lam);
        if (it == bag_u.end())
            it = bag_u.emplace(lam, redei_berge(bag_of_sticks(lam))).first;
        return it->second;
    };
    auto one = [&](const Digraph& X) {
        auto grouped = linear_breakdown(X).grouped;
        SymElement sum = SymElement::zero(X.n, SymBasis::m);
        for (auto& [lam, c] : grouped) sum = sum + u_of(lam) * Rational(c);
        r.add(detail::enc(X), sum == redei_berge(X));
    };
    for (int k = 1; k <= std::min(n, 4); ++k)
        for (const auto& X : enumerate_digraphs(k, true)) {
            if (is_bag_of_sticks(X)) continue;
            one(X);
        }
    if (n >= 5)
        for (const auto& X : detail::sparse_digraphs(5, 6)) {
            if (is_bag_of_sticks(X)) continue;
            one(X);
        }
    {
        Digraph D0, D1, D2, D3;
        D0.n = D1.n = D2.n = D3.n = 4;
        D1.add_arc(1, 2);
        D2.add_arc(1, 2), D2.add_arc(1, 3);
        D3.add_arc(1, 2), D3.add_arc(1, 3), D3.add_arc(1, 4);
        auto U0 = redei_berge(D0), U1 = redei_berge(D1);
        r.add("star2-example", redei_berge(D2) == U1 * Rational(2) - U0);
        r.add("star3-example", redei_berge(D3) == U1 * Rational(3) - U0 * Rational(2));
    }
    return r;
}

// omega(U_{P_lambda}) via ordering counts; closed-form u_{P_lambda}; path
// cover generating function at y = 0 equals omega(U_X).
inline SuiteReport check_bag_corollaries(int n, std::uint64_t) {
    SuiteReport r{"bag-corollaries", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& lam : all_int_partitions(k)) {
            auto U = redei_berge(bag_of_sticks(lam));
            bool ok = detail::in_m(omega_sym(U)) == omega_U_bag(lam);
            ok = ok && u_bag_closed_form(lam) == redei_berge_poly(bag_of_sticks(lam));
            r.add("bag" + lam.to_string(), ok);
        }
    for (int k = 1; k <= std::min(n, 4); ++k)
        for (const auto& X : enumerate_digraphs(k, true))
            r.add(detail::enc(X),
                  path_cycle_x0(X) == detail::in_m(omega_sym(redei_berge(X))));
    return r;
}

// Natural unit interval orders: h-positive U_P, e-positive X_{inc(P)},
// s-positive U_P, and chromatic = clique number on inc(P).
inline SuiteReport check_positivity_uio(int n, std::uint64_t) {
    SuiteReport r{"positivity-uio", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& P : detail::nuio_up_to_iso(k)) {
            auto U = redei_berge(digraph_of(P));
            bool ok = positivity(U, SymBasis::h).positive;
            ok = ok && positivity(chromatic_sym(inc(P)), SymBasis::e).positive;
            ok = ok && positivity(U, SymBasis::s).positive;
            ok = ok && chromatic_number(inc(P)) == clique_number(inc(P));
            r.add(detail::enc(P), ok);
        }
    return r;
}

// Induction support and grouped-coefficient theorem for h_pi raised.
inline SuiteReport check_induction_theorem(int n, std::uint64_t) {
    SuiteReport r{"induction-theorem", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& pi : all_set_partitions(k))
            r.add("pi[" + pi.to_string() + "]",
                  check_induction_theorem(pi).ok);
    return r;
}

// Simultaneous deletion over covering fans, both orientations.
inline SuiteReport check_triple_deletion(int n, std::uint64_t) {
    SuiteReport r{"triple-deletion", {}};
    for (int k = 3; k <= n; ++k)
        for (const auto& P : enumerate_posets(k, true))
            for (int v = 1; v <= k; ++v) {
                std::vector<int> below, above;
                for (int u = 1; u <= k; ++u) {
                    if (is_covering(P, {u, v})) below.push_back(u);
                    if (is_covering(P, {v, u})) above.push_back(u);
                }
                if (below.size() >= 2)
                    r.add(detail::enc(P) + " v=" + std::to_string(v) + " below",
                          generalized_triple_deletion(P, v, below).ok);
                if (above.size() >= 2)
                    r.add(detail::enc(P) + " v=" + std::to_string(v) + " above",
                          generalized_triple_deletion(P, v, above).ok);
            }
    return r;
}

// Broken-cycle complex of inc(P) is equinumerous by type with the
// permutation census of the complement of D_P.
inline SuiteReport check_equinumerosity(int n, std::uint64_t) {
    SuiteReport r{"equinumerosity", {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& P : enumerate_posets(k, true)) {
            std::map<IntPartition, long long> by_type;
            for (const auto& el : broken_cycle_complex(inc(P))) ++by_type[el.type];
            r.add(detail::enc(P), by_type == census_types(complement(digraph_of(P))));
        }
    return r;
}

// i(P) = clique number of inc(P) = least m with u_P(-m) nonzero; unit
// interval orders additionally satisfy i(P) * c(P) >= |P|.
inline SuiteReport check_statistics(int n, std::uint64_t) {
    SuiteReport r{"statistics", {}};
    for (int k = 1; k <= std::min(n, 5); ++k)
        for (const auto& P : enumerate_posets(k, true)) {
            auto u = redei_berge_poly(digraph_of(P));
            int first = 0;
            for (int m = 1; m <= k; ++m)
                if (u.eval(-m) != 0) {
                    first = m;
                    break;
                }
            r.add(detail::enc(P), first == incomparability_number(P));
        }
    for (int k = 1; k <= n; ++k)
        for (const auto& P : detail::nuio_up_to_iso(k))
            r.add("nuio " + detail::enc(P),
                  incomparability_number(P) * chain_number(P) >= k);
    return r;
}

// -------------------------------------------------- non-suite shared checks

// Irreducible natural unit interval orders counted two independent ways:
// admissible threshold functions vs. isomorphism classes of the full family.
inline std::pair<long long, long long> count_irreducible_nuio(int n) {
    long long direct = static_cast<long long>(admissible_nuio_functions(n).size());
    std::set<std::uint64_t> seen;
    for (const auto& P : enumerate_all_nuio(n))
        if (is_irreducible(P)) seen.insert(canonical_form(P));
    return {direct, static_cast<long long>(seen.size())};
}

// Rank of the {U_{P_lambda} : lambda of n} coefficient matrix in the m basis.
inline bool bags_linearly_independent(int n) {
    auto lambdas = all_int_partitions(n);
    std::map<IntPartition, int> col;
    for (const auto& mu : lambdas) col.emplace(mu, static_cast<int>(col.size()));
    RationalMatrix A(static_cast<int>(lambdas.size()), static_cast<int>(col.size()));
    for (size_t i = 0; i < lambdas.size(); ++i)
        for (auto& [mu, c] : redei_berge(bag_of_sticks(lambdas[i])).coeffs)
            A.at(static_cast<int>(i), col.at(mu)) = c;
    return A.rank() == static_cast<int>(lambdas.size());
}

// ----------------------------------------------------------- suite registry

struct SuiteSpec {
    SuiteReport (*run)(int, std::uint64_t);
    int default_n;
    int safe_cap;  // largest bound without --unsafe-bounds
};

inline const std::map<std::string, SuiteSpec>& suite_registry() {
    static const std::map<std::string, SuiteSpec> reg{
        {"omega-bridge", {check_omega_bridge, 6, 6}},
        {"ncsym-bridge", {check_ncsym_bridge, 4, 4}},
        {"del-con-W", {check_del_con_W, 4, 4}},
        {"del-con-Y", {check_del_con_Y, 4, 4}},
        {"p-expansion", {check_p_expansion, 5, 5}},
        {"broken-cycle", {check_broken_cycle, 5, 5}},
        {"parity-redei", {check_parity_redei, 6, 6}},
        {"polynomial-antipode", {check_polynomial_antipode, 5, 5}},
        {"breakdown", {check_breakdown, 5, 5}},
        {"bag-corollaries", {check_bag_corollaries, 6, 6}},
        {"positivity-uio", {check_positivity_uio, 6, 6}},
        {"induction-theorem", {check_induction_theorem, 4, 5}},
        {"triple-deletion", {check_triple_deletion, 5, 5}},
        {"equinumerosity", {check_equinumerosity, 5, 5}},
        {"statistics", {check_statistics, 5, 6}},
    };
    return reg;
}

}  // namespace rbsym
