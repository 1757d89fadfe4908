#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rbsym/graph.hpp"
#include "rbsym/invariants.hpp"
#include "rbsym/ncsym.hpp"
#include "rbsym/sym.hpp"
#include "rbsym/unipoly.hpp"

namespace rbsym {

// Poset of edge subsets of X ordered by A < B iff A is a proper subset of B
// and (V,B) is not a bag of sticks. Provides the signed chain count
// xi([S, E]) via a memoized superset recursion.
class EdgePoset {
public:
    explicit EdgePoset(const Digraph& X)
        : X_(X), E_(X.arcs.begin(), X.arcs.end()) {
        int m = static_cast<int>(E_.size());
        if (m > 20) throw std::invalid_argument("edge poset limited to 20 edges");
        full_ = (m == 0) ? 0 : ((1ull << m) - 1);
        bag_.assign(full_ + 1, 0);
        for (std::uint64_t mask = 0; mask <= full_; ++mask)
            bag_[mask] = is_bag_of_sticks(subdigraph(mask)) ? 1 : 0;
        if (bag_[full_])
            throw std::invalid_argument("the full edge set must not be a bag of sticks");
        memo_.assign(full_ + 1, std::nullopt);
    }

    const std::vector<std::pair<int, int>>& edges() const { return E_; }
    std::uint64_t full_mask() const { return full_; }
    bool subset_is_bag(std::uint64_t mask) const { return bag_[mask] != 0; }

    Digraph subdigraph(std::uint64_t mask) const {
        Digraph S;
        S.n = X_.n;
        for (size_t i = 0; i < E_.size(); ++i)
            if (mask >> i & 1) S.add_arc(E_[i].first, E_[i].second);
        return S;
    }

    // Signed count of chains from S to E: an empty chain for S = E, otherwise
    // every step must land on a non-bag subset.
    BigInt xi(std::uint64_t mask) {
        if (mask == full_) return 1;
        if (memo_[mask]) return *memo_[mask];
        BigInt total = 0;
        std::uint64_t rest = full_ & ~mask;
        // iterate over all non-empty sub-masks of the complement
        for (std::uint64_t extra = rest; extra != 0; extra = (extra - 1) & rest) {
            std::uint64_t sup = mask | extra;
            if (sup != full_ && bag_[sup]) continue;
            total -= xi(sup);
        }
        memo_[mask] = total;
        return total;
    }

    BigInt xi(const std::vector<std::pair<int, int>>& S) {
        std::uint64_t mask = 0;
        for (auto& e : S) {
            bool found = false;
            for (size_t i = 0; i < E_.size(); ++i)
                if (E_[i] == e) {
                    mask |= 1ull << i;
                    found = true;
                }
            if (!found) throw std::invalid_argument("edge outside the host digraph");
        }
        return xi(mask);
    }

    // Minimal elements: subsets spanning a bag of sticks (the empty set
    // included).
    std::vector<std::uint64_t> min_elements() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t mask = 0; mask <= full_; ++mask)
            if (bag_[mask]) out.push_back(mask);
        return out;
    }

private:
    Digraph X_;
    std::vector<std::pair<int, int>> E_;
    std::uint64_t full_ = 0;
    std::vector<char> bag_;
    std::vector<std::optional<BigInt>> memo_;
};

struct BreakdownTerm {
    std::vector<std::pair<int, int>> edges;
    IntPartition type;  // stick type of (V, S)
    BigInt coeff;       // (-1)^{|E|-|S|} xi([S, E])
};

struct BreakdownResult {
    std::vector<BreakdownTerm> terms;
    std::map<IntPartition, BigInt> grouped;  // terms merged by stick type
};

// W_X (hence U_X) as an integer combination of bag-of-sticks functions,
// one term per edge subset spanning a bag.
inline BreakdownResult linear_breakdown(const Digraph& X) {
    if (is_bag_of_sticks(X))
        throw std::invalid_argument("input already a bag of sticks");
    EdgePoset ep(X);
    int total_edges = static_cast<int>(ep.edges().size());
    BreakdownResult r;
    for (std::uint64_t mask : ep.min_elements()) {
        BreakdownTerm t;
        for (int i = 0; i < total_edges; ++i)
            if (mask >> i & 1) t.edges.push_back(ep.edges()[i]);
        t.type = stick_type(ep.subdigraph(mask));
        BigInt coeff = ep.xi(mask);
        if ((total_edges - static_cast<int>(t.edges.size())) % 2 != 0) coeff = -coeff;
        t.coeff = coeff;
        r.grouped[t.type] += t.coeff;
        r.terms.push_back(std::move(t));
    }
    std::erase_if(r.grouped, [](auto& kv) { return kv.second == 0; });
    return r;
}

// Sum of coeff * U_{P_{lambda}} over the breakdown, in the monomial basis.
inline SymElement reassemble_breakdown(const BreakdownResult& r, int n) {
    SymElement out = SymElement::zero(n, SymBasis::m);
    for (auto& [lam, coeff] : r.grouped) {
        auto u = redei_berge(bag_of_sticks(lam));
        for (auto& [key, c] : u.coeffs) out.add_term(key, c * Rational(coeff));
    }
    return out;
}

// Recursive oracle: W_X = sum over non-empty S inside a non-bag edge set F
// of (-1)^{|S|-1} W_{X \ S}, iterated until every leaf is a bag of sticks.
// Collects the leaf coefficients by stick type.
inline std::map<IntPartition, BigInt> breakdown_by_deletion(
    const Digraph& X,
    const std::optional<std::vector<std::pair<int, int>>>& F = std::nullopt) {
    if (is_bag_of_sticks(X)) {
        std::map<IntPartition, BigInt> leaf;
        leaf[stick_type(X)] = 1;
        return leaf;
    }
    std::vector<std::pair<int, int>> pool =
        F ? *F : std::vector<std::pair<int, int>>(X.arcs.begin(), X.arcs.end());
    {
        Digraph sub;
        sub.n = X.n;
        for (auto& e : pool) {
            if (!X.has_arc(e.first, e.second))
                throw std::invalid_argument("F must consist of edges of X");
            sub.add_arc(e.first, e.second);
        }
        if (is_bag_of_sticks(sub))
            throw std::invalid_argument("(V, F) must not be a bag of sticks");
    }
    int m = static_cast<int>(pool.size());
    std::map<IntPartition, BigInt> total;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        Digraph Y = X;
        int removed = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) Y.arcs.erase(pool[i]), ++removed;
        int sign = removed % 2 == 1 ? 1 : -1;
        for (auto& [lam, c] : breakdown_by_deletion(Y)) total[lam] += sign * c;
    }
    std::erase_if(total, [](auto& kv) { return kv.second == 0; });
    return total;
}

// [U_{P_lambda}] U_X as the signed xi-sum over minimal subsets of that type.
inline BigInt bag_coefficient(const Digraph& X, const IntPartition& lambda) {
    EdgePoset ep(X);
    int total_edges = static_cast<int>(ep.edges().size());
    BigInt sum = 0;
    for (std::uint64_t mask : ep.min_elements())
        if (stick_type(ep.subdigraph(mask)) == lambda) sum += ep.xi(mask);
    int exponent = total_edges + lambda.length() - X.n;
    return (exponent % 2 == 0) ? sum : -sum;
}

// Number of orderings of the parts of mu (equal parts counted as distinct
// positions) refining lambda read as a composition.
inline long long N_count(const IntPartition& lambda, const IntPartition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("partitions must have equal weight");
    Composition lam_comp(lambda.parts());
    long long count = 0;
    for (const auto& tau : all_permutations(mu.length())) {
        std::vector<int> arranged;
        for (int pos : tau) arranged.push_back(mu.parts()[pos - 1]);
        if (Composition(arranged).is_finer_than(lam_comp)) ++count;
    }
    return count;
}

// omega(U_{P_lambda}) = sum over mu of N(lambda, mu) m_mu.
inline SymElement omega_U_bag(const IntPartition& lambda) {
    int n = lambda.weight();
    SymElement r = SymElement::zero(n, SymBasis::m);
    for (const auto& mu : all_int_partitions(n)) {
        long long c = N_count(lambda, mu);
        if (c != 0) r.add_term(mu, Rational(c));
    }
    return r;
}

// n_mu(X): spanning bag-of-sticks subdigraphs counted by stick type.
inline std::map<IntPartition, long long> n_mu_counts(const Digraph& X) {
    if (!X.loopless()) throw std::invalid_argument("path counts need a loopless digraph");
    std::map<IntPartition, long long> out;
    for (const auto& cover : path_covers(X)) ++out[cover.type];
    return out;
}

// The x-part of the path-cycle symmetric function at y = 0:
// sum of n_mu(X) r_1!r_2!... m_mu.
inline SymElement path_cycle_x0(const Digraph& X) {
    SymElement r = SymElement::zero(X.n, SymBasis::m);
    for (auto& [mu, c] : n_mu_counts(X))
        r.add_term(mu, Rational(c) * Rational(mu.multiplicity_factorial()));
    return r;
}

// Cover polynomial C_X(m, n) as coefficients of powers of n; entry j is the
// polynomial in m multiplying n^j.
inline std::vector<UniPolynomial> cover_polynomial(const Digraph& X) {
    std::vector<UniPolynomial> out(X.n + 1);
    for (const auto& cover : path_cycle_covers(X)) {
        int j = cover.cycles.length();
        out[j] = out[j] + UniPolynomial::falling_factorial(cover.paths.length());
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

inline UniPolynomial cover_at_zero(const Digraph& X) {
    auto c = cover_polynomial(X);
    return c.empty() ? UniPolynomial::zero() : c[0];
}

// u_{P_lambda}(m) as the alternating rising-factorial sum.
inline UniPolynomial u_bag_closed_form(const IntPartition& lambda) {
    int n = lambda.weight(), l = lambda.length();
    UniPolynomial r;
    for (int i = l; i <= n; ++i) {
        UniPolynomial term = UniPolynomial::rising_factorial(i) *
                             Rational(binomial(n - l, i - l));
        r = ((n - i) % 2 == 0) ? r + term : r - term;
    }
    return r;
}

// --------------------------------------------------- generalized triple deletion

struct TripleDeletionVerdict {
    bool ok = true;                     // identity with S non-empty
    bool empty_variant_balances = false;  // whether including S = {} also holds
    NCSymElement lhs, rhs;
};

// For v covering u_1, ..., u_k (or covered by them), k >= 2:
// Y_{inc(P)} = sum over non-empty S inside {{u_i, v}} of
// (-1)^{|S|-1} Y_{inc(P) + S}; checked on the Y level, with the X level and
// (for k = 2) the classical three-term identity following by commutativity.
inline TripleDeletionVerdict generalized_triple_deletion(const Poset& P, int v,
                                                         const std::vector<int>& us) {
    if (us.size() < 2) throw std::invalid_argument("need at least two neighbors");
    bool covers_all = true, covered_all = true;
    for (int u : us) {
        if (!is_covering(P, {u, v})) covers_all = false;
        if (!is_covering(P, {v, u})) covered_all = false;
    }
    if (!covers_all && !covered_all)
        throw std::invalid_argument("v must cover all of u_1..u_k or be covered by all");

    Graph base = inc(P);
    int k = static_cast<int>(us.size());
    TripleDeletionVerdict verdict;
    verdict.lhs = Y_chromatic(base);
    NCSymElement sum = NCSymElement::zero(P.n(), NCBasis::m);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Graph G = base;
        int added = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) G.add_edge(us[i], v), ++added;
        auto term = Y_chromatic(G);
        sum = (added % 2 == 1) ? sum + term : sum - term;
    }
    verdict.rhs = sum;
    verdict.ok = verdict.lhs == verdict.rhs;
    // the S = {} variant adds -Y_{inc(P)} to the right-hand side
    verdict.empty_variant_balances = (verdict.lhs == sum - verdict.lhs);
    return verdict;
}

}  // namespace rbsym
