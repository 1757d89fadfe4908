#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbsym/enumerate.hpp"
#include "rbsym/matrix.hpp"
#include "rbsym/set_partition.hpp"
#include "rbsym/sym.hpp"

namespace rbsym {

enum class NCBasis { m, e, p, h };

inline std::string nc_basis_name(NCBasis b) {
    switch (b) {
        case NCBasis::m: return "m";
        case NCBasis::e: return "e";
        case NCBasis::p: return "p";
        case NCBasis::h: return "h";
    }
    return "?";
}

// Element of NCSym, homogeneous of one degree, sparse over set partitions
// of [degree]. The empty partition of [0] serves as the unit.
struct NCSymElement {
    int degree = 0;
    NCBasis basis = NCBasis::m;
    std::map<SetPartition, Rational> coeffs;

    static NCSymElement zero(int degree, NCBasis basis) { return {degree, basis, {}}; }

    static NCSymElement unit(int degree, NCBasis basis, const SetPartition& key,
                             const Rational& c = Rational(1)) {
        NCSymElement f{degree, basis, {}};
        f.add_term(key, c);
        return f;
    }

    static NCSymElement one() {
        return unit(0, NCBasis::m, SetPartition(0, {}));
    }

    void add_term(const SetPartition& key, const Rational& c) {
        if (key.n() != degree)
            throw std::invalid_argument("set-partition key must partition [degree]");
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            if (c != 0) coeffs.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Rational coeff(const SetPartition& key) const {
        auto it = coeffs.find(key);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    bool operator==(const NCSymElement& o) const {
        return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
    }
};

inline NCSymElement operator+(const NCSymElement& a, const NCSymElement& b) {
    if (a.degree != b.degree || a.basis != b.basis)
        throw std::invalid_argument("ncsym sum requires matching degree and basis");
    NCSymElement r = a;
    for (auto& [k, c] : b.coeffs) r.add_term(k, c);
    return r;
}

inline NCSymElement operator-(const NCSymElement& a, const NCSymElement& b) {
    if (a.degree != b.degree || a.basis != b.basis)
        throw std::invalid_argument("ncsym difference requires matching degree and basis");
    NCSymElement r = a;
    for (auto& [k, c] : b.coeffs) r.add_term(k, -c);
    return r;
}

inline NCSymElement operator*(const NCSymElement& a, const Rational& s) {
    NCSymElement r{a.degree, a.basis, {}};
    for (auto& [k, c] : a.coeffs) r.add_term(k, c * s);
    return r;
}

// Single-key expansions into the m basis.
//   p_pi = sum_{pi <= sigma} m_sigma
//   h_pi = sum_sigma (sigma meet pi)! m_sigma
//   e_pi = sum_{sigma meet pi = 0hat} m_sigma
inline std::map<SetPartition, Rational> ncsym_key_to_m(NCBasis basis, const SetPartition& pi) {
    std::map<SetPartition, Rational> out;
    int n = pi.n();
    if (basis == NCBasis::m) {
        out[pi] = 1;
        return out;
    }
    auto bottom = SetPartition::bottom(n);
    for (const auto& sigma : all_set_partitions(n)) {
        switch (basis) {
            case NCBasis::p:
                if (pi.leq(sigma)) out[sigma] = 1;
                break;
            case NCBasis::h:
                out[sigma] = Rational(sigma.meet(pi).block_factorial());
                break;
            case NCBasis::e:
                if (sigma.meet(pi) == bottom) out[sigma] = 1;
                break;
            default: break;
        }
    }
    return out;
}

inline NCSymElement ncsym_to_m(const NCSymElement& f) {
    if (f.basis == NCBasis::m) return f;
    NCSymElement r = NCSymElement::zero(f.degree, NCBasis::m);
    for (auto& [pi, c] : f.coeffs)
        for (auto& [sigma, cs] : ncsym_key_to_m(f.basis, pi)) r.add_term(sigma, c * cs);
    return r;
}

namespace detail {

// Cached per-degree inverse of the e -> m transition over Pi_n.
struct NCSymECache {
    struct Entry {
        std::vector<SetPartition> keys;
        RationalMatrix from_m;  // m coords -> e coords
    };

    const Entry& get(int degree) {
        std::scoped_lock lock(mu_);
        auto it = entries_.find(degree);
        if (it != entries_.end()) return it->second;
        auto keys = all_set_partitions(degree);
        int k = static_cast<int>(keys.size());
        std::map<SetPartition, int> index;
        for (int i = 0; i < k; ++i) index[keys[i]] = i;
        RationalMatrix to_m(k, k);
        for (int j = 0; j < k; ++j)
            for (auto& [sigma, c] : ncsym_key_to_m(NCBasis::e, keys[j]))
                to_m.at(index[sigma], j) = c;
        auto inv = to_m.inverse();
        if (!inv) throw std::logic_error("singular e->m transition on Pi_n");
        auto [pos, ok] = entries_.emplace(degree, Entry{std::move(keys), std::move(*inv)});
        return pos->second;
    }

    static NCSymECache& instance() {
        static NCSymECache c;
        return c;
    }

private:
    std::mutex mu_;
    std::map<int, Entry> entries_;
};

}  // namespace detail

// m -> p is Moebius inversion of p_pi = sum_{sigma >= pi} m_sigma:
//   m_pi = sum_{sigma >= pi} mu(pi, sigma) p_sigma.
// p <-> h go through the closed pair
//   p_pi = (1/|mu(0,pi)|) sum_{sigma <= pi} mu(sigma,pi) h_sigma
//   h_pi = sum_{sigma <= pi} |mu(0,sigma)| p_sigma.
inline NCSymElement m_to_ncsym_basis(const NCSymElement& f, NCBasis target) {
    if (f.basis != NCBasis::m)
        throw std::invalid_argument("m_to_ncsym_basis expects m-basis input");
    if (target == NCBasis::m) return f;
    int n = f.degree;
    if (target == NCBasis::e) {
        const auto& entry = detail::NCSymECache::instance().get(n);
        int k = static_cast<int>(entry.keys.size());
        NCSymElement r = NCSymElement::zero(n, NCBasis::e);
        for (int j = 0; j < k; ++j) {
            Rational acc = 0;
            for (int i = 0; i < k; ++i) {
                auto it = f.coeffs.find(entry.keys[i]);
                if (it != f.coeffs.end()) acc += entry.from_m.at(j, i) * it->second;
            }
            if (acc != 0) r.add_term(entry.keys[j], acc);
        }
        return r;
    }
    auto parts = all_set_partitions(n);
    NCSymElement in_p = NCSymElement::zero(n, NCBasis::p);
    for (auto& [pi, c] : f.coeffs)
        for (const auto& sigma : parts)
            if (pi.leq(sigma)) in_p.add_term(sigma, c * Rational(mobius(pi, sigma)));
    if (target == NCBasis::p) return in_p;
    // p -> h
    NCSymElement in_h = NCSymElement::zero(n, NCBasis::h);
    for (auto& [pi, c] : in_p.coeffs) {
        Rational scale(1, mobius_zero_abs(pi));
        for (const auto& sigma : parts)
            if (sigma.leq(pi)) in_h.add_term(sigma, c * scale * Rational(mobius(sigma, pi)));
    }
    return in_h;
}

inline NCSymElement ncsym_convert(const NCSymElement& f, NCBasis target) {
    if (f.basis == target) return f;
    if (f.basis == NCBasis::h && target == NCBasis::p) {
        // direct h -> p
        auto parts = all_set_partitions(f.degree);
        NCSymElement r = NCSymElement::zero(f.degree, NCBasis::p);
        for (auto& [pi, c] : f.coeffs)
            for (const auto& sigma : parts)
                if (sigma.leq(pi)) r.add_term(sigma, c * Rational(mobius_zero_abs(sigma)));
        return r;
    }
    return m_to_ncsym_basis(ncsym_to_m(f), target);
}

// omega(p_pi) = (-1)^{n - l(pi)} p_pi, executed in the p basis.
inline NCSymElement omega_ncsym(const NCSymElement& f) {
    NCSymElement in_p = ncsym_convert(f, NCBasis::p);
    NCSymElement r = NCSymElement::zero(f.degree, NCBasis::p);
    for (auto& [pi, c] : in_p.coeffs) {
        int sign = (f.degree - pi.num_blocks()) % 2 == 0 ? 1 : -1;
        r.add_term(pi, c * sign);
    }
    return ncsym_convert(r, f.basis);
}

// Induction: key map pi -> pi+(n+1) on the m and p bases; other bases
// route through p.
inline NCSymElement induct(const NCSymElement& f) {
    if (f.degree < 1) throw std::invalid_argument("induct requires degree >= 1");
    if (f.basis == NCBasis::m || f.basis == NCBasis::p) {
        NCSymElement r = NCSymElement::zero(f.degree + 1, f.basis);
        for (auto& [pi, c] : f.coeffs) r.add_term(pi.plus(), c);
        return r;
    }
    return ncsym_convert(induct(ncsym_convert(f, NCBasis::p)), f.basis);
}

// Commutativization rho: NCSym -> Sym, basis-natively.
inline SymElement rho(const NCSymElement& f) {
    SymBasis target;
    switch (f.basis) {
        case NCBasis::m: target = SymBasis::m; break;
        case NCBasis::e: target = SymBasis::e; break;
        case NCBasis::p: target = SymBasis::p; break;
        case NCBasis::h: target = SymBasis::h; break;
        default: throw std::logic_error("unreachable");
    }
    SymElement r = SymElement::zero(f.degree, target);
    for (auto& [pi, c] : f.coeffs) {
        Rational factor(1);
        switch (f.basis) {
            case NCBasis::m: factor = Rational(pi.type_multiplicity()); break;
            case NCBasis::e:
            case NCBasis::h: factor = Rational(pi.block_factorial()); break;
            case NCBasis::p: factor = 1; break;
        }
        r.add_term(pi.type(), c * factor);
    }
    return r;
}

// Position action of S_n: on the m basis, relabel every key by delta.
inline NCSymElement sn_action(const std::vector<int>& delta, const NCSymElement& f) {
    if (static_cast<int>(delta.size()) != f.degree)
        throw std::invalid_argument("permutation must act on [degree]");
    NCSymElement fm = ncsym_to_m(f);
    NCSymElement r = NCSymElement::zero(f.degree, NCBasis::m);
    for (auto& [pi, c] : fm.coeffs) r.add_term(pi.relabel(delta), c);
    return m_to_ncsym_basis(r, f.basis);
}

// m_pi . m_sigma = sum of m_tau over tau restricting to pi on the first
// block of positions and to (shifted) sigma on the second.
inline NCSymElement ncsym_multiply(const NCSymElement& f, const NCSymElement& g) {
    NCSymElement fm = ncsym_to_m(f), gm = ncsym_to_m(g);
    int a = f.degree, b = g.degree, n = a + b;
    NCSymElement r = NCSymElement::zero(n, NCBasis::m);
    if (fm.coeffs.empty() || gm.coeffs.empty()) return r;
    for (const auto& tau : all_set_partitions(n)) {
        auto left = tau.restrict_range(1, a);
        auto right = tau.restrict_range(a + 1, n);
        auto it = fm.coeffs.find(left);
        if (it == fm.coeffs.end()) continue;
        auto jt = gm.coeffs.find(right);
        if (jt == gm.coeffs.end()) continue;
        r.add_term(tau, it->second * jt->second);
    }
    return r;
}

// Congruence mod i: classes keyed by (lambda(tau), |B_{tau,i}|).
inline std::map<std::pair<IntPartition, int>, Rational> congruence_collapse(
    const NCSymElement& f, int i) {
    if (i < 1 || i > f.degree) throw std::invalid_argument("position outside [degree]");
    NCSymElement in_h = ncsym_convert(f, NCBasis::h);
    std::map<std::pair<IntPartition, int>, Rational> out;
    for (auto& [tau, c] : in_h.coeffs)
        out[{tau.type(), static_cast<int>(tau.block_of(i).size())}] += c;
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

struct InductionVerdict {
    bool ok = true;
    std::string violation;  // empty when ok
};

// Checks the grouped-coefficient description of h_pi up-arrow: support inside
// {tau <= pi+(n+1)}, and for every composition alpha of n+1 the sum of
// coefficients over P(alpha) is -1/|B|, +1/|B| or 0, where B is the block of n.
// P(alpha) collects tau <= pi+(n+1) whose block of n+1 has size alpha_1 and
// whose remaining block sizes form the multiset {alpha_2, ..., alpha_l}.
inline InductionVerdict check_induction_theorem(const SetPartition& pi) {
    int n = pi.n();
    auto lifted = induct(NCSymElement::unit(n, NCBasis::h, pi));
    auto pi_plus = pi.plus();
    auto pi_slash = pi.slash();
    Rational inv_b(1, BigInt(pi.block_of(n).size()));

    for (auto& [tau, c] : lifted.coeffs)
        if (!tau.leq(pi_plus))
            return {false, "support outside the interval below " + pi_plus.to_string() +
                               " at " + tau.to_string()};

    for (const auto& alpha : all_compositions(n + 1)) {
        const auto& parts = alpha.parts();
        std::vector<int> rest(parts.begin() + 1, parts.end());
        std::sort(rest.begin(), rest.end());
        std::vector<SetPartition> cls;
        for (const auto& tau : all_set_partitions(n + 1)) {
            if (!tau.leq(pi_plus)) continue;
            if (static_cast<int>(tau.block_of(n + 1).size()) != parts[0]) continue;
            std::vector<int> sizes;
            int own = tau.block_index_of(n + 1);
            for (int bi = 0; bi < tau.num_blocks(); ++bi)
                if (bi != own) sizes.push_back(static_cast<int>(tau.blocks()[bi].size()));
            std::sort(sizes.begin(), sizes.end());
            if (sizes == rest) cls.push_back(tau);
        }
        Rational total = 0;
        for (const auto& tau : cls) total += lifted.coeff(tau);
        Rational expected = 0;
        if (cls.size() == 1 && cls[0] == pi_slash)
            expected = -inv_b;
        else if (cls.size() == 1 && cls[0] == pi_plus)
            expected = inv_b;
        if (total != expected)
            return {false, "grouped sum mismatch for pi=" + pi.to_string() +
                               " alpha=" + alpha.to_string()};
    }
    return {};
}

inline std::string ncsym_to_display(const NCSymElement& f) {
    if (f.coeffs.empty()) return "0";
    std::string s;
    for (auto& [k, c] : f.coeffs) {
        if (!s.empty()) s += " + ";
        s += rational_to_string(c) + "*" + nc_basis_name(f.basis) + "[" + k.to_string() + "]";
    }
    return s;
}

}  // namespace rbsym
