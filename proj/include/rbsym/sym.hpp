#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbsym/enumerate.hpp"
#include "rbsym/matrix.hpp"
#include "rbsym/partitions.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/rational.hpp"
#include "rbsym/unipoly.hpp"

namespace rbsym {

enum class SymBasis { m, e, p, h, s };

inline std::string sym_basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::m: return "m";
        case SymBasis::e: return "e";
        case SymBasis::p: return "p";
        case SymBasis::h: return "h";
        case SymBasis::s: return "s";
    }
    return "?";
}

inline std::optional<SymBasis> sym_basis_from_name(const std::string& s) {
    if (s == "m") return SymBasis::m;
    if (s == "e") return SymBasis::e;
    if (s == "p") return SymBasis::p;
    if (s == "h") return SymBasis::h;
    if (s == "s") return SymBasis::s;
    return std::nullopt;
}

// Homogeneous symmetric element of one degree, sparse over partition keys.
struct SymElement {
    int degree = 0;
    SymBasis basis = SymBasis::m;
    std::map<IntPartition, Rational> coeffs;

    static SymElement zero(int degree, SymBasis basis) { return {degree, basis, {}}; }

    static SymElement unit(int degree, SymBasis basis, const IntPartition& key,
                           const Rational& c = Rational(1)) {
        SymElement f{degree, basis, {}};
        f.add_term(key, c);
        return f;
    }

    void add_term(const IntPartition& key, const Rational& c) {
        if (key.weight() != degree)
            throw std::invalid_argument("partition key must have weight = degree");
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            if (c != 0) coeffs.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Rational coeff(const IntPartition& key) const {
        auto it = coeffs.find(key);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    bool operator==(const SymElement& o) const {
        return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
    }
};

inline SymElement operator+(const SymElement& a, const SymElement& b) {
    if (a.degree != b.degree || a.basis != b.basis)
        throw std::invalid_argument("sym sum requires matching degree and basis");
    SymElement r = a;
    for (auto& [k, c] : b.coeffs) r.add_term(k, c);
    return r;
}

inline SymElement operator-(const SymElement& a, const SymElement& b) {
    if (a.degree != b.degree || a.basis != b.basis)
        throw std::invalid_argument("sym difference requires matching degree and basis");
    SymElement r = a;
    for (auto& [k, c] : b.coeffs) r.add_term(k, -c);
    return r;
}

inline SymElement operator*(const SymElement& a, const Rational& s) {
    SymElement r{a.degree, a.basis, {}};
    for (auto& [k, c] : a.coeffs) r.add_term(k, c * s);
    return r;
}

namespace detail {

// Truncated formal power series: exponent vector (fixed nvars) -> coefficient.
using ExpPoly = std::map<std::vector<int>, Rational>;

inline ExpPoly poly_mul(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    return r;
}

// m_lambda truncated to v variables: all distinct arrangements of lambda padded with zeros.
inline ExpPoly expand_m(const IntPartition& lambda, int v) {
    ExpPoly r;
    std::vector<int> e(v, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.parts()[i];
    std::sort(e.begin(), e.end());
    do {
        r[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

inline ExpPoly expand_e_part(int k, int v) {
    ExpPoly r;
    std::vector<int> e(v, 0);
    for (int i = 0; i < k; ++i) e[i] = 1;
    std::sort(e.begin(), e.end());
    do {
        r[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

inline ExpPoly expand_p_part(int k, int v) {
    ExpPoly r;
    for (int i = 0; i < v; ++i) {
        std::vector<int> e(v, 0);
        e[i] = k;
        r[e] = 1;
    }
    return r;
}

inline ExpPoly expand_h_part(int k, int v) {
    // all monomials of degree k in v variables
    ExpPoly r;
    std::vector<int> e(v, 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == v - 1) {
            e[idx] = rem;
            r[e] = 1;
            return;
        }
        for (int t = 0; t <= rem; ++t) {
            e[idx] = t;
            rec(idx + 1, rem - t);
        }
    };
    if (v == 0) {
        if (k == 0) r[{}] = 1;
        return r;
    }
    rec(0, k);
    return r;
}

// Extract [m_mu] from a symmetric polynomial of degree n in v >= n variables.
inline std::map<IntPartition, Rational> extract_m(const ExpPoly& p, int /*n*/) {
    std::map<IntPartition, Rational> out;
    for (auto& [e, c] : p) {
        bool canonical = true;
        for (size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) {
                canonical = false;
                break;
            }
        if (!canonical) continue;
        std::vector<int> parts;
        for (int x : e)
            if (x > 0) parts.push_back(x);
        out[IntPartition(std::move(parts))] += c;
    }
    return out;
}

}  // namespace detail

// Expansion of a single basis element into the m basis. Declared here,
// defined below sym_to_m (the s case recurses through h).
inline std::map<IntPartition, Rational> sym_key_to_m(SymBasis basis, const IntPartition& lambda);

inline SymElement sym_to_m(const SymElement& f) {
    if (f.basis == SymBasis::m) return f;
    SymElement r = SymElement::zero(f.degree, SymBasis::m);
    for (auto& [lambda, c] : f.coeffs)
        for (auto& [mu, cm] : sym_key_to_m(f.basis, lambda)) r.add_term(mu, c * cm);
    return r;
}

inline std::map<IntPartition, Rational> sym_key_to_m(SymBasis basis, const IntPartition& lambda) {
    int n = lambda.weight();
    if (basis == SymBasis::m) return {{lambda, Rational(1)}};
    if (basis == SymBasis::s) {
        // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded over permutations.
        int k = lambda.length();
        std::map<IntPartition, Rational> hexp;  // s_lambda in the h basis
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> rows;
            bool zero = false;
            int inversions = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            for (int i = 0; i < k; ++i) {
                int a = lambda.parts()[i] - i + perm[i];
                if (a < 0) {
                    zero = true;
                    break;
                }
                if (a > 0) rows.push_back(a);
            }
            if (!zero)
                hexp[IntPartition(rows)] += (inversions % 2 == 0) ? Rational(1) : Rational(-1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::map<IntPartition, Rational> out;
        for (auto& [hl, c] : hexp) {
            if (c == 0) continue;
            for (auto& [mu, cm] : sym_key_to_m(SymBasis::h, hl)) out[mu] += c * cm;
        }
        std::erase_if(out, [](auto& kv) { return kv.second == 0; });
        return out;
    }
    // e, p, h: product of one-part expansions in n variables.
    detail::ExpPoly poly = {{std::vector<int>(n, 0), Rational(1)}};
    for (int part : lambda.parts()) {
        detail::ExpPoly factor;
        switch (basis) {
            case SymBasis::e: factor = detail::expand_e_part(part, n); break;
            case SymBasis::p: factor = detail::expand_p_part(part, n); break;
            case SymBasis::h: factor = detail::expand_h_part(part, n); break;
            default: throw std::logic_error("unreachable");
        }
        poly = detail::poly_mul(poly, factor);
    }
    return detail::extract_m(poly, n);
}

namespace detail {

struct SymTransitionCache {
    // (degree, basis) -> (key order, matrix taking target-basis coords to m coords, inverse)
    struct Entry {
        std::vector<IntPartition> keys;
        RationalMatrix to_m;
        RationalMatrix from_m;
    };

    const Entry& get(int degree, SymBasis basis) {
        std::scoped_lock lock(mu_);
        auto key = std::pair<int, int>(degree, static_cast<int>(basis));
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
        auto keys = all_int_partitions(degree);
        int k = static_cast<int>(keys.size());
        RationalMatrix to_m(k, k);
        for (int j = 0; j < k; ++j) {
            auto exp = sym_key_to_m(basis, keys[j]);
            for (int i = 0; i < k; ++i) {
                auto fit = exp.find(keys[i]);
                if (fit != exp.end()) to_m.at(i, j) = fit->second;
            }
        }
        auto inv = to_m.inverse();
        if (!inv) throw std::logic_error("singular transition matrix: basis is not a basis");
        auto [pos, ok] =
            entries_.emplace(key, Entry{std::move(keys), std::move(to_m), std::move(*inv)});
        return pos->second;
    }

    static SymTransitionCache& instance() {
        static SymTransitionCache c;
        return c;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, Entry> entries_;
};

}  // namespace detail

inline SymElement m_to_basis(const SymElement& f, SymBasis target) {
    if (f.basis != SymBasis::m) throw std::invalid_argument("m_to_basis expects m-basis input");
    if (target == SymBasis::m) return f;
    const auto& entry = detail::SymTransitionCache::instance().get(f.degree, target);
    int k = static_cast<int>(entry.keys.size());
    SymElement r = SymElement::zero(f.degree, target);
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

inline SymElement sym_convert(const SymElement& f, SymBasis target) {
    if (f.basis == target) return f;
    return m_to_basis(sym_to_m(f), target);
}

// omega: e <-> h key-preserving swap, sign rule on p, conjugation on s,
// and through p for the m basis.
inline SymElement omega_sym(const SymElement& f) {
    switch (f.basis) {
        case SymBasis::e: {
            SymElement r = f;
            r.basis = SymBasis::h;
            return r;
        }
        case SymBasis::h: {
            SymElement r = f;
            r.basis = SymBasis::e;
            return r;
        }
        case SymBasis::p: {
            SymElement r = SymElement::zero(f.degree, SymBasis::p);
            for (auto& [k, c] : f.coeffs) {
                int sign = (k.weight() - k.length()) % 2 == 0 ? 1 : -1;
                r.add_term(k, c * sign);
            }
            return r;
        }
        case SymBasis::s: {
            SymElement r = SymElement::zero(f.degree, SymBasis::s);
            for (auto& [k, c] : f.coeffs) r.add_term(k.conjugate(), c);
            return r;
        }
        case SymBasis::m:
            return sym_to_m(omega_sym(sym_convert(f, SymBasis::p)));
    }
    throw std::logic_error("unreachable");
}

// Product via truncated expansion in deg(f)+deg(g) variables, which is
// faithful for symmetric functions of that total degree.
inline SymElement sym_multiply(const SymElement& f, const SymElement& g) {
    SymElement fm = sym_to_m(f), gm = sym_to_m(g);
    int v = f.degree + g.degree;
    auto expand = [&](const SymElement& x) {
        detail::ExpPoly p;
        for (auto& [lambda, c] : x.coeffs)
            for (auto& [e, ce] : detail::expand_m(lambda, v)) p[e] += c * ce;
        return p;
    };
    if (fm.coeffs.empty() || gm.coeffs.empty()) return SymElement::zero(v, SymBasis::m);
    auto prod = detail::poly_mul(expand(fm), expand(gm));
    SymElement r = SymElement::zero(v, SymBasis::m);
    for (auto& [mu, c] : detail::extract_m(prod, v))
        if (c != 0) r.add_term(mu, c);
    return r;
}

// Same truncation idea for QSym: M_alpha in v variables places alpha on a
// strictly increasing choice of positions.
inline QSymElement qsym_multiply(const QSymElement& f, const QSymElement& g) {
    QSymElement fm = qsym_convert(f, QSymBasis::M), gm = qsym_convert(g, QSymBasis::M);
    int v = f.degree + g.degree;
    auto expand = [&](const QSymElement& x) {
        detail::ExpPoly p;
        for (auto& [mask, c] : x.coeffs) {
            std::vector<int> alpha;
            if (x.degree > 0)
                alpha = Composition::from_subset(PositionSubset(x.degree, mask)).parts();
            int k = static_cast<int>(alpha.size());
            std::vector<int> pos(k);
            std::function<void(int, int)> rec = [&](int idx, int lo) {
                if (idx == k) {
                    std::vector<int> e(v, 0);
                    for (int i = 0; i < k; ++i) e[pos[i]] = alpha[i];
                    p[e] += c;
                    return;
                }
                for (int q = lo; q < v - (k - idx - 1); ++q) {
                    pos[idx] = q;
                    rec(idx + 1, q + 1);
                }
            };
            if (k == 0)
                p[std::vector<int>(v, 0)] += c;
            else
                rec(0, 0);
        }
        return p;
    };
    if (fm.coeffs.empty() || gm.coeffs.empty()) return QSymElement::zero(v, QSymBasis::M);
    auto prod = detail::poly_mul(expand(fm), expand(gm));
    QSymElement r = QSymElement::zero(v, QSymBasis::M);
    for (auto& [e, c] : prod) {
        if (c == 0) continue;
        // [M_alpha] = coefficient of the monomial with alpha packed at the front
        std::vector<int> parts;
        bool packed = true, seen_zero = false;
        for (int x : e) {
            if (x == 0) {
                seen_zero = true;
            } else {
                if (seen_zero) {
                    packed = false;
                    break;
                }
                parts.push_back(x);
            }
        }
        if (!packed) continue;
        r.add_term(parts.empty() ? 0u : Composition(parts).to_subset().mask(), c);
    }
    return r;
}

// m_lambda = sum of M_alpha over distinct rearrangements alpha of lambda.
inline QSymElement embed_sym_in_qsym(const SymElement& f) {
    SymElement fm = sym_to_m(f);
    QSymElement r = QSymElement::zero(f.degree, QSymBasis::M);
    for (auto& [lambda, c] : fm.coeffs) {
        std::vector<int> parts = lambda.parts();
        std::sort(parts.begin(), parts.end());
        do {
            r.add_term(Composition(parts).to_subset().mask(), c);
        } while (std::next_permutation(parts.begin(), parts.end()));
    }
    return r;
}

struct NotSymmetricError : std::runtime_error {
    Composition first, second;
    NotSymmetricError(Composition a, Composition b)
        : std::runtime_error("not symmetric: coefficients of " + a.to_string() + " and " +
                             b.to_string() + " differ"),
          first(std::move(a)),
          second(std::move(b)) {}
};

// Inverse of the embedding; rejects input whose M-coefficients are not
// constant on rearrangement classes.
inline SymElement project_qsym_to_sym(const QSymElement& f) {
    QSymElement fm = qsym_convert(f, QSymBasis::M);
    SymElement r = SymElement::zero(f.degree, SymBasis::m);
    std::map<IntPartition, std::pair<Composition, Rational>> rep;
    auto coeff_of = [&](const Composition& alpha) { return fm.coeff(alpha.to_subset().mask()); };
    for (const auto& alpha : all_compositions(f.degree)) {
        Rational c = coeff_of(alpha);
        IntPartition lam = alpha.sorted();
        auto it = rep.find(lam);
        if (it == rep.end()) {
            rep.emplace(lam, std::pair(alpha, c));
            if (c != 0) r.add_term(lam, c);
        } else if (it->second.second != c) {
            throw NotSymmetricError(it->second.first, alpha);
        }
    }
    return r;
}

inline UniPolynomial principal_specialization(const SymElement& f) {
    return principal_specialization(embed_sym_in_qsym(f));
}

struct PositivityVerdict {
    bool positive = true;
    std::optional<IntPartition> certificate;  // lexicographically-first negative key
    Rational coefficient;                     // its coefficient
};

inline PositivityVerdict positivity(const SymElement& f, SymBasis basis) {
    SymElement g = sym_convert(f, basis);
    for (auto& [k, c] : g.coeffs)
        if (c < 0) return {false, k, c};
    return {};
}

inline std::string sym_to_display(const SymElement& f) {
    if (f.coeffs.empty()) return "0";
    std::string s;
    for (auto& [k, c] : f.coeffs) {
        if (!s.empty()) s += " + ";
        s += rational_to_string(c) + "*" + sym_basis_name(f.basis) + "[" + k.to_string() + "]";
    }
    return s;
}

}  // namespace rbsym
