#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rbsym/partitions.hpp"
#include "rbsym/rational.hpp"
#include "rbsym/unipoly.hpp"

namespace rbsym {

enum class QSymBasis { M, F };

inline std::string qsym_basis_name(QSymBasis b) { return b == QSymBasis::M ? "M" : "F"; }

// Homogeneous quasisymmetric element of one degree n. Keys are subsets of
// [n-1] stored as masks (bit i-1 = element i); composition keys go through
// Composition::to_subset.
struct QSymElement {
    int degree = 0;
    QSymBasis basis = QSymBasis::M;
    std::map<unsigned, Rational> coeffs;

    static QSymElement zero(int degree, QSymBasis basis) { return {degree, basis, {}}; }

    static QSymElement unit(int degree, QSymBasis basis, unsigned mask,
                            const Rational& c = Rational(1)) {
        QSymElement f{degree, basis, {}};
        f.add_term(mask, c);
        return f;
    }

    PositionSubset key_subset(unsigned mask) const { return PositionSubset(degree, mask); }

    void add_term(unsigned mask, const Rational& c) {
        if (degree >= 2 && (mask >> (degree - 1)) != 0)
            throw std::invalid_argument("key outside [n-1]");
        if (degree < 2 && mask != 0) throw std::invalid_argument("key outside [n-1]");
        auto it = coeffs.find(mask);
        if (it == coeffs.end()) {
            if (c != 0) coeffs.emplace(mask, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Rational coeff(unsigned mask) const {
        auto it = coeffs.find(mask);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    bool operator==(const QSymElement& o) const {
        return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
    }
};

inline QSymElement operator+(const QSymElement& a, const QSymElement& b) {
    if (a.degree != b.degree || a.basis != b.basis)
        throw std::invalid_argument("qsym sum requires matching degree and basis");
    QSymElement r = a;
    for (auto& [k, c] : b.coeffs) r.add_term(k, c);
    return r;
}

inline QSymElement operator-(const QSymElement& a, const QSymElement& b) {
    if (a.degree != b.degree || a.basis != b.basis)
        throw std::invalid_argument("qsym difference requires matching degree and basis");
    QSymElement r = a;
    for (auto& [k, c] : b.coeffs) r.add_term(k, -c);
    return r;
}

inline QSymElement operator*(const QSymElement& a, const Rational& s) {
    QSymElement r{a.degree, a.basis, {}};
    for (auto& [k, c] : a.coeffs) r.add_term(k, c * s);
    return r;
}

// F_I = sum_{I subseteq J} M_J and its Moebius inverse.
inline QSymElement qsym_convert(const QSymElement& f, QSymBasis target) {
    if (f.basis == target) return f;
    unsigned full = (f.degree >= 2) ? ((1u << (f.degree - 1)) - 1) : 0u;
    QSymElement r = QSymElement::zero(f.degree, target);
    for (auto& [I, c] : f.coeffs) {
        // iterate supersets J of I
        unsigned rest = full & ~I;
        unsigned sub = 0;
        while (true) {
            unsigned J = I | sub;
            if (f.basis == QSymBasis::F) {
                r.add_term(J, c);  // F_I = sum M_J
            } else {
                int extra = __builtin_popcount(sub);
                r.add_term(J, (extra % 2 == 0) ? c : -c);  // M_I = sum (-1)^{|J\I|} F_J
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
    }
    return r;
}

// omega(F_I) = F_{I^c}
inline QSymElement omega_qsym(const QSymElement& f) {
    QSymElement g = qsym_convert(f, QSymBasis::F);
    unsigned full = (f.degree >= 2) ? ((1u << (f.degree - 1)) - 1) : 0u;
    QSymElement r = QSymElement::zero(f.degree, QSymBasis::F);
    for (auto& [I, c] : g.coeffs) r.add_term(full & ~I, c);
    return qsym_convert(r, f.basis);
}

// binomial(m + shift, k) as a polynomial in m
inline UniPolynomial binomial_poly_shifted(int shift, int k) {
    UniPolynomial p = UniPolynomial::constant(1);
    for (int j = 0; j < k; ++j) p = p * UniPolynomial({Rational(shift - j), 1});
    return p * Rational(1, factorial(k));
}

// ps1(M_alpha) = binomial(m, l(alpha)); ps1(F_I) = binomial(m + n - 1 - |I|, n).
inline UniPolynomial principal_specialization(const QSymElement& f) {
    UniPolynomial out;
    if (f.basis == QSymBasis::M) {
        for (auto& [I, c] : f.coeffs) {
            int k = __builtin_popcount(I) + 1;
            out = out + UniPolynomial::binomial_poly(k) * c;
        }
    } else {
        for (auto& [I, c] : f.coeffs) {
            int s = f.degree - 1 - __builtin_popcount(I);
            out = out + binomial_poly_shifted(s, f.degree) * c;
        }
    }
    return out;
}

}  // namespace rbsym
