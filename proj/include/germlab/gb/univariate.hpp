#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/poly/polynomial.hpp"
#include "germlab/poly/rational.hpp"

namespace germlab::univariate {

// Dense polynomial over Q, coefficient i of x^i, no trailing zeros.
using Dense = std::vector<Rational>;

inline void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

inline Dense from_polynomial(const Polynomial& p, std::size_t var) {
    Dense d;
    for (const auto& t : p.terms()) {
        if (t.mono.degree() != t.mono[var]) throw PreconditionError("polynomial is not univariate");
        const auto e = static_cast<std::size_t>(t.mono[var]);
        if (d.size() <= e) d.resize(e + 1, Rational(0));
        d[e] += t.coef;
    }
    trim(d);
    return d;
}

inline Polynomial to_polynomial(const Dense& d, const RingPtr& ring, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < d.size(); ++e) {
        if (d[e] != 0) terms.push_back({Monomial::variable(ring->arity(), var, static_cast<int>(e)), d[e]});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

inline Dense derivative(const Dense& p) {
    Dense d;
    for (std::size_t e = 1; e < p.size(); ++e) d.push_back(p[e] * static_cast<long>(e));
    trim(d);
    return d;
}

// (quotient, remainder)
inline std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
    if (b.empty()) throw PreconditionError("division by zero polynomial");
    Dense q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Dense monic(Dense p) {
    if (p.empty()) return p;
    Rational inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

inline Dense gcd(Dense a, Dense b) {
    while (!b.empty()) {
        Dense r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// p / gcd(p, p'), monic.
inline Dense squarefree_part(const Dense& p) {
    if (p.size() <= 1) return monic(p);
    return monic(divmod(p, gcd(p, derivative(p))).first);
}

inline Rational evaluate(const Dense& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

namespace detail {

// Best rational approximations of x (continued fraction convergents).
inline std::vector<Rational> convergents(long double x, std::size_t max_terms) {
    std::vector<Rational> out;
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    long double r = x;
    for (std::size_t i = 0; i < max_terms; ++i) {
        const long double fl = std::floor(r);
        if (std::fabs(fl) > 1e15L) break;
        Integer a = static_cast<long>(fl);
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        out.push_back(make_rational(h, k));
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const long double frac = r - fl;
        if (frac < 1e-18L) break;
        r = 1.0L / frac;
    }
    return out;
}

}  // namespace detail

// Complex roots by Durand-Kerner iteration in extended precision.
inline std::vector<std::complex<long double>> approximate_roots(const Dense& p) {
    using C = std::complex<long double>;
    const int n = degree(p);
    if (n < 1) return {};
    std::vector<C> coef;
    const long double lead = p.back().get_d();
    for (const auto& c : p) coef.push_back(C(c.get_d() / lead, 0));
    long double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(coef[static_cast<std::size_t>(i)]));
    bound += 1;
    std::vector<C> roots(static_cast<std::size_t>(n));
    const C seed(0.4L, 0.9L);
    C w(1, 0);
    for (auto& r : roots) {
        w *= seed;
        r = w * bound / std::abs(w);
    }
    auto eval = [&](const C& x) {
        C v(0, 0);
        for (std::size_t i = coef.size(); i-- > 0;) v = v * x + coef[i];
        return v;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            C denom(1, 0);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (j != i) denom *= roots[i] - roots[j];
            }
            if (std::abs(denom) == 0) denom = C(1e-30L, 0);
            C delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-30L) break;
    }
    return roots;
}

// Rational roots of p, each verified exactly. Candidates come from
// continued-fraction reconstruction of numerically computed real roots.
inline std::vector<Rational> rational_roots(const Dense& p) {
    std::vector<Rational> out;
    Dense sf = squarefree_part(p);
    if (degree(sf) < 1) return out;
    auto push_unique = [&](const Rational& r) {
        for (const auto& o : out) {
            if (o == r) return;
        }
        out.push_back(r);
    };
    if (sf[0] == 0) push_unique(Rational(0));
    if (degree(sf) == 1) {
        push_unique(Rational(-sf[0] / sf[1]));
        return out;
    }
    for (const auto& z : approximate_roots(sf)) {
        if (std::fabs(z.imag()) > 1e-6L * (1 + std::abs(z))) continue;
        const long double tolerance = 1e-9L * (1 + std::abs(z));
        for (const auto& candidate : detail::convergents(z.real(), 64)) {
            if (std::fabs(static_cast<long double>(candidate.get_d()) - z.real()) > tolerance) continue;
            if (evaluate(sf, candidate) == 0) {
                push_unique(candidate);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace germlab::univariate
