#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "germlab/poly/monomial.hpp"
#include "germlab/poly/polynomial.hpp"

// Reduction primitives on term lists sorted descending under an arbitrary
// monomial order. The public Polynomial keeps DegRevLex storage; these
// helpers work on private re-sorted copies.
namespace germlab::gb::detail {

using Terms = std::vector<Term>;

inline Terms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
    Terms t = p.terms();
    if (order.kind() != MonomialOrder::Kind::DegRevLex) {
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
    }
    return t;
}

inline Polynomial to_polynomial(const RingPtr& ring, Terms terms) { return Polynomial::from_terms(ring, std::move(terms)); }

inline int max_degree(const Terms& t) {
    int d = -1;
    for (const auto& term : t) d = std::max(d, term.mono.degree());
    return d;
}

// Degree spread of a nonzero term list whose head is the leading term.
inline int ecart(const Terms& t) { return max_degree(t) - t.front().mono.degree(); }

// h := h - c * m * g, all lists sorted under order.
inline void subtract_multiple(Terms& h, const Rational& c, const Monomial& m, const Terms& g,
                              const MonomialOrder& order) {
    Terms out;
    out.reserve(h.size() + g.size());
    auto i = h.begin();
    auto j = g.begin();
    while (i != h.end() || j != g.end()) {
        if (j == g.end()) {
            out.push_back(std::move(*i++));
            continue;
        }
        Monomial shifted = j->mono * m;
        if (i == h.end()) {
            out.push_back({shifted, -c * j->coef});
            ++j;
            continue;
        }
        auto cmp = order.compare(i->mono, shifted);
        if (cmp > 0) {
            out.push_back(std::move(*i++));
        } else if (cmp < 0) {
            out.push_back({shifted, -c * j->coef});
            ++j;
        } else {
            Rational v = i->coef - c * j->coef;
            if (v != 0) out.push_back({i->mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    h = std::move(out);
}

inline void make_monic(Terms& t) {
    if (t.empty() || t.front().coef == 1) return;
    Rational inv = 1 / t.front().coef;
    for (auto& term : t) term.coef *= inv;
}

// S-polynomial of two nonzero term lists.
inline Terms s_polynomial(const Terms& f, const Terms& g, const MonomialOrder& order) {
    const Monomial l = lcm(f.front().mono, g.front().mono);
    Terms s;
    const Monomial mf = l / f.front().mono;
    s.reserve(f.size());
    Rational inv_f = 1 / f.front().coef;
    for (const auto& t : f) s.push_back({t.mono * mf, t.coef * inv_f});
    subtract_multiple(s, 1 / g.front().coef, l / g.front().mono, g, order);
    return s;
}

// First basis element (by position) whose leading monomial divides m.
inline std::optional<std::size_t> find_reducer(const Monomial& m, std::span<const Terms* const> basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k]->front().mono.divides(m)) return k;
    }
    return std::nullopt;
}

// Full multivariate division remainder for a global order: no term of the
// result is divisible by a leading monomial of the basis.
inline Terms reduce_global(Terms h, std::span<const Terms* const> basis, const MonomialOrder& order) {
    std::size_t head = 0;
    // Terms before `head` are irreducible and already final.
    while (head < h.size()) {
        auto k = find_reducer(h[head].mono, basis);
        if (!k) {
            ++head;
            continue;
        }
        const Terms& g = *basis[*k];
        Rational c = h[head].coef / g.front().coef;
        Monomial m = h[head].mono / g.front().mono;
        Terms tail(std::make_move_iterator(h.begin() + static_cast<std::ptrdiff_t>(head)),
                   std::make_move_iterator(h.end()));
        h.resize(head);
        subtract_multiple(tail, c, m, g, order);
        h.insert(h.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
    }
    return h;
}

// Mora's weak normal form for a local order. Returns r with u*h = q + r for
// a unit u, q in the ideal of the basis, and the leading monomial of r (if
// r != 0) not divisible by any basis leading monomial. Among admissible
// reducers the one of minimal ecart is chosen, ties by position.
inline Terms reduce_mora(Terms h, std::span<const Terms* const> basis, const MonomialOrder& order) {
    std::deque<Terms> extra;  // intermediate h's adjoined to the reducer set; stable addresses
    while (!h.empty()) {
        const Monomial& lead = h.front().mono;
        const Terms* best = nullptr;
        int best_ecart = 0;
        auto consider = [&](const Terms& g) {
            if (!g.front().mono.divides(lead)) return;
            const int e = ecart(g);
            if (!best || e < best_ecart) {
                best = &g;
                best_ecart = e;
            }
        };
        for (const Terms* g : basis) consider(*g);
        for (const Terms& g : extra) consider(g);
        if (!best) break;
        if (best_ecart > ecart(h)) extra.push_back(h);
        Rational c = h.front().coef / best->front().coef;
        Monomial m = h.front().mono / best->front().mono;
        subtract_multiple(h, c, m, *best, order);
    }
    return h;
}

inline Terms reduce(Terms h, std::span<const Terms* const> basis, const MonomialOrder& order) {
    return order.is_local() ? reduce_mora(std::move(h), basis, order) : reduce_global(std::move(h), basis, order);
}

}  // namespace germlab::gb::detail
