#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/poly/polynomial.hpp"

namespace germlab {

namespace gb::detail {

inline std::string fresh_name(const PolyRing& ring, std::string base) {
    while (ring.index_of(base)) base += "_";
    return base;
}

// Ring with one extra variable appended, and the embedding of `ring` into it.
inline RingPtr extend_ring(const RingPtr& ring, const std::string& base) {
    auto names = ring->names();
    names.push_back(fresh_name(*ring, base));
    return make_ring(std::move(names));
}

inline Polynomial embed(const Polynomial& p, const RingPtr& target) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target->arity());
        for (std::size_t i = 0; i < t.mono.arity(); ++i) m.set(i, t.mono[i]);
        terms.push_back({m, t.coef});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

// Re-expresses p over `target`, where variable i of p's ring becomes variable
// placement[i] of target.
inline Polynomial permute(const Polynomial& p, const RingPtr& target, const std::vector<std::size_t>& placement) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target->arity());
        for (std::size_t i = 0; i < t.mono.arity(); ++i) {
            if (t.mono[i] != 0) m.set(placement[i], t.mono[i]);
        }
        terms.push_back({m, t.coef});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace gb::detail

// Elimination ideal I ∩ k[remaining variables], via the block order with the
// eliminated variables in the front block. The result lives in the ring of
// the remaining variables (original relative order).
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& front, const Limits& limits = {}) {
    const RingPtr& ring = ideal.ring();
    const std::size_t n = ring->arity();
    if (front.empty()) return ideal;
    std::vector<bool> is_front(n, false);
    for (std::size_t v : front) {
        if (v >= n) throw PreconditionError("elimination variable out of range");
        is_front[v] = true;
    }
    std::vector<std::size_t> order_vars;
    std::vector<std::string> back_names;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_front[i]) order_vars.push_back(i);
    }
    const std::size_t k = order_vars.size();
    if (k == n) throw PreconditionError("cannot eliminate every variable of the ring");
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_front[i]) {
            order_vars.push_back(i);
            back_names.push_back(ring->name(i));
        }
    }
    std::vector<std::string> permuted_names;
    std::vector<std::size_t> placement(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        permuted_names.push_back(ring->name(order_vars[pos]));
        placement[order_vars[pos]] = pos;
    }
    RingPtr permuted = make_ring(permuted_names);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(gb::detail::permute(g, permuted, placement));
    Ideal work(permuted, std::move(gens));
    const auto& basis = work.basis(MonomialOrder::block(k), limits);

    RingPtr smaller = make_ring(back_names);
    std::vector<std::size_t> back_placement(n, 0);
    for (std::size_t pos = k; pos < n; ++pos) back_placement[pos] = pos - k;
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis->basis.size(); ++i) {
        if (basis->leading[i].degree_in(0, k) != 0) continue;
        out.push_back(gb::detail::permute(basis->basis[i], smaller, back_placement));
    }
    return Ideal(smaller, std::move(out));
}

inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& front_names, const Limits& limits = {}) {
    std::vector<std::size_t> idx;
    for (const auto& name : front_names) {
        auto i = ideal.ring()->index_of(name);
        if (!i) throw PreconditionError("unknown variable '" + name + "'");
        idx.push_back(*i);
    }
    return eliminate(ideal, idx, limits);
}

// p vanishes on the zero set of I iff 1 ∈ I + (1 - z*p) for a fresh z.
inline bool radical_membership(const Polynomial& p, const Ideal& ideal, const Limits& limits = {}) {
    if (!same_ring(p.ring(), ideal.ring())) throw PreconditionError("polynomial and ideal live in different rings");
    if (p.is_zero()) return true;
    RingPtr extended = gb::detail::extend_ring(ideal.ring(), "z");
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(gb::detail::embed(g, extended));
    const Polynomial z = Polynomial::variable(extended, extended->arity() - 1);
    gens.push_back(Polynomial::constant(extended, Rational(1)) - z * gb::detail::embed(p, extended));
    return Ideal(extended, std::move(gens)).is_unit(limits);
}

// Same zero set: each generator of one lies in the radical of the other.
inline bool radical_equal(const Ideal& a, const Ideal& b, const Limits& limits = {}) {
    Ideal bb = b.rehome(a.ring());
    for (const auto& g : a.generators()) {
        if (!radical_membership(g, bb, limits)) return false;
    }
    for (const auto& g : bb.generators()) {
        if (!radical_membership(g, a, limits)) return false;
    }
    return true;
}

// I ∩ J = (t*I + (1-t)*J) ∩ k[x].
inline Ideal intersect_ideals(const Ideal& a, const Ideal& b, const Limits& limits = {}) {
    if (!same_ring(a.ring(), b.ring())) throw PreconditionError("ideals live in different rings");
    RingPtr extended = gb::detail::extend_ring(a.ring(), "t");
    const std::size_t t_index = extended->arity() - 1;
    const Polynomial t = Polynomial::variable(extended, t_index);
    const Polynomial one_minus_t = Polynomial::constant(extended, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(t * gb::detail::embed(g, extended));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * gb::detail::embed(g, extended));
    Ideal result = eliminate(Ideal(extended, std::move(gens)), std::vector<std::size_t>{t_index}, limits);
    return result.rehome(a.ring());
}

// Monic greatest common divisor via gcd(a, b) = a*b / lcm(a, b), the lcm
// generating (a) ∩ (b).
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b, const Limits& limits = {}) {
    Polynomial::require_same_ring(a, b);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), Rational(1));
    Ideal meet = intersect_ideals(Ideal(a.ring(), {a}), Ideal(a.ring(), {b}), limits);
    const auto meet_basis = meet.basis(MonomialOrder::deg_rev_lex(), limits);
    const auto& basis = meet_basis->basis;
    if (basis.size() != 1) throw Error("intersection of principal ideals is not principal");
    return divide_exact(a * b, basis[0]).monic();
}

// Product of the distinct irreducible factors: g / gcd(g, dg/dx_1, ..., dg/dx_n).
inline Polynomial squarefree_part(const Polynomial& g, const Limits& limits = {}) {
    if (g.is_constant()) return g.monic();
    Polynomial d = g;
    for (std::size_t i = 0; i < g.arity() && !d.is_constant(); ++i) {
        Polynomial dg = g.derivative(i);
        if (!dg.is_zero()) d = polynomial_gcd(d, dg, limits);
    }
    return divide_exact(g, d).monic();
}

inline bool is_squarefree(const Polynomial& g, const Limits& limits = {}) {
    if (g.is_zero()) return false;
    return squarefree_part(g, limits).total_degree() == g.total_degree();
}

}  // namespace germlab
