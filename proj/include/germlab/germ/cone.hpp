#pragma once

#include <cstddef>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/hilbert.hpp"
#include "germlab/gb/ideal.hpp"

namespace germlab {

inline void require_origin_in_zero_set(const Ideal& ideal) {
    for (const auto& g : ideal.generators()) {
        if (!g.vanishes_at_origin()) throw PreconditionError("origin is not in the zero set of " + ideal.to_string());
    }
}

// Ideal of initial forms of I at 0: the initial forms of a local standard basis.
inline Ideal tangent_cone(const Ideal& ideal, const Limits& limits = {}) {
    require_origin_in_zero_set(ideal);
    std::vector<Polynomial> forms;
    const auto basis = ideal.basis(MonomialOrder::local(), limits);
    for (const auto& g : basis->basis) forms.push_back(initial_form(g));
    return Ideal(ideal.ring(), std::move(forms));
}

// Hilbert series of the tangent cone in lowest terms Q(t) / (1 - t)^d.
inline std::pair<IntPoly, std::size_t> cone_hilbert_series(const Ideal& cone, const Limits& limits = {}) {
    const auto basis = cone.basis(MonomialOrder::deg_rev_lex(), limits);
    return hilbert_series_monomial(basis->leading, cone.ring()->arity()).lowest_terms();
}

// Dimension of the germ at 0, read off its tangent cone.
inline std::size_t local_dimension(const Ideal& ideal, const Limits& limits = {}) {
    return cone_hilbert_series(tangent_cone(ideal, limits), limits).second;
}

// Hilbert-Samuel multiplicity at 0, Q(1). Equals the Lelong number for a
// reduced pure-dimensional germ and ord_0 g for a principal ideal (g).
inline std::size_t lelong_degree(const Ideal& ideal, const Limits& limits = {}) {
    auto [q, d] = cone_hilbert_series(tangent_cone(ideal, limits), limits);
    (void)d;
    Integer total = 0;
    for (const auto& c : q) total += c;
    if (total <= 0) throw Error("tangent cone has non-positive degree");
    std::vector<Polynomial> nonzero;
    for (const auto& g : ideal.generators()) {
        if (!g.is_zero()) nonzero.push_back(g);
    }
    if (nonzero.size() == 1 && total != order_at_origin(nonzero[0]).value()) {
        throw Error("multiplicity disagrees with the order of the generator");
    }
    return total.get_ui();
}

// True when the value of lelong_degree rests on the algebraic multiplicity
// alone, with no hypersurface or linear cross-check available.
inline bool lelong_is_algebraic(const Ideal& ideal) {
    std::size_t nonzero = 0;
    bool linear = true;
    for (const auto& g : ideal.generators()) {
        if (g.is_zero()) continue;
        ++nonzero;
        linear = linear && g.total_degree() <= 1;
    }
    return nonzero > 1 && !linear;
}

}  // namespace germlab
