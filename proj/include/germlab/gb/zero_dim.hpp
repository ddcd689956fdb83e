#pragma once

#include <cstddef>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/elimination.hpp"
#include "germlab/gb/hilbert.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/gb/univariate.hpp"

namespace germlab {

// Monic generator of I ∩ k[x_var] for a zero-dimensional I (1 for the unit ideal).
inline univariate::Dense eliminant(const Ideal& ideal, std::size_t var, const Limits& limits = {}) {
    const std::size_t n = ideal.ring()->arity();
    if (ideal.is_unit(limits)) return univariate::Dense{Rational(1)};
    Ideal line = ideal;
    if (n > 1) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != var) others.push_back(i);
        }
        line = eliminate(ideal, others, limits);
    }
    const auto line_basis = line.basis(MonomialOrder::deg_rev_lex(), limits);
    const auto& basis = line_basis->basis;
    if (basis.size() != 1) throw PreconditionError("ideal is not zero-dimensional");
    return univariate::monic(univariate::from_polynomial(basis[0], n > 1 ? 0 : var));
}

inline void require_zero_dimensional(const Ideal& ideal, const Limits& limits = {}) {
    if (quotient_dimension(ideal, MonomialOrder::deg_rev_lex(), limits).is_infinite()) {
        throw PreconditionError("ideal is not zero-dimensional");
    }
}

// Radical of a zero-dimensional ideal: adjoin the squarefree part of every
// univariate eliminant. Its quotient dimension is the number of distinct
// points over the algebraic closure.
inline Ideal zero_dim_radical(const Ideal& ideal, const Limits& limits = {}) {
    require_zero_dimensional(ideal, limits);
    if (ideal.is_unit(limits)) return ideal;
    std::vector<Polynomial> extra;
    for (std::size_t v = 0; v < ideal.ring()->arity(); ++v) {
        extra.push_back(univariate::to_polynomial(univariate::squarefree_part(eliminant(ideal, v, limits)), ideal.ring(), v));
    }
    return ideal.with(extra);
}

// All rational points of a zero-dimensional ideal, found variable by
// variable from rational roots of eliminants and verified exactly.
inline std::vector<std::vector<Rational>> rational_points(const Ideal& ideal, const Limits& limits = {}) {
    require_zero_dimensional(ideal, limits);
    std::vector<std::vector<Rational>> out;
    const RingPtr& ring = ideal.ring();
    const std::size_t n = ring->arity();
    std::vector<Rational> partial;
    auto search = [&](auto&& self, const Ideal& current, std::size_t v) -> void {
        if (current.is_unit(limits)) return;
        if (v == n) {
            for (const auto& g : ideal.generators()) {
                if (g.evaluate(partial) != 0) return;
            }
            out.push_back(partial);
            return;
        }
        for (const auto& r : univariate::rational_roots(eliminant(current, v, limits))) {
            partial.push_back(r);
            Polynomial fix = Polynomial::variable(ring, v) - Polynomial::constant(ring, r);
            self(self, current.with({fix}), v + 1);
            partial.pop_back();
        }
    };
    search(search, ideal, 0);
    return out;
}

}  // namespace germlab
