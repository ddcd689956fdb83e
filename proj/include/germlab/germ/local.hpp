#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/hilbert.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/gb/zero_dim.hpp"
#include "germlab/poly/poly_map.hpp"

namespace germlab {

// Ideal generated by the components of F, in the source ring.
inline Ideal component_ideal(const PolyMap& f) { return Ideal(f.domain(), f.components()); }

// dim_Q O_0 / (F_1, ..., F_n): the covering number m_0(F) of a finite square germ.
inline std::size_t local_multiplicity(const PolyMap& f, const Limits& limits = {}) {
    f.require_square();
    f.require_germ();
    ExtNat dim = quotient_dimension(component_ideal(f), MonomialOrder::local(), limits);
    if (dim.is_infinite()) throw PreconditionError("map germ is not finite at 0");
    return dim.value();
}

// z -> F(a + z) - F(a), the germ of F at a moved to the origin.
inline PolyMap translate(const PolyMap& f, std::span<const Rational> a) {
    if (a.size() != f.domain_arity()) throw PreconditionError("point has the wrong number of coordinates");
    const RingPtr& ring = f.domain();
    std::vector<Polynomial> shift;
    for (std::size_t i = 0; i < a.size(); ++i) {
        shift.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, a[i]));
    }
    const std::vector<Rational> value = f.apply(a);
    std::vector<Polynomial> comps;
    for (std::size_t j = 0; j < f.codomain_arity(); ++j) {
        comps.push_back(f.component(j).substitute(shift, ring) - Polynomial::constant(ring, value[j]));
    }
    return PolyMap(ring, std::move(comps), f.codomain());
}

// (F_1 - y_1, ..., F_n - y_n) in the source ring.
inline Ideal fiber_ideal(const PolyMap& f, std::span<const Rational> y) {
    if (y.size() != f.codomain_arity()) throw PreconditionError("point has the wrong number of coordinates");
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < y.size(); ++j) {
        gens.push_back(f.component(j) - Polynomial::constant(f.domain(), y[j]));
    }
    return Ideal(f.domain(), std::move(gens));
}

// Number of affine solutions of F(x) = y, with multiplicity unless `distinct`.
inline std::size_t fiber_points_count(const PolyMap& f, std::span<const Rational> y, bool distinct,
                                      const Limits& limits = {}) {
    Ideal fiber = fiber_ideal(f, y);
    ExtNat dim = quotient_dimension(fiber, MonomialOrder::deg_rev_lex(), limits);
    if (dim.is_infinite()) throw PreconditionError("fiber not finite");
    if (!distinct || dim.value() == 0) return dim.value();
    return quotient_dimension(zero_dim_radical(fiber, limits), MonomialOrder::deg_rev_lex(), limits).value();
}

}  // namespace germlab
