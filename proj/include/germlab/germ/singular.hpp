#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/elimination.hpp"
#include "germlab/gb/hilbert.hpp"
#include "germlab/germ/cone.hpp"
#include "germlab/poly/poly_map.hpp"

namespace germlab {

namespace germ_detail {

inline std::vector<Polynomial> nonzero_generators(const Ideal& ideal) {
    std::vector<Polynomial> out;
    for (const auto& g : ideal.generators()) {
        if (!g.is_zero()) out.push_back(g);
    }
    return out;
}

// Calls visit on every k-element subset of {0, ..., n-1}, in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == k) {
            visit(pick);
            return;
        }
        for (std::size_t i = start; i + (k - pick.size()) <= n; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace germ_detail

// Radicality is only checkable for principal ideals; there it is enforced.
inline void require_reduced_if_principal(const Ideal& ideal, const Limits& limits = {}) {
    auto gens = germ_detail::nonzero_generators(ideal);
    if (gens.size() == 1 && !gens[0].is_constant() && !is_squarefree(gens[0], limits)) {
        throw PreconditionError("supply reduced generators: " + gens[0].to_string() + " is not squarefree");
    }
}

// I plus every c x c minor of the Jacobian matrix of its generators,
// c = arity - dim V(I). Unit ideal when V(I) is smooth everywhere.
inline Ideal singular_locus(const Ideal& ideal, const Limits& limits = {}) {
    require_reduced_if_principal(ideal, limits);
    const RingPtr& ring = ideal.ring();
    const std::size_t n = ring->arity();
    const std::size_t c = n - krull_dimension(ideal, limits);
    if (c == 0) return ideal.with({Polynomial::constant(ring, Rational(1))});
    auto gens = germ_detail::nonzero_generators(ideal);
    const PolyMatrix jac = jacobian_matrix(gens, ring);
    std::vector<Polynomial> minors;
    germ_detail::for_each_subset(gens.size(), c, [&](const std::vector<std::size_t>& rows) {
        germ_detail::for_each_subset(n, c, [&](const std::vector<std::size_t>& cols) {
            PolyMatrix sub;
            for (std::size_t r : rows) {
                std::vector<Polynomial> row;
                for (std::size_t col : cols) row.push_back(jac[r][col]);
                sub.push_back(std::move(row));
            }
            Polynomial m = determinant(sub, ring);
            if (!m.is_zero()) minors.push_back(std::move(m));
        });
    });
    return ideal.with(minors);
}

// Jacobian criterion at 0: rank J(0) = arity - dim_0 V(I).
inline bool is_smooth_at_origin(const Ideal& ideal, const Limits& limits = {}) {
    require_origin_in_zero_set(ideal);
    require_reduced_if_principal(ideal, limits);
    const RingPtr& ring = ideal.ring();
    const std::size_t n = ring->arity();
    const std::vector<Rational> origin(n, Rational(0));
    std::vector<std::vector<Rational>> values;
    for (const auto& g : germ_detail::nonzero_generators(ideal)) {
        std::vector<Rational> row;
        for (std::size_t v = 0; v < n; ++v) row.push_back(g.derivative(v).evaluate(origin));
        values.push_back(std::move(row));
    }
    return matrix_rank(values) == n - local_dimension(ideal, limits);
}

}  // namespace germlab
