#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/elimination.hpp"
#include "germlab/poly/poly_map.hpp"

namespace germlab {

// Ideal of the Zariski closure of F(V(I)) in the codomain ring: eliminate the
// source variables from I + (w_j - F_j).
inline Ideal image_ideal(const PolyMap& f, const Ideal& ideal, const Limits& limits = {}) {
    if (!same_ring(ideal.ring(), f.domain())) throw PreconditionError("ideal does not live in the source ring of the map");
    const RingPtr& source = f.domain();
    const RingPtr& target = f.codomain();
    const std::size_t m = source->arity();

    std::vector<std::string> names;
    for (std::string name : source->names()) {
        while (target->index_of(name) || std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
        names.push_back(name);
    }
    for (const auto& name : target->names()) names.push_back(name);
    RingPtr joint = make_ring(names);

    std::vector<std::size_t> front(m);
    for (std::size_t i = 0; i < m; ++i) front[i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(gb::detail::permute(g, joint, front));
    for (std::size_t j = 0; j < f.codomain_arity(); ++j) {
        gens.push_back(Polynomial::variable(joint, m + j) - gb::detail::permute(f.component(j), joint, front));
    }
    return eliminate(Ideal(joint, std::move(gens)), front, limits).rehome(target);
}

}  // namespace germlab
