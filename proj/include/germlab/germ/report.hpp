#pragma once

#include <string>
#include <vector>

#include "germlab/germ/cone.hpp"
#include "germlab/germ/local.hpp"

namespace germlab {

// An invariant together with enough data to recompute it.
struct GermReport {
    std::string invariant;
    std::string input;
    std::vector<Integer> values;
    std::vector<Polynomial> basis;    // standard basis or cone generators
    std::vector<Monomial> staircase;  // standard monomials, when finite
    std::vector<std::string> warnings;
};

inline GermReport local_multiplicity_report(const PolyMap& f, const Limits& limits = {}) {
    GermReport r;
    r.invariant = "local_multiplicity";
    r.input = component_ideal(f).to_string();
    r.values.push_back(Integer(static_cast<unsigned long>(local_multiplicity(f, limits))));
    const auto basis = component_ideal(f).basis(MonomialOrder::local(), limits);
    r.basis = basis->basis;
    r.staircase = standard_monomials(basis->leading, f.domain_arity());
    return r;
}

inline GermReport lelong_report(const Ideal& ideal, const Limits& limits = {}) {
    GermReport r;
    r.invariant = "lelong_degree";
    r.input = ideal.to_string();
    r.values.push_back(Integer(static_cast<unsigned long>(lelong_degree(ideal, limits))));
    r.basis = tangent_cone(ideal, limits).generators();
    if (lelong_is_algebraic(ideal)) r.warnings.push_back("multiplicity computed algebraically");
    return r;
}

}  // namespace germlab
