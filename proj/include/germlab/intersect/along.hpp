#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/elimination.hpp"
#include "germlab/germ/image.hpp"
#include "germlab/germ/local.hpp"
#include "germlab/intersect/config.hpp"

namespace germlab {

// Jac F does not vanish identically on V(v).
inline bool jacobian_nonvanishing_on(const PolyMap& f, const Ideal& v, const Limits& limits = {}) {
    f.require_square();
    if (!same_ring(v.ring(), f.domain())) throw PreconditionError("ideal does not live in the source ring");
    if (v.is_unit(limits)) throw PreconditionError("V is empty");
    return !radical_membership(jacobian_determinant(f), v, limits);
}

struct AlongReport {
    std::size_t value = 0;
    std::vector<std::vector<Rational>> samples;
    std::vector<std::size_t> multiplicities;
    std::vector<std::string> warnings;
};

// m_V(F): the least local multiplicity of F at generic points of the
// coordinate subspace V, estimated by the minimum over sampled points.
inline AlongReport multiplicity_along_V_report(const PolyMap& f, const Ideal& v, const GenericityConfig& cfg,
                                               std::uint32_t round = 0) {
    f.require_square();
    f.require_germ();
    if (!same_ring(v.ring(), f.domain())) throw PreconditionError("ideal does not live in the source ring");
    auto free = coordinate_subspace(v);
    if (!free) throw PreconditionError("normalize V first: " + v.to_string() + " is not a coordinate subspace");
    AlongReport r;
    const bool origin_only = std::none_of(free->begin(), free->end(), [](bool b) { return b; });
    const std::size_t wanted = origin_only ? 1 : cfg.samples;
    Sampler sampler(cfg, Stream::AlongV, round);
    for (std::size_t s = 0; s < wanted; ++s) {
        auto x = sampler.point(*free);
        try {
            const std::size_t m = local_multiplicity(translate(f, x), cfg.limits);
            r.samples.push_back(x);
            r.multiplicities.push_back(m);
        } catch (const PreconditionError&) {
            r.warnings.push_back("F is not finite at a sampled point; sample skipped");
        }
    }
    if (r.multiplicities.empty()) throw PreconditionError("no sampled point of V gives a finite germ");
    r.value = *std::min_element(r.multiplicities.begin(), r.multiplicities.end());
    if (r.multiplicities.size() < 2) r.warnings.push_back("fewer than two samples on V");
    return r;
}

inline std::size_t multiplicity_along_V(const PolyMap& f, const Ideal& v, const GenericityConfig& cfg) {
    return multiplicity_along_V_report(f, v, cfg).value;
}

// Critical locus sigma = F({Jac F = 0}), a hypersurface in the target.
inline Ideal critical_locus(const PolyMap& f, const Limits& limits = {}) {
    f.require_square();
    f.require_germ();
    Polynomial det = jacobian_determinant(f);
    if (det.is_zero()) throw PreconditionError("Jacobian determinant vanishes identically");
    return image_ideal(f, Ideal(f.domain(), {det}), limits);
}

struct Normalization {
    PolyMap map;        // F o change
    Ideal subspace;     // coordinate ideal in the new coordinates
    PolyMap change;     // new coordinates -> old coordinates
};

// Brings V to a coordinate subspace. Accepts coordinate ideals and graphs
// (generators c*x_j - h_j with x_j occurring nowhere else); nullopt otherwise.
inline std::optional<Normalization> normalize_to_coordinates(const PolyMap& f, const Ideal& v) {
    const RingPtr& ring = f.domain();
    if (!same_ring(v.ring(), ring)) throw PreconditionError("ideal does not live in the source ring");
    if (coordinate_subspace(v)) return Normalization{f, v, PolyMap::identity(ring)};

    std::vector<Polynomial> gens;
    for (const auto& g : v.generators()) {
        if (!g.is_zero()) gens.push_back(g);
    }
    const std::size_t n = ring->arity();
    auto occurrences = [&](std::size_t var) {
        std::size_t count = 0;
        for (const auto& g : gens) {
            for (const auto& t : g.terms()) count += t.mono[var] > 0 ? 1 : 0;
        }
        return count;
    };
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(ring, i));
    std::vector<Polynomial> coordinate_gens;
    for (const auto& g : gens) {
        if (!g.vanishes_at_origin()) return std::nullopt;
        std::optional<std::size_t> chosen;
        Rational c;
        for (const auto& t : g.terms()) {
            if (t.mono.degree() != 1) continue;
            std::size_t var = 0;
            while (t.mono[var] == 0) ++var;
            if (occurrences(var) == 1) {
                chosen = var;
                c = t.coef;
                break;
            }
        }
        if (!chosen) return std::nullopt;
        const Polynomial xj = Polynomial::variable(ring, *chosen);
        // g = c*x_j - c*h_j, so x_j = z_j + h_j with z_j = g / c.
        const Polynomial h = xj - Polynomial::constant(ring, Rational(1 / c)) * g;
        images[*chosen] = xj + h;
        coordinate_gens.push_back(xj);
    }
    PolyMap change(ring, images, ring);
    return Normalization{compose_map(f, change), Ideal(ring, coordinate_gens), change};
}

}  // namespace germlab
