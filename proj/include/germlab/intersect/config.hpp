#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/gb/limits.hpp"
#include "germlab/poly/poly_map.hpp"

namespace germlab {

struct GenericityConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 5;
    std::size_t retries = 3;
    long numerator_bound = 3;
    std::vector<long> denominators = {8, 16, 32};
    long projection_bound = 5;
    Limits limits;

    void validate() const {
        if (samples == 0) throw PreconditionError("samples must be positive");
        if (retries == 0) throw PreconditionError("retries must be positive");
        if (numerator_bound < 1) throw PreconditionError("numerator bound must be positive");
        if (denominators.empty()) throw PreconditionError("denominator list is empty");
        for (long d : denominators) {
            if (d < 1) throw PreconditionError("denominators must be positive");
        }
        if (projection_bound < 1) throw PreconditionError("projection bound must be positive");
    }
};

// Sampling streams, one per consumer, so results do not depend on call order.
enum class Stream : std::uint32_t { Regular = 1, Geometric = 2, Projection = 3, AlongV = 4, Stoll = 5 };

// Seeded source of small-height rational points. Draws never repeat.
class Sampler {
public:
    Sampler(const GenericityConfig& cfg, Stream stream, std::uint32_t round = 0) : cfg_(cfg) {
        cfg.validate();
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(stream), round};
        engine_.seed(seq);
    }

    // Uniform integer in [lo, hi]; engine output reduced by hand so the
    // sequence is identical across standard libraries.
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    // Coordinates with free[i] false are 0; the others have nonzero
    // numerators bounded by cfg.numerator_bound.
    std::vector<Rational> point(const std::vector<bool>& free) {
        bool any_free = false;
        for (bool f : free) any_free = any_free || f;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            std::vector<Rational> p;
            for (bool f : free) {
                if (!f) {
                    p.emplace_back(0);
                    continue;
                }
                long num = integer(1, cfg_.numerator_bound);
                if (integer(0, 1) == 1) num = -num;
                const long den = cfg_.denominators[static_cast<std::size_t>(
                    integer(0, static_cast<long>(cfg_.denominators.size()) - 1))];
                p.push_back(make_rational(num, den));
            }
            if (seen_.insert(p).second) return p;
            if (!any_free) break;
        }
        throw ResourceError("sample space exhausted: no fresh point left");
    }

    std::vector<Rational> point(std::size_t n) { return point(std::vector<bool>(n, true)); }

private:
    GenericityConfig cfg_;
    std::mt19937_64 engine_;
    std::set<std::vector<Rational>> seen_;
};

// For an ideal generated by variables (up to scalars), the mask of variables
// not among them; nullopt for any other shape. The zero ideal is the whole space.
inline std::optional<std::vector<bool>> coordinate_subspace(const Ideal& v) {
    std::vector<bool> free(v.ring()->arity(), true);
    for (const auto& g : v.generators()) {
        if (g.is_zero()) continue;
        if (g.size() != 1 || g.terms()[0].mono.degree() != 1) return std::nullopt;
        const Monomial& m = g.terms()[0].mono;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 1) free[i] = false;
        }
    }
    return free;
}

// F restricted to the coordinate subspace `free`, as a map from the ring of
// the free variables.
inline PolyMap restrict_to_subspace(const PolyMap& f, const std::vector<bool>& free) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (free[i]) names.push_back(f.domain()->names()[i]);
    }
    if (names.empty()) throw PreconditionError("subspace is the origin; nothing to restrict to");
    RingPtr small = make_ring(names);
    std::vector<Polynomial> images;
    std::size_t k = 0;
    for (std::size_t i = 0; i < free.size(); ++i) {
        images.push_back(free[i] ? Polynomial::variable(small, k++) : Polynomial(small));
    }
    std::vector<Polynomial> comps;
    for (const auto& c : f.components()) comps.push_back(c.substitute(images, small));
    return PolyMap(small, std::move(comps), f.codomain());
}

}  // namespace germlab
