#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/germ/image.hpp"
#include "germlab/germ/local.hpp"
#include "germlab/germ/singular.hpp"
#include "germlab/intersect/config.hpp"

namespace germlab {

struct FiberSample {
    std::optional<std::vector<Rational>> source;  // absent for caller-supplied image points
    std::vector<Rational> value;
    bool regular = true;                          // value is a regular point of the image
    std::size_t count = 0;                        // distinct fiber points; 0 if discarded
};

struct SamplingReport {
    std::size_t value = 0;
    std::vector<FiberSample> samples;
    std::vector<std::string> warnings;
};

namespace intersect_detail {

inline bool vanishes_on(const Ideal& ideal, const std::vector<Rational>& y) {
    for (const auto& g : ideal.generators()) {
        if (g.evaluate(y) != 0) return false;
    }
    return true;
}

inline PolyMap restricted(const PolyMap& f, const std::optional<Ideal>& v) {
    if (!v) return f;
    if (!same_ring(v->ring(), f.domain())) throw PreconditionError("subspace ideal does not live in the source ring");
    auto free = coordinate_subspace(*v);
    if (!free) throw PreconditionError("normalize V first: " + v->to_string() + " is not a coordinate subspace");
    return restrict_to_subspace(f, *free);
}

}  // namespace intersect_detail

// Sampling oracle for the regular multiplicity: the largest number of
// distinct points in fibers over regular points F(x) of the image, x generic
// in V (default: the whole source).
inline SamplingReport regular_multiplicity_report(const PolyMap& f, const std::optional<Ideal>& v,
                                                  const GenericityConfig& cfg) {
    f.require_germ();
    const PolyMap g = intersect_detail::restricted(f, v);
    const Ideal sing = singular_locus(image_ideal(g, Ideal::zero(g.domain()), cfg.limits), cfg.limits);
    SamplingReport report;
    std::size_t admissible = 0;
    for (std::size_t round = 0; round < cfg.retries && admissible == 0; ++round) {
        Sampler sampler(cfg, Stream::Regular, static_cast<std::uint32_t>(round));
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            FiberSample sample;
            sample.source = sampler.point(g.domain_arity());
            sample.value = g.apply(*sample.source);
            sample.regular = !intersect_detail::vanishes_on(sing, sample.value);
            if (sample.regular) {
                sample.count = fiber_points_count(g, sample.value, true, cfg.limits);
                report.value = std::max(report.value, sample.count);
                ++admissible;
            }
            report.samples.push_back(std::move(sample));
        }
    }
    if (admissible == 0) throw PreconditionError("no regular sample found");
    if (admissible < cfg.samples) {
        report.warnings.push_back("only " + std::to_string(admissible) + " of " + std::to_string(cfg.samples) +
                                  " samples lie over regular points of the image");
    }
    return report;
}

inline std::size_t regular_multiplicity(const PolyMap& f, const std::optional<Ideal>& v, const GenericityConfig& cfg) {
    return regular_multiplicity_report(f, v, cfg).value;
}

// Certified lower bound for the geometric multiplicity: the largest distinct
// fiber count over generic samples and the caller's image points.
inline SamplingReport geometric_multiplicity_report(const PolyMap& f, const std::vector<std::vector<Rational>>& extra,
                                                    const GenericityConfig& cfg) {
    f.require_germ();
    SamplingReport report;
    Sampler sampler(cfg, Stream::Geometric);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        FiberSample sample;
        sample.source = sampler.point(f.domain_arity());
        sample.value = f.apply(*sample.source);
        sample.count = fiber_points_count(f, sample.value, true, cfg.limits);
        report.value = std::max(report.value, sample.count);
        report.samples.push_back(std::move(sample));
    }
    for (const auto& y : extra) {
        FiberSample sample;
        sample.value = y;
        sample.count = fiber_points_count(f, y, true, cfg.limits);
        report.value = std::max(report.value, sample.count);
        report.samples.push_back(std::move(sample));
    }
    return report;
}

inline std::size_t geometric_multiplicity(const PolyMap& f, const std::vector<std::vector<Rational>>& extra,
                                          const GenericityConfig& cfg) {
    return geometric_multiplicity_report(f, extra, cfg).value;
}

}  // namespace germlab
