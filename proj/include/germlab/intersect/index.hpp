#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/germ/cone.hpp"
#include "germlab/germ/image.hpp"
#include "germlab/germ/local.hpp"
#include "germlab/intersect/config.hpp"
#include "germlab/intersect/multiplicity.hpp"

namespace germlab {

using IntMatrix = std::vector<std::vector<long>>;

// True iff the kernel, cut out by `kernel_forms`, meets the tangent cone of
// the image only at 0.
inline bool projection_genericity_check(const Ideal& image, const std::vector<Polynomial>& kernel_forms,
                                        const Limits& limits = {}) {
    Ideal cone = tangent_cone(image, limits);
    return krull_dimension(cone.with(kernel_forms), limits) == 0;
}

// Rows of p as linear forms over `ring`.
inline std::vector<Polynomial> linear_forms(const IntMatrix& p, const RingPtr& ring) {
    std::vector<Polynomial> forms;
    for (const auto& row : p) {
        Polynomial form(ring);
        for (std::size_t j = 0; j < row.size(); ++j) {
            form += Polynomial::constant(ring, Rational(row[j])) * Polynomial::variable(ring, j);
        }
        forms.push_back(std::move(form));
    }
    return forms;
}

struct IndexReport {
    std::size_t value = 0;
    std::optional<IntMatrix> projection;  // absent for square maps
    std::vector<std::size_t> candidates;
    std::size_t rejected_projections = 0;
    bool non_generic = false;
    std::vector<std::string> warnings;
};

// i_0(F): the local multiplicity for square F; otherwise m_0(p o F) for a
// generic linear projection p onto C^k, confirmed by a second projection.
inline IndexReport intersection_index_report(const PolyMap& f, const GenericityConfig& cfg) {
    f.require_germ();
    IndexReport report;
    const std::size_t k = f.domain_arity();
    const std::size_t n = f.codomain_arity();
    if (n < k) throw PreconditionError("codomain dimension is smaller than the source dimension");
    if (n == k) {
        report.value = local_multiplicity(f, cfg.limits);
        report.candidates.push_back(report.value);
        return report;
    }
    const Ideal image = image_ideal(f, Ideal::zero(f.domain()), cfg.limits);
    Sampler sampler(cfg, Stream::Projection);
    const std::size_t max_draws = 50;

    auto draw = [&]() -> std::pair<IntMatrix, std::size_t> {
        for (std::size_t attempt = 0; attempt < max_draws; ++attempt) {
            IntMatrix p(k, std::vector<long>(n));
            std::vector<std::vector<Rational>> as_rational(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    p[i][j] = sampler.integer(-cfg.projection_bound, cfg.projection_bound);
                    as_rational[i].emplace_back(p[i][j]);
                }
            }
            if (matrix_rank(as_rational) == k) {
                const auto forms = linear_forms(p, f.codomain());
                if (projection_genericity_check(image, forms, cfg.limits)) {
                    PolyMap proj(f.codomain(), forms);
                    try {
                        return {p, local_multiplicity(compose_map(proj, f), cfg.limits)};
                    } catch (const PreconditionError&) {
                        // p o F not finite: treat as a failed draw.
                    }
                }
            }
            ++report.rejected_projections;
        }
        throw PreconditionError("no generic projection found");
    };

    for (std::size_t round = 0; round < cfg.retries; ++round) {
        auto [p1, c1] = draw();
        auto [p2, c2] = draw();
        report.candidates.push_back(c1);
        report.candidates.push_back(c2);
        if (c1 == c2) {
            report.value = c1;
            report.projection = p1;
            return report;
        }
    }
    report.value = *std::min_element(report.candidates.begin(), report.candidates.end());
    report.non_generic = true;
    report.warnings.push_back("projections disagreed; returning the smallest candidate");
    return report;
}

inline std::size_t intersection_index(const PolyMap& f, const GenericityConfig& cfg) {
    return intersection_index_report(f, cfg).value;
}

struct FormulaReport {
    std::size_t i0 = 0;
    std::size_t regular_mult = 0;
    std::size_t lelong = 0;
    std::size_t geometric_mult_lower_bound = 0;
    bool holds = false;
    std::size_t naive_product = 0;
    Ideal image;
    IndexReport index;
    SamplingReport regular;
    SamplingReport geometric;
    std::vector<std::string> warnings;
};

// Checks i_0(F) = (regular multiplicity) * (Lelong number of the image) and
// reports the product with the geometric multiplicity alongside.
inline FormulaReport verify_intersection_formula(const PolyMap& f, const std::vector<std::vector<Rational>>& extra,
                                                 const GenericityConfig& cfg) {
    FormulaReport r;
    r.index = intersection_index_report(f, cfg);
    r.regular = regular_multiplicity_report(f, std::nullopt, cfg);
    r.geometric = geometric_multiplicity_report(f, extra, cfg);
    r.image = image_ideal(f, Ideal::zero(f.domain()), cfg.limits);
    r.i0 = r.index.value;
    r.regular_mult = r.regular.value;
    r.lelong = lelong_degree(r.image, cfg.limits);
    // Regular samples are fibers too, so they also bound m_0 from below.
    r.geometric_mult_lower_bound = std::max(r.geometric.value, r.regular.value);
    r.holds = r.i0 == r.regular_mult * r.lelong;
    r.naive_product = r.geometric_mult_lower_bound * r.lelong;
    for (const auto* w : {&r.index.warnings, &r.regular.warnings, &r.geometric.warnings}) {
        r.warnings.insert(r.warnings.end(), w->begin(), w->end());
    }
    if (lelong_is_algebraic(r.image)) r.warnings.push_back("multiplicity computed algebraically");
    return r;
}

}  // namespace germlab
