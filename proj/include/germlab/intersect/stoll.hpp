#pragma once

#include <cstddef>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/zero_dim.hpp"
#include "germlab/germ/local.hpp"
#include "germlab/intersect/config.hpp"

namespace germlab {

struct StollReport {
    std::vector<Rational> value;                     // the point y
    std::vector<std::vector<Rational>> points;       // rational fiber points
    std::vector<std::size_t> point_multiplicities;   // m_x(F) at each of them
    std::size_t rational_sum = 0;
    std::size_t fiber_length = 0;                    // with multiplicity
    std::size_t distinct = 0;
    std::size_t covering = 0;                        // m_0(F)
    bool all_rational = false;
    bool equal = false;
};

// Local multiplicities over a regular fiber add up to the covering number:
// checked in aggregate and, for rational fiber points, point by point.
inline StollReport stoll_check(const PolyMap& f, const std::vector<Rational>& y, const GenericityConfig& cfg) {
    StollReport r;
    r.value = y;
    r.covering = local_multiplicity(f, cfg.limits);
    r.fiber_length = fiber_points_count(f, y, false, cfg.limits);
    r.distinct = fiber_points_count(f, y, true, cfg.limits);
    if (r.distinct != r.fiber_length) throw PreconditionError("Stoll check requires regular fiber");
    r.points = rational_points(fiber_ideal(f, y), cfg.limits);
    for (const auto& x : r.points) {
        const std::size_t m = local_multiplicity(translate(f, x), cfg.limits);
        r.point_multiplicities.push_back(m);
        r.rational_sum += m;
    }
    r.all_rational = r.points.size() == r.distinct;
    r.equal = r.fiber_length == r.covering && (!r.all_rational || r.rational_sum == r.covering);
    return r;
}

}  // namespace germlab
