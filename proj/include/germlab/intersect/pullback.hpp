#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/elimination.hpp"
#include "germlab/germ/cone.hpp"
#include "germlab/germ/image.hpp"
#include "germlab/germ/local.hpp"
#include "germlab/germ/singular.hpp"
#include "germlab/intersect/along.hpp"
#include "germlab/intersect/multiplicity.hpp"

namespace germlab {

enum class Verdict { WSmoothCertified, HypothesisFailed, Inconsistent };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::WSmoothCertified: return "W_smooth_certified";
        case Verdict::HypothesisFailed: return "hypothesis_failed";
        case Verdict::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

struct PullbackReport {
    Ideal v;                              // F^-1(W), reduced when principal
    std::optional<Normalization> normalized;
    std::size_t mu = 0;                   // m_0(F)
    std::optional<std::size_t> lambda;    // regular multiplicity of F on V
    std::optional<std::size_t> kappa;     // m_V(F)
    std::size_t d = 0;                    // Lelong number of W at 0
    bool jacobian_nonvanishing = false;
    bool v_smooth = false;
    bool pullback_equal = false;
    std::optional<bool> chain_holds;      // mu = lambda*kappa and lambda*kappa >= lambda*d
    bool w_smooth = false;                // direct Jacobian criterion on W
    Verdict verdict = Verdict::HypothesisFailed;
    std::string reason;
    std::optional<SamplingReport> lambda_samples;
    std::optional<AlongReport> kappa_samples;
    std::vector<std::string> warnings;
};

// Runs the smoothness-of-images argument on W and V = F^-1(W): every
// hypothesis and every integer of the multiplicity chain is computed and
// cross-checked; nothing is assumed.
inline PullbackReport pullback_report(const PolyMap& f, const Ideal& w, const GenericityConfig& cfg) {
    const Limits& limits = cfg.limits;
    f.require_square();
    f.require_germ();
    if (!same_ring(w.ring(), f.codomain())) throw PreconditionError("W does not live in the codomain ring");
    require_origin_in_zero_set(w);
    if (w.is_unit(limits)) throw PreconditionError("W must be a proper ideal");
    try {
        require_reduced_if_principal(w, limits);
    } catch (const PreconditionError&) {
        throw PreconditionError("supply reduced W");
    }

    PullbackReport r;
    r.mu = local_multiplicity(f, limits);
    r.d = lelong_degree(w, limits);
    r.w_smooth = is_smooth_at_origin(w, limits);

    std::vector<Polynomial> pulled;
    for (const auto& g : w.generators()) {
        if (!g.is_zero()) pulled.push_back(f.pull_back(g));
    }
    if (pulled.size() == 1) {
        pulled[0] = squarefree_part(pulled[0], limits);
    } else if (pulled.size() > 1) {
        r.warnings.push_back("pull-back of a non-principal W: radicality of V not checked");
    }
    r.v = Ideal(f.domain(), pulled);

    r.v_smooth = is_smooth_at_origin(r.v, limits);
    const Ideal image_of_v = image_ideal(f, r.v, limits);
    std::vector<Polynomial> back;
    for (const auto& g : image_of_v.generators()) back.push_back(f.pull_back(g));
    r.pullback_equal = radical_equal(image_of_v, w, limits) && radical_equal(Ideal(f.domain(), back), r.v, limits);
    r.jacobian_nonvanishing = jacobian_nonvanishing_on(f, r.v, limits);

    auto fail = [&](std::string reason) {
        r.verdict = Verdict::HypothesisFailed;
        r.reason = std::move(reason);
        return r;
    };
    auto inconsistent = [&](std::string reason) {
        r.verdict = Verdict::Inconsistent;
        r.reason = std::move(reason);
        return r;
    };

    if (!r.v_smooth) return fail("V not smooth");
    if (!r.pullback_equal) return fail("pull-back equality F^-1(F(V)) = V fails");

    r.normalized = normalize_to_coordinates(f, r.v);
    if (!r.normalized) throw PreconditionError("normalize V first: V is smooth but not a graph over coordinates");
    const Normalization& nz = *r.normalized;

    // lambda and kappa are sampled; disagreement with mu = lambda*kappa
    // triggers fresh samples before it is reported.
    for (std::size_t round = 0; round < cfg.retries; ++round) {
        GenericityConfig c = cfg;
        c.seed = cfg.seed + round;
        r.lambda_samples = regular_multiplicity_report(nz.map, nz.subspace, c);
        r.kappa_samples = multiplicity_along_V_report(nz.map, nz.subspace, c);
        r.lambda = r.lambda_samples->value;
        r.kappa = r.kappa_samples->value;
        if (r.mu == *r.lambda * *r.kappa) break;
    }
    const std::size_t lambda = *r.lambda;
    const std::size_t kappa = *r.kappa;
    r.chain_holds = r.mu == lambda * kappa && lambda * kappa >= lambda * r.d;

    if (r.mu != lambda * kappa) return inconsistent("m_0(F) differs from lambda * kappa");
    if (!*r.chain_holds) return inconsistent("lambda * kappa < lambda * d");
    if (r.jacobian_nonvanishing != (kappa == 1)) {
        return inconsistent("Jacobian criterion on V disagrees with the multiplicity along V");
    }
    if (!r.jacobian_nonvanishing) return fail("Jacobian vanishes on V");
    if (r.d != 1) return inconsistent("kappa = 1 but the Lelong number of W is not 1");
    if (!r.w_smooth) return inconsistent("certified W fails the direct smoothness test");
    r.verdict = Verdict::WSmoothCertified;
    r.reason.clear();
    return r;
}

}  // namespace germlab
