#pragma once

// Seeded random generators and small helpers shared by the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "germlab/gb.hpp"
#include "germlab/germ.hpp"
#include "germlab/intersect.hpp"
#include "germlab/parse/polynomial_parser.hpp"
#include "germlab/poly.hpp"

namespace germlab::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

inline Polynomial P(const std::string& text, const RingPtr& ring) { return parse::parse_polynomial(text, ring); }

inline Ideal I(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(g, ring));
    return Ideal(ring, ps);
}

inline std::vector<Rational> pt(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

// Random polynomial with up to `terms` terms of degree in [min_degree, max_degree]
// and integer coefficients in [-coef, coef].
inline Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int terms, int min_degree, int max_degree,
                                    long coef = 5) {
    std::vector<Term> out;
    for (int k = 0; k < terms; ++k) {
        const int d = static_cast<int>(rng.uniform(min_degree, max_degree));
        Monomial m(ring->arity());
        for (int i = 0; i < d; ++i) {
            const auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ring->arity()) - 1));
            m.set(v, m[v] + 1);
        }
        long c = rng.uniform(-coef, coef);
        if (c == 0) c = 1;
        out.push_back({m, Rational(c)});
    }
    return Polynomial::from_terms(ring, out);
}

inline Monomial random_monomial(Rng& rng, std::size_t arity, int max_exponent) {
    Monomial m(arity);
    for (std::size_t i = 0; i < arity; ++i) m.set(i, static_cast<int>(rng.uniform(0, max_exponent)));
    return m;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n, long bound = 4) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(make_rational(rng.uniform(-bound, bound), rng.uniform(1, 3)));
    return out;
}

// Plane automorphism fixing 0: (x, y) -> (x + c*y^2, y) followed by the
// linear shear (x, y) -> (x, y + d*x). Its inverse is polynomial, so it
// preserves local and global fiber multiplicities.
inline PolyMap random_plane_automorphism(Rng& rng, const RingPtr& ring, bool linear_only = false) {
    const Polynomial x = Polynomial::variable(ring, 0);
    const Polynomial y = Polynomial::variable(ring, 1);
    const Rational c(linear_only ? 0L : rng.uniform(-2, 2));
    const Rational d(rng.uniform(-2, 2));
    const Polynomial u = x + Polynomial::constant(ring, c) * y * y;
    return PolyMap(ring, {u, y + Polynomial::constant(ring, d) * u}, ring);
}

struct KnownGerm {
    PolyMap map;
    std::size_t multiplicity;
};

// F = psi o (x^a, y^b - x^c) o phi with psi linear and ab <= max_product.
// Local multiplicity and the length of every fiber are both ab.
inline KnownGerm random_finite_germ(Rng& rng, const RingPtr& ring, long max_product = 6) {
    long a = 0, b = 0;
    do {
        a = rng.uniform(1, 3);
        b = rng.uniform(1, 3);
    } while (a * b > max_product);
    const long c = rng.uniform(1, 3);
    const Polynomial x = Polynomial::variable(ring, 0);
    const Polynomial y = Polynomial::variable(ring, 1);
    PolyMap core(ring, {x.pow(static_cast<unsigned>(a)), y.pow(static_cast<unsigned>(b)) - x.pow(static_cast<unsigned>(c))},
                 ring);
    PolyMap f = compose_map(random_plane_automorphism(rng, ring, true),
                            compose_map(core, random_plane_automorphism(rng, ring)));
    return {f, static_cast<std::size_t>(a * b)};
}

}  // namespace germlab::testing
