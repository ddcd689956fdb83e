#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/poly/polynomial.hpp"

namespace germlab {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Default codomain coordinates w1..wn.
inline RingPtr default_codomain_ring(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
    return make_ring(std::move(names));
}

// A polynomial map F: (domain) -> (codomain), one component per codomain
// coordinate. The codomain ring names the target coordinates.
class PolyMap {
public:
    PolyMap(RingPtr domain, std::vector<Polynomial> components, RingPtr codomain = nullptr)
        : domain_(std::move(domain)), components_(std::move(components)), codomain_(std::move(codomain)) {
        if (components_.empty()) throw PreconditionError("a map needs at least one component");
        if (!codomain_) codomain_ = default_codomain_ring(components_.size());
        if (codomain_->arity() != components_.size()) {
            throw PreconditionError("codomain ring arity " + std::to_string(codomain_->arity()) +
                                    " does not match " + std::to_string(components_.size()) + " components");
        }
        for (auto& c : components_) {
            if (!same_ring(c.ring(), domain_)) throw PreconditionError("map component outside the domain ring");
            c = c.rehome(domain_);
        }
    }

    static PolyMap identity(const RingPtr& ring) {
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < ring->arity(); ++i) comps.push_back(Polynomial::variable(ring, i));
        return PolyMap(ring, std::move(comps), ring);
    }

    const RingPtr& domain() const noexcept { return domain_; }
    const RingPtr& codomain() const noexcept { return codomain_; }
    const std::vector<Polynomial>& components() const noexcept { return components_; }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }
    std::size_t domain_arity() const noexcept { return domain_->arity(); }
    std::size_t codomain_arity() const noexcept { return components_.size(); }
    bool is_square() const noexcept { return domain_arity() == codomain_arity(); }

    bool is_germ() const {
        for (const auto& c : components_) {
            if (!c.vanishes_at_origin()) return false;
        }
        return true;
    }

    void require_germ() const {
        if (!is_germ()) throw PreconditionError("map does not send the origin to the origin");
    }

    void require_square() const {
        if (!is_square()) throw PreconditionError("map is not square (domain and codomain arity differ)");
    }

    std::vector<Rational> apply(std::span<const Rational> point) const {
        std::vector<Rational> out;
        out.reserve(components_.size());
        for (const auto& c : components_) out.push_back(c.evaluate(point));
        return out;
    }

    // Pulls a codomain polynomial back along the map.
    Polynomial pull_back(const Polynomial& g) const {
        if (!same_ring(g.ring(), codomain_)) throw PreconditionError("polynomial is not in the codomain ring");
        return g.substitute(components_, domain_);
    }

    // Same map with a renamed codomain.
    PolyMap with_codomain(RingPtr codomain) const { return PolyMap(domain_, components_, std::move(codomain)); }

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return same_ring(a.domain_, b.domain_) && same_ring(a.codomain_, b.codomain_) &&
               a.components_ == b.components_;
    }

private:
    RingPtr domain_;
    std::vector<Polynomial> components_;
    RingPtr codomain_;
};

// (outer o inner)(x) = outer(inner(x)).
inline PolyMap compose_map(const PolyMap& outer, const PolyMap& inner) {
    if (inner.codomain_arity() != outer.domain_arity()) {
        throw PreconditionError("cannot compose: inner codomain arity " + std::to_string(inner.codomain_arity()) +
                                " differs from outer domain arity " + std::to_string(outer.domain_arity()));
    }
    std::vector<Polynomial> comps;
    comps.reserve(outer.codomain_arity());
    for (const auto& c : outer.components()) comps.push_back(c.substitute(inner.components(), inner.domain()));
    return PolyMap(inner.domain(), std::move(comps), outer.codomain());
}

// Row i is the gradient of component i, columns in ring variable order.
inline PolyMatrix jacobian_matrix(std::span<const Polynomial> polys, const RingPtr& ring) {
    PolyMatrix m;
    m.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Polynomial> row;
        row.reserve(ring->arity());
        for (std::size_t j = 0; j < ring->arity(); ++j) row.push_back(p.derivative(j));
        m.push_back(std::move(row));
    }
    return m;
}

inline PolyMatrix jacobian_matrix(const PolyMap& f) { return jacobian_matrix(f.components(), f.domain()); }

namespace detail {

inline Polynomial cofactor_determinant(const PolyMatrix& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    // n == 3: expansion along the first row.
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// Fraction-free Bareiss elimination; every division is exact.
inline Polynomial bareiss_determinant(PolyMatrix a, const RingPtr& ring) {
    const std::size_t n = a.size();
    Polynomial previous = Polynomial::constant(ring, Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial(ring);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
            }
        }
        previous = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace detail

inline Polynomial determinant(const PolyMatrix& a, const RingPtr& ring) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial::constant(ring, Rational(1));
    for (const auto& row : a) {
        if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
    }
    if (n <= 3) return detail::cofactor_determinant(a);
    return detail::bareiss_determinant(a, ring);
}

inline Polynomial jacobian_determinant(const PolyMap& f) {
    f.require_square();
    return determinant(jacobian_matrix(f), f.domain());
}

// Rank over the rationals of a constant matrix, by Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational factor = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace germlab
