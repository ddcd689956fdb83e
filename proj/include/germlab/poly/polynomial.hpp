#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/poly/monomial.hpp"
#include "germlab/poly/rational.hpp"

namespace germlab {

// Named coordinates of an affine space. Rings are shared by pointer between
// the polynomials living in them and compared by variable names.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw PreconditionError("a ring needs at least one variable");
        if (names_.size() > kMaxArity) {
            throw PreconditionError("ring arity exceeds " + std::to_string(kMaxArity));
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!is_identifier(names_[i])) throw PreconditionError("invalid variable name '" + names_[i] + "'");
            for (std::size_t j = 0; j < i; ++j) {
                if (names_[i] == names_[j]) throw PreconditionError("duplicate variable name '" + names_[i] + "'");
            }
        }
    }

    std::size_t arity() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) return i;
        }
        return std::nullopt;
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

    static bool is_identifier(std::string_view s) {
        if (s.empty()) return false;
        auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
        if (!alpha(s[0])) return false;
        return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
    }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

struct Term {
    Monomial mono;
    Rational coef;

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted
// descending under DegRevLex with no zero coefficients, so structural
// equality is mathematical equality. Algorithms needing another order sort a
// private copy of the terms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({Monomial(p.ring_->arity()), c});
        return p;
    }

    static Polynomial variable(RingPtr ring, std::size_t index) {
        Polynomial p(ring);
        if (index >= p.ring_->arity()) throw PreconditionError("variable index out of range");
        p.terms_.push_back({Monomial::variable(p.ring_->arity(), index), Rational(1)});
        return p;
    }

    static Polynomial variable(RingPtr ring, std::string_view name) {
        auto idx = ring->index_of(name);
        if (!idx) throw PreconditionError("unknown variable '" + std::string(name) + "'");
        return variable(std::move(ring), *idx);
    }

    static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = Rational(1)) {
        Polynomial p(ring);
        if (m.arity() != p.ring_->arity()) throw PreconditionError("monomial arity does not match ring");
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    // Canonicalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        for (const auto& t : terms) {
            if (t.mono.arity() != p.ring_->arity()) throw PreconditionError("monomial arity does not match ring");
        }
        p.terms_ = canonicalize(std::move(terms));
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t arity() const noexcept { return ring_->arity(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Rational constant_term() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
        return Rational(0);
    }

    // Largest total degree of a term; -1 for the zero polynomial.
    int total_degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    bool vanishes_at_origin() const { return constant_term() == 0; }

    // Coefficient of the DegRevLex-leading term.
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
        return terms_.front().coef;
    }

    bool involves(std::size_t var) const {
        return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
    }

    // Same polynomial viewed in another ring object with identical variable names.
    Polynomial rehome(RingPtr ring) const {
        if (!same_ring(ring_, ring)) throw PreconditionError("cannot rehome polynomial into a different ring");
        Polynomial p(std::move(ring));
        p.terms_ = terms_;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a, b);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.size() == 1 || b.size() == 1) {
            // Multiplication by a single term preserves the order of the other factor.
            const Polynomial& mono = a.size() == 1 ? a : b;
            const Polynomial& other = a.size() == 1 ? b : a;
            r.terms_.reserve(other.size());
            for (const auto& t : other.terms_) {
                r.terms_.push_back({t.mono * mono.terms_[0].mono, t.coef * mono.terms_[0].coef});
            }
            return r;
        }
        std::vector<Term> products;
        products.reserve(a.size() * b.size());
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, s.coef * t.coef});
        }
        r.terms_ = canonicalize(std::move(products));
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.ring_);
        if (c == 0) return r;
        r.terms_ = p.terms_;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(ring_, Rational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e > 0) base *= base;
        }
        return result;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / leading_coefficient();
        return inv * *this;
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != arity()) throw PreconditionError("evaluation point has wrong length");
        const std::size_t n = arity();
        // Powers are cached per variable up to the degree actually used.
        std::vector<std::vector<Rational>> powers(n, std::vector<Rational>{Rational(1)});
        Rational sum = 0;
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (std::size_t i = 0; i < n; ++i) {
                const int e = t.mono[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[i]);
                v *= pw[e];
            }
            sum += v;
        }
        return sum;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= arity()) throw PreconditionError("variable index out of range");
        std::vector<Term> out;
        for (const auto& t : terms_) {
            const int e = t.mono[var];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.set(var, e - 1);
            out.push_back({m, t.coef * e});
        }
        Polynomial r(ring_);
        r.terms_ = canonicalize(std::move(out));
        return r;
    }

    // Replaces variable i by images[i]; the result lives in the images' ring.
    Polynomial substitute(std::span<const Polynomial> images, const RingPtr& target) const {
        if (images.size() != arity()) throw PreconditionError("substitution needs one image per variable");
        for (const auto& im : images) {
            if (!same_ring(im.ring(), target)) throw PreconditionError("substitution images must share the target ring");
        }
        const std::size_t n = arity();
        std::vector<std::vector<Polynomial>> powers(n, std::vector<Polynomial>{constant(target, Rational(1))});
        Polynomial sum(target);
        for (const auto& t : terms_) {
            Polynomial v = constant(target, t.coef);
            for (std::size_t i = 0; i < n; ++i) {
                const int e = t.mono[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
                v *= pw[e];
            }
            sum += v;
        }
        return sum;
    }

    // Sum of the terms of total degree d.
    Polynomial homogeneous_part(int d) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            if (t.mono.degree() == d) r.terms_.push_back(t);
        }
        return r;
    }

    bool is_homogeneous() const {
        return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
    }

    // Smallest total degree of a term; +infinity for zero.
    ExtNat order_at_origin() const {
        if (terms_.empty()) return ExtNat::infinity();
        // DegRevLex sorts by degree first, so the last term has minimal degree.
        return ExtNat::finite(static_cast<std::size_t>(terms_.back().mono.degree()));
    }

    std::string to_string() const;

    static void require_same_ring(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_ || !b.ring_) throw PreconditionError("polynomial has no ring");
        if (!same_ring(a.ring_, b.ring_)) throw PreconditionError("polynomials live in different rings");
    }

private:
    static bool canonical_greater(const Monomial& a, const Monomial& b) {
        return MonomialOrder::deg_rev_lex().compare(a, b) == std::strong_ordering::greater;
    }

    static std::vector<Term> canonicalize(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return canonical_greater(a.mono, b.mono); });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coef += t.coef;
            } else {
                if (!out.empty() && out.back().coef == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        return out;
    }

    Polynomial combine(const Polynomial& b, bool subtract) const {
        require_same_ring(*this, b);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + b.terms_.size());
        auto i = terms_.begin();
        auto j = b.terms_.begin();
        const auto order = MonomialOrder::deg_rev_lex();
        while (i != terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != terms_.end() && order.compare(i->mono, j->mono) > 0)) {
                r.terms_.push_back(*i++);
            } else if (i == terms_.end() || order.compare(i->mono, j->mono) < 0) {
                r.terms_.push_back({j->mono, subtract ? Rational(-j->coef) : j->coef});
                ++j;
            } else {
                Rational c = subtract ? Rational(i->coef - j->coef) : Rational(i->coef + j->coef);
                if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline ExtNat order_at_origin(const Polynomial& p) { return p.order_at_origin(); }

// Lowest-degree homogeneous part.
inline Polynomial initial_form(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("initial form of the zero polynomial is undefined");
    return p.homogeneous_part(static_cast<int>(p.order_at_origin().value()));
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) { return p.evaluate(point); }

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

// Exact quotient p / q; throws when q does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
    Polynomial::require_same_ring(p, q);
    if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
    const auto& lead = q.terms().front();
    Polynomial rest = p;
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        const auto& t = rest.terms().front();
        if (!lead.mono.divides(t.mono)) throw PreconditionError("polynomial division is not exact");
        Term qt{t.mono / lead.mono, t.coef / lead.coef};
        rest -= Polynomial::monomial(p.ring(), qt.mono, qt.coef) * q;
        quotient.push_back(std::move(qt));
    }
    return Polynomial::from_terms(p.ring(), std::move(quotient));
}

namespace detail {

inline std::string monomial_string(const Monomial& m, const PolyRing& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.name(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

}  // namespace detail

// Terms in canonical order, single spaces around binary signs, coefficient
// 1 omitted before a monomial: "x^2 - 3/2*x*y + 1".
inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coef < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        Rational mag = abs(t.coef);
        if (t.mono.is_one()) {
            out += germlab::to_string(mag);
        } else {
            if (mag != 1) out += germlab::to_string(mag) + '*';
            out += detail::monomial_string(t.mono, *ring_);
        }
    }
    return out;
}

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace germlab
