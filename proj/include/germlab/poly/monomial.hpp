#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "germlab/errors.hpp"

namespace germlab {

inline constexpr std::size_t kMaxArity = 16;

// Exponent vector of fixed arity with cached total degree. Storage is inline
// so that monomial arithmetic never allocates.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t arity) : arity_(check_arity(arity)) {}

    Monomial(std::initializer_list<int> exponents) : arity_(check_arity(exponents.size())) {
        std::size_t i = 0;
        for (int e : exponents) set(i++, e);
    }

    static Monomial from_exponents(std::span<const int> exponents) {
        Monomial m(exponents.size());
        for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
        return m;
    }

    static Monomial variable(std::size_t arity, std::size_t index, int power = 1) {
        Monomial m(arity);
        m.set(index, power);
        return m;
    }

    std::size_t arity() const noexcept { return arity_; }
    int degree() const noexcept { return degree_; }
    int operator[](std::size_t i) const noexcept { return exp_[i]; }
    std::span<const int> exponents() const noexcept { return {exp_.data(), arity_}; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, int e) {
        if (e < 0) throw PreconditionError("negative exponent");
        degree_ += e - exp_[i];
        exp_[i] = e;
    }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (exp_[i] > other.exp_[i]) return false;
        }
        return true;
    }

    bool coprime(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < arity_; ++i) {
            if (exp_[i] != 0 && other.exp_[i] != 0) return false;
        }
        return true;
    }

    // Variables with nonzero exponent in positions [begin, end).
    int degree_in(std::size_t begin, std::size_t end) const noexcept {
        int d = 0;
        for (std::size_t i = begin; i < end; ++i) d += exp_[i];
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.arity_);
        for (std::size_t i = 0; i < a.arity_; ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    // Exact quotient; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.arity_);
        for (std::size_t i = 0; i < a.arity_; ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.arity_);
        for (std::size_t i = 0; i < a.arity_; ++i) {
            r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
            r.degree_ += r.exp_[i];
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
    }

private:
    static std::uint8_t check_arity(std::size_t n) {
        if (n > kMaxArity) throw PreconditionError("ring arity exceeds " + std::to_string(kMaxArity));
        return static_cast<std::uint8_t>(n);
    }

    std::array<int, kMaxArity> exp_{};
    std::uint8_t arity_ = 0;
    int degree_ = 0;
};

// Term orders. Lex, DegRevLex and Block are global (1 is the smallest
// monomial); LocalDegRevLex is local (1 is the largest): lower total degree
// compares greater, ties are broken by reverse lexicographic comparison.
class MonomialOrder {
public:
    enum class Kind : std::uint8_t { Lex, DegRevLex, LocalDegRevLex, Block };

    static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static constexpr MonomialOrder deg_rev_lex() { return MonomialOrder(Kind::DegRevLex, 0); }
    static constexpr MonomialOrder local() { return MonomialOrder(Kind::LocalDegRevLex, 0); }
    // Front block [0, split) is eliminated first.
    static constexpr MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr std::size_t split() const noexcept { return split_; }
    constexpr bool is_local() const noexcept { return kind_ == Kind::LocalDegRevLex; }
    constexpr bool is_global() const noexcept { return !is_local(); }

    std::string name() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::DegRevLex: return "degrevlex";
            case Kind::LocalDegRevLex: return "local";
            case Kind::Block: return "block:" + std::to_string(split_);
        }
        return "?";
    }

    // Unchecked comparison for hot loops; both monomials share one arity.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
        switch (kind_) {
            case Kind::Lex:
                for (std::size_t i = 0; i < a.arity(); ++i) {
                    if (a[i] != b[i]) return a[i] <=> b[i];
                }
                return std::strong_ordering::equal;
            case Kind::DegRevLex:
                if (a.degree() != b.degree()) return a.degree() <=> b.degree();
                return rev_lex(a, b, 0, a.arity());
            case Kind::LocalDegRevLex:
                if (a.degree() != b.degree()) return b.degree() <=> a.degree();
                return rev_lex(a, b, 0, a.arity());
            case Kind::Block: {
                const std::size_t n = a.arity();
                const std::size_t k = std::min(split_, n);
                const int fa = a.degree_in(0, k);
                const int fb = b.degree_in(0, k);
                if (fa != fb) return fa <=> fb;
                auto front = rev_lex(a, b, 0, k);
                if (front != std::strong_ordering::equal) return front;
                const int ba = a.degree() - fa;
                const int bb = b.degree() - fb;
                if (ba != bb) return ba <=> bb;
                return rev_lex(a, b, k, n);
            }
        }
        return std::strong_ordering::equal;
    }

    friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
    friend constexpr auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

private:
    constexpr MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

    // Among equal degrees: the monomial with the smaller exponent in the last
    // differing variable is the larger one.
    static std::strong_ordering rev_lex(const Monomial& a, const Monomial& b, std::size_t begin,
                                        std::size_t end) noexcept {
        for (std::size_t i = end; i-- > begin;) {
            if (a[i] != b[i]) return b[i] <=> a[i];
        }
        return std::strong_ordering::equal;
    }

    Kind kind_;
    std::size_t split_;
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              const MonomialOrder& order) {
    if (a.arity() != b.arity()) throw PreconditionError("monomial arity mismatch");
    if (order.kind() == MonomialOrder::Kind::Block && order.split() >= a.arity()) {
        throw PreconditionError("block split index must be smaller than the arity");
    }
    return order.compare(a, b);
}

}  // namespace germlab
