#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "germlab/errors.hpp"

namespace germlab {

// Exact rational coefficients. mpq_class keeps numerator and denominator
// coprime with a positive denominator as long as every value is built
// through canonicalizing constructors, which the helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long numerator, long denominator = 1) {
    if (denominator == 0) throw PreconditionError("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw PreconditionError("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// A natural number or +infinity. Returned wherever a count or an order may
// legitimately be infinite (order of the zero polynomial, dimension of a
// quotient with an infinite staircase); callers must branch on it.
class ExtNat {
public:
    static ExtNat finite(std::size_t n) { return ExtNat(n); }
    static ExtNat infinity() { return ExtNat(); }

    bool is_finite() const noexcept { return value_.has_value(); }
    bool is_infinite() const noexcept { return !value_.has_value(); }

    std::size_t value() const {
        if (!value_) throw PreconditionError("value is infinite");
        return *value_;
    }

    friend bool operator==(const ExtNat&, const ExtNat&) = default;
    friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return finite(*a.value_ + *b.value_);
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

    friend std::ostream& operator<<(std::ostream& os, const ExtNat& e) { return os << e.to_string(); }

private:
    ExtNat() = default;
    explicit ExtNat(std::size_t n) : value_(n) {}
    std::optional<std::size_t> value_;
};

}  // namespace germlab
