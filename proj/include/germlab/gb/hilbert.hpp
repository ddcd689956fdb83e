#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/poly/monomial.hpp"
#include "germlab/poly/rational.hpp"

namespace germlab {

// Dense univariate integer polynomial, coefficient i of t^i, no trailing zeros.
using IntPoly = std::vector<Integer>;

namespace hilbert_detail {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline IntPoly add(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

// 1 - t^d
inline IntPoly one_minus_power(int d) {
    if (d == 0) return {};
    IntPoly p(static_cast<std::size_t>(d) + 1, Integer(0));
    p[0] = 1;
    p[static_cast<std::size_t>(d)] = -1;
    return p;
}

inline IntPoly shift(IntPoly p, int d) {
    if (p.empty()) return p;
    p.insert(p.begin(), static_cast<std::size_t>(d), Integer(0));
    return p;
}

// Minimal generators, sorted for use as a memo key.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                            b.exponents().end());
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); });
        if (!redundant) out.push_back(g);
    }
    return out;
}

using Key = std::vector<std::vector<int>>;

inline Key key_of(const std::vector<Monomial>& gens) {
    Key k;
    k.reserve(gens.size());
    for (const auto& g : gens) k.emplace_back(g.exponents().begin(), g.exponents().end());
    return k;
}

inline bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!gens[i].coprime(gens[j])) return false;
        }
    }
    return true;
}

// Numerator N with HS(S/M) = N(t)/(1-t)^n. Pivot rule on the variable x
// occurring in the most generators, with e its least positive exponent:
//   N(M) = (1 - t^e) * N(M without x-generators) + t^e * N(M : x^e).
inline IntPoly numerator(std::vector<Monomial> gens, std::map<Key, IntPoly>& memo) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return IntPoly{Integer(1)};
    if (gens.front().is_one()) return {};
    Key key = key_of(gens);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    IntPoly result;
    if (pairwise_coprime(gens)) {
        result = IntPoly{Integer(1)};
        for (const auto& g : gens) result = multiply(result, one_minus_power(g.degree()));
    } else {
        const std::size_t n = gens.front().arity();
        std::size_t pivot = 0;
        std::size_t best_count = 0;
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t count = 0;
            for (const auto& g : gens) count += g[v] > 0 ? 1 : 0;
            if (count > best_count) {
                best_count = count;
                pivot = v;
            }
        }
        int e = 0;
        for (const auto& g : gens) {
            if (g[pivot] > 0 && (e == 0 || g[pivot] < e)) e = g[pivot];
        }
        std::vector<Monomial> without;
        std::vector<Monomial> colon;
        for (const auto& g : gens) {
            if (g[pivot] == 0) without.push_back(g);
            Monomial q = g;
            q.set(pivot, std::max(0, g[pivot] - e));
            colon.push_back(q);
        }
        result = add(multiply(one_minus_power(e), numerator(std::move(without), memo)),
                     shift(numerator(std::move(colon), memo), e));
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace hilbert_detail

// Hilbert series of S/M, S the polynomial ring in `arity` variables, as
// numerator / (1 - t)^arity.
struct HilbertSeries {
    IntPoly numerator;
    std::size_t arity = 0;

    // Cancels factors (1 - t): returns (Q, d) with HS = Q / (1 - t)^d, Q(1) != 0.
    std::pair<IntPoly, std::size_t> lowest_terms() const {
        IntPoly q = numerator;
        std::size_t d = arity;
        auto value_at_one = [](const IntPoly& p) {
            Integer s = 0;
            for (const auto& c : p) s += c;
            return s;
        };
        while (d > 0 && !q.empty() && value_at_one(q) == 0) {
            // q = (1 - t) * r with r_k = sum_{i <= k} q_i.
            IntPoly r(q.size() - 1, Integer(0));
            Integer acc = 0;
            for (std::size_t k = 0; k + 1 < q.size(); ++k) {
                acc += q[k];
                r[k] = acc;
            }
            hilbert_detail::trim(r);
            q = std::move(r);
            --d;
        }
        return {q, d};
    }

    // Coefficients of the power series expansion up to t^max_degree.
    std::vector<Integer> expand(std::size_t max_degree) const {
        std::vector<Integer> series(max_degree + 1, Integer(0));
        for (std::size_t i = 0; i < numerator.size() && i <= max_degree; ++i) series[i] = numerator[i];
        for (std::size_t k = 0; k < arity; ++k) {
            for (std::size_t i = 1; i <= max_degree; ++i) series[i] += series[i - 1];
        }
        return series;
    }
};

inline HilbertSeries hilbert_series_monomial(const std::vector<Monomial>& generators, std::size_t arity) {
    for (const auto& g : generators) {
        if (g.arity() != arity) throw PreconditionError("monomial arity mismatch");
    }
    std::map<hilbert_detail::Key, IntPoly> memo;
    return {hilbert_detail::numerator(generators, memo), arity};
}

// True iff every variable has a pure power among the leading monomials.
inline bool staircase_is_finite(std::span<const Monomial> leading, std::size_t arity) {
    for (std::size_t v = 0; v < arity; ++v) {
        bool found = std::any_of(leading.begin(), leading.end(), [&](const Monomial& m) {
            return m[v] > 0 && m.degree() == m[v];
        });
        if (!found) return false;
    }
    return true;
}

// Enumerates standard monomials (not divisible by any leading monomial) of a
// finite staircase, visiting each once. Stops early when visit returns false.
inline void for_each_standard_monomial(std::span<const Monomial> leading, std::size_t arity,
                                       const std::function<bool(const Monomial&)>& visit) {
    if (!staircase_is_finite(leading, arity)) throw PreconditionError("staircase is infinite");
    Monomial current(arity);
    bool stop = false;
    // Divisibility of a partial monomial (later variables zero) is inherited by
    // all of its extensions, which prunes the search.
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (stop) return;
        if (v == arity) {
            if (!visit(current)) stop = true;
            return;
        }
        for (int e = 0;; ++e) {
            current.set(v, e);
            bool divisible = std::any_of(leading.begin(), leading.end(), [&](const Monomial& m) { return m.divides(current); });
            if (divisible || stop) break;
            walk(v + 1);
        }
        current.set(v, 0);
    };
    walk(0);
}

inline std::vector<Monomial> standard_monomials(std::span<const Monomial> leading, std::size_t arity,
                                                std::size_t cap = static_cast<std::size_t>(-1)) {
    std::vector<Monomial> out;
    for_each_standard_monomial(leading, arity, [&](const Monomial& m) {
        out.push_back(m);
        return out.size() < cap;
    });
    return out;
}

// Number of standard monomials of the basis of I under `order`; +infinity if
// the staircase is infinite. Local order: dimension of the local algebra at 0.
inline ExtNat quotient_dimension(const Ideal& ideal, const MonomialOrder& order, const Limits& limits = {});

// All monomials of total degree d in n variables.
inline std::vector<Polynomial> monomials_of_degree(const RingPtr& ring, int d) {
    const std::size_t n = ring->arity();
    std::vector<Polynomial> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(Polynomial::monomial(ring, Monomial::from_exponents(e)));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (n > 0) rec(rec, 0, d);
    return out;
}

// dim O_0 / I for an ideal with finite global quotient, by global bases only.
// The lengths of Q[x] / (I + m^N) grow with N until m^N lies in I O_0;
// equal lengths at N and N + 1 certify that point by Nakayama.
inline std::size_t truncated_local_dimension(const Ideal& ideal, const Limits& limits) {
    const auto order = MonomialOrder::deg_rev_lex();
    std::size_t previous = 0;
    for (int n = 1;; ++n) {
        limits.check_cancel();
        const std::size_t d = quotient_dimension(ideal.with(monomials_of_degree(ideal.ring(), n)), order, limits).value();
        if (n > 1 && d == previous) return d;
        previous = d;
    }
}

inline ExtNat quotient_dimension(const Ideal& ideal, const MonomialOrder& order, const Limits& limits) {
    if (order.is_local() && ideal.ring()->arity() > 0 &&
        quotient_dimension(ideal, MonomialOrder::deg_rev_lex(), limits).is_finite()) {
        return ExtNat::finite(truncated_local_dimension(ideal, limits));
    }
    const auto basis = ideal.basis(order, limits);
    const std::size_t n = ideal.ring()->arity();
    if (basis->is_unit()) return ExtNat::finite(0);
    if (!staircase_is_finite(basis->leading, n)) return ExtNat::infinity();
    std::size_t count = 0;
    for_each_standard_monomial(basis->leading, n, [&](const Monomial&) {
        ++count;
        return true;
    });
    return ExtNat::finite(count);
}

// Dimension of the zero set, read off the Hilbert series of the DegRevLex
// leading monomial ideal.
inline std::size_t krull_dimension(const Ideal& ideal, const Limits& limits = {}) {
    const auto basis = ideal.basis(MonomialOrder::deg_rev_lex(), limits);
    if (basis->is_unit()) throw PreconditionError("empty variety: the ideal is the unit ideal");
    return hilbert_series_monomial(basis->leading, ideal.ring()->arity()).lowest_terms().second;
}

}  // namespace germlab
