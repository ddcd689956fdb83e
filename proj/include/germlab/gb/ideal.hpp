#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/limits.hpp"
#include "germlab/gb/reduction.hpp"
#include "germlab/poly/polynomial.hpp"

namespace germlab {

// Reduced Groebner basis (global order) or minimal monic standard basis
// (local order). Elements are sorted by leading monomial, largest first.
struct GBResult {
    std::vector<Polynomial> basis;
    std::vector<Monomial> leading;  // leading monomial of each element under `order`
    MonomialOrder order = MonomialOrder::deg_rev_lex();
    bool is_local = false;

    bool is_unit() const { return leading.size() == 1 && leading[0].is_one(); }
};

namespace gb::detail {

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::size_t seq;
};

// Drop elements whose leading monomial is a multiple of another's.
inline std::vector<Terms> minimalize(std::vector<Terms> basis) {
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = basis[i].front().mono;
            const Monomial& mj = basis[j].front().mono;
            if (mj.divides(mi) && (!(mi == mj) || j < i)) keep[i] = false;
        }
    }
    std::vector<Terms> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (keep[i]) minimal.push_back(std::move(basis[i]));
    }
    return minimal;
}

inline GBResult package(const RingPtr& ring, std::vector<Terms> minimal, const MonomialOrder& order) {
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms& a, const Terms& b) { return order.compare(a.front().mono, b.front().mono) > 0; });
    GBResult result;
    result.order = order;
    result.is_local = order.is_local();
    for (auto& t : minimal) {
        result.leading.push_back(t.front().mono);
        result.basis.push_back(to_polynomial(ring, std::move(t)));
    }
    return result;
}

// Buchberger's algorithm with the coprime-leading-term and chain criteria
// and the normal selection strategy. With a local order the reduction step
// is Mora's weak normal form, which makes this the tangent cone algorithm.
inline GBResult buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                           const MonomialOrder& order, const Limits& limits) {
    if (order.kind() == MonomialOrder::Kind::Block && order.split() >= ring->arity()) {
        throw PreconditionError("block split index must be smaller than the arity");
    }
    std::vector<Terms> basis;
    std::vector<CriticalPair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::size_t seq = 0;

    auto check_guards = [&](const Terms& t) {
        if (max_degree(t) > limits.max_degree) {
            throw ResourceError("basis element exceeds the degree guard (" + std::to_string(limits.max_degree) + ")");
        }
        if (basis.size() >= limits.max_basis) {
            throw ResourceError("basis exceeds the size guard (" + std::to_string(limits.max_basis) + ")");
        }
    };

    auto add = [&](Terms t) {
        make_monic(t);
        check_guards(t);
        const std::size_t k = basis.size();
        basis.push_back(std::move(t));
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial& a = basis[i].front().mono;
            const Monomial& b = basis[k].front().mono;
            if (a.coprime(b)) continue;
            pairs.push_back({i, k, lcm(a, b), seq++});
            pending.insert({i, k});
        }
    };

    auto pointers = [&]() {
        std::vector<const Terms*> ptrs;
        ptrs.reserve(basis.size());
        for (const auto& b : basis) ptrs.push_back(&b);
        return ptrs;
    };

    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) throw PreconditionError("generator outside the ideal's ring");
        Terms t = reduce(sorted_terms(g, order), pointers(), order);
        if (!t.empty()) add(std::move(t));
    }

    auto chain_redundant = [&](const CriticalPair& p) {
        for (std::size_t l = 0; l < basis.size(); ++l) {
            if (l == p.i || l == p.j) continue;
            if (!basis[l].front().mono.divides(p.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
            if (pending.count(key(p.i, l)) == 0 && pending.count(key(p.j, l)) == 0) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        limits.check_cancel();
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const CriticalPair& a, const CriticalPair& b) {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            return a.seq < b.seq;
        });
        CriticalPair pair = *it;
        pairs.erase(it);
        pending.erase({pair.i, pair.j});
        if (chain_redundant(pair)) continue;
        Terms s = s_polynomial(basis[pair.i], basis[pair.j], order);
        if (s.empty()) continue;
        Terms h = reduce(std::move(s), pointers(), order);
        if (!h.empty()) add(std::move(h));
    }

    std::vector<Terms> minimal = minimalize(std::move(basis));

    if (order.is_global()) {
        // Tail reduction; leading monomials are unchanged since the basis is minimal.
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<const Terms*> others;
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) others.push_back(&minimal[j]);
            }
            Terms head{minimal[i].front()};
            Terms tail(minimal[i].begin() + 1, minimal[i].end());
            Terms reduced = reduce_global(std::move(tail), others, order);
            head.insert(head.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
            minimal[i] = std::move(head);
        }
    } else {
        // A unit of the local ring generates everything.
        for (const auto& t : minimal) {
            if (t.front().mono.is_one()) {
                minimal = {Terms{{Monomial(ring->arity()), Rational(1)}}};
                break;
            }
        }
    }

    return package(ring, std::move(minimal), order);
}

// Standard basis for the local order by homogenization. A new variable t is
// put in front; on homogeneous input the global order block(1) compares
// monomials of one degree exactly as the local order compares their
// dehomogenizations. A Groebner basis of the homogenized generators
// dehomogenizes to a standard basis of the ideal in the local ring.
inline GBResult lazard_basis(const RingPtr& ring, const std::vector<Polynomial>& generators, const Limits& limits) {
    const std::size_t n = ring->arity();
    std::vector<std::string> names{"_t"};
    for (std::size_t i = 0; i < n; ++i) names.push_back(ring->name(i));
    const RingPtr hring = make_ring(std::move(names));

    std::vector<Polynomial> homogeneous;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) throw PreconditionError("generator outside the ideal's ring");
        const int top = g.total_degree();
        Terms terms;
        for (const auto& term : g.terms()) {
            Monomial m(n + 1);
            m.set(0, top - term.mono.degree());
            for (std::size_t i = 0; i < n; ++i) m.set(i + 1, term.mono[i]);
            terms.push_back({m, term.coef});
        }
        homogeneous.push_back(Polynomial::from_terms(hring, std::move(terms)));
    }

    const MonomialOrder local = MonomialOrder::local();
    const GBResult hbasis = buchberger(hring, homogeneous, MonomialOrder::block(1), limits);
    std::vector<Terms> basis;
    for (const auto& h : hbasis.basis) {
        Terms terms;
        for (const auto& term : h.terms()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.set(i, term.mono[i + 1]);
            terms.push_back({m, term.coef});
        }
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return local.compare(a.mono, b.mono) > 0; });
        make_monic(terms);
        basis.push_back(std::move(terms));
    }
    std::vector<Terms> minimal = minimalize(std::move(basis));
    for (const auto& t : minimal) {
        if (t.front().mono.is_one()) {
            minimal = {Terms{{Monomial(n), Rational(1)}}};
            break;
        }
    }
    return package(ring, std::move(minimal), local);
}

inline GBResult compute_basis(const RingPtr& ring, const std::vector<Polynomial>& generators,
                              const MonomialOrder& order, const Limits& limits) {
    if (order.is_local() && ring->arity() < kMaxArity) return lazard_basis(ring, generators, limits);
    return buchberger(ring, generators, order, limits);
}

}  // namespace gb::detail

// Generator list in a polynomial ring with bases memoized per order. Copies
// share the memo table; entries are write-once and observably transparent.
class Ideal {
public:
    Ideal() = default;

    Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : generators) {
            if (!same_ring(g.ring(), ring_)) throw PreconditionError("generator outside the ideal's ring");
            if (!g.is_zero()) generators_.push_back(g.rehome(ring_));
        }
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    std::shared_ptr<const GBResult> basis(const MonomialOrder& order, const Limits& limits = {}) const {
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->entries.find(order);
            if (it != cache_->entries.end()) return it->second;
        }
        auto computed = std::make_shared<const GBResult>(gb::detail::compute_basis(ring_, generators_, order, limits));
        std::lock_guard lock(cache_->mutex);
        return cache_->entries.emplace(order, std::move(computed)).first->second;
    }

    bool is_unit(const Limits& limits = {}) const { return basis(MonomialOrder::deg_rev_lex(), limits)->is_unit(); }

    Ideal rehome(RingPtr ring) const {
        std::vector<Polynomial> gens;
        for (const auto& g : generators_) gens.push_back(g.rehome(ring));
        return Ideal(std::move(ring), std::move(gens));
    }

    Ideal with(const std::vector<Polynomial>& extra) const {
        std::vector<Polynomial> gens = generators_;
        gens.insert(gens.end(), extra.begin(), extra.end());
        return Ideal(ring_, std::move(gens));
    }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        if (!same_ring(a.ring_, b.ring_)) throw PreconditionError("ideals live in different rings");
        return a.with(b.generators_);
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i) s += ", ";
            s += generators_[i].to_string();
        }
        if (generators_.empty()) s += "0";
        return s + ")";
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<MonomialOrder, std::shared_ptr<const GBResult>> entries;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline GBResult buchberger_basis(const Ideal& ideal, const MonomialOrder& order, const Limits& limits = {}) {
    return *ideal.basis(order, limits);
}

// Division remainder (global order) or Mora weak normal form (local order).
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& g, const MonomialOrder& order) {
    for (const auto& q : g) Polynomial::require_same_ring(p, q);
    std::vector<gb::detail::Terms> sorted;
    sorted.reserve(g.size());
    for (const auto& q : g) {
        if (!q.is_zero()) sorted.push_back(gb::detail::sorted_terms(q, order));
    }
    std::vector<const gb::detail::Terms*> ptrs;
    for (const auto& t : sorted) ptrs.push_back(&t);
    return gb::detail::to_polynomial(p.ring(), gb::detail::reduce(gb::detail::sorted_terms(p, order), ptrs, order));
}

// Ideal membership via the reduced DegRevLex basis.
inline bool contains(const Ideal& ideal, const Polynomial& p, const Limits& limits = {}) {
    if (p.is_zero()) return true;
    return normal_form(p, ideal.basis(MonomialOrder::deg_rev_lex(), limits)->basis, MonomialOrder::deg_rev_lex()).is_zero();
}

// Equality of ideals: reduced bases are unique.
inline bool ideal_equal(const Ideal& a, const Ideal& b, const Limits& limits = {}) {
    if (!same_ring(a.ring(), b.ring())) return false;
    const auto order = MonomialOrder::deg_rev_lex();
    const auto& ga = a.basis(order, limits)->basis;
    const auto& gb = b.basis(order, limits)->basis;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (!(ga[i] == gb[i].rehome(a.ring()))) return false;
    }
    return true;
}

}  // namespace germlab
