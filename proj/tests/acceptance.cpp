// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every check is an exact comparison; random suites are seeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "germlab/cli/driver.hpp"
#include "support.hpp"

namespace germlab::acceptance {
namespace {

using testing::I;
using testing::P;
using testing::pt;
using testing::Rng;

class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void note(const std::string& s) { notes_.push_back(s); }
    void count_case() { ++cases_; }

    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks_ << " checks";
        if (cases_) s << ", " << cases_ << " cases";
        for (const auto& n : notes_) s << ", " << n;
        if (failed_) {
            s << "; " << failed_ << " failed:";
            for (const auto& f : failures_) s << " [" << f << "]";
        }
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::size_t cases_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

GenericityConfig seeded(std::uint64_t seed) {
    GenericityConfig cfg;
    cfg.seed = seed;
    return cfg;
}

PolyMap map_of(const RingPtr& ring, std::initializer_list<const char*> comps, const RingPtr& target) {
    std::vector<Polynomial> ps;
    for (const char* c : comps) ps.push_back(P(c, ring));
    return PolyMap(ring, ps, target);
}

std::string str(const Ideal& i) { return i.to_string(); }

// ---------------------------------------------------------------- 1 --------

void cusp_family_case(Check& c) {
    const RingPtr st = make_ring({"s", "t"});
    const RingPtr xyt = make_ring({"x", "y", "t"});
    const PolyMap f = map_of(st, {"s^2 - t^2", "s*(s^2 - t^2)", "t"}, xyt);
    const GenericityConfig cfg = seeded(0);

    const Ideal image = image_ideal(f, Ideal::zero(st));
    c.expect(ideal_equal(image, I(xyt, {"y^2 - x^2*(x + t^2)"})), "image ideal " + str(image));
    const Ideal cone = tangent_cone(image);
    c.expect(ideal_equal(cone, I(xyt, {"y^2"})), "tangent cone " + str(cone));
    c.expect(lelong_degree(image) == 2, "lelong_degree");
    const Ideal sing = singular_locus(image);
    c.expect(radical_equal(sing, I(xyt, {"x", "y"})), "singular locus " + str(sing));
    c.expect(fiber_points_count(f, pt({0, 0, 1}), true) == 2, "fiber over (0,0,1)");
    c.expect(regular_multiplicity(f, std::nullopt, cfg) == 1, "regular_multiplicity");
    c.expect(geometric_multiplicity(f, {pt({0, 0, 1})}, cfg) == 2, "geometric_multiplicity with (0,0,1)");
    c.expect(intersection_index(f, cfg) == 2, "intersection_index");
    const PolyMap p = map_of(xyt, {"x", "t"}, make_ring({"a", "b"}));
    c.expect(local_multiplicity(compose_map(p, f)) == 2, "m_0(p o f) for p = (x, t)");
    const FormulaReport r = verify_intersection_formula(f, {pt({0, 0, 1})}, cfg);
    c.expect(r.i0 == 2 && r.regular_mult == 1 && r.lelong == 2, "FormulaReport invariants");
    c.expect(r.holds, "FormulaReport holds");
    c.expect(r.naive_product == 4 && r.naive_product != r.i0, "naive product 4 != 2");
}

// ---------------------------------------------------------------- 2 --------

void cusp_pullback_case(Check& c) {
    const RingPtr xy = make_ring({"x", "y"});
    const RingPtr uv = make_ring({"u", "v"});
    const PolyMap f = map_of(xy, {"x^2", "y"}, uv);
    const PullbackReport r = pullback_report(f, I(uv, {"v^2 - u^3"}), seeded(0));
    c.expect(r.v.generators().size() == 1 && ideal_equal(r.v, I(xy, {"y^2 - x^6"})), "pull-back " + str(r.v));
    c.expect(is_squarefree(P("y^2 - x^6", xy)), "y^2 - x^6 squarefree");
    c.expect(!is_smooth_at_origin(r.v), "pull-back not smooth");
    const Ideal v = I(xy, {"y - x^3"});
    c.expect(divide_exact(P("y^2 - x^6", xy), P("y - x^3", xy)) == P("y + x^3", xy), "V is a component");
    c.expect(is_smooth_at_origin(v), "V smooth");
    c.expect(ideal_equal(image_ideal(f, v), I(uv, {"u^3 - v^2"})), "F(V) = W");
    c.expect(r.verdict == Verdict::HypothesisFailed, std::string("verdict ") + to_string(r.verdict));
}

// ---------------------------------------------------------------- 3 --------

void jacobian_counterexample(Check& c) {
    const RingPtr xy = make_ring({"x", "y"});
    const RingPtr uv = make_ring({"u", "v"});
    const PolyMap f = map_of(xy, {"x^2*y", "x + y"}, uv);
    c.expect(jacobian_determinant(f) == P("x*(2*y - x)", xy), "Jac F = " + jacobian_determinant(f).to_string());
    const Ideal sigma = critical_locus(f);
    std::size_t nonzero = 0;
    for (const auto& g : sigma.generators()) nonzero += g.is_zero() ? 0 : 1;
    c.expect(nonzero == 1, "critical locus principal");
    const Polynomial h = sigma.generators().front();
    for (long k : {-2L, -1L, 1L, 2L, 3L}) {
        const Rational y(k);
        c.expect(h.evaluate(std::vector<Rational>{0, y}) == 0, "vanishes at (0, y)");
        c.expect(h.evaluate(std::vector<Rational>{4 * y * y * y, 3 * y}) == 0, "vanishes at (4y^3, 3y)");
    }
    c.expect(radical_equal(sigma, I(uv, {"u*(27*u - 4*v^3)"})), "zero set {u=0} u {27u = 4v^3}");
    const Ideal v = I(xy, {"y"});
    c.expect(jacobian_nonvanishing_on(f, v), "Jac F nonvanishing on V");
    const Ideal fv = image_ideal(f, v);
    // F(V) lies in sigma: every equation of sigma vanishes on F(V).
    bool inside = true;
    for (const auto& g : sigma.generators()) inside = inside && radical_membership(g, fv);
    c.expect(inside, "F(V) inside sigma");
    c.expect(!radical_equal(fv, sigma), "F(V) is a proper part of sigma");
}

// ---------------------------------------------------------------- 4 --------

void positive_case(Check& c) {
    const RingPtr xy = make_ring({"x", "y"});
    const RingPtr uv = make_ring({"u", "v"});
    const Ideal w = I(uv, {"v"});
    const PullbackReport r = pullback_report(map_of(xy, {"x^2", "y"}, uv), w, seeded(0));
    c.expect(r.mu == 2, "mu");
    c.expect(r.lambda == std::optional<std::size_t>(2), "lambda");
    c.expect(r.kappa == std::optional<std::size_t>(1), "kappa");
    c.expect(r.d == 1, "d");
    c.expect(r.chain_holds == std::optional<bool>(true), "chain_holds");
    c.expect(r.verdict == Verdict::WSmoothCertified, std::string("verdict ") + to_string(r.verdict));
    c.expect(is_smooth_at_origin(w) == (r.verdict == Verdict::WSmoothCertified), "direct smoothness agrees");
}

// ---------------------------------------------------------------- 5a -------

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
    const auto& terms = p.terms();
    return *std::max_element(terms.begin(), terms.end(),
                             [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) < 0; });
}

// Plain multivariate division by `basis`; returns the remainder.
Polynomial remainder(Polynomial h, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    const RingPtr& ring = h.ring();
    Polynomial rest(ring);
    while (!h.is_zero()) {
        const Term lt = leading_term(h, order);
        bool reduced = false;
        for (const auto& g : basis) {
            const Term lg = leading_term(g, order);
            if (lg.mono.divides(lt.mono)) {
                h -= Polynomial::monomial(ring, lt.mono / lg.mono, lt.coef / lg.coef) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            const Polynomial t = Polynomial::monomial(ring, lt.mono, lt.coef);
            rest += t;
            h -= t;
        }
    }
    return rest;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const Term a = leading_term(f, order);
    const Term b = leading_term(g, order);
    const Monomial l = lcm(a.mono, b.mono);
    return Polynomial::monomial(f.ring(), l / a.mono, 1 / a.coef) * f -
           Polynomial::monomial(g.ring(), l / b.mono, 1 / b.coef) * g;
}

void buchberger_suite(Check& c) {
    Rng rng(5001);
    const std::vector<RingPtr> rings = {make_ring({"x", "y"}), make_ring({"x", "y", "z"})};
    const std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::deg_rev_lex()};
    for (int trial = 0; trial < 120; ++trial) {
        c.count_case();
        const RingPtr& ring = rings[static_cast<std::size_t>(trial) % 2];
        const MonomialOrder order = orders[static_cast<std::size_t>(trial / 2) % 2];
        std::vector<Polynomial> gens;
        const long count = rng.uniform(2, 3);
        for (long k = 0; k < count; ++k) gens.push_back(testing::random_polynomial(rng, ring, 3, 1, 3, 3));
        const Ideal ideal(ring, gens);
        const auto gb = ideal.basis(order);
        const auto& basis = gb->basis;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                c.expect(remainder(s_poly(basis[i], basis[j], order), basis, order).is_zero(),
                         "S-polynomial does not reduce, " + order.name() + " " + str(ideal));
            }
        }
        for (const auto& g : gens) c.expect(remainder(g, basis, order).is_zero(), "generator outside basis ideal");
        Polynomial combo(ring);
        for (const auto& g : gens) combo += testing::random_polynomial(rng, ring, 2, 0, 2, 4) * g;
        c.expect(contains(ideal, combo), "combination not a member");
        c.expect(contains(ideal, combo + Polynomial::constant(ring, Rational(1))) == gb->is_unit(),
                 "combination + 1 membership");
    }
}

// ---------------------------------------------------------------- 5b -------

void order_invariance_suite(Check& c) {
    Rng rng(5002);
    const std::vector<RingPtr> rings = {make_ring({"x", "y"}), make_ring({"x", "y", "z"})};
    for (int trial = 0; trial < 120; ++trial) {
        c.count_case();
        const RingPtr& ring = rings[static_cast<std::size_t>(trial) % 2];
        // x_i^d_i plus lower-degree noise makes the ideal zero-dimensional.
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < ring->arity(); ++i) {
            const int d = static_cast<int>(rng.uniform(1, 3));
            Polynomial g = Polynomial::variable(ring, i).pow(static_cast<unsigned>(d));
            if (d > 1) g += testing::random_polynomial(rng, ring, 2, 0, d - 1, 3);
            gens.push_back(g);
        }
        gens.push_back(testing::random_polynomial(rng, ring, 3, 1, 3, 3));
        const Ideal ideal(ring, gens);
        const ExtNat lex = quotient_dimension(ideal, MonomialOrder::lex());
        const ExtNat grevlex = quotient_dimension(ideal, MonomialOrder::deg_rev_lex());
        c.expect(lex.is_finite(), "not zero-dimensional " + str(ideal));
        c.expect(lex == grevlex, "quotient dimension depends on the order for " + str(ideal));
    }
}

// ---------------------------------------------------------------- 5c -------

void graph_suite(Check& c) {
    Rng rng(5003);
    for (int trial = 0; trial < 100; ++trial) {
        c.count_case();
        const std::size_t k = trial % 2 == 0 ? 1 : 2;
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
        const RingPtr source = k == 1 ? make_ring({"x"}) : make_ring({"x", "y"});
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < k; ++i) comps.push_back(Polynomial::variable(source, i));
        for (std::size_t j = 0; j < m; ++j) comps.push_back(testing::random_polynomial(rng, source, 3, 1, 3, 3));
        const PolyMap f(source, comps);
        const FormulaReport r = verify_intersection_formula(f, {}, seeded(static_cast<std::uint64_t>(trial)));
        c.expect(r.holds, "formula fails for graph " + f.component(k).to_string());
        c.expect(r.regular_mult == 1, "regular multiplicity of a graph");
        // A graph is a smooth germ met transversally by a generic kernel.
        c.expect(r.i0 == 1 && r.lelong == 1, "graph invariants");
    }
}

// ---------------------------------------------------------------- 5d -------

struct FiberGerm {
    PolyMap map;
    PolyMap outer;  // psi
    std::size_t multiplicity;
    long b;
};

// psi o (prod (x - r_i y), y^b) o phi: over (0, t^b) the core fiber is the
// 2a or a rational points (+-r_i t, +-t), and phi, psi keep them rational.
FiberGerm rational_fiber_germ(Rng& rng, const RingPtr& ring, bool random_phi = true) {
    long a = 0, b = 0;
    do {
        a = rng.uniform(1, 6);
        b = rng.uniform(1, 2);
    } while (a * b > 6);
    std::set<Rational> roots;
    while (roots.size() < static_cast<std::size_t>(a)) roots.insert(make_rational(rng.uniform(-3, 3), rng.uniform(1, 2)));
    const Polynomial x = Polynomial::variable(ring, 0);
    const Polynomial y = Polynomial::variable(ring, 1);
    Polynomial prod = Polynomial::constant(ring, Rational(1));
    for (const auto& r : roots) prod *= x - Polynomial::constant(ring, r) * y;
    const PolyMap core(ring, {prod, y.pow(static_cast<unsigned>(b))}, ring);
    const PolyMap psi = testing::random_plane_automorphism(rng, ring, true);
    const PolyMap phi = random_phi ? testing::random_plane_automorphism(rng, ring) : PolyMap::identity(ring);
    return {compose_map(psi, compose_map(core, phi)), psi, static_cast<std::size_t>(a * b), b};
}

void stoll_suite(Check& c) {
    Rng rng(5004);
    const RingPtr xy = make_ring({"x", "y"});
    std::set<std::size_t> seen;
    for (int trial = 0; trial < 100; ++trial) {
        c.count_case();
        const FiberGerm g = rational_fiber_germ(rng, xy);
        seen.insert(g.multiplicity);
        c.expect(local_multiplicity(g.map) == g.multiplicity, "m_0 differs from the construction");
        std::set<long> ts;
        while (ts.size() < 3) {
            const long t = rng.uniform(-4, 4);
            if (t != 0) ts.insert(t);
        }
        for (long t : ts) {
            const Rational tb = g.b == 2 ? Rational(t * t) : Rational(t);
            const auto y = g.outer.apply(std::vector<Rational>{0, tb});
            const StollReport r = stoll_check(g.map, y, seeded(static_cast<std::uint64_t>(trial)));
            c.expect(r.all_rational, "fiber not fully rational");
            c.expect(r.rational_sum == g.multiplicity, "sum of local multiplicities " + std::to_string(r.rational_sum) +
                                                           " != " + std::to_string(g.multiplicity));
            c.expect(r.points.size() == g.multiplicity, "fiber size");
            c.expect(std::all_of(r.point_multiplicities.begin(), r.point_multiplicities.end(),
                                 [](std::size_t m) { return m == 1; }),
                     "regular fiber point with multiplicity > 1");
            c.expect(r.equal, "Stoll report not equal");
        }
    }
    c.note("multiplicities seen " + std::to_string(seen.size()) + "/6");
    c.expect(seen.size() == 6, "not every multiplicity 1..6 was exercised");
}

// ---------------------------------------------------------------- 5e -------

void lemma_suite(Check& c) {
    Rng rng(5005);
    const RingPtr xy = make_ring({"x", "y"});
    const std::vector<std::vector<std::string>> subspaces = {{"x"}, {"y"}, {"x", "y"}};
    std::size_t nonvanishing_cases = 0, vanishing_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        c.count_case();
        const bool plain = trial % 2 == 0;  // core map in its own coordinates
        // m_V of the core along {y = 0}, {x = 0} and at 0, where the construction fixes it.
        std::optional<long> along_x_axis, along_y_axis;
        long mult = 0;
        PolyMap f = PolyMap::identity(xy);
        if (trial % 4 < 2) {
            long a = 0, b = 0;
            do {
                a = rng.uniform(1, 3);
                b = rng.uniform(1, 3);
            } while (a * b > 6);
            const long cexp = rng.uniform(1, 3);
            const Polynomial x = Polynomial::variable(xy, 0);
            const Polynomial y = Polynomial::variable(xy, 1);
            const PolyMap core(xy, {x.pow(static_cast<unsigned>(a)),
                                    y.pow(static_cast<unsigned>(b)) - x.pow(static_cast<unsigned>(cexp))}, xy);
            const PolyMap phi = plain ? PolyMap::identity(xy) : testing::random_plane_automorphism(rng, xy);
            f = compose_map(testing::random_plane_automorphism(rng, xy, true), compose_map(core, phi));
            along_x_axis = b;
            along_y_axis = a;
            mult = a * b;
        } else {
            const FiberGerm g = rational_fiber_germ(rng, xy, !plain);
            f = g.map;
            mult = static_cast<long>(g.multiplicity);
            // Off the origin the product of lines is a coordinate along {y = 0}.
            along_x_axis = g.b;
        }
        const auto& gens = subspaces[static_cast<std::size_t>(rng.uniform(0, 2))];
        const Ideal v = I(xy, gens);
        const bool nonvanishing = jacobian_nonvanishing_on(f, v);
        const std::size_t m = multiplicity_along_V(f, v, seeded(static_cast<std::uint64_t>(trial)));
        (nonvanishing ? nonvanishing_cases : vanishing_cases) += 1;
        c.expect(nonvanishing == (m == 1), "Jacobian criterion and m_V disagree for V = " + str(v));
        std::optional<long> expected;
        if (gens.size() == 2) expected = mult;
        else if (plain) expected = gens[0] == "y" ? along_x_axis : along_y_axis;
        if (expected) {
            c.expect(m == static_cast<std::size_t>(*expected), "m_V " + std::to_string(m) + " != constructed " +
                                                                   std::to_string(*expected) + " for V = " + str(v));
        }
    }
    c.note(std::to_string(nonvanishing_cases) + " nonvanishing / " + std::to_string(vanishing_cases) + " vanishing");
    c.expect(nonvanishing_cases >= 10 && vanishing_cases >= 10, "one side of the equivalence barely exercised");
}

// ---------------------------------------------------------------- 5f -------

void regular_vs_geometric_suite(Check& c) {
    Rng rng(5006);
    const RingPtr xy = make_ring({"x", "y"});
    for (int trial = 0; trial < 100; ++trial) {
        c.count_case();
        const FiberGerm g = rational_fiber_germ(rng, xy);
        const std::size_t regular = regular_multiplicity(g.map, std::nullopt, seeded(static_cast<std::uint64_t>(trial)));
        c.expect(regular <= g.multiplicity, "regular > geometric (square)");
        c.expect(regular == g.multiplicity, "square map: regular " + std::to_string(regular) + " != " +
                                                std::to_string(g.multiplicity));
    }
    const RingPtr t = make_ring({"t"});
    const RingPtr st = make_ring({"s", "t"});
    for (int trial = 0; trial < 100; ++trial) {
        c.count_case();
        const auto cfg = seeded(static_cast<std::uint64_t>(1000 + trial));
        if (trial % 2 == 0) {
            // t -> (t^a, t^b) is gcd(a, b)-to-one everywhere.
            const long a = rng.uniform(1, 6);
            const long b = rng.uniform(a, 8);
            const auto known = static_cast<std::size_t>(std::gcd(a, b));
            const Polynomial tt = Polynomial::variable(t, 0);
            const PolyMap f(t, {tt.pow(static_cast<unsigned>(a)), tt.pow(static_cast<unsigned>(b))});
            const std::size_t regular = regular_multiplicity(f, std::nullopt, cfg);
            c.expect(regular <= known, "regular > geometric for (t^a, t^b)");
            c.expect(geometric_multiplicity(f, {}, cfg) == known, "geometric multiplicity of (t^a, t^b)");
        } else {
            // Nodal family: one sheet generically, two over the t-axis.
            const Rational k = make_rational(rng.uniform(1, 3), rng.uniform(1, 3));
            const Polynomial s = Polynomial::variable(st, 0);
            const Polynomial tt = Polynomial::variable(st, 1);
            const Polynomial q = s * s - Polynomial::constant(st, k * k) * tt * tt;
            const PolyMap f(st, {q, s * q, tt});
            const std::size_t regular = regular_multiplicity(f, std::nullopt, cfg);
            c.expect(regular <= 2, "regular > geometric for the nodal family");
            c.expect(regular == 1, "nodal family regular multiplicity");
            c.expect(geometric_multiplicity(f, {pt({0, 0, 1})}, cfg) == 2, "nodal family geometric multiplicity");
        }
    }
}

// ---------------------------------------------------------------- 6 --------

void determinism(Check& c) {
    const std::vector<std::string> base = {"spodzieja", "--ring", "s,t", "--map", "s^2-t^2, s*(s^2-t^2), t",
                                           "--extra-point", "0,0,1", "--json", "--no-timestamp"};
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = cli::run_command(args, out, err);
        return std::make_pair(code, out.str());
    };
    auto with_seed = [&](const char* seed) {
        auto args = base;
        args.insert(args.end(), {"--seed", seed});
        return run(args);
    };
    const auto a = with_seed("0");
    const auto b = with_seed("12345");
    c.expect(a.first == 0 && b.first == 0, "exit codes");
    const auto ja = cli::Json::parse(a.second);
    const auto jb = cli::Json::parse(b.second);
    c.expect(ja["result"] == jb["result"], "invariants differ between seeds 0 and 12345");
    c.expect(ja["result"]["i0"] == 2 && ja["result"]["holds"] == true, "seed 0 invariants");
    c.expect(with_seed("0").second == a.second, "seed 0 output not byte-identical");
    c.expect(with_seed("12345").second == b.second, "seed 12345 output not byte-identical");
    c.expect(ja["config"]["seed"] == 0 && jb["config"]["seed"] == 12345, "seed echo");
}

struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Check&)> body;
};

}  // namespace
}  // namespace germlab::acceptance

int main() {
    using namespace germlab::acceptance;
    const std::vector<Criterion> criteria = {
        {"1", "cusp family end-to-end", cusp_family_case},
        {"2", "cusp pull-back", cusp_pullback_case},
        {"3", "Jacobian counterexample", jacobian_counterexample},
        {"4", "smooth image certified", positive_case},
        {"5a", "Buchberger criterion and membership", buchberger_suite},
        {"5b", "quotient dimension order-invariance", order_invariance_suite},
        {"5c", "formula on graph maps", graph_suite},
        {"5d", "Stoll sums over regular fibers", stoll_suite},
        {"5e", "Jacobian criterion vs multiplicity along V", lemma_suite},
        {"5f", "regular <= geometric multiplicity", regular_vs_geometric_suite},
        {"6", "determinism", determinism},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& criterion : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %-3s %-44s %6lld ms  %s\n", check.ok() ? "PASS" : "FAIL", criterion.id, criterion.title,
                    static_cast<long long>(ms), check.summary().c_str());
        failed += check.ok() ? 0 : 1;
    }
    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %lld ms\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                static_cast<long long>(total));
    return failed == 0 ? 0 : 1;
}
