// Tropicalization of the Pluecker polynomials, the linearity fans F(P_K),
// their common refinement F_{k,n}, and the Gr_{2,4} positivity oracle.
//
// All classical coefficients here are positive integers, so tropical
// coefficients are uniformly zero and a tropical polynomial is just the set
// of exponent vectors, evaluated min-plus.
#pragma once

#include "tropgr/fan.hpp"
#include "tropgr/polynomial.hpp"
#include "tropgr/webdiagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropgr {

class TropicalPolynomial {
public:
    TropicalPolynomial() = default;
    TropicalPolynomial(int nvars, std::vector<Exponent> exps) : nvars_(nvars) {
        std::set<Exponent> s(exps.begin(), exps.end());
        exps_.assign(s.begin(), s.end());
        if (exps_.empty()) throw std::invalid_argument("TropicalPolynomial: empty support");
    }

    int nvars() const { return nvars_; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    bool is_monomial() const { return exps_.size() == 1; }

private:
    int nvars_ = 0;
    std::vector<Exponent> exps_;
};

/// min-plus image of a positive-coefficient polynomial: its exponent support.
inline TropicalPolynomial tropicalize(const ExponentPolynomial& p) {
    if (!p.all_coefficients_positive())
        throw std::invalid_argument("tropicalize: coefficients must all be positive");
    std::vector<Exponent> exps;
    exps.reserve(p.n_terms());
    for (const auto& [e, c] : p.terms()) exps.push_back(e);
    return TropicalPolynomial(p.nvars(), std::move(exps));
}

inline Rat trop_eval(const TropicalPolynomial& t, const RatVec& x) {
    if (static_cast<int>(x.size()) != t.nvars())
        throw std::invalid_argument("trop_eval: dimension mismatch");
    bool first = true;
    Rat best = 0;
    for (const auto& e : t.exponents()) {
        Rat s = 0;
        for (int i = 0; i < t.nvars(); ++i) s += e[i] * x[i];
        if (first || s < best) { best = s; first = false; }
    }
    return best;
}

/// Exponents achieving the minimum at x (singleton iff x is a linearity point).
inline std::vector<Exponent> trop_argmin(const TropicalPolynomial& t, const RatVec& x) {
    Rat best = trop_eval(t, x);
    std::vector<Exponent> out;
    for (const auto& e : t.exponents()) {
        Rat s = 0;
        for (int i = 0; i < t.nvars(); ++i) s += e[i] * x[i];
        if (s == best) out.push_back(e);
    }
    return out;
}

inline Polytope newton_polytope(const TropicalPolynomial& t) {
    std::vector<IntVec> pts;
    for (const auto& e : t.exponents()) {
        IntVec v(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
        pts.push_back(std::move(v));
    }
    return convex_hull_int(pts);
}

/// Domains of linearity of the min-plus map: the inner normal fan of the
/// Newton polytope.
inline Fan linearity_fan(const TropicalPolynomial& t) {
    return inner_normal_fan(newton_polytope(t));
}

/// Tropicalized Pluecker maps of Web_{k,n} in inner-region coordinates,
/// lexicographic K order, single-monomial maps included.
inline std::vector<TropicalPolynomial> trop_plucker_maps(const WebDiagram& w) {
    std::vector<TropicalPolynomial> out;
    for (const auto& K : k_subsets(w.n(), w.k()))
        out.push_back(tropicalize(w.plucker_poly(K, VarMode::InnerOnly)));
    return out;
}

/// The fan F_{k,n}: simultaneous refinement of all linearity fans F(P_K).
/// Single-monomial maps contribute the trivial fan and are skipped.
inline Fan build_F(int k, int n, int threads = 1) {
    WebDiagram w(k, n);
    const int dim = (k - 1) * (n - k - 1);
    if (dim == 0) return Fan::trivial();

    std::vector<Cone> current{Cone::from_halfspaces(dim, {})};
    for (const auto& t : trop_plucker_maps(w)) {
        if (t.is_monomial()) continue;
        Fan lf = linearity_fan(t);
        current = refine_cone_lists(dim, current, lf.maximal_cones(), threads);
    }
    return Fan(dim, std::move(current), true);
}

/// Same fan by the Minkowski route: the inner normal fan of the sum of all
/// Newton polytopes Q(P_K).
inline Fan build_F_minkowski(int k, int n) {
    WebDiagram w(k, n);
    const int dim = (k - 1) * (n - k - 1);
    if (dim == 0) return Fan::trivial();

    Polytope sum = convex_hull_int({IntVec(dim, 0)});
    for (const auto& t : trop_plucker_maps(w)) {
        if (t.is_monomial()) continue;
        sum = minkowski_sum(sum, newton_polytope(t));
    }
    return inner_normal_fan(sum);
}

/// Terms of f of minimal w-weight (constant-coefficient initial form).
inline SignedPolynomial init_form(const SignedPolynomial& f, const RatVec& w) {
    if (f.is_zero()) throw std::invalid_argument("init_form: zero polynomial");
    if (static_cast<int>(w.size()) != f.nvars())
        throw std::invalid_argument("init_form: dimension mismatch");
    bool first = true;
    Rat best = 0;
    auto weight = [&](const Exponent& e) {
        Rat s = 0;
        for (int i = 0; i < f.nvars(); ++i) s += e[i] * w[i];
        return s;
    };
    for (const auto& [e, c] : f.terms()) {
        Rat s = weight(e);
        if (first || s < best) { best = s; first = false; }
    }
    SignedPolynomial out(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (weight(e) == best) out.add_term(e, c);
    return out;
}

/// The three-term Pluecker relation p13 p24 - p12 p34 - p14 p23 in the six
/// variables indexed by 2-subsets of [4] in lexicographic order.
inline SignedPolynomial gr24_plucker_relation() {
    auto subsets = k_subsets(4, 2);  // 12 13 14 23 24 34
    auto pos = [&](int a, int b) {
        std::vector<int> K{a, b};
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if (subsets[i] == K) return static_cast<int>(i);
        throw std::logic_error("gr24_plucker_relation: bad subset");
    };
    SignedPolynomial f(6);
    auto term = [&](int a, int b, int c, int d, int coeff) {
        Exponent e(6, 0);
        e[pos(a, b)] += 1;
        e[pos(c, d)] += 1;
        f.add_term(e, coeff);
    };
    term(1, 3, 2, 4, 1);
    term(1, 2, 3, 4, -1);
    term(1, 4, 2, 3, -1);
    return f;
}

/// Hypersurface specialization of the positivity criterion for Gr_{2,4}:
/// w is accepted iff the initial form of the three-term relation at w keeps
/// terms of both signs.
inline bool pos_membership_gr24(const RatVec& w) {
    if (w.size() != 6)
        throw std::invalid_argument("pos_membership_gr24: expected 6 weights");
    SignedPolynomial init = init_form(gr24_plucker_relation(), w);
    bool has_pos = false, has_neg = false;
    for (const auto& [e, c] : init.terms()) {
        if (c > 0) has_pos = true;
        if (c < 0) has_neg = true;
    }
    return has_pos && has_neg;
}

/// Trop Phi_2: min-plus Pluecker weights of an inner-region point (outer
/// regions at valuation 0), one coordinate per k-subset in lex order.
inline RatVec trop_phi2(int k, int n, const RatVec& inner) {
    WebDiagram w(k, n);
    if (static_cast<int>(inner.size()) != w.n_inner())
        throw std::invalid_argument("trop_phi2: inner dimension mismatch");
    RatVec out;
    for (const auto& K : k_subsets(n, k)) {
        TropicalPolynomial t = tropicalize(w.plucker_poly(K, VarMode::InnerOnly));
        out.push_back(trop_eval(t, inner));
    }
    return out;
}

}  // namespace tropgr
