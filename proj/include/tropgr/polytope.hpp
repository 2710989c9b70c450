// Exact rational polytopes: convex hulls, dual descriptions, Minkowski sums.
//
// Hulls are computed by homogenization: a point p becomes the generator
// (1, p) (denominators cleared), and the facets of the lifted cone are the
// extreme rays of its dual, obtained with the double description engine.
// Lineality of the dual encodes the affine hull, so lower-dimensional
// polytopes (points, segments, ...) are handled without special cases.
#pragma once

#include "tropgr/dd.hpp"
#include "tropgr/rational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropgr {

struct Halfspace {
    IntVec normal;  // primitive
    Rat offset;     // normal . x >= offset for all x in the polytope

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

struct AffineEquation {
    IntVec normal;
    Rat offset;  // normal . x = offset on the polytope
};

class Polytope {
public:
    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<AffineEquation>& equations() const { return equations_; }

    bool contains(const RatVec& x) const {
        for (const auto& e : equations_)
            if (dot(e.normal, x) != e.offset) return false;
        for (const auto& f : facets_)
            if (dot(f.normal, x) < f.offset) return false;
        return true;
    }

    /// Recompute the vertex set from the H-representation alone (used by the
    /// V -> H -> V round-trip check).  Works through the homogenization cone;
    /// a bounded polytope yields no rays at height zero.
    std::vector<RatVec> vertices_from_hrep() const {
        std::vector<IntVec> constraints;
        auto lift = [&](const IntVec& n, const Rat& b) {
            IntVec row(ambient_ + 1);
            RatVec tmp(ambient_ + 1);
            tmp[0] = -b;
            for (int i = 0; i < ambient_; ++i) tmp[i + 1] = Rat(n[i]);
            auto [iv, den] = clear_denominators(tmp);
            (void)den;
            make_primitive(iv);
            return iv;
        };
        for (const auto& f : facets_) constraints.push_back(lift(f.normal, f.offset));
        for (const auto& e : equations_) {
            IntVec row = lift(e.normal, e.offset);
            constraints.push_back(row);
            constraints.push_back(negated(row));
        }
        {
            IntVec h(ambient_ + 1, 0);
            h[0] = 1;
            constraints.push_back(std::move(h));
        }
        DDResult dd = dd_from_halfspaces(ambient_ + 1, constraints);
        if (!dd.lineality.empty())
            throw std::logic_error("vertices_from_hrep: unbounded H-representation");
        std::vector<RatVec> verts;
        for (const auto& r : dd.rays) {
            if (r[0] == 0) throw std::logic_error("vertices_from_hrep: recession ray found");
            RatVec v(ambient_);
            for (int i = 0; i < ambient_; ++i) {
                v[i] = Rat(r[i + 1]) / Rat(r[0]);
                v[i].canonicalize();
            }
            verts.push_back(std::move(v));
        }
        std::sort(verts.begin(), verts.end(), RatVecLess{});
        return verts;
    }

    friend Polytope convex_hull(const std::vector<RatVec>& points);

private:
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<RatVec> vertices_;          // minimal, lexicographically sorted
    std::vector<Halfspace> facets_;         // irredundant
    std::vector<AffineEquation> equations_; // affine hull
};

inline Polytope convex_hull(const std::vector<RatVec>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points");
    const int d = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("convex_hull: dimension mismatch among points");

    std::set<RatVec, RatVecLess> unique_pts(points.begin(), points.end());
    std::vector<RatVec> pts(unique_pts.begin(), unique_pts.end());

    // Homogenized generators (1, p), denominators cleared.
    std::vector<IntVec> gens;
    gens.reserve(pts.size());
    for (const auto& p : pts) {
        RatVec lifted(d + 1);
        lifted[0] = 1;
        for (int i = 0; i < d; ++i) lifted[i + 1] = p[i];
        auto [iv, den] = clear_denominators(lifted);
        (void)den;
        make_primitive(iv);
        gens.push_back(std::move(iv));
    }

    DDResult dual = dd_dual_of_generators(d + 1, gens);

    Polytope P;
    P.ambient_ = d;
    for (const auto& l : dual.lineality) {
        IntVec n(l.begin() + 1, l.end());
        if (is_zero(n)) throw std::logic_error("convex_hull: degenerate affine equation");
        AffineEquation eq{n, Rat(-l[0])};
        make_primitive(eq.normal);
        // Rescale offset consistently with the primitive normal.
        Int g = 0;
        for (const auto& x : IntVec(l.begin() + 1, l.end())) g = gcd(g, x);
        if (g > 1) { eq.offset = Rat(-l[0]) / Rat(g); eq.offset.canonicalize(); }
        P.equations_.push_back(std::move(eq));
    }
    for (const auto& r : dual.rays) {
        IntVec n(r.begin() + 1, r.end());
        if (is_zero(n)) continue;  // the trivial inequality 1 >= 0
        Halfspace f{n, Rat(-r[0])};
        Int g = 0;
        for (const auto& x : n) g = gcd(g, x);
        if (g > 1) {
            make_primitive(f.normal);
            f.offset = Rat(-r[0]) / Rat(g);
            f.offset.canonicalize();
        }
        P.facets_.push_back(std::move(f));
    }
    std::sort(P.facets_.begin(), P.facets_.end(),
              [](const Halfspace& a, const Halfspace& b) {
                  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
                  return a.offset < b.offset;
              });

    std::vector<IntVec> eq_normals;
    for (const auto& e : P.equations_) eq_normals.push_back(e.normal);
    P.dim_ = d - (eq_normals.empty() ? 0 : rank_of(eq_normals));

    // A candidate point is a vertex iff its tight facet normals, together
    // with the affine hull equations, span the full ambient space.
    for (const auto& p : pts) {
        std::vector<IntVec> tight = eq_normals;
        for (const auto& f : P.facets_)
            if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
        int r = tight.empty() ? 0 : rank_of(tight);
        if (r == d) P.vertices_.push_back(p);
    }
    if (P.dim_ == 0) P.vertices_ = pts;  // a single point has no facets
    std::sort(P.vertices_.begin(), P.vertices_.end(), RatVecLess{});
    return P;
}

inline Polytope convex_hull_int(const std::vector<IntVec>& points) {
    std::vector<RatVec> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(to_rational(p));
    return convex_hull(pts);
}

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<RatVec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& v : p.vertices()) {
        for (const auto& w : q.vertices()) {
            RatVec s(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] + w[i];
            sums.push_back(std::move(s));
        }
    }
    return convex_hull(sums);
}

}  // namespace tropgr
