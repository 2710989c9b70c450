// Polyhedral cones with exact dual descriptions.
//
// A Cone stores both the facet normals (halfspaces a.x >= 0, primitive and
// lexicographically sorted, so full-dimensional cones compare canonically)
// and the generator side (extreme rays modulo lineality).  Cones of the
// quotient fans in this project are pointed; intermediate linearity domains
// may carry lineality and are handled uniformly.
#pragma once

#include "tropgr/dd.hpp"
#include "tropgr/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropgr {

class Cone {
public:
    Cone() = default;

    /// Cone {x : h.x >= 0 for h in halfspaces}.  Facets are identified among
    /// the input halfspaces by a rank test on their tight generators.
    static Cone from_halfspaces(int ambient, const std::vector<IntVec>& halfspaces) {
        Cone c;
        c.ambient_ = ambient;
        std::vector<IntVec> clean;
        clean.reserve(halfspaces.size());
        for (const auto& h : halfspaces) {
            if (is_zero(h)) continue;
            clean.push_back(primitive(h));
        }
        DDResult dd = dd_from_halfspaces(ambient, clean);
        c.adopt(std::move(dd), clean);
        return c;
    }

    /// Same, but discards the result early when the intersection is not
    /// full-dimensional (the common case during fan refinement).
    static std::optional<Cone> from_halfspaces_if_fulldim(int ambient,
                                                          const std::vector<IntVec>& halfspaces) {
        Cone c;
        c.ambient_ = ambient;
        std::vector<IntVec> clean;
        clean.reserve(halfspaces.size());
        for (const auto& h : halfspaces) {
            if (is_zero(h)) continue;
            clean.push_back(primitive(h));
        }
        DDResult dd = dd_from_halfspaces(ambient, clean);
        if (dd.dim(ambient) != ambient) return std::nullopt;
        c.adopt(std::move(dd), clean);
        return c;
    }

    /// Cone spanned by the given rays; facets computed via the dual cone.
    static Cone from_rays(int ambient, const std::vector<IntVec>& rays) {
        DDResult dual = dd_dual_of_generators(ambient, rays);
        std::vector<IntVec> halfspaces = dual.rays;
        // Lineality of the dual encodes equations satisfied by the span; a
        // full-dimensional cone has none.  Keep equations as paired
        // inequalities so lower-dimensional cones are still represented.
        for (const auto& l : dual.lineality) {
            halfspaces.push_back(l);
            halfspaces.push_back(negated(l));
        }
        return from_halfspaces(ambient, halfspaces);
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    bool pointed() const { return lineality_.empty(); }
    bool full_dim() const { return dim_ == ambient_; }

    /// Facet normals for full-dimensional cones (canonical); for
    /// lower-dimensional cones, an irredundant valid set including equations.
    const std::vector<IntVec>& halfspaces() const { return facets_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& lineality() const { return lineality_; }

    /// A point in the relative interior (sum of extreme rays and, if the cone
    /// is the whole span, any lineality vector keeps it in the interior).
    IntVec interior_point() const {
        IntVec p(ambient_, 0);
        for (const auto& r : rays_)
            for (int i = 0; i < ambient_; ++i) p[i] += r[i];
        return p;
    }

    bool contains(const IntVec& x) const {
        for (const auto& h : facets_)
            if (dot(h, x) < 0) return false;
        return true;
    }

    bool contains(const RatVec& x) const {
        for (const auto& h : facets_)
            if (dot(h, x) < 0) return false;
        return true;
    }

    bool strictly_contains(const IntVec& x) const {
        for (const auto& h : facets_)
            if (dot(h, x) <= 0) return false;
        return true;
    }

    /// Canonical identity for full-dimensional cones.
    const std::vector<IntVec>& key() const { return facets_; }

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_ == b.ambient_ && a.facets_ == b.facets_;
    }
    friend bool operator<(const Cone& a, const Cone& b) {
        if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
        return std::lexicographical_compare(a.facets_.begin(), a.facets_.end(),
                                            b.facets_.begin(), b.facets_.end(), IntVecLess{});
    }

private:
    void adopt(DDResult dd, const std::vector<IntVec>& candidates) {
        lineality_ = std::move(dd.lineality);
        rays_ = std::move(dd.rays);
        {
            std::vector<IntVec> all = lineality_;
            all.insert(all.end(), rays_.begin(), rays_.end());
            dim_ = all.empty() ? 0 : rank_of(all);
        }
        std::sort(rays_.begin(), rays_.end(), IntVecLess{});

        // A candidate halfspace is facet-defining iff its tight generators
        // span a hyperplane of the cone; lineality is tight on everything.
        std::set<IntVec, IntVecLess> facets;
        for (const auto& h : candidates) {
            std::vector<IntVec> tight = lineality_;
            for (const auto& r : rays_)
                if (dot(h, r) == 0) tight.push_back(r);
            int tight_rank = tight.empty() ? 0 : rank_of(tight);
            if (tight_rank == dim_ - 1) facets.insert(h);
        }
        facets_.assign(facets.begin(), facets.end());
    }

    int ambient_ = 0;
    int dim_ = 0;
    std::vector<IntVec> facets_;
    std::vector<IntVec> rays_;
    std::vector<IntVec> lineality_;
};

}  // namespace tropgr
