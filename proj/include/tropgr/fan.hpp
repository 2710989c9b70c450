// Complete polyhedral fans: inner normal fans, common refinements, and the
// combinatorial statistics (f-vector, facet census) used throughout.
//
// A fan is stored by its maximal cones in canonical form (sorted primitive
// facet normals), so fans computed along different routes compare exactly.
// Ray-level data (global ray table, ray index sets per cone, the face lattice
// obtained by closing maximal ray sets under intersection) is computed on
// demand and requires the fan to be pointed.
#pragma once

#include "tropgr/cone.hpp"
#include "tropgr/parallel.hpp"
#include "tropgr/polytope.hpp"
#include "tropgr/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropgr {

using RayMask = std::vector<std::uint64_t>;

inline RayMask mask_intersect(const RayMask& a, const RayMask& b) {
    RayMask r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

inline bool mask_subset(const RayMask& a, const RayMask& b) {  // a subset of b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

class Fan {
public:
    Fan() = default;
    Fan(int ambient, std::vector<Cone> max_cones, bool complete)
        : ambient_(ambient), complete_(complete), max_cones_(std::move(max_cones)) {
        std::sort(max_cones_.begin(), max_cones_.end());
        max_cones_.erase(std::unique(max_cones_.begin(), max_cones_.end()), max_cones_.end());
    }

    static Fan trivial() { return Fan(0, {}, true); }

    int ambient_dim() const { return ambient_; }
    bool complete() const { return complete_; }
    const std::vector<Cone>& maximal_cones() const { return max_cones_; }
    std::size_t n_maximal() const { return max_cones_.size(); }

    bool pointed() const {
        for (const auto& c : max_cones_)
            if (!c.pointed()) return false;
        return true;
    }

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.ambient_ == b.ambient_ && a.max_cones_ == b.max_cones_;
    }

    /// Global ray table, lexicographically sorted.
    const std::vector<IntVec>& rays() const {
        ensure_ray_data();
        return rays_;
    }

    /// Ray indices of each maximal cone, each set sorted, cones in canonical order.
    const std::vector<std::vector<int>>& cone_ray_indices() const {
        ensure_ray_data();
        return cone_rays_;
    }

    /// All nonzero faces keyed by dimension (1 .. ambient), as sorted ray index sets.
    const std::map<int, std::vector<std::vector<int>>>& faces_by_dim() const {
        ensure_faces();
        return faces_by_dim_;
    }

    std::vector<long> f_vector() const {
        if (!complete_) throw std::invalid_argument("f_vector: fan is not complete");
        if (!pointed()) throw std::invalid_argument("f_vector: fan is not pointed");
        ensure_faces();
        std::vector<long> f(ambient_, 0);
        for (const auto& [d, faces] : faces_by_dim_)
            if (d >= 1 && d <= ambient_) f[d - 1] = static_cast<long>(faces.size());
        return f;
    }

    /// Histogram: number of extreme rays of a maximal cone -> count of such cones.
    std::map<int, long> facet_census() const {
        if (!complete_) throw std::invalid_argument("facet_census: fan is not complete");
        ensure_ray_data();
        std::map<int, long> h;
        for (const auto& c : cone_rays_) h[static_cast<int>(c.size())]++;
        return h;
    }

    /// Ray index sets of maximal cones with more rays than their dimension.
    std::vector<std::vector<int>> nonsimplicial_cones() const {
        ensure_ray_data();
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < max_cones_.size(); ++i)
            if (static_cast<int>(cone_rays_[i].size()) > max_cones_[i].dim())
                out.push_back(cone_rays_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Facet-pairing certificate of completeness: every facet of a maximal
    /// cone is shared by exactly one other maximal cone, with opposite
    /// supporting normals.
    bool certify_complete(std::string* why = nullptr) const {
        if (ambient_ == 0) return true;
        if (!pointed()) {
            if (why) *why = "certificate requires a pointed fan";
            return false;
        }
        ensure_ray_data();
        std::map<std::vector<int>, std::vector<IntVec>> shared;
        for (std::size_t ci = 0; ci < max_cones_.size(); ++ci) {
            const Cone& c = max_cones_[ci];
            if (!c.full_dim()) {
                if (why) *why = "maximal cone is not full-dimensional";
                return false;
            }
            for (const auto& h : c.halfspaces()) {
                std::vector<int> facet_rays;
                for (int ri : cone_rays_[ci])
                    if (dot(h, rays_[ri]) == 0) facet_rays.push_back(ri);
                shared[facet_rays].push_back(h);
            }
        }
        for (const auto& [frays, normals] : shared) {
            if (normals.size() != 2 || normals[0] != negated(normals[1])) {
                if (why) *why = "facet not shared by exactly two cones: rays " +
                                [&] {
                                    std::string s;
                                    for (int r : frays) s += std::to_string(r) + " ";
                                    return s;
                                }();
                return false;
            }
        }
        return true;
    }

    /// The maximal cone whose interior contains x, if x is interior to one.
    std::optional<std::size_t> cone_containing(const RatVec& x) const {
        for (std::size_t i = 0; i < max_cones_.size(); ++i)
            if (max_cones_[i].contains(x)) return i;
        return std::nullopt;
    }

private:
    void ensure_ray_data() const {
        if (ray_data_done_) return;
        std::set<IntVec, IntVecLess> rayset;
        for (const auto& c : max_cones_) {
            if (!c.pointed()) throw std::invalid_argument("ray data requires a pointed fan");
            for (const auto& r : c.rays()) rayset.insert(r);
        }
        rays_.assign(rayset.begin(), rayset.end());
        std::map<IntVec, int, IntVecLess> index;
        for (std::size_t i = 0; i < rays_.size(); ++i) index[rays_[i]] = static_cast<int>(i);
        cone_rays_.clear();
        for (const auto& c : max_cones_) {
            std::vector<int> ids;
            ids.reserve(c.rays().size());
            for (const auto& r : c.rays()) ids.push_back(index.at(r));
            std::sort(ids.begin(), ids.end());
            cone_rays_.push_back(std::move(ids));
        }
        ray_data_done_ = true;
    }

    void ensure_faces() const {
        if (faces_done_) return;
        ensure_ray_data();
        const std::size_t words = (rays_.size() + 63) / 64;
        auto to_mask = [&](const std::vector<int>& ids) {
            RayMask m(std::max<std::size_t>(words, 1), 0);
            for (int i : ids) m[i >> 6] |= (std::uint64_t{1} << (i & 63));
            return m;
        };
        std::vector<RayMask> max_masks;
        max_masks.reserve(cone_rays_.size());
        for (const auto& ids : cone_rays_) max_masks.push_back(to_mask(ids));

        std::set<RayMask> faces(max_masks.begin(), max_masks.end());
        std::vector<RayMask> frontier(faces.begin(), faces.end());
        while (!frontier.empty()) {
            std::vector<RayMask> next;
            for (const auto& f : frontier) {
                for (const auto& m : max_masks) {
                    RayMask x = mask_intersect(f, m);
                    if (faces.insert(x).second) next.push_back(std::move(x));
                }
            }
            frontier = std::move(next);
        }

        faces_by_dim_.clear();
        for (const auto& m : faces) {
            std::vector<int> ids;
            for (std::size_t i = 0; i < rays_.size(); ++i)
                if ((m[i >> 6] >> (i & 63)) & 1) ids.push_back(static_cast<int>(i));
            if (ids.empty()) continue;  // the zero cone
            std::vector<IntVec> vecs;
            vecs.reserve(ids.size());
            for (int i : ids) vecs.push_back(rays_[i]);
            int d = rank_of(vecs);
            faces_by_dim_[d].push_back(std::move(ids));
        }
        for (auto& [d, v] : faces_by_dim_) std::sort(v.begin(), v.end());
        faces_done_ = true;
    }

    int ambient_ = 0;
    bool complete_ = false;
    std::vector<Cone> max_cones_;

    mutable bool ray_data_done_ = false;
    mutable bool faces_done_ = false;
    mutable std::vector<IntVec> rays_;
    mutable std::vector<std::vector<int>> cone_rays_;
    mutable std::map<int, std::vector<std::vector<int>>> faces_by_dim_;
};

/// Inner normal fan: one maximal cone per vertex v, namely
/// {x : <x, w - v> >= 0 for all vertices w}.  Complete by construction.
inline Fan inner_normal_fan(const Polytope& p) {
    const int d = p.ambient_dim();
    std::vector<Cone> cones;
    for (const auto& v : p.vertices()) {
        std::vector<IntVec> halfspaces;
        for (const auto& w : p.vertices()) {
            if (w == v) continue;
            RatVec diff(d);
            for (int i = 0; i < d; ++i) diff[i] = w[i] - v[i];
            auto [iv, den] = clear_denominators(diff);
            (void)den;
            make_primitive(iv);
            halfspaces.push_back(std::move(iv));
        }
        cones.push_back(Cone::from_halfspaces(d, halfspaces));
    }
    return Fan(d, std::move(cones), true);
}

/// Full-dimensional intersections of cones of A with cones of B, canonical.
inline std::vector<Cone> refine_cone_lists(int ambient, const std::vector<Cone>& a,
                                           const std::vector<Cone>& b, int threads = 1) {
    std::vector<std::vector<Cone>> per_a(a.size());
    parallel_for(a.size(), threads, [&](std::size_t i) {
        const Cone& ca = a[i];
        IntVec ipt = ca.interior_point();
        for (const auto& cb : b) {
            std::vector<IntVec> combined = ca.halfspaces();
            combined.insert(combined.end(), cb.halfspaces().begin(), cb.halfspaces().end());
            // Fast path: the interior point of ca already lies strictly
            // inside cb, so the intersection is full-dimensional.
            if (cb.strictly_contains(ipt)) {
                per_a[i].push_back(Cone::from_halfspaces(ambient, combined));
                continue;
            }
            if (auto c = Cone::from_halfspaces_if_fulldim(ambient, combined))
                per_a[i].push_back(std::move(*c));
        }
    });
    std::vector<Cone> out;
    for (auto& v : per_a)
        for (auto& c : v) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Fan common_refinement(const Fan& f, const Fan& g, int threads = 1) {
    if (f.ambient_dim() != g.ambient_dim())
        throw std::invalid_argument("common_refinement: ambient dimension mismatch");
    if (!f.complete() || !g.complete())
        throw std::invalid_argument("common_refinement: input fans must be complete");
    return Fan(f.ambient_dim(),
               refine_cone_lists(f.ambient_dim(), f.maximal_cones(), g.maximal_cones(), threads),
               true);
}

}  // namespace tropgr
