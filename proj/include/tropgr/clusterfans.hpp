// The non-Pluecker cluster variables of Gr_{3,6} and their fourteen pullbacks
// to Gr_{3,7}, expanded as positive polynomials in inner region variables,
// and the refinements of F_{3,6} / F_{3,7} to the type D4 / E6 associahedron
// fans.
#pragma once

#include "tropgr/fan.hpp"
#include "tropgr/tropical.hpp"
#include "tropgr/webdiagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgr {

/// A difference of two products of Pluecker coordinates together with its
/// expansion over inner region variables.  Construction verifies the
/// expansion is subtraction-free: every surviving coefficient is positive.
struct ClusterVarExpr {
    std::string name;
    std::vector<int> K1, K2, K3, K4;  // Delta_K1 Delta_K2 - Delta_K3 Delta_K4
    ExponentPolynomial expansion;
};

inline ClusterVarExpr make_cluster_expr(const WebDiagram& w, std::string name,
                                        std::vector<int> K1, std::vector<int> K2,
                                        std::vector<int> K3, std::vector<int> K4) {
    ClusterVarExpr v;
    v.name = std::move(name);
    v.K1 = std::move(K1);
    v.K2 = std::move(K2);
    v.K3 = std::move(K3);
    v.K4 = std::move(K4);
    ExponentPolynomial a = w.plucker_poly(v.K1, VarMode::InnerOnly) *
                           w.plucker_poly(v.K2, VarMode::InnerOnly);
    ExponentPolynomial b = w.plucker_poly(v.K3, VarMode::InnerOnly) *
                           w.plucker_poly(v.K4, VarMode::InnerOnly);
    v.expansion = a - b;
    if (!v.expansion.all_coefficients_positive())
        throw std::runtime_error("cluster variable " + v.name +
                                 ": expansion is not subtraction-free positive");
    return v;
}

/// The two non-Pluecker cluster variables of Gr_{3,6}.  Each is a product of
/// two Pluecker coordinates minus a product of two frozen (cyclicly
/// consecutive) ones, and each expands subtraction-free in the region
/// variables.
inline std::vector<ClusterVarExpr> extra_vars_gr36() {
    WebDiagram w(3, 6);
    return {
        make_cluster_expr(w, "X1", {1, 3, 4}, {2, 5, 6}, {1, 5, 6}, {2, 3, 4}),
        make_cluster_expr(w, "X2", {1, 4, 5}, {2, 3, 6}, {1, 2, 3}, {4, 5, 6}),
    };
}

enum class ProjectionConvention { OrderPreserving, Cyclic };

/// Relabelling [6] -> [7] \ {c} used by the coordinate projection that
/// deletes column c.
inline std::vector<int> projection_relabel(int c, ProjectionConvention conv) {
    std::vector<int> map6;
    if (conv == ProjectionConvention::OrderPreserving) {
        for (int j = 1; j <= 7; ++j)
            if (j != c) map6.push_back(j);
    } else {
        for (int step = 1; step <= 6; ++step) map6.push_back((c - 1 + step) % 7 + 1);
    }
    return map6;
}

/// Pullbacks to Gr_{3,7} of the two Gr_{3,6} cluster variables along the
/// seven column-deleting projections: fourteen expressions, each expanded and
/// positivity-checked in the Gr_{3,7} inner region variables.
inline std::vector<ClusterVarExpr> pullback_vars_gr37(
    ProjectionConvention conv = ProjectionConvention::OrderPreserving) {
    WebDiagram w(3, 7);
    const std::vector<std::vector<std::vector<int>>> base = {
        {{1, 3, 4}, {2, 5, 6}, {1, 5, 6}, {2, 3, 4}},
        {{1, 4, 5}, {2, 3, 6}, {1, 2, 3}, {4, 5, 6}},
    };
    std::vector<ClusterVarExpr> out;
    for (int c = 1; c <= 7; ++c) {
        std::vector<int> map6 = projection_relabel(c, conv);
        auto relabel = [&](const std::vector<int>& K) {
            std::vector<int> r;
            for (int a : K) r.push_back(map6[a - 1]);
            std::sort(r.begin(), r.end());
            return r;
        };
        for (std::size_t v = 0; v < base.size(); ++v) {
            std::string name = "X" + std::to_string(v + 1) + "@c" + std::to_string(c);
            try {
                out.push_back(make_cluster_expr(w, name, relabel(base[v][0]), relabel(base[v][1]),
                                                relabel(base[v][2]), relabel(base[v][3])));
            } catch (const std::runtime_error&) {
                throw std::runtime_error("pullback positivity failed at (c=" + std::to_string(c) +
                                         ", X" + std::to_string(v + 1) + ")");
            }
        }
    }
    return out;
}

/// Refine a fan by the linearity fans of the given cluster variables.
inline Fan refine_by_cluster_vars(const Fan& base, const std::vector<ClusterVarExpr>& vars,
                                  int threads = 1) {
    std::vector<Cone> current = base.maximal_cones();
    for (const auto& v : vars) {
        Fan lf = linearity_fan(tropicalize(v.expansion));
        current = refine_cone_lists(base.ambient_dim(), current, lf.maximal_cones(), threads);
    }
    return Fan(base.ambient_dim(), std::move(current), base.complete());
}

inline Fan refine_gr36(int threads = 1) {
    return refine_by_cluster_vars(build_F(3, 6, threads), extra_vars_gr36(), threads);
}

inline Fan refine_gr37(int threads = 1,
                       ProjectionConvention conv = ProjectionConvention::OrderPreserving) {
    return refine_by_cluster_vars(build_F(3, 7, threads), pullback_vars_gr37(conv), threads);
}

/// How each maximal cone of `before` decomposes into maximal cones of
/// `after`.  Parent ray indices refer to before's ray table, children to
/// after's.  Throws if some cone of `after` is not contained in exactly one
/// cone of `before`.
struct SplitEntry {
    std::vector<int> parent_rays;
    std::vector<std::vector<int>> children;
};

inline std::vector<SplitEntry> split_report(const Fan& before, const Fan& after) {
    if (before.ambient_dim() != after.ambient_dim())
        throw std::invalid_argument("split_report: ambient dimension mismatch");
    const auto& parents = before.maximal_cones();
    const auto& children = after.maximal_cones();
    std::vector<SplitEntry> entries(parents.size());
    for (std::size_t p = 0; p < parents.size(); ++p)
        entries[p].parent_rays = before.cone_ray_indices()[p];

    const auto& after_rays = after.rays();
    for (std::size_t c = 0; c < children.size(); ++c) {
        std::vector<std::size_t> containing;
        for (std::size_t p = 0; p < parents.size(); ++p) {
            bool inside = true;
            for (int ri : after.cone_ray_indices()[c]) {
                if (!parents[p].contains(after_rays[ri])) { inside = false; break; }
            }
            if (inside) containing.push_back(p);
        }
        if (containing.size() != 1)
            throw std::runtime_error("split_report: after does not refine before");
        entries[containing[0]].children.push_back(after.cone_ray_indices()[c]);
    }
    for (auto& e : entries) std::sort(e.children.begin(), e.children.end());
    std::sort(entries.begin(), entries.end(),
              [](const SplitEntry& a, const SplitEntry& b) { return a.parent_rays < b.parent_rays; });
    return entries;
}

/// Check the chain overlap pattern of a split: children of an m-ray parent
/// are simplices that can be ordered so consecutive ones share dim-1 rays.
inline bool split_chain_pattern(const SplitEntry& e, int dim) {
    if (e.children.size() == 1) return true;
    std::vector<std::vector<int>> order = e.children;
    std::sort(order.begin(), order.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            std::vector<int> inter;
            std::set_intersection(order[i].begin(), order[i].end(), order[i + 1].begin(),
                                  order[i + 1].end(), std::back_inserter(inter));
            if (static_cast<int>(inter.size()) != dim - 1) { ok = false; break; }
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace tropgr
