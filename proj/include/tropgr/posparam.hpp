// The positive parameterization Phi_1 of Gr_{k,n}(R+) by region variables,
// its explicit inverse Psi (six-fold Pluecker ratio), the column-rescaling
// torus action, and the inner-region quotient parameterization Phi_2.
#pragma once

#include "tropgr/rational.hpp"
#include "tropgr/webdiagram.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tropgr {

/// Pluecker coordinates of a totally positive point, normalized so that
/// Delta_{[k]} = 1 (identity leftmost block).
struct PlueckerVector {
    int k = 0, n = 0;
    std::map<std::vector<int>, Rat> entries;

    const Rat& at(const std::vector<int>& K) const {
        auto it = entries.find(K);
        if (it == entries.end()) throw std::invalid_argument("PlueckerVector: missing entry");
        return it->second;
    }

    void check_positive_normalized() const {
        std::vector<int> id(k);
        for (int i = 0; i < k; ++i) id[i] = i + 1;
        for (const auto& [K, v] : entries)
            if (v <= 0) throw std::invalid_argument("PlueckerVector: entries must be positive");
        if (at(id) != 1) throw std::invalid_argument("PlueckerVector: not normalized");
    }
};

struct RegionAssignment {
    int k = 0, n = 0;
    VarMode mode = VarMode::AllRegions;
    RatVec values;  // in region order (all regions, or inner regions)

    void check_positive() const {
        for (const auto& v : values)
            if (v <= 0) throw std::invalid_argument("RegionAssignment: values must be positive");
    }
};

inline RegionAssignment all_regions_assignment(const WebDiagram& w, const RatVec& values) {
    if (static_cast<int>(values.size()) != w.n_regions())
        throw std::invalid_argument("expected one value per region");
    RegionAssignment a{w.k(), w.n(), VarMode::AllRegions, values};
    a.check_positive();
    return a;
}

/// Lift an inner-region point to all regions with outer regions set to 1:
/// the canonical torus-orbit representative backing Phi_2.
inline RegionAssignment lift_inner_to_all(const WebDiagram& w, const RatVec& inner) {
    if (static_cast<int>(inner.size()) != w.n_inner())
        throw std::invalid_argument("expected one value per inner region");
    RatVec values(w.n_regions(), Rat(1));
    for (const auto& reg : w.regions())
        if (reg.inner) values[reg.index] = inner[w.inner_index(reg.i, reg.j)];
    RegionAssignment a{w.k(), w.n(), VarMode::AllRegions, values};
    a.check_positive();
    return a;
}

/// Phi_1: evaluate every Pluecker polynomial at a positive region assignment.
inline PlueckerVector phi1(const WebDiagram& w, const RegionAssignment& x) {
    if (x.mode != VarMode::AllRegions)
        throw std::invalid_argument("phi1: needs an all-regions assignment");
    x.check_positive();
    PlueckerVector d;
    d.k = w.k();
    d.n = w.n();
    for (const auto& K : k_subsets(w.n(), w.k()))
        d.entries[K] = w.plucker_poly(K, VarMode::AllRegions).eval(x.values);
    return d;
}

/// Phi_2: Phi_1 of the outer = 1 lift of an inner point.
inline PlueckerVector phi2(const WebDiagram& w, const RatVec& inner) {
    return phi1(w, lift_inner_to_all(w, inner));
}

/// K(i,j) = {1..i-1} u {i+j-k .. j} for a region (i,j) of Web_{k,n};
/// out-of-range pairs map to the empty marker (Delta_empty = 1).
inline std::optional<std::vector<int>> K_index(int i, int j, int k, int n) {
    if (i < 1 || i > k || j < k + 1 || j > n) return std::nullopt;
    std::vector<int> K;
    for (int a = 1; a <= i - 1; ++a) K.push_back(a);
    for (int a = i + j - k; a <= j; ++a) K.push_back(a);
    return K;
}

/// Psi: region values of a normalized positive Pluecker vector, via the
/// six-fold ratio of Delta_{K(.,.)}.
inline RegionAssignment psi(const WebDiagram& w, const PlueckerVector& d) {
    if (d.k != w.k() || d.n != w.n()) throw std::invalid_argument("psi: (k,n) mismatch");
    d.check_positive_normalized();
    auto delta = [&](std::optional<std::vector<int>> K) -> Rat {
        if (!K) return 1;
        return d.at(*K);
    };
    const int k = w.k(), n = w.n();
    RatVec values(w.n_regions());
    for (const auto& reg : w.regions()) {
        const int i = reg.i, j = reg.j;
        Rat num = delta(K_index(i, j, k, n)) * delta(K_index(i + 1, j - 2, k, n)) *
                  delta(K_index(i + 2, j - 1, k, n));
        Rat den = delta(K_index(i, j - 1, k, n)) * delta(K_index(i + 1, j, k, n)) *
                  delta(K_index(i + 2, j - 2, k, n));
        Rat v = num / den;
        v.canonicalize();
        values[reg.index] = v;
    }
    RegionAssignment a{k, n, VarMode::AllRegions, std::move(values)};
    a.check_positive();
    return a;
}

/// Column rescaling by positive scalars, renormalized to Delta_{[k]} = 1.
inline PlueckerVector torus_rescale(const PlueckerVector& d, const RatVec& lambda) {
    if (static_cast<int>(lambda.size()) != d.n)
        throw std::invalid_argument("torus_rescale: expected n scalars");
    for (const auto& l : lambda)
        if (l <= 0) throw std::invalid_argument("torus_rescale: scalars must be positive");
    PlueckerVector out;
    out.k = d.k;
    out.n = d.n;
    Rat norm = 1;
    for (int i = 1; i <= d.k; ++i) norm *= lambda[i - 1];
    for (const auto& [K, v] : d.entries) {
        Rat f = v;
        for (int c : K) f *= lambda[c - 1];
        f /= norm;
        f.canonicalize();
        out.entries[K] = f;
    }
    return out;
}

}  // namespace tropgr
