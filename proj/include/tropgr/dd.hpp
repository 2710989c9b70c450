// Double description method over exact integer arithmetic.
//
// Converts a cone given by homogeneous inequalities {x : a_i . x >= 0} into a
// generator description span(lineality) + cone(rays), inserting one
// inequality at a time (Motzkin step, Fukuda-Prodon combinatorial adjacency
// test).  Lineality is eliminated first, one basis vector per constraint that
// meets it, exactly as in cddlib.  All vectors are kept primitive, so
// intermediate entries stay small.
#pragma once

#include "tropgr/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tropgr {

/// Set of constraint indices a ray is tight on, packed into 64-bit words.
class TightSet {
public:
    TightSet() = default;
    explicit TightSet(std::size_t nbits) : bits_((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { bits_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

    void set_range(std::size_t n) {  // set bits 0..n-1
        for (std::size_t i = 0; i < n; ++i) set(i);
    }

    static TightSet intersect(const TightSet& a, const TightSet& b) {
        TightSet r;
        r.bits_.resize(a.bits_.size());
        for (std::size_t w = 0; w < a.bits_.size(); ++w) r.bits_[w] = a.bits_[w] & b.bits_[w];
        return r;
    }

    /// Is this a superset of s?
    bool contains(const TightSet& s) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if ((s.bits_[w] & ~bits_[w]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> bits_;
};

struct DDResult {
    std::vector<IntVec> lineality;  // basis of {x : a_i.x = 0 for all i} within the cone
    std::vector<IntVec> rays;       // extreme rays modulo lineality, primitive
    std::vector<TightSet> tight;    // tight[r] = constraints ray r satisfies with equality

    int dim(int ambient) const {
        std::vector<IntVec> all = lineality;
        all.insert(all.end(), rays.begin(), rays.end());
        if (all.empty()) return 0;
        (void)ambient;
        return rank_of(all);
    }
    bool pointed() const { return lineality.empty(); }
};

/// Generators of {x in R^ambient : c.x >= 0 for all c in constraints}.
inline DDResult dd_from_halfspaces(int ambient, const std::vector<IntVec>& constraints) {
    DDResult st;
    st.lineality.reserve(ambient);
    for (int i = 0; i < ambient; ++i) {
        IntVec e(ambient, 0);
        e[i] = 1;
        st.lineality.push_back(std::move(e));
    }
    const std::size_t m = constraints.size();

    for (std::size_t t = 0; t < m; ++t) {
        const IntVec& a = constraints[t];
        if (static_cast<int>(a.size()) != ambient)
            throw std::invalid_argument("dd_from_halfspaces: constraint dimension mismatch");

        // Lineality elimination step: some basis line meets the halfspace.
        std::size_t l0 = st.lineality.size();
        for (std::size_t l = 0; l < st.lineality.size(); ++l) {
            if (dot(a, st.lineality[l]) != 0) { l0 = l; break; }
        }
        if (l0 < st.lineality.size()) {
            IntVec pivot = st.lineality[l0];
            Int ap = dot(a, pivot);
            if (ap < 0) { pivot = negated(pivot); ap = -ap; }
            std::vector<IntVec> new_lin;
            new_lin.reserve(st.lineality.size() - 1);
            for (std::size_t l = 0; l < st.lineality.size(); ++l) {
                if (l == l0) continue;
                Int al = dot(a, st.lineality[l]);
                IntVec v(ambient);
                for (int c = 0; c < ambient; ++c) v[c] = ap * st.lineality[l][c] - al * pivot[c];
                make_primitive(v);
                new_lin.push_back(std::move(v));
            }
            st.lineality = std::move(new_lin);
            // Project existing rays onto a.x = 0 along the pivot line; tight
            // sets are unchanged because every earlier constraint vanishes on
            // the pivot.
            for (std::size_t r = 0; r < st.rays.size(); ++r) {
                Int ar = dot(a, st.rays[r]);
                if (ar != 0) {
                    IntVec v(ambient);
                    for (int c = 0; c < ambient; ++c) v[c] = ap * st.rays[r][c] - ar * pivot[c];
                    make_primitive(v);
                    st.rays[r] = std::move(v);
                }
                st.tight[r].set(t);
            }
            TightSet ts(m);
            ts.set_range(t);
            st.rays.push_back(std::move(pivot));
            st.tight.push_back(std::move(ts));
            continue;
        }

        // Standard Motzkin step within the current linear span.
        std::vector<Int> val(st.rays.size());
        std::vector<std::size_t> pos, zero, neg;
        for (std::size_t r = 0; r < st.rays.size(); ++r) {
            val[r] = dot(a, st.rays[r]);
            int s = sgn(val[r]);
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else zero.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r : zero) st.tight[r].set(t);
            continue;
        }

        std::vector<IntVec> new_rays;
        std::vector<TightSet> new_tight;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                TightSet common = TightSet::intersect(st.tight[p], st.tight[n]);
                bool adjacent = true;
                for (std::size_t r = 0; r < st.rays.size(); ++r) {
                    if (r == p || r == n) continue;
                    if (st.tight[r].contains(common)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                IntVec v(ambient);
                for (int c = 0; c < ambient; ++c)
                    v[c] = val[p] * st.rays[n][c] - val[n] * st.rays[p][c];
                make_primitive(v);
                common.set(t);
                new_rays.push_back(std::move(v));
                new_tight.push_back(std::move(common));
            }
        }

        std::vector<IntVec> keep_rays;
        std::vector<TightSet> keep_tight;
        keep_rays.reserve(pos.size() + zero.size() + new_rays.size());
        for (std::size_t p : pos) {
            keep_rays.push_back(std::move(st.rays[p]));
            keep_tight.push_back(std::move(st.tight[p]));
        }
        for (std::size_t z : zero) {
            st.tight[z].set(t);
            keep_rays.push_back(std::move(st.rays[z]));
            keep_tight.push_back(std::move(st.tight[z]));
        }
        for (std::size_t i = 0; i < new_rays.size(); ++i) {
            keep_rays.push_back(std::move(new_rays[i]));
            keep_tight.push_back(std::move(new_tight[i]));
        }
        st.rays = std::move(keep_rays);
        st.tight = std::move(keep_tight);
    }
    return st;
}

/// Generators of the dual cone {a : a.g >= 0 for all generators g}.  Extreme
/// rays of the dual are the facet normals of cone(generators); its lineality
/// is the orthogonal complement of the span.
inline DDResult dd_dual_of_generators(int ambient, const std::vector<IntVec>& generators) {
    return dd_from_halfspaces(ambient, generators);
}

}  // namespace tropgr
