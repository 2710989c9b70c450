// The directed grid graph Web_{k,n}, its lattice paths and vertex-disjoint
// path families, and the resulting Pluecker polynomials in region variables.
//
// Layout conventions (fixed once, used by every "below a path" test):
//   * crossings (r, c) with row r in 1..k (top to bottom) and column wire
//     c in k+1..n (right to left: wire k+1 is rightmost);
//   * terminals 1..k enter on the right, k+1..n exit at the bottom, so the
//     boundary labels read 1..n clockwise;
//   * horizontal edges run leftward (increasing c), vertical edges downward;
//   * region (i, j) is bounded above by horizontal wire i and on the left by
//     vertical wire j; it is inner iff i <= k-1 and j >= k+2.
//
// A path from terminal a to terminal b is a monotone staircase recorded by
// its descent columns.  Region (i, j) lies below the path iff j <= b and the
// path crosses the vertical strip of wire j in a row <= i.
#pragma once

#include "tropgr/polynomial.hpp"
#include "tropgr/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgr {

/// All k-element subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct Region {
    int index;  // position in the (i, j)-sorted list of all regions
    int i, j;
    bool inner;
};

struct WebEdge {
    enum Kind { Entry, Horizontal, Vertical, Exit } kind;
    int row, col;  // crossing the edge leaves from (Entry: the crossing it enters)
};

class LatticePath {
public:
    // descents[r - source] = column at which the path drops from row r;
    // nondecreasing, last entry equals the sink.
    LatticePath(int k, int source, int sink, std::vector<int> descents)
        : k_(k), source_(source), sink_(sink), descents_(std::move(descents)) {}

    int source() const { return source_; }
    int sink() const { return sink_; }

    /// Row in which the path crosses the vertical strip of wire j.
    int strip_row(int j) const {
        int prev = k_;  // entry: strip k+1 is crossed in the source row
        for (int r = source_; r <= k_; ++r) {
            int d = descents_[r - source_];
            if (prev < j && j <= d) return r;
            prev = d;
        }
        throw std::logic_error("strip_row: strip not crossed");
    }

    std::vector<std::pair<int, int>> crossings() const {
        std::vector<std::pair<int, int>> out;
        int prev = k_ + 1;
        for (int r = source_; r <= k_; ++r) {
            int d = descents_[r - source_];
            for (int c = prev; c <= d; ++c) out.emplace_back(r, c);
            prev = d;
        }
        return out;
    }

    std::vector<WebEdge> edge_sequence() const {
        std::vector<WebEdge> out;
        out.push_back({WebEdge::Entry, source_, k_ + 1});
        int prev = k_ + 1;
        for (int r = source_; r <= k_; ++r) {
            int d = descents_[r - source_];
            for (int c = prev; c < d; ++c) out.push_back({WebEdge::Horizontal, r, c});
            if (r < k_) out.push_back({WebEdge::Vertical, r, d});
            prev = d;
        }
        out.push_back({WebEdge::Exit, k_, sink_});
        return out;
    }

private:
    int k_, source_, sink_;
    std::vector<int> descents_;
};

using PathFamily = std::vector<LatticePath>;

enum class VarMode { AllRegions, InnerOnly };

class WebDiagram {
public:
    WebDiagram(int k, int n) : k_(k), n_(n) {
        if (k < 1 || n < 2 || k > n - 1)
            throw std::invalid_argument("build_web: need 1 <= k <= n-1");
        int idx = 0, inner_idx = 0;
        for (int i = 1; i <= k_; ++i) {
            for (int j = k_ + 1; j <= n_; ++j) {
                bool inner = (i <= k_ - 1) && (j >= k_ + 2);
                regions_.push_back({idx, i, j, inner});
                region_index_[{i, j}] = idx;
                if (inner) {
                    inner_index_[{i, j}] = inner_idx;
                    inner_regions_.push_back(idx);
                    ++inner_idx;
                }
                ++idx;
            }
        }
        for (int r = 1; r <= k_; ++r) {
            edges_.push_back({WebEdge::Entry, r, k_ + 1});
            for (int c = k_ + 1; c < n_; ++c) edges_.push_back({WebEdge::Horizontal, r, c});
        }
        for (int c = k_ + 1; c <= n_; ++c) {
            for (int r = 1; r < k_; ++r) edges_.push_back({WebEdge::Vertical, r, c});
            edges_.push_back({WebEdge::Exit, k_, c});
        }
    }

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<Region>& regions() const { return regions_; }
    const std::vector<WebEdge>& edges() const { return edges_; }
    int n_regions() const { return static_cast<int>(regions_.size()); }
    int n_inner() const { return static_cast<int>(inner_regions_.size()); }

    int region_index(int i, int j) const { return region_index_.at({i, j}); }
    int inner_index(int i, int j) const { return inner_index_.at({i, j}); }

    /// Inner regions in variable order (row-major, right to left in each row;
    /// for k = 2 this is exactly "x_1 ... x_{n-3} from right to left").
    std::vector<Region> inner_region_list() const {
        std::vector<Region> out;
        for (int idx : inner_regions_) out.push_back(regions_[idx]);
        return out;
    }

    std::vector<LatticePath> paths(int source, int sink) const {
        if (source < 1 || source > k_ || sink <= k_ || sink > n_)
            throw std::invalid_argument("paths: invalid terminals");
        std::vector<LatticePath> out;
        std::vector<int> desc(k_ - source + 1);
        enumerate_descents(source, sink, 0, k_ + 1, desc, out);
        return out;
    }

    /// All vertex-disjoint families from [k] \ K to K \ [k]; for K = [k] the
    /// unique family is the empty one.
    std::vector<PathFamily> path_families(const std::vector<int>& K) const {
        check_subset(K);
        std::vector<int> sources, targets;
        for (int i = 1; i <= k_; ++i)
            if (!std::binary_search(K.begin(), K.end(), i)) sources.push_back(i);
        for (int j : K)
            if (j > k_) targets.push_back(j);
        if (sources.size() != targets.size())
            throw std::logic_error("path_families: source/target size mismatch");

        std::vector<PathFamily> out;
        if (sources.empty()) {
            out.emplace_back();
            return out;
        }
        std::vector<int> perm(targets.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::sort(perm.begin(), perm.end());
        do {
            PathFamily family;
            std::vector<std::vector<std::pair<int, int>>> used;
            extend_family(sources, targets, perm, 0, family, used, out);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(out.begin(), out.end(), [](const PathFamily& a, const PathFamily& b) {
            auto key = [](const PathFamily& f) {
                std::vector<std::pair<int, int>> v;
                for (const auto& p : f) {
                    auto cs = p.crossings();
                    v.insert(v.end(), cs.begin(), cs.end());
                }
                return v;
            };
            return key(a) < key(b);
        });
        return out;
    }

    /// Exponent of each region under a family: the number of family paths the
    /// region lies below.
    Exponent family_exponent(const PathFamily& fam, VarMode mode) const {
        Exponent e(mode == VarMode::AllRegions ? n_regions() : n_inner(), 0);
        for (const auto& p : fam) {
            for (int j = k_ + 1; j <= p.sink(); ++j) {
                int row = p.strip_row(j);
                for (int i = row; i <= k_; ++i) {
                    const Region& reg = regions_[region_index_.at({i, j})];
                    if (mode == VarMode::AllRegions) e[reg.index] += 1;
                    else if (reg.inner) e[inner_index_.at({i, j})] += 1;
                }
            }
        }
        return e;
    }

    /// P_K as a polynomial in region variables: one monomial per family,
    /// merged (so coefficients are positive integers).
    ExponentPolynomial plucker_poly(const std::vector<int>& K, VarMode mode) const {
        int nv = mode == VarMode::AllRegions ? n_regions() : n_inner();
        ExponentPolynomial poly(nv);
        for (const auto& fam : path_families(K)) poly.add_term(family_exponent(fam, mode), 1);
        return poly;
    }

    /// Entry a_{ij} of the parameterizing matrix: the signed generating
    /// function of paths from terminal i to terminal j, with the sign
    /// (-1)^{#sources strictly between i and j} that makes every maximal
    /// minor equal P_K on the nose.  Columns 1..k form the identity.
    ExponentPolynomial matrix_entry_poly(int i, int j, VarMode mode = VarMode::AllRegions) const {
        if (i < 1 || i > k_ || j < 1 || j > n_)
            throw std::invalid_argument("matrix_entry_poly: invalid indices");
        int nv = mode == VarMode::AllRegions ? n_regions() : n_inner();
        if (j <= k_) return ExponentPolynomial::constant(nv, i == j ? 1 : 0);
        long long sign = ((k_ - i) % 2 == 0) ? 1 : -1;
        ExponentPolynomial poly(nv);
        for (const auto& p : paths(i, j)) poly.add_term(family_exponent({p}, mode), sign);
        return poly;
    }

    /// Gessel-Viennot cross-check: det of the k x k minor on columns K of the
    /// numerically evaluated matrix must equal P_K at the same assignment.
    bool lgv_check(const std::vector<int>& K, const RatVec& assignment) const {
        check_subset(K);
        if (static_cast<int>(assignment.size()) != n_regions())
            throw std::invalid_argument("lgv_check: need one value per region");
        for (const auto& v : assignment)
            if (v <= 0) throw std::invalid_argument("lgv_check: assignment must be positive");

        std::vector<RatVec> minor(k_, RatVec(k_));
        for (int r = 1; r <= k_; ++r)
            for (int c = 0; c < k_; ++c)
                minor[r - 1][c] = matrix_entry_poly(r, K[c]).eval(assignment);
        Rat det = determinant(minor);
        Rat direct = plucker_poly(K, VarMode::AllRegions).eval(assignment);
        return det == direct;
    }

    std::string render_text() const {
        std::string s;
        auto col_pos = [&](int c) { return 4 + 4 * (n_ - c); };
        const int width = col_pos(k_ + 1) + 6;
        {
            std::string head(width, ' ');
            for (int c = k_ + 1; c <= n_; ++c) {
                std::string lbl = std::to_string(c);
                head.replace(col_pos(c), lbl.size(), lbl);
            }
            s += head + "\n";
        }
        for (int r = 1; r <= k_; ++r) {
            std::string bar(width, ' ');
            for (int c = k_ + 1; c <= n_; ++c) bar[col_pos(c)] = '|';
            s += bar + "\n";
            std::string row(width, ' ');
            for (int x = col_pos(n_); x < col_pos(k_ + 1) + 4; ++x) row[x] = '-';
            for (int c = k_ + 1; c <= n_; ++c) row[col_pos(c)] = '+';
            row[col_pos(n_) - 1] = '<';
            std::string lbl = std::to_string(r);
            row.replace(col_pos(k_ + 1) + 5, lbl.size(), lbl);
            s += row + "\n";
        }
        {
            std::string bar(width, ' ');
            for (int c = k_ + 1; c <= n_; ++c) bar[col_pos(c)] = 'v';
            s += bar + "\n";
        }
        return s;
    }

    static Rat determinant(std::vector<RatVec> m) {
        const std::size_t n = m.size();
        Rat det = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = n;
            for (std::size_t r = col; r < n; ++r)
                if (m[r][col] != 0) { pivot = r; break; }
            if (pivot == n) return 0;
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                det = -det;
            }
            det *= m[col][col];
            Rat inv = m[col][col];
            for (std::size_t r = col + 1; r < n; ++r) {
                if (m[r][col] == 0) continue;
                Rat f = m[r][col] / inv;
                for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            }
        }
        det.canonicalize();
        return det;
    }

private:
    void check_subset(const std::vector<int>& K) const {
        if (static_cast<int>(K.size()) != k_)
            throw std::invalid_argument("expected a k-subset of [n]");
        for (std::size_t i = 0; i < K.size(); ++i) {
            if (K[i] < 1 || K[i] > n_ || (i > 0 && K[i] <= K[i - 1]))
                throw std::invalid_argument("expected a sorted k-subset of [n]");
        }
    }

    void enumerate_descents(int source, int sink, int pos, int low, std::vector<int>& desc,
                            std::vector<LatticePath>& out) const {
        const int rows = k_ - source + 1;
        if (pos == rows - 1) {
            if (low <= sink) {
                desc[pos] = sink;
                out.emplace_back(k_, source, sink, desc);
            }
            return;
        }
        for (int c = low; c <= sink; ++c) {
            desc[pos] = c;
            enumerate_descents(source, sink, pos + 1, c, desc, out);
        }
    }

    void extend_family(const std::vector<int>& sources, const std::vector<int>& targets,
                       const std::vector<int>& perm, std::size_t pos, PathFamily& family,
                       std::vector<std::vector<std::pair<int, int>>>& used,
                       std::vector<PathFamily>& out) const {
        if (pos == sources.size()) {
            out.push_back(family);
            return;
        }
        for (const auto& p : paths(sources[pos], targets[perm[pos]])) {
            auto cs = p.crossings();
            bool clash = false;
            for (const auto& prev : used) {
                for (const auto& v : cs) {
                    if (std::binary_search(prev.begin(), prev.end(), v)) { clash = true; break; }
                }
                if (clash) break;
            }
            if (clash) continue;
            std::sort(cs.begin(), cs.end());
            used.push_back(std::move(cs));
            family.push_back(p);
            extend_family(sources, targets, perm, pos + 1, family, used, out);
            family.pop_back();
            used.pop_back();
        }
    }

    int k_, n_;
    std::vector<Region> regions_;
    std::vector<WebEdge> edges_;
    std::map<std::pair<int, int>, int> region_index_;
    std::map<std::pair<int, int>, int> inner_index_;
    std::vector<int> inner_regions_;
};

inline WebDiagram build_web(int k, int n) { return WebDiagram(k, n); }

}  // namespace tropgr
