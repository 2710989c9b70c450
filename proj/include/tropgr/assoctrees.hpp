// Plane binary trees, the Stanley-Pitman cones C_T, point location by the
// prefix-sum recursion, the bijection with trivalent planar trees, and the
// fan equality F_{2,n} = F_{n-3}.
//
// Internal vertices carry the in-order labelling 1..m-1 (left subtree holds
// the smaller labels), which is the depth-first "drop down from a child"
// order of the original construction.
#pragma once

#include "tropgr/fan.hpp"
#include "tropgr/tropical.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tropgr {

class PlaneBinaryTree {
public:
    static constexpr int kLeaf = -1;
    struct Node {
        int left = kLeaf, right = kLeaf;  // >= 0: internal node index, kLeaf: leaf
    };

    static PlaneBinaryTree single_leaf() { return PlaneBinaryTree{}; }

    static PlaneBinaryTree combine(const PlaneBinaryTree& l, const PlaneBinaryTree& r) {
        PlaneBinaryTree t;
        t.nodes_ = l.nodes_;
        int left_root = l.root_;
        int offset = static_cast<int>(l.nodes_.size());
        for (const auto& nd : r.nodes_) {
            Node shifted = nd;
            if (shifted.left != kLeaf) shifted.left += offset;
            if (shifted.right != kLeaf) shifted.right += offset;
            t.nodes_.push_back(shifted);
        }
        int right_root = r.root_ == kLeaf ? kLeaf : r.root_ + offset;
        t.root_ = static_cast<int>(t.nodes_.size());
        t.nodes_.push_back({left_root, right_root});
        return t;
    }

    int root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int internal_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return internal_count() + 1; }

    /// In-order labels: label_of_node[idx] in 1..internal_count().
    std::vector<int> inorder_labels() const {
        std::vector<int> label(nodes_.size(), 0);
        int next = 1;
        inorder(root_, label, next);
        return label;
    }

    /// Parent/child pairs of internal vertices as (parent label, child label).
    std::vector<std::pair<int, int>> internal_edges() const {
        std::vector<int> label = inorder_labels();
        std::vector<std::pair<int, int>> out;
        for (std::size_t u = 0; u < nodes_.size(); ++u) {
            if (nodes_[u].left != kLeaf) out.emplace_back(label[u], label[nodes_[u].left]);
            if (nodes_[u].right != kLeaf) out.emplace_back(label[u], label[nodes_[u].right]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int root_label() const {
        if (root_ == kLeaf) throw std::logic_error("root_label: leaf-only tree");
        return inorder_labels()[root_];
    }

    /// Nested-parentheses serialization; a leaf prints as '*'.
    std::string to_string() const { return print(root_); }

    friend bool operator==(const PlaneBinaryTree& a, const PlaneBinaryTree& b) {
        return a.to_string() == b.to_string();
    }

private:
    void inorder(int u, std::vector<int>& label, int& next) const {
        if (u == kLeaf) return;
        inorder(nodes_[u].left, label, next);
        label[u] = next++;
        inorder(nodes_[u].right, label, next);
    }

    std::string print(int u) const {
        if (u == kLeaf) return "*";
        return "(" + print(nodes_[u].left) + print(nodes_[u].right) + ")";
    }

    std::vector<Node> nodes_;  // internal nodes only
    int root_ = kLeaf;
};

/// All plane binary trees with m leaves (Catalan(m-1) of them), in a fixed
/// recursive order.
inline std::vector<PlaneBinaryTree> enum_plane_binary(int m) {
    if (m < 1) throw std::invalid_argument("enum_plane_binary: need m >= 1");
    if (m == 1) return {PlaneBinaryTree::single_leaf()};
    std::vector<PlaneBinaryTree> out;
    for (int i = 1; i <= m - 1; ++i) {
        for (const auto& l : enum_plane_binary(i))
            for (const auto& r : enum_plane_binary(m - i)) out.push_back(PlaneBinaryTree::combine(l, r));
    }
    return out;
}

struct TreeInequality {
    int lo, hi;    // the window x_lo + ... + x_hi
    bool nonneg;   // true: >= 0, false: <= 0
};

struct TreeCone {
    PlaneBinaryTree tree;
    std::vector<TreeInequality> inequalities;
    Cone cone;
};

/// The simplicial cone C_T in R^{n-3} for a plane binary tree with n-1
/// leaves: parent i, child j contribute the window between them, >= 0 when
/// the child label is larger, <= 0 when smaller.
inline TreeCone cone_of_tree(const PlaneBinaryTree& t, int n) {
    if (t.leaf_count() != n - 1)
        throw std::invalid_argument("cone_of_tree: tree must have n-1 leaves");
    const int dim = n - 3;
    TreeCone tc;
    tc.tree = t;
    std::vector<IntVec> halfspaces;
    for (const auto& [i, j] : t.internal_edges()) {
        TreeInequality ineq{std::min(i, j), std::max(i, j) - 1, i < j};
        IntVec a(dim, 0);
        for (int l = ineq.lo; l <= ineq.hi; ++l) a[l - 1] = ineq.nonneg ? 1 : -1;
        halfspaces.push_back(std::move(a));
        tc.inequalities.push_back(ineq);
    }
    tc.cone = Cone::from_halfspaces(dim, halfspaces);
    return tc;
}

struct TieReport {
    int lo = 0, hi = 0;           // window of internal labels being split
    std::vector<int> argmins;     // labels achieving the minimal prefix sum
};

using PointLocation = std::variant<PlaneBinaryTree, TieReport>;

/// Locate the chamber of a point by the recursive prefix-sum argmin; a tie
/// means the point is on a cone boundary and is reported, not resolved.
inline PointLocation tree_of_point(const RatVec& x) {
    const int n = static_cast<int>(x.size()) + 3;
    std::vector<Rat> prefix(x.size() + 1);
    prefix[0] = 0;
    for (std::size_t i = 0; i < x.size(); ++i) prefix[i + 1] = prefix[i] + x[i];

    struct Builder {
        const std::vector<Rat>& prefix;
        std::vector<PlaneBinaryTree::Node> nodes;
        std::optional<TieReport> tie;

        int build(int lo, int hi) {  // returns node index or kLeaf
            if (lo > hi) return PlaneBinaryTree::kLeaf;
            int best = lo;
            std::vector<int> mins{lo};
            for (int r = lo + 1; r <= hi; ++r) {
                int c = cmp(prefix[r - 1], prefix[best - 1]);
                if (c < 0) {
                    best = r;
                    mins = {r};
                } else if (c == 0) {
                    mins.push_back(r);
                }
            }
            if (mins.size() > 1) {
                if (!tie) tie = TieReport{lo, hi, mins};
                return PlaneBinaryTree::kLeaf;
            }
            int l = build(lo, best - 1);
            int r = build(best + 1, hi);
            nodes.push_back({l, r});
            return static_cast<int>(nodes.size()) - 1;
        }
    } b{prefix, {}, std::nullopt};

    b.build(1, n - 2);
    if (b.tie) return *b.tie;
    // Rebuild through combine so node numbering is canonical.
    struct Rebuild {
        const std::vector<PlaneBinaryTree::Node>& nodes;
        PlaneBinaryTree run(int u) {
            if (u == PlaneBinaryTree::kLeaf) return PlaneBinaryTree::single_leaf();
            return PlaneBinaryTree::combine(run(nodes[u].left), run(nodes[u].right));
        }
    } rb{b.nodes};
    return rb.run(static_cast<int>(b.nodes.size()) - 1);
}

/// Trivalent planar trees with leaves labelled clockwise 1..n, stored by
/// rotation system.  Node ids 0..n-1 are the leaves (leaf i has label i+1),
/// the rest are internal of degree three.
struct TrivalentTree {
    int n = 0;
    std::vector<std::vector<int>> adj;  // neighbors in clockwise rotation order

    bool trivalent_ok() const {
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            std::size_t want = v < n ? 1 : 3;
            if (adj[v].size() != want) return false;
        }
        return true;
    }

    std::string canonical_string() const {
        std::string s = "T" + std::to_string(n) + ":";
        walk(adj[0][0], 0, s);
        return s;
    }

    friend bool operator==(const TrivalentTree& a, const TrivalentTree& b) {
        return a.n == b.n && a.canonical_string() == b.canonical_string();
    }

private:
    void walk(int u, int from, std::string& s) const {
        if (u < n) {
            s += std::to_string(u + 1);
            return;
        }
        int pos = 0;
        while (adj[u][pos] != from) ++pos;
        s += "(";
        walk(adj[u][(pos + 1) % 3], u, s);
        s += ",";
        walk(adj[u][(pos + 2) % 3], u, s);
        s += ")";
    }
};

/// Contract the edge at leaf 1 and make its internal endpoint the root;
/// children follow the clockwise rotation after the incoming edge.
inline PlaneBinaryTree trivalent_to_plane_binary(const TrivalentTree& t) {
    if (!t.trivalent_ok()) throw std::invalid_argument("trivalent_to_plane_binary: not trivalent");
    struct Builder {
        const TrivalentTree& t;
        PlaneBinaryTree run(int u, int from) const {
            if (u < t.n) return PlaneBinaryTree::single_leaf();
            int pos = 0;
            while (t.adj[u][pos] != from) ++pos;
            PlaneBinaryTree l = run(t.adj[u][(pos + 1) % 3], u);
            PlaneBinaryTree r = run(t.adj[u][(pos + 2) % 3], u);
            return PlaneBinaryTree::combine(l, r);
        }
    } b{t};
    if (t.n == 2) throw std::invalid_argument("trivalent_to_plane_binary: need n >= 3");
    return b.run(t.adj[0][0], 0);
}

/// Inverse: reattach leaf 1 at the root.  Remaining leaves get labels 2..n in
/// left-to-right order.
inline TrivalentTree plane_binary_to_trivalent(const PlaneBinaryTree& pb) {
    const int n = pb.leaf_count() + 1;
    TrivalentTree t;
    t.n = n;
    t.adj.assign(n + pb.internal_count(), {});
    int next_leaf = 1;  // leaf ids 1..n-1 carry labels 2..n
    struct Builder {
        const PlaneBinaryTree& pb;
        TrivalentTree& t;
        int& next_leaf;
        int node_id(int pb_node) const { return t.n + pb_node; }
        int run(int u, int parent_id) {
            if (u == PlaneBinaryTree::kLeaf) {
                int id = next_leaf++;
                t.adj[id] = {parent_id};
                return id;
            }
            int id = node_id(u);
            t.adj[id].push_back(parent_id);
            t.adj[id].push_back(run(pb.nodes()[u].left, id));
            t.adj[id].push_back(run(pb.nodes()[u].right, id));
            return id;
        }
    } b{pb, t, next_leaf};
    if (pb.root() == PlaneBinaryTree::kLeaf)
        throw std::invalid_argument("plane_binary_to_trivalent: need at least one internal node");
    int root_id = t.n + pb.root();
    t.adj[0] = {root_id};
    b.run(pb.root(), 0);
    // The recursion pushed a placeholder parent for the root; fix it to leaf 1.
    t.adj[root_id][0] = 0;
    return t;
}

/// All triangulations of the convex n-gon, as lists of vertex triples.
inline std::vector<std::vector<std::array<int, 3>>> polygon_triangulations(int n) {
    struct Rec {
        std::vector<std::vector<std::array<int, 3>>> run(const std::vector<int>& poly) {
            if (poly.size() == 2) return {{}};
            std::vector<std::vector<std::array<int, 3>>> out;
            const int a = poly.front(), b = poly.back();
            for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
                std::array<int, 3> tri{a, poly[i], b};
                std::sort(tri.begin(), tri.end());
                std::vector<int> left(poly.begin(), poly.begin() + i + 1);
                std::vector<int> right(poly.begin() + i, poly.end());
                for (const auto& lt : run(left)) {
                    for (const auto& rt : run(right)) {
                        std::vector<std::array<int, 3>> tris = lt;
                        tris.insert(tris.end(), rt.begin(), rt.end());
                        tris.push_back(tri);
                        out.push_back(std::move(tris));
                    }
                }
            }
            return out;
        }
    } rec;
    std::vector<int> poly(n);
    for (int i = 0; i < n; ++i) poly[i] = i + 1;
    return rec.run(poly);
}

/// Dual trivalent tree of a triangulation: one internal node per triangle,
/// one leaf per polygon side; side {i, i+1} is leaf i, side {n, 1} is leaf n.
inline TrivalentTree triangulation_dual(int n, const std::vector<std::array<int, 3>>& tris) {
    TrivalentTree t;
    t.n = n;
    t.adj.assign(n + tris.size(), {});
    std::map<std::pair<int, int>, std::vector<int>> edge_owner;  // edge -> triangle node ids
    for (std::size_t ti = 0; ti < tris.size(); ++ti) {
        const auto& tr = tris[ti];
        int id = n + static_cast<int>(ti);
        // Clockwise edge order around the triangle with sorted vertices a<b<c.
        std::vector<std::pair<int, int>> edges{{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[0], tr[2]}};
        for (const auto& e : edges) edge_owner[e].push_back(id);
        t.adj[id] = {0, 0, 0};  // filled below in rotation order
    }
    auto side_leaf = [&](std::pair<int, int> e) -> int {
        if (e.first == 1 && e.second == n) return n - 1;  // label n -> id n-1
        if (e.second == e.first + 1) return e.first - 1;  // label e.first -> id e.first-1
        return -1;
    };
    for (std::size_t ti = 0; ti < tris.size(); ++ti) {
        const auto& tr = tris[ti];
        int id = n + static_cast<int>(ti);
        std::vector<std::pair<int, int>> edges{{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[0], tr[2]}};
        for (int e = 0; e < 3; ++e) {
            int leaf = side_leaf(edges[e]);
            if (leaf >= 0) {
                t.adj[id][e] = leaf;
                t.adj[leaf] = {id};
            } else {
                for (int other : edge_owner[edges[e]])
                    if (other != id) t.adj[id][e] = other;
            }
        }
    }
    return t;
}

inline std::vector<TrivalentTree> enum_trivalent(int n) {
    std::vector<TrivalentTree> out;
    for (const auto& tris : polygon_triangulations(n)) out.push_back(triangulation_dual(n, tris));
    return out;
}

/// Fan equality F_{2,n} = F_{n-3}: the canonical maximal cones of
/// build_F(2,n) coincide with the Stanley-Pitman cones {C_T}.
inline bool check_F2n_equals_SP(int n, int threads = 1) {
    if (n < 4 || n > 8) throw std::invalid_argument("check_F2n_equals_SP: need 4 <= n <= 8");
    Fan f = build_F(2, n, threads);
    std::vector<Cone> tree_cones;
    for (const auto& t : enum_plane_binary(n - 1)) tree_cones.push_back(cone_of_tree(t, n).cone);
    std::sort(tree_cones.begin(), tree_cones.end());
    tree_cones.erase(std::unique(tree_cones.begin(), tree_cones.end()), tree_cones.end());
    return tree_cones == f.maximal_cones();
}

}  // namespace tropgr
