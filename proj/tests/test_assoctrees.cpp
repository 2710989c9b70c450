#include "tropgr/assoctrees.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace tropgr;

TEST_CASE("plane binary tree enumeration is Catalan") {
    REQUIRE(enum_plane_binary(2).size() == 1);
    REQUIRE(enum_plane_binary(4).size() == 5);
    REQUIRE(enum_plane_binary(5).size() == 14);
    for (int m = 1; m <= 8; ++m)
        REQUIRE(static_cast<long>(enum_plane_binary(m).size()) == testutil::catalan(m - 1));
    REQUIRE_THROWS_AS(enum_plane_binary(0), std::invalid_argument);
}

TEST_CASE("in-order labels put smaller labels in the left subtree") {
    for (const auto& t : enum_plane_binary(5)) {
        auto labels = t.inorder_labels();
        std::set<int> seen(labels.begin(), labels.end());
        REQUIRE(static_cast<int>(seen.size()) == t.internal_count());
        REQUIRE(*seen.begin() == 1);
        REQUIRE(*seen.rbegin() == t.internal_count());
        int root_label = t.root_label();
        // Left subtree labels are exactly 1..root-1.
        std::vector<std::pair<int, int>> edges = t.internal_edges();
        for (const auto& [p, c] : edges) REQUIRE(p != c);
    }
}

TEST_CASE("cone_of_tree for n=4 gives the two half-lines") {
    auto trees = enum_plane_binary(3);
    REQUIRE(trees.size() == 2);
    std::set<IntVec> normals;
    for (const auto& t : trees) {
        TreeCone tc = cone_of_tree(t, 4);
        REQUIRE(tc.inequalities.size() == 1);
        REQUIRE(tc.cone.halfspaces().size() == 1);
        normals.insert(tc.cone.halfspaces()[0]);
    }
    REQUIRE(normals == std::set<IntVec>{IntVec{-1}, IntVec{1}});
    REQUIRE_THROWS_AS(cone_of_tree(enum_plane_binary(3)[0], 5), std::invalid_argument);
}

TEST_CASE("tree cones have n-3 inequalities and are simplicial") {
    for (int n : {5, 6, 7}) {
        for (const auto& t : enum_plane_binary(n - 1)) {
            TreeCone tc = cone_of_tree(t, n);
            REQUIRE(static_cast<int>(tc.inequalities.size()) == n - 3);
            REQUIRE(tc.cone.dim() == n - 3);
            REQUIRE(tc.cone.pointed());
            REQUIRE(tc.cone.rays().size() == static_cast<std::size_t>(n - 3));
        }
    }
}

TEST_CASE("the tree cones tile R^{n-3}") {
    for (int n : {5, 6}) {
        std::vector<Cone> cones;
        for (const auto& t : enum_plane_binary(n - 1)) cones.push_back(cone_of_tree(t, n).cone);
        Fan f(n - 3, cones, true);
        REQUIRE(f.n_maximal() == static_cast<std::size_t>(testutil::catalan(n - 2)));
        REQUIRE(f.certify_complete());
        // Random points land in at least one cone (interiors disjoint is part
        // of the facet-pairing certificate).
        std::mt19937_64 rng(3);
        for (int s = 0; s < 50; ++s) {
            RatVec x = testutil::random_signed_vec(rng, n - 3);
            REQUIRE(f.cone_containing(x).has_value());
        }
    }
}

TEST_CASE("tree_of_point on the published examples") {
    // All coordinates positive: root 1.
    PointLocation loc = tree_of_point({Rat(2), Rat(1)});
    REQUIRE(std::holds_alternative<PlaneBinaryTree>(loc));
    REQUIRE(std::get<PlaneBinaryTree>(loc).root_label() == 1);

    // n = 5, x = (-1,-1): prefix sums 0,-1,-2, root 3.
    PointLocation loc2 = tree_of_point({Rat(-1), Rat(-1)});
    REQUIRE(std::get<PlaneBinaryTree>(loc2).root_label() == 3);

    // Tie: x = (0, 5) has prefix sums 0, 0, 5.
    PointLocation loc3 = tree_of_point({Rat(0), Rat(5)});
    REQUIRE(std::holds_alternative<TieReport>(loc3));
    REQUIRE(std::get<TieReport>(loc3).argmins == std::vector<int>{1, 2});
}

TEST_CASE("tree_of_point round trips through interior points") {
    for (int n : {5, 6, 7, 8}) {
        for (const auto& t : enum_plane_binary(n - 1)) {
            TreeCone tc = cone_of_tree(t, n);
            IntVec ip = tc.cone.interior_point();
            RatVec x = to_rational(ip);
            PointLocation loc = tree_of_point(x);
            REQUIRE(std::holds_alternative<PlaneBinaryTree>(loc));
            REQUIRE(std::get<PlaneBinaryTree>(loc) == t);
        }
    }
}

TEST_CASE("tree_of_point agrees with cone membership on random points") {
    std::mt19937_64 rng(77);
    int n = 6;
    std::vector<std::pair<PlaneBinaryTree, Cone>> cones;
    for (const auto& t : enum_plane_binary(n - 1)) cones.emplace_back(t, cone_of_tree(t, n).cone);
    for (int s = 0; s < 60; ++s) {
        RatVec x = testutil::random_signed_vec(rng, n - 3);
        PointLocation loc = tree_of_point(x);
        if (std::holds_alternative<TieReport>(loc)) continue;
        const PlaneBinaryTree& t = std::get<PlaneBinaryTree>(loc);
        for (const auto& [tree, cone] : cones) {
            if (tree == t) REQUIRE(cone.contains(x));
        }
    }
}

TEST_CASE("trivalent trees are counted by Catalan and map bijectively") {
    for (int n : {4, 5, 6, 7, 8}) {
        auto trees = enum_trivalent(n);
        REQUIRE(static_cast<long>(trees.size()) == testutil::catalan(n - 2));
        std::set<std::string> images;
        for (const auto& tv : trees) {
            REQUIRE(tv.trivalent_ok());
            PlaneBinaryTree pb = trivalent_to_plane_binary(tv);
            REQUIRE(pb.leaf_count() == n - 1);
            images.insert(pb.to_string());
            // Round trip is the identity.
            TrivalentTree back = plane_binary_to_trivalent(pb);
            REQUIRE(back == tv);
        }
        REQUIRE(images.size() == trees.size());  // injective, hence bijective
    }
}

TEST_CASE("n=4 bijection pairs the two trees") {
    auto trees = enum_trivalent(4);
    REQUIRE(trees.size() == 2);
    std::set<std::string> pb;
    for (const auto& tv : trees) pb.insert(trivalent_to_plane_binary(tv).to_string());
    REQUIRE(pb == std::set<std::string>{"(*(**))", "((**)*)"});
}

TEST_CASE("F_{2,n} equals the Stanley-Pitman fan") {
    REQUIRE(check_F2n_equals_SP(5));
    REQUIRE(check_F2n_equals_SP(6));
    REQUIRE_THROWS_AS(check_F2n_equals_SP(9), std::invalid_argument);
}

TEST_CASE("every Gr_{2,n} tropical map is linear on every tree cone") {
    int n = 6;
    WebDiagram w(2, n);
    auto maps = trop_plucker_maps(w);
    for (const auto& t : enum_plane_binary(n - 1)) {
        Cone c = cone_of_tree(t, n).cone;
        for (const auto& tp : maps) {
            bool linear = false;
            for (const auto& e : tp.exponents()) {
                bool ok = true;
                for (const auto& e2 : tp.exponents()) {
                    for (const auto& r : c.rays()) {
                        Int s1 = 0, s2 = 0;
                        for (std::size_t i = 0; i < r.size(); ++i) {
                            s1 += e[i] * r[i];
                            s2 += e2[i] * r[i];
                        }
                        if (s1 > s2) { ok = false; break; }
                    }
                    if (!ok) break;
                }
                if (ok) { linear = true; break; }
            }
            REQUIRE(linear);
        }
    }
}

TEST_CASE("theta normalization: prefix-sum windows have the linearity fan of theta") {
    // min over x_1+...+x_l for l in [i..j] has the same linearity fan as
    // min over x_i+...+x_l for l in [i..j].
    int dim = 3;
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= 3; ++j) {
            std::vector<Exponent> full, theta;
            for (int l = i; l <= j; ++l) {
                Exponent a(dim, 0), b(dim, 0);
                for (int t = 1; t <= l; ++t) a[t - 1] = 1;       // x_1+...+x_l
                for (int t = i; t <= l; ++t) b[t - 1] = 1;       // x_i+...+x_l
                full.push_back(a);
                theta.push_back(b);
            }
            Fan f1 = linearity_fan(TropicalPolynomial(dim, full));
            Fan f2 = linearity_fan(TropicalPolynomial(dim, theta));
            REQUIRE(f1 == f2);
        }
    }
}
