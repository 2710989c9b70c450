#include "tropgr/webdiagram.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tropgr;

namespace {

Exponent inner_exp(const WebDiagram& w, std::initializer_list<std::pair<std::pair<int, int>, int>> e) {
    Exponent v(w.n_inner(), 0);
    for (auto& [ij, c] : e) v[w.inner_index(ij.first, ij.second)] = c;
    return v;
}

}  // namespace

TEST_CASE("build_web region counts") {
    WebDiagram w49(4, 9);
    REQUIRE(w49.n_regions() == 20);
    REQUIRE(w49.n_inner() == 12);

    WebDiagram w25(2, 5);
    REQUIRE(w25.n_regions() == 6);
    REQUIRE(w25.n_inner() == 2);

    WebDiagram w12(1, 2);
    REQUIRE(w12.n_regions() == 1);
    REQUIRE(w12.n_inner() == 0);
}

TEST_CASE("build_web rejects out-of-range parameters") {
    REQUIRE_THROWS_AS(build_web(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(build_web(3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(build_web(5, 4), std::invalid_argument);
}

TEST_CASE("edge set has 2k(n-k) edges with k entries and n-k exits") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {4, 9}}) {
        WebDiagram w(k, n);
        REQUIRE(static_cast<int>(w.edges().size()) == 2 * k * (n - k));
        int entries = 0, exits = 0;
        for (const auto& e : w.edges()) {
            if (e.kind == WebEdge::Entry) ++entries;
            if (e.kind == WebEdge::Exit) ++exits;
        }
        REQUIRE(entries == k);
        REQUIRE(exits == n - k);
    }
}

TEST_CASE("inner regions of Web_{2,n} run right to left") {
    WebDiagram w(2, 6);
    auto inner = w.inner_region_list();
    REQUIRE(inner.size() == 3);
    // x1 is the rightmost inner region (1,4), then (1,5), (1,6).
    REQUIRE(inner[0].j == 4);
    REQUIRE(inner[1].j == 5);
    REQUIRE(inner[2].j == 6);
    for (const auto& r : inner) REQUIRE(r.i == 1);
}

TEST_CASE("path families for Gr_{2,5}") {
    WebDiagram w(2, 5);
    REQUIRE(w.path_families({1, 2}).size() == 1);
    REQUIRE(w.path_families({1, 2})[0].empty());
    REQUIRE(w.path_families({3, 4}).size() == 1);
    REQUIRE(w.path_families({2, 5}).size() == 3);
    REQUIRE_THROWS_AS(w.path_families({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("plucker polynomials of Gr_{2,5} in inner variables") {
    WebDiagram w(2, 5);

    ExponentPolynomial p12 = w.plucker_poly({1, 2}, VarMode::InnerOnly);
    REQUIRE(p12 == ExponentPolynomial::constant(2, 1));

    ExponentPolynomial p24 = w.plucker_poly({2, 4}, VarMode::InnerOnly);
    ExponentPolynomial expect24(2);
    expect24.add_term(inner_exp(w, {}), 1);
    expect24.add_term(inner_exp(w, {{{1, 4}, 1}}), 1);
    REQUIRE(p24 == expect24);  // 1 + x1

    ExponentPolynomial p45 = w.plucker_poly({4, 5}, VarMode::InnerOnly);
    ExponentPolynomial expect45(2);
    expect45.add_term(inner_exp(w, {{{1, 4}, 1}, {{1, 5}, 1}}), 1);
    REQUIRE(p45 == expect45);  // x1 x2

    ExponentPolynomial p34 = w.plucker_poly({3, 4}, VarMode::InnerOnly);
    ExponentPolynomial expect34(2);
    expect34.add_term(inner_exp(w, {{{1, 4}, 1}}), 1);
    REQUIRE(p34 == expect34);  // x1
}

TEST_CASE("plucker polynomial coefficients are positive integers") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {3, 6}}) {
        WebDiagram w(k, n);
        for (const auto& K : k_subsets(n, k)) {
            ExponentPolynomial p = w.plucker_poly(K, VarMode::InnerOnly);
            REQUIRE(p.all_coefficients_positive());
            ExponentPolynomial pa = w.plucker_poly(K, VarMode::AllRegions);
            // Over all regions, families have distinct monomials: coefficients 1.
            for (const auto& [e, c] : pa.terms()) REQUIRE(c == 1);
            REQUIRE(pa.n_terms() == w.path_families(K).size());
        }
    }
}

TEST_CASE("Gr_{2,n} inner polynomials are consecutive prefix products") {
    for (int n : {5, 6, 7}) {
        WebDiagram w(2, n);
        for (const auto& K : k_subsets(n, 2)) {
            ExponentPolynomial p = w.plucker_poly(K, VarMode::InnerOnly);
            std::vector<int> lengths;
            for (const auto& [e, c] : p.terms()) {
                // Each exponent is a 0/1 prefix indicator.
                int len = 0;
                bool in_prefix = true;
                for (int x : e) {
                    REQUIRE((x == 0 || x == 1));
                    if (x == 1) {
                        REQUIRE(in_prefix);
                        ++len;
                    } else {
                        in_prefix = false;
                    }
                }
                lengths.push_back(len);
            }
            std::sort(lengths.begin(), lengths.end());
            for (std::size_t i = 1; i < lengths.size(); ++i)
                REQUIRE(lengths[i] == lengths[i - 1] + 1);
        }
    }
}

TEST_CASE("outer-region exponents are constant across the families of each K") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}}) {
        WebDiagram w(k, n);
        std::vector<int> outer_positions;
        for (const auto& r : w.regions())
            if (!r.inner) outer_positions.push_back(r.index);
        for (const auto& K : k_subsets(n, k)) {
            auto fams = w.path_families(K);
            REQUIRE(!fams.empty());
            Exponent first = w.family_exponent(fams[0], VarMode::AllRegions);
            for (const auto& f : fams) {
                Exponent e = w.family_exponent(f, VarMode::AllRegions);
                for (int pos : outer_positions) REQUIRE(e[pos] == first[pos]);
            }
        }
    }
}

TEST_CASE("matrix entries: identity block and signed path sums") {
    WebDiagram w(3, 6);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            ExponentPolynomial e = w.matrix_entry_poly(i, j);
            REQUIRE(e == ExponentPolynomial::constant(w.n_regions(), i == j ? 1 : 0));
        }
    }
    // k = 3: entries of row 1 are plain path sums with +1 coefficients.
    ExponentPolynomial a14 = w.matrix_entry_poly(1, 4);
    REQUIRE(a14.n_terms() == w.paths(1, 4).size());
    for (const auto& [e, c] : a14.terms()) REQUIRE(c == 1);

    // k = 2: the sign making minors equal P_K is (-1)^{k-i}; row 1 is -1.
    WebDiagram w25(2, 5);
    ExponentPolynomial a13 = w25.matrix_entry_poly(1, 3), a23 = w25.matrix_entry_poly(2, 3);
    for (const auto& [e, c] : a13.terms()) REQUIRE(c == -1);
    for (const auto& [e, c] : a23.terms()) REQUIRE(c == 1);
    REQUIRE_THROWS_AS(w.matrix_entry_poly(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(w.matrix_entry_poly(1, 7), std::invalid_argument);
}

TEST_CASE("lgv identity at the all-ones assignment counts families") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
        WebDiagram w(k, n);
        RatVec ones(w.n_regions(), Rat(1));
        for (const auto& K : k_subsets(n, k)) {
            REQUIRE(w.lgv_check(K, ones));
            // Counting level: the determinant literally counts the families.
            std::vector<RatVec> m(k, RatVec(k));
            for (int r = 1; r <= k; ++r)
                for (int c = 0; c < k; ++c) m[r - 1][c] = w.matrix_entry_poly(r, K[c]).eval(ones);
            REQUIRE(WebDiagram::determinant(m) == Rat(static_cast<long>(w.path_families(K).size())));
        }
    }
}

TEST_CASE("lgv identity at the spec point x1=2") {
    WebDiagram w(2, 5);
    RatVec a(w.n_regions(), Rat(1));
    a[w.region_index(1, 4)] = 2;  // inner x1 = 2, everything else 1
    REQUIRE(w.lgv_check({2, 4}, a));
    REQUIRE(w.plucker_poly({2, 4}, VarMode::AllRegions).eval(a) == Rat(3));
}

TEST_CASE("lgv identity at random positive rationals") {
    std::mt19937_64 rng(2024);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
        WebDiagram w(k, n);
        auto Ks = k_subsets(n, k);
        for (int trial = 0; trial < 12; ++trial) {
            RatVec a = testutil::random_positive_vec(rng, w.n_regions());
            for (const auto& K : Ks) REQUIRE(w.lgv_check(K, a));
        }
    }
}

TEST_CASE("lgv rejects non-positive assignments") {
    WebDiagram w(2, 5);
    RatVec a(w.n_regions(), Rat(1));
    a[0] = 0;
    REQUIRE_THROWS_AS(w.lgv_check({2, 4}, a), std::invalid_argument);
}

TEST_CASE("text rendering mentions every terminal") {
    WebDiagram w(2, 5);
    std::string s = w.render_text();
    for (int t = 1; t <= 5; ++t) REQUIRE(s.find(std::to_string(t)) != std::string::npos);
}
