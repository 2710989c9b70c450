// Shared test helpers: deterministic random rationals and the independent
// counting oracles the expected values were frozen from.
#pragma once

#include "tropgr/rational.hpp"
#include "tropgr/tropical.hpp"

#include <random>
#include <set>
#include <vector>

namespace tropgr::testutil {

inline Rat random_positive_rational(std::mt19937_64& rng, int max_num = 20, int max_den = 12) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline RatVec random_positive_vec(std::mt19937_64& rng, int n, int max_num = 20, int max_den = 12) {
    RatVec v(n);
    for (auto& x : v) x = random_positive_rational(rng, max_num, max_den);
    return v;
}

inline RatVec random_signed_vec(std::mt19937_64& rng, int n, int span = 12) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 7);
    RatVec v(n);
    for (auto& x : v) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
    }
    return v;
}

inline long catalan(int n) {
    std::vector<long> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[n];
}

/// Independent oracle for the number of maximal cones of the common
/// refinement of linearity fans: sample points, record which exponent
/// uniquely minimizes each map, count the distinct patterns.  Points with
/// ties anywhere are skipped (they lie on cone boundaries).
inline long count_linearity_patterns(const std::vector<TropicalPolynomial>& maps, int dim,
                                     int grid = 5, int samples = 4000, unsigned seed = 1234) {
    std::set<std::vector<int>> patterns;
    auto pattern_at = [&](const RatVec& x) {
        std::vector<int> pat;
        for (const auto& t : maps) {
            auto arg = trop_argmin(t, x);
            if (arg.size() != 1) return std::vector<int>{};
            int idx = 0;
            for (std::size_t i = 0; i < t.exponents().size(); ++i)
                if (t.exponents()[i] == arg[0]) idx = static_cast<int>(i);
            pat.push_back(idx);
        }
        return pat;
    };
    // Grid pass with an irrational-ish offset to dodge most ties.
    std::vector<int> idx(dim, -grid);
    while (true) {
        RatVec x(dim);
        for (int i = 0; i < dim; ++i) x[i] = Rat(idx[i] * 105 + 13 + i, 105);
        auto pat = pattern_at(x);
        if (!pat.empty()) patterns.insert(pat);
        int c = 0;
        while (c < dim && ++idx[c] > grid) idx[c++] = -grid;
        if (c == dim) break;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        auto pat = pattern_at(random_signed_vec(rng, dim));
        if (!pat.empty()) patterns.insert(pat);
    }
    return static_cast<long>(patterns.size());
}

}  // namespace tropgr::testutil
