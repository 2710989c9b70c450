// Exact arithmetic primitives: arbitrary-precision integers and rationals,
// integer/rational vectors, primitive reduction and rank computations.
//
// Every computation in the geometry kernel goes through these types; there is
// no floating point anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgr {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const IntVec& a) {
    for (const auto& x : a) if (x != 0) return false;
    return true;
}

/// Divide an integer vector by the gcd of its entries (sign preserved).
/// The zero vector is left unchanged.
inline void make_primitive(IntVec& a) {
    Int g = 0;
    for (const auto& x : a) {
        g = gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& x : a) x /= g;
}

inline IntVec primitive(IntVec a) {
    make_primitive(a);
    return a;
}

inline IntVec negated(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

struct IntVecLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

/// Clear denominators: returns the integer vector d*a where d is the lcm of
/// the denominators of a, together with d itself.
inline std::pair<IntVec, Int> clear_denominators(const RatVec& a) {
    Int d = 1;
    for (const auto& x : a) d = lcm(d, Int(x.get_den()));
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat y = Rat(d) * a[i];
        y.canonicalize();
        r[i] = Int(y.get_num());
    }
    return {std::move(r), d};
}

inline RatVec to_rational(const IntVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

/// Rank of the span of a family of integer vectors, by exact rational
/// Gaussian elimination.
inline int rank_of(const std::vector<IntVec>& vecs) {
    if (vecs.empty()) return 0;
    std::size_t dim = vecs[0].size();
    std::vector<RatVec> rows;
    rows.reserve(vecs.size());
    for (const auto& v : vecs) {
        if (v.size() != dim) throw std::invalid_argument("rank_of: dimension mismatch");
        rows.push_back(to_rational(v));
    }
    int rank = 0;
    std::size_t col = 0;
    while (col < dim && rank < static_cast<int>(rows.size())) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col] != 0) { pivot = r; break; }
        }
        if (pivot == rows.size()) { ++col; continue; }
        std::swap(rows[rank], rows[pivot]);
        Rat inv = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / inv;
            for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
        ++col;
    }
    return rank;
}

inline std::string to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

/// Checked conversion for serialization; ray and exponent entries in this
/// project are tiny, so anything out of long-long range is a logic error.
inline long long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer too large for serialization");
    return x.get_si();
}

inline Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace tropgr
