// Sparse polynomials keyed by exponent vectors over a fixed variable set.
//
// ExponentPolynomial carries integer coefficients (path-family counts and the
// cluster-variable expansions); SignedPolynomial carries rationals and exists
// for initial-form computations.
#pragma once

#include "tropgr/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace tropgr {

using Exponent = std::vector<int>;

class ExponentPolynomial {
public:
    ExponentPolynomial() = default;
    explicit ExponentPolynomial(int nvars) : nvars_(nvars) {}

    static ExponentPolynomial constant(int nvars, long long c) {
        ExponentPolynomial p(nvars);
        if (c != 0) p.terms_[Exponent(nvars, 0)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exponent, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t n_terms() const { return terms_.size(); }

    bool all_coefficients_positive() const {
        for (const auto& [e, c] : terms_)
            if (c <= 0) return false;
        return !terms_.empty();
    }

    void add_term(const Exponent& e, long long c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("ExponentPolynomial: exponent arity mismatch");
        long long& slot = terms_[e];
        if (__builtin_add_overflow(slot, c, &slot))
            throw std::overflow_error("ExponentPolynomial: coefficient overflow");
        if (slot == 0) terms_.erase(e);
    }

    ExponentPolynomial& operator+=(const ExponentPolynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    ExponentPolynomial& operator-=(const ExponentPolynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend ExponentPolynomial operator+(ExponentPolynomial a, const ExponentPolynomial& b) {
        a += b;
        return a;
    }
    friend ExponentPolynomial operator-(ExponentPolynomial a, const ExponentPolynomial& b) {
        a -= b;
        return a;
    }

    friend ExponentPolynomial operator*(const ExponentPolynomial& a, const ExponentPolynomial& b) {
        a.check_arity(b);
        ExponentPolynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                long long c;
                if (__builtin_mul_overflow(ca, cb, &c))
                    throw std::overflow_error("ExponentPolynomial: coefficient overflow");
                r.add_term(e, c);
            }
        }
        return r;
    }

    Rat eval(const RatVec& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw std::invalid_argument("ExponentPolynomial::eval: arity mismatch");
        Rat s = 0;
        for (const auto& [e, c] : terms_) {
            Rat m(static_cast<long>(c));
            for (int i = 0; i < nvars_; ++i) {
                for (int k = 0; k < e[i]; ++k) m *= x[i];
            }
            s += m;
        }
        return s;
    }

    friend bool operator==(const ExponentPolynomial& a, const ExponentPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_arity(const ExponentPolynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("ExponentPolynomial: variable set mismatch");
    }

    int nvars_ = 0;
    std::map<Exponent, long long> terms_;
};

class SignedPolynomial {
public:
    SignedPolynomial() = default;
    explicit SignedPolynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rat& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("SignedPolynomial: exponent arity mismatch");
        Rat& slot = terms_[e];
        slot += c;
        slot.canonicalize();
        if (slot == 0) terms_.erase(e);
    }

    friend bool operator==(const SignedPolynomial& a, const SignedPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    int nvars_ = 0;
    std::map<Exponent, Rat> terms_;
};

}  // namespace tropgr
