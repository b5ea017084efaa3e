/*
   Copyright 2026 The genbetti authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace genbetti {

// Every coefficient, rank and count in this library is exact.
using Int = boost::multiprecision::cpp_int;

// C(a, b) by the multiplicative formula; exact at every step because each
// partial product is itself a binomial coefficient.
inline Int binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Int c = 1;
    for (long long i = 1; i <= b; ++i) {
        c *= a - b + i;
        c /= i;
    }
    return c;
}

// Dense univariate polynomial in t with Int coefficients, coeffs_[e] is the
// coefficient of t^e.  Canonical form: no trailing zeros, the zero polynomial
// stores nothing.
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    static IntPoly zero() { return IntPoly{}; }

    static IntPoly one() { return monomial(1, 0); }

    static IntPoly monomial(Int c, int e) {
        IntPoly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(e) + 1, Int(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int e) const {
        static const Int kZero = 0;
        if (e < 0 || e >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(e)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    // Keeps exponents < len.
    IntPoly prefix(int len) const {
        if (len <= 0) return IntPoly{};
        if (len > static_cast<int>(coeffs_.size())) return *this;
        return IntPoly(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + len));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(c));
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

// f_d = 1 + t + ... + t^d, the Hilbert series of k[x]/(x^{d+1}).
inline IntPoly f_poly(int d) {
    if (d < 0) throw std::invalid_argument("f_poly: d must be >= 0");
    return IntPoly(std::vector<Int>(static_cast<std::size_t>(d) + 1, Int(1)));
}

// 1 - t^D.
inline IntPoly one_minus_power(int D) {
    if (D < 1) throw std::invalid_argument("one_minus_power: D must be >= 1");
    std::vector<Int> c(static_cast<std::size_t>(D) + 1, Int(0));
    c[0] = 1;
    c.back() = -1;
    return IntPoly(std::move(c));
}

// Index and value of the first coefficient <= 0, scanning exponents
// 0..degree.  Trailing (implicit) zeros do not count.
inline std::optional<std::pair<int, Int>> first_nonpositive(const IntPoly& p) {
    for (int e = 0; e <= p.degree(); ++e)
        if (p.coeff(e) <= 0) return std::make_pair(e, p.coeff(e));
    return std::nullopt;
}

// Longest strictly positive prefix; everything from the first coefficient
// <= 0 onward is dropped.
inline IntPoly truncate_positive(const IntPoly& p) {
    if (p.coeff(0) <= 0)
        throw std::invalid_argument("truncate_positive: constant term must be positive");
    auto fnp = first_nonpositive(p);
    if (!fnp) return p;
    return p.prefix(fnp->first);
}

// Coefficient list equals its own reversal.
inline bool is_symmetric(const IntPoly& p) {
    const int d = p.degree();
    for (int e = 0; e <= d / 2; ++e)
        if (p.coeff(e) != p.coeff(d - e)) return false;
    return true;
}

enum class UnimodKind { StrictlyUnimodal, Plateaued, NotSymmetric, NotUnimodal };

// Shape of a symmetric coefficient sequence.  For Plateaued of even degree
// 2l the maxima occupy [l-k, l+k]; for odd degree 2l+1 they occupy
// [l-k, l+k+1].  halfwidth_k is 0 for StrictlyUnimodal (a lone maximum, or
// the unavoidable equal middle pair in odd degree).
struct UnimodalityClass {
    UnimodKind kind = UnimodKind::NotUnimodal;
    std::optional<int> plateau_start;
    std::optional<int> plateau_end;
    std::optional<int> halfwidth_k;

    friend bool operator==(const UnimodalityClass& a, const UnimodalityClass& b) {
        return a.kind == b.kind && a.plateau_start == b.plateau_start &&
               a.plateau_end == b.plateau_end && a.halfwidth_k == b.halfwidth_k;
    }
};

// Classifies a symmetric sequence as strictly unimodal (strict rise, single
// maximum or middle pair, strict fall) or plateaued (a single run of equal
// maxima wider than that).  Anything else is NotUnimodal; the zero
// polynomial has an empty plateau and is NotUnimodal by convention.
inline UnimodalityClass classify(const IntPoly& p) {
    UnimodalityClass out;
    if (p.is_zero()) return out;
    if (!is_symmetric(p)) {
        out.kind = UnimodKind::NotSymmetric;
        return out;
    }
    const int d = p.degree();
    int lo = 0;
    while (lo < d && p.coeff(lo) < p.coeff(lo + 1)) ++lo;
    int hi = d;
    while (hi > 0 && p.coeff(hi - 1) > p.coeff(hi)) --hi;
    if (lo > hi) return out;
    for (int e = lo; e <= hi; ++e)
        if (p.coeff(e) != p.coeff(lo)) return out;
    // by symmetry lo + hi == d
    if (d % 2 == 0 ? lo == hi : hi == lo + 1) {
        out.kind = UnimodKind::StrictlyUnimodal;
        out.halfwidth_k = 0;
        return out;
    }
    out.kind = UnimodKind::Plateaued;
    out.plateau_start = lo;
    out.plateau_end = hi;
    out.halfwidth_k = (d % 2 == 0) ? (hi - lo) / 2 : (hi - lo - 1) / 2;
    return out;
}

}  // namespace genbetti
