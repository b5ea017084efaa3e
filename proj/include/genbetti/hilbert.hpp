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

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace genbetti {

// Socle degrees d_1 <= ... <= d_n of a complete intersection of n generic
// forms of degrees d_i + 1 in n variables, plus optionally the degree D of
// one extra generic form.  Stored sorted.
struct DegreeSequence {
    std::vector<int> ds;
    std::optional<int> extra_D;

    explicit DegreeSequence(std::vector<int> d, std::optional<int> D = std::nullopt)
        : ds(std::move(d)), extra_D(D) {
        if (ds.empty()) throw std::invalid_argument("DegreeSequence: empty");
        for (int v : ds)
            if (v < 1) throw std::invalid_argument("DegreeSequence: socle degrees must be >= 1");
        std::sort(ds.begin(), ds.end());
        if (extra_D && *extra_D < 2)
            throw std::invalid_argument("DegreeSequence: extra form degree must be >= 2");
    }

    // n+1 generator degrees when k or more values are given: sorted union of
    // the e_i = d_i + 1 with D taken as the degree of the extra form.
    static DegreeSequence from_generators(std::vector<int> gens) {
        if (gens.size() < 2) throw std::invalid_argument("from_generators: need at least 2 degrees");
        std::sort(gens.begin(), gens.end());
        const int D = gens.back();
        gens.pop_back();
        for (int& e : gens) e -= 1;
        return DegreeSequence(std::move(gens), D);
    }

    int n() const { return static_cast<int>(ds.size()); }

    // sum d_i, the top socle degree of the complete intersection.
    int socle_degree() const { return std::accumulate(ds.begin(), ds.end(), 0); }

    // e_i = d_i + 1, with D appended when present.  Sorted.
    std::vector<int> generator_degrees() const {
        std::vector<int> e;
        e.reserve(ds.size() + 1);
        for (int d : ds) e.push_back(d + 1);
        if (extra_D) e.push_back(*extra_D);
        std::sort(e.begin(), e.end());
        return e;
    }
};

struct HilbertData {
    IntPoly series;
    IntPoly numerator;  // series * (1-t)^n
    int n = 0;
    int regularity = 0;  // degree of the series polynomial

    friend bool operator==(const HilbertData& a, const HilbertData& b) {
        return a.series == b.series && a.numerator == b.numerator && a.n == b.n &&
               a.regularity == b.regularity;
    }
};

// Thrown when the usable strand test fails: the coefficient where the
// truncation bracket first stops being positive is negative instead of zero.
class NotDeterminableError : public std::domain_error {
  public:
    NotDeterminableError(int index, Int value, std::string admissible_hint)
        : std::domain_error(compose(index, value, admissible_hint)),
          index_(index),
          value_(std::move(value)) {}

    int index() const { return index_; }
    const Int& value() const { return value_; }

  private:
    static std::string compose(int index, const Int& value, const std::string& hint) {
        std::ostringstream os;
        os << "Betti table is not determinable: the first nonpositive coefficient of the "
              "numerator expansion is "
           << value << " at degree " << index << " (it must vanish exactly)";
        if (!hint.empty()) os << "; admissible extra degrees: " << hint;
        return os.str();
    }

    int index_;
    Int value_;
};

// Extra form of degree D > sum d_i lies in the socle-degree ideal, so the
// generator set is not minimal and no Betti table of an almost complete
// intersection exists for it.
class MinimalityViolationError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A solved strand entry came out negative; the series and Koszul data are
// inconsistent.  Not reachable through the public entry points.
class NegativeBettiError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// prod f_{d_i}: Hilbert series of the complete intersection.
inline IntPoly ci_series(const DegreeSequence& seq) {
    IntPoly p = IntPoly::one();
    for (int d : seq.ds) p *= f_poly(d);
    return p;
}

// series * (1-t)^n, the numerator of the Hilbert series over the free
// resolution denominator.
inline IntPoly numerator_of(const IntPoly& series, int n) {
    if (n < 0) throw std::invalid_argument("numerator_of: n must be >= 0");
    IntPoly p = series;
    const IntPoly g = one_minus_power(1);
    for (int i = 0; i < n; ++i) p *= g;
    return p;
}

namespace detail {

inline void check_generic_args(int n, const std::vector<int>& degrees) {
    if (n < 1) throw std::invalid_argument("generic series: n must be >= 1");
    if (degrees.empty()) throw std::invalid_argument("generic series: no generator degrees");
    for (int e : degrees)
        if (e < 2) throw std::invalid_argument("generic series: generator degrees must be >= 2");
}

}  // namespace detail

// First len coefficients of prod (1 - t^{e_i}) / (1-t)^n, truncated at the
// first nonpositive coefficient.  This is the generic Hilbert function for
// k <= n+1 ideals and the conjectured one beyond.
inline std::vector<Int> generic_series_prefix(int n, std::vector<int> degrees, int len) {
    detail::check_generic_args(n, degrees);
    if (len < 1) throw std::invalid_argument("generic_series_prefix: len must be >= 1");
    std::vector<Int> g(static_cast<std::size_t>(len), Int(0));
    for (int j = 0; j < len; ++j) g[j] = binomial(n - 1 + j, j);
    for (int e : degrees)
        for (int j = len - 1; j >= e; --j) g[j] -= g[j - e];
    for (int j = 0; j < len; ++j) {
        if (g[j] <= 0) {
            for (int i = j; i < len; ++i) g[i] = 0;
            break;
        }
    }
    return g;
}

// Hilbert series of an ideal generated by k generic forms of the given
// degrees in n variables.  For k <= n this is prod f_{e_i - 1}; for k > n
// the truncation bracket of prod (1 - t^{e_i}) / (1-t)^n.  Exact for
// k <= n+1, conjectural beyond.
inline HilbertData generic_series(int n, std::vector<int> degrees) {
    detail::check_generic_args(n, degrees);
    std::sort(degrees.begin(), degrees.end());
    const int k = static_cast<int>(degrees.size());
    IntPoly series;
    if (k <= n) {
        series = IntPoly::one();
        for (int e : degrees) series *= f_poly(e - 1);
    } else {
        // prod_{i<=n} f_{e_i-1} * prod_{i>n} (1 - t^{e_i}) equals the full
        // formal expansion, already a polynomial; only truncation remains.
        IntPoly p = IntPoly::one();
        for (int i = 0; i < n; ++i) p *= f_poly(degrees[static_cast<std::size_t>(i)] - 1);
        for (int i = n; i < k; ++i) p *= one_minus_power(degrees[static_cast<std::size_t>(i)]);
        series = truncate_positive(p);
    }
    HilbertData out;
    out.n = n;
    out.series = series;
    out.numerator = numerator_of(series, n);
    out.regularity = series.degree();
    return out;
}

// Hilbert series of the almost complete intersection: n generic forms of
// degrees d_i + 1 plus one of degree D, in n variables.
inline HilbertData almost_ci_series(const DegreeSequence& seq) {
    if (!seq.extra_D) throw std::invalid_argument("almost_ci_series: no extra form degree");
    return generic_series(seq.n(), seq.generator_degrees());
}

// Classification of prod f_{d_i}.  Always symmetric; strictly unimodal
// exactly when d_n <= d_1 + ... + d_{n-1} + 1, else a single plateau of
// maxima over [sum_{i<n} d_i, d_n].
inline UnimodalityClass ci_classification(const DegreeSequence& seq) {
    return classify(ci_series(seq));
}

// Degrees D of one extra generic form that keep the Betti table
// determinable, by the parity rule.  With f = prod f_{d_i} of degree
// 2l or 2l+1 and plateau half-width k (0 when strict):
//   deg f odd:   D in {2,4,...,2k} union {3,5,...,2l+1}
//   deg f even:  D in {3,5,...,2k-1} union {2,4,...,2l}
// All candidates live in [2, sum d_i].
inline std::vector<int> admissible_extra_degrees(const DegreeSequence& seq) {
    const UnimodalityClass cls = ci_classification(seq);
    const int deg = seq.socle_degree();
    const int k = cls.halfwidth_k.value_or(0);
    std::vector<int> out;
    if (deg % 2 == 1) {
        for (int D = 2; D <= 2 * k; D += 2) out.push_back(D);
        for (int D = 3; D <= deg; D += 2) out.push_back(D);
    } else {
        for (int D = 3; D <= 2 * k - 1; D += 2) out.push_back(D);
        for (int D = 2; D <= deg; D += 2) out.push_back(D);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace genbetti
