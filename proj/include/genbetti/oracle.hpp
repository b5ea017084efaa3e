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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hilbert.hpp"
#include "poly.hpp"

namespace genbetti {

namespace detail {

inline bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inv_mod(std::uint32_t v, std::uint32_t p) { return pow_mod(v, p - 2, p); }

// Row echelon rank over F_p.  Rows are consumed one at a time; additions use
// 64-bit accumulators and are reduced only when the headroom for another
// (p-1)^2 step runs out, so the inner loop carries no modulo.
class RankAccumulator {
  public:
    RankAccumulator(std::size_t cols, std::uint32_t p)
        : cols_(cols), p_(p), pivot_of_col_(cols, -1) {
        const std::uint64_t step = static_cast<std::uint64_t>(p - 1) * (p - 1);
        adds_between_reductions_ =
            (std::numeric_limits<std::uint64_t>::max() - (p - 1)) / step;
        if (adds_between_reductions_ == 0) adds_between_reductions_ = 1;
    }

    std::size_t rank() const { return pivot_rows_.size(); }

    bool saturated() const { return pivot_rows_.size() == cols_; }

    // Returns true when the row was independent of the span so far.
    bool consume(const std::vector<std::uint32_t>& row) {
        if (saturated()) return false;
        work_.assign(row.begin(), row.end());
        std::uint64_t budget = adds_between_reductions_;
        for (std::size_t col = 0; col < cols_; ++col) {
            const std::uint32_t v = static_cast<std::uint32_t>(work_[col] % p_);
            if (v == 0) continue;
            const int pi = pivot_of_col_[col];
            if (pi < 0) {
                std::vector<std::uint32_t> stored(cols_, 0);
                const std::uint32_t f = inv_mod(v, p_);
                for (std::size_t j = col; j < cols_; ++j)
                    stored[j] = static_cast<std::uint32_t>(work_[j] % p_ * f % p_);
                pivot_of_col_[col] = static_cast<int>(pivot_rows_.size());
                pivot_rows_.push_back(std::move(stored));
                return true;
            }
            const std::vector<std::uint32_t>& prow = pivot_rows_[static_cast<std::size_t>(pi)];
            const std::uint64_t f = p_ - v;
            for (std::size_t j = col; j < cols_; ++j) work_[j] += f * prow[j];
            if (--budget == 0) {
                for (std::size_t j = col; j < cols_; ++j) work_[j] %= p_;
                budget = adds_between_reductions_;
            }
        }
        return false;
    }

  private:
    std::size_t cols_;
    std::uint32_t p_;
    std::uint64_t adds_between_reductions_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::uint32_t>> pivot_rows_;
    std::vector<std::uint64_t> work_;
};

// Compositions of total into parts nonnegative boxes, C(total+parts-1,
// parts-1), in 64 bits.  Callers only ask for counts bounded by a matrix
// dimension that already passed the cell cap.
inline std::uint64_t compositions_count(int parts, int total) {
    if (parts <= 0) return total == 0 ? 1 : 0;
    const long long a = total + parts - 1;
    long long b = parts - 1;
    if (a - b < b) b = a - b;
    std::uint64_t c = 1;
    for (long long i = 1; i <= b; ++i) {
        c = c * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

// Position of exponent vector v (degree d, |v| = d) in the
// lexicographically descending enumeration of degree-d monomials.
inline std::size_t monomial_rank(const std::vector<int>& v, int d) {
    const int n = static_cast<int>(v.size());
    std::uint64_t rank = 0;
    int rem = d;
    for (int pos = 0; pos + 1 < n; ++pos) {
        for (int e = rem; e > v[static_cast<std::size_t>(pos)]; --e)
            rank += compositions_count(n - pos - 1, rem - e);
        rem -= v[static_cast<std::size_t>(pos)];
    }
    return static_cast<std::size_t>(rank);
}

}  // namespace detail

// All exponent vectors of total degree d in n variables, lexicographically
// descending: (d,0,...,0) first, (0,...,0,d) last.
inline std::vector<std::vector<int>> monomials(int n, int d) {
    if (n < 1) throw std::invalid_argument("monomials: n must be >= 1");
    if (d < 0) throw std::invalid_argument("monomials: d must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(n));
    // descending first exponent, then recurse on the tail
    auto gen = [&](auto&& self, int rem) -> void {
        if (static_cast<int>(cur.size()) == n - 1) {
            cur.push_back(rem);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur.push_back(e);
            self(self, rem - e);
            cur.pop_back();
        }
    };
    gen(gen, d);
    return out;
}

// Dense coefficient vector of a random form of the given degree over F_p,
// indexed against monomials(n, degree).  Uniform, not all zero, and fully
// determined by the state of rng.
inline std::vector<std::uint32_t> random_form(int n, int degree, std::uint32_t p,
                                              std::mt19937_64& rng) {
    if (degree < 1) throw std::invalid_argument("random_form: degree must be >= 1");
    const std::size_t count = monomials(n, degree).size();
    const std::uint64_t reject_from =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % p;
    std::vector<std::uint32_t> c(count);
    while (true) {
        bool nonzero = false;
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t r;
            do {
                r = rng();
            } while (r >= reject_from);
            c[i] = static_cast<std::uint32_t>(r % p);
            nonzero |= c[i] != 0;
        }
        if (nonzero) return c;
    }
}

struct OracleConfig {
    std::uint32_t prime = 32003;
    std::uint64_t seed = 1;
    std::optional<int> max_degree;  // default: one past the last nonzero value
    int retries = 2;
    // Upper bound on rows*columns of any multiplication matrix; degrees that
    // would exceed it are refused rather than attempted.
    std::uint64_t max_matrix_cells = 50'000'000;
};

struct OracleReport {
    struct Row {
        int degree = 0;
        Int monomial_count;  // dim of the degree-j piece of the free ring
        Int rank;            // rank of the multiplication matrix mod p
        Int value;           // monomial_count - rank
        Int expected;        // symbolic series coefficient
        bool match = false;
    };

    std::uint32_t prime = 0;
    std::uint64_t seed = 0;  // seed of the reported attempt
    int attempts = 0;
    bool proven = false;  // k <= n+1: the symbolic series is a theorem
    bool all_match = false;
    std::vector<Row> rows;
};

// Brute-force check of the symbolic Hilbert function: draws random forms of
// the given degrees over F_p and compares codimensions of the graded pieces
// they span, degree by degree, against the symbolic series.  A random
// specialization can only have a *smaller* quotient than the generic one,
// so on a mismatch the draw is retried with the next seed.
inline OracleReport hilbert_function_oracle(int n, std::vector<int> degrees,
                                            const OracleConfig& cfg) {
    detail::check_generic_args(n, degrees);
    std::sort(degrees.begin(), degrees.end());
    if (!detail::is_prime(cfg.prime) || cfg.prime <= 10000)
        throw std::invalid_argument("oracle: prime must be a prime > 10^4");
    if (cfg.prime >= (1u << 31)) throw std::invalid_argument("oracle: prime must be < 2^31");
    if (cfg.retries < 0) throw std::invalid_argument("oracle: retries must be >= 0");
    const int k = static_cast<int>(degrees.size());

    int socle = 0;
    for (int e : degrees) socle += e - 1;
    int maxdeg;
    if (cfg.max_degree) {
        maxdeg = *cfg.max_degree;
        if (maxdeg < 0) throw std::invalid_argument("oracle: max degree must be >= 0");
    } else {
        const auto probe = generic_series_prefix(n, degrees, socle + 2);
        maxdeg = static_cast<int>(probe.size()) - 1;
        for (std::size_t j = 0; j < probe.size(); ++j)
            if (probe[j] == 0) {
                maxdeg = static_cast<int>(j);
                break;
            }
    }
    const std::vector<Int> expected = generic_series_prefix(n, degrees, maxdeg + 1);

    OracleReport report;
    report.prime = cfg.prime;
    report.proven = k <= n + 1;

    for (int attempt = 0;; ++attempt) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(seed);
        std::vector<std::vector<std::uint32_t>> forms(static_cast<std::size_t>(k));
        for (int g = 0; g < k; ++g) {
            const int e = degrees[static_cast<std::size_t>(g)];
            if (e > maxdeg) break;  // never enters any matrix below
            forms[static_cast<std::size_t>(g)] = random_form(n, e, cfg.prime, rng);
        }

        report.seed = seed;
        report.attempts = attempt + 1;
        report.rows.clear();
        report.all_match = true;

        for (int j = 0; j <= maxdeg; ++j) {
            const Int dim = binomial(n + j - 1, j);
            Int row_count = 0;
            for (int e : degrees)
                if (e <= j) row_count += binomial(n + j - e - 1, j - e);
            if (dim * row_count > cfg.max_matrix_cells) {
                std::ostringstream os;
                os << "oracle: degree " << j << " needs a " << row_count << " x " << dim
                   << " matrix, over the cell cap " << cfg.max_matrix_cells;
                throw std::runtime_error(os.str());
            }

            std::size_t rank = 0;
            if (row_count > 0) {
                const std::size_t cols = static_cast<std::size_t>(dim);
                detail::RankAccumulator acc(cols, cfg.prime);
                std::vector<std::uint32_t> row(cols);
                for (int g = 0; g < k && !acc.saturated(); ++g) {
                    const int e = degrees[static_cast<std::size_t>(g)];
                    if (e > j) continue;
                    const auto basis = monomials(n, e);
                    const auto& coeffs = forms[static_cast<std::size_t>(g)];
                    std::vector<int> prod(static_cast<std::size_t>(n));
                    for (const auto& m : monomials(n, j - e)) {
                        std::fill(row.begin(), row.end(), 0);
                        for (std::size_t b = 0; b < basis.size(); ++b) {
                            if (coeffs[b] == 0) continue;
                            for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = m[x] + basis[b][x];
                            row[detail::monomial_rank(prod, j)] = coeffs[b];
                        }
                        acc.consume(row);
                        if (acc.saturated()) break;
                    }
                }
                rank = acc.rank();
            }

            OracleReport::Row r;
            r.degree = j;
            r.monomial_count = dim;
            r.rank = static_cast<long long>(rank);
            r.value = dim - r.rank;
            r.expected = expected[static_cast<std::size_t>(j)];
            r.match = r.value == r.expected;
            report.all_match &= r.match;
            report.rows.push_back(std::move(r));
        }

        if (report.all_match || attempt == cfg.retries) return report;
    }
}

}  // namespace genbetti
