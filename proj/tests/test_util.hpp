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

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "genbetti/hilbert.hpp"
#include "genbetti/oracle.hpp"
#include "genbetti/poly.hpp"

namespace testutil {

// Every nondecreasing list with entries in [1, max_val] and length in
// [1, max_len], in lexicographic order.
inline void for_each_degree_list(int max_len, int max_val,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (!cur.empty()) fn(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int v = lo; v <= max_val; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

// Rises (weakly) to some peak, then falls (weakly).  Independent of the
// library's pattern matcher on purpose.
inline bool weakly_unimodal(const genbetti::IntPoly& p) {
    const int d = p.degree();
    int e = 0;
    while (e < d && p.coeff(e) <= p.coeff(e + 1)) ++e;
    while (e < d && p.coeff(e) >= p.coeff(e + 1)) ++e;
    return e == d;
}

// Determinability by definition: scan every D and keep those where the
// expansion's first nonpositive coefficient is exactly zero.
inline std::vector<int> naive_admissible(const genbetti::DegreeSequence& seq) {
    const genbetti::IntPoly f = genbetti::ci_series(seq);
    std::vector<int> out;
    for (int D = 2; D <= seq.socle_degree(); ++D) {
        const auto fnp = genbetti::first_nonpositive(f * genbetti::one_minus_power(D));
        if (fnp && fnp->second == 0) out.push_back(D);
    }
    return out;
}

// Textbook row reduction over F_p, reducing after every arithmetic step.
inline std::size_t naive_rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] % p == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint64_t inv = genbetti::detail::inv_mod(m[rank][col] % p, p);
        for (std::size_t j = col; j < cols; ++j)
            m[rank][j] = static_cast<std::uint32_t>(m[rank][j] % p * inv % p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank) continue;
            const std::uint64_t f = m[r][col] % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] = static_cast<std::uint32_t>(
                    (m[r][j] + (p - f) * m[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

// Random polynomial with coefficients in [-bound, bound], degree <= max_deg.
inline genbetti::IntPoly random_poly(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<genbetti::Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return genbetti::IntPoly(std::move(c));
}

// Symmetric, nonnegative, weakly unimodal, nonzero constant term.
inline genbetti::IntPoly random_symmetric_unimodal(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> step(0, 3);
    const int d = deg(rng);
    std::vector<genbetti::Int> c(static_cast<std::size_t>(d) + 1);
    genbetti::Int v = 1;
    for (int e = 0; e <= d / 2; ++e) {
        v += step(rng);
        c[static_cast<std::size_t>(e)] = v;
        c[static_cast<std::size_t>(d - e)] = v;
    }
    return genbetti::IntPoly(std::move(c));
}

}  // namespace testutil
