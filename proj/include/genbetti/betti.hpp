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

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "koszul.hpp"
#include "poly.hpp"

namespace genbetti {

// True when the almost complete intersection for seq has a determinable
// Betti table: the first nonpositive coefficient of
// prod f_{d_i} * (1 - t^D) is exactly zero.
inline bool is_determinable(const DegreeSequence& seq) {
    if (!seq.extra_D) throw std::invalid_argument("is_determinable: no extra form degree");
    const auto fnp = first_nonpositive(ci_series(seq) * one_minus_power(*seq.extra_D));
    return fnp && fnp->second == 0;
}

// Graded Betti table of n+1 generic forms: n of degrees d_i + 1 and one of
// degree D, over a polynomial ring in n variables.  Entries on strands
// below the regularity coincide with the Koszul complex of the generators;
// the top strand is solved from the Hilbert numerator, one entry per
// homological degree, using the alternating-sum identity in each internal
// degree.
//
// Throws MinimalityViolationError when D > sum d_i (the extra form is not a
// minimal generator) and NotDeterminableError when the determinability test
// fails.  With allow_partial, the second case instead returns the entries
// that are independent of determinability: Koszul strands <= regularity - 2.
inline BettiTable betti_table(const DegreeSequence& seq, bool allow_partial = false) {
    if (!seq.extra_D) throw std::invalid_argument("betti_table: no extra form degree");
    const int n = seq.n();
    const int D = *seq.extra_D;
    if (D > seq.socle_degree()) {
        std::ostringstream os;
        os << "extra form degree " << D << " exceeds the socle degree " << seq.socle_degree()
           << "; the generator is not minimal";
        throw MinimalityViolationError(os.str());
    }

    const HilbertData h = almost_ci_series(seq);
    const int reg = h.regularity;
    const IntPoly full = ci_series(seq) * one_minus_power(D);
    const auto fnp = first_nonpositive(full);
    // D <= sum d_i forces a sign change at degree <= sum d_i + 1.
    if (!fnp) throw std::logic_error("betti_table: expansion of a minimal sequence never truncates");
    const bool determinable = fnp->second == 0;

    const BettiTable koszul = koszul_betti(seq.generator_degrees());

    BettiTable out;
    out.n = n;
    out.regularity = reg;

    if (!determinable) {
        if (!allow_partial) {
            std::ostringstream hint;
            const auto adm = admissible_extra_degrees(DegreeSequence(seq.ds));
            for (std::size_t i = 0; i < adm.size(); ++i) hint << (i ? ", " : "") << adm[i];
            throw NotDeterminableError(fnp->first, fnp->second, hint.str());
        }
        for (const auto& [ij, e] : koszul.entries)
            if (ij.second - ij.first <= reg - 2) out.set(ij.first, ij.second, e.value, Provenance::Koszul);
        return out;
    }

    for (const auto& [ij, e] : koszul.entries)
        if (ij.second - ij.first < reg) out.set(ij.first, ij.second, e.value, Provenance::Koszul);

    // Top strand: in internal degree m = reg + i every other table entry is
    // already known, so (-1)^i b_{i,m} = c_m - sum_{i' > i} (-1)^{i'} b_{i',m}.
    for (int i = 0; i <= n; ++i) {
        const int m = reg + i;
        Int rest = 0;
        for (int ip = i + 1; ip <= n; ++ip) {
            const Int v = out.value_at(ip, m);
            rest += (ip % 2 == 0) ? v : -v;
        }
        Int solved = h.numerator.coeff(m) - rest;
        if (i % 2 == 1) solved = -solved;
        if (solved < 0) {
            std::ostringstream os;
            os << "solved entry b_{" << i << "," << m << "} = " << solved << " is negative";
            throw NegativeBettiError(os.str());
        }
        if (i == 0) {
            // b_{0,reg} exists only for reg = 0 (the trivial quotient has
            // regularity >= 1 here, so this is the consistency leg).
            if (solved != (reg == 0 ? 1 : 0))
                throw NegativeBettiError("numerator inconsistent at homological degree 0");
            continue;
        }
        if (solved > 0) out.set(i, m, solved, Provenance::Strand);
    }
    return out;
}

// Internal degrees carrying at least two nonzero entries of the table,
// i.e. candidate cancellations invisible to the Hilbert series.  Each
// member records whether the full Koszul complex of the generators has a
// nonzero number in that bidegree.
struct GhostReport {
    struct Member {
        int i;
        bool koszul_explained;
    };

    int internal_degree = 0;
    std::vector<Member> members;  // sorted by homological degree, size >= 2
};

inline std::vector<GhostReport> ghost_terms(const BettiTable& table,
                                            const std::vector<int>& generator_degrees) {
    const BettiTable koszul = koszul_betti(generator_degrees);
    std::map<int, std::vector<int>> by_degree;
    for (const auto& [ij, e] : table.entries) by_degree[ij.second].push_back(ij.first);
    std::vector<GhostReport> out;
    for (const auto& [j, is] : by_degree) {
        if (is.size() < 2) continue;
        GhostReport g;
        g.internal_degree = j;
        for (int i : is) g.members.push_back({i, koszul.value_at(i, j) != 0});
        out.push_back(std::move(g));
    }
    return out;
}

// The quadric family: n = 2k generic quadrics plus one generic form of
// degree 2k.  Its series is (1+t)^{2k} - t^{2k}, its regularity 2k - 1, and
// its table contains entries b_{2i+1, 2(i+k)} = C(2k, 2i) for
// 1 <= i <= k-2 in bidegrees where the Koszul complex is zero.
struct QuadricFamilyReport {
    int k = 0;
    HilbertData hilbert;
    BettiTable table;
    std::vector<GhostReport> ghosts;
    // The ghost-explaining entries b_{2i+1, 2(i+k)}, 1 <= i <= k-2, none of
    // whose bidegrees occurs among the Koszul subset sums.
    std::vector<std::pair<std::pair<int, int>, Int>> non_koszul_entries;
};

inline QuadricFamilyReport quadric_family_report(int k) {
    if (k < 2) throw std::invalid_argument("quadric_family_report: k must be >= 2");
    const int n = 2 * k;
    const DegreeSequence seq(std::vector<int>(static_cast<std::size_t>(n), 1), n);

    QuadricFamilyReport out;
    out.k = k;
    out.hilbert = almost_ci_series(seq);

    // (1+t)^{2k} - t^{2k}
    std::vector<Int> expect(static_cast<std::size_t>(n), Int(0));
    for (int j = 0; j < n; ++j) expect[static_cast<std::size_t>(j)] = binomial(n, j);
    if (out.hilbert.series != IntPoly(std::move(expect)) || out.hilbert.regularity != n - 1)
        throw std::logic_error("quadric family: series disagrees with closed form");

    out.table = betti_table(seq);
    out.ghosts = ghost_terms(out.table, seq.generator_degrees());

    // The ghost-explaining entries sit at (2i+1, 2(i+k)), 1 <= i <= k-2,
    // with value C(2k, 2i); none of these bidegrees occurs among the Koszul
    // subset sums.
    const BettiTable koszul = koszul_betti(seq.generator_degrees());
    for (int i = 1; i <= k - 2; ++i) {
        const std::pair<int, int> ij{2 * i + 1, 2 * (i + k)};
        if (koszul.value_at(ij.first, ij.second) != 0)
            throw std::logic_error("quadric family: bidegree unexpectedly in the Koszul support");
        const Int v = out.table.value_at(ij.first, ij.second);
        if (v != binomial(n, 2 * i))
            throw std::logic_error("quadric family: non-Koszul entry disagrees with closed form");
        out.non_koszul_entries.push_back({ij, v});
    }

    return out;
}

}  // namespace genbetti
