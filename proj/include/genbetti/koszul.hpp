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

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace genbetti {

enum class Provenance {
    Koszul,  // copied from the Koszul complex of the generators
    Strand,  // solved from the Hilbert numerator on the top strand
    Given,   // read back from serialized data
};

// Sparse graded Betti table.  Keys are (homological degree i, internal
// degree j); only nonzero entries are stored.  Rows of the diagram are the
// strands j - i.
struct BettiTable {
    struct Entry {
        Int value;
        Provenance provenance = Provenance::Given;
    };

    int n = 0;           // largest homological degree of the diagram
    int regularity = 0;  // largest strand of the diagram
    std::map<std::pair<int, int>, Entry> entries;

    Int value_at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Int(0) : it->second.value;
    }

    void set(int i, int j, Int value, Provenance prov) {
        if (value == 0) throw std::invalid_argument("BettiTable::set: zero entry");
        entries[{i, j}] = Entry{std::move(value), prov};
    }

    // Total Betti numbers b_0..b_n.
    std::vector<Int> totals() const {
        std::vector<Int> t(static_cast<std::size_t>(n) + 1, Int(0));
        for (const auto& [ij, e] : entries) t[static_cast<std::size_t>(ij.first)] += e.value;
        return t;
    }

    // Equality of values only; provenance is bookkeeping.
    bool same_values(const BettiTable& o) const {
        if (n != o.n || regularity != o.regularity) return false;
        if (entries.size() != o.entries.size()) return false;
        for (const auto& [ij, e] : entries)
            if (o.value_at(ij.first, ij.second) != e.value) return false;
        return true;
    }
};

// Bigraded Betti numbers of the Koszul complex on forms of the given
// degrees: b_{i,j} counts the i-subsets of the degree multiset with sum j.
// Computed as the coefficients of prod_i (1 + x t^{e_i}) by dynamic
// programming over subset sums.  With max_strand set, entries with strand
// j - i > max_strand are omitted.
inline BettiTable koszul_betti(const std::vector<int>& degrees,
                               std::optional<int> max_strand = std::nullopt) {
    if (degrees.empty()) throw std::invalid_argument("koszul_betti: no degrees");
    for (int e : degrees)
        if (e < 2) throw std::invalid_argument("koszul_betti: degrees must be >= 2");
    const int k = static_cast<int>(degrees.size());
    int total = 0;
    for (int e : degrees) total += e;
    // dp[i][j] = number of i-subsets with degree sum j
    std::vector<std::vector<Int>> dp(static_cast<std::size_t>(k) + 1,
                                     std::vector<Int>(static_cast<std::size_t>(total) + 1, Int(0)));
    dp[0][0] = 1;
    int used = 0;
    for (int e : degrees) {
        ++used;
        for (int i = used; i >= 1; --i)
            for (int j = total; j >= e; --j) dp[i][j] += dp[i - 1][j - e];
    }
    BettiTable out;
    out.n = k;
    int reg = 0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= total; ++j) {
            if (dp[i][j] == 0) continue;
            if (max_strand && j - i > *max_strand) continue;
            out.set(i, j, dp[i][j], Provenance::Koszul);
            reg = std::max(reg, j - i);
        }
    out.regularity = reg;
    return out;
}

}  // namespace genbetti
