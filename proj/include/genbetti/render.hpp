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

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "betti.hpp"
#include "hilbert.hpp"
#include "koszul.hpp"
#include "oracle.hpp"
#include "poly.hpp"

namespace genbetti {

// "1 + 8t + 28t^2 - t^3" style, ascending exponents.
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        const Int& c = p.coeff(e);
        if (c == 0) continue;
        const Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag;
        if (e >= 1) os << "t";
        if (e >= 2) os << "^" << e;
    }
    return os.str();
}

inline std::string to_string(const UnimodalityClass& c) {
    switch (c.kind) {
        case UnimodKind::StrictlyUnimodal:
            return "strictly unimodal";
        case UnimodKind::Plateaued: {
            std::ostringstream os;
            os << "plateau [" << *c.plateau_start << "," << *c.plateau_end << "], "
               << (*c.plateau_end - *c.plateau_start + 1) << " maximal values";
            return os.str();
        }
        case UnimodKind::NotSymmetric:
            return "not symmetric";
        case UnimodKind::NotUnimodal:
            return "not unimodal";
    }
    return "";
}

// Diagram in the usual matrix convention: columns are homological degrees
// 0..n, row s holds the entries of strand j - i = s, "." marks zero, and a
// total row sums each column.  Rows above max_row are omitted (used for
// partial tables); max_row < 0 means every strand through the regularity.
inline std::string render_diagram(const BettiTable& table, int max_row = -1) {
    const int rows = (max_row < 0 ? table.regularity : max_row) + 1;
    const int cols = table.n + 1;
    std::vector<std::string> labels;
    labels.push_back("total:");
    for (int s = 0; s < rows; ++s) labels.push_back(std::to_string(s) + ":");

    // cell text: [0] header, [1] totals, [2..] strand rows
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows) + 2,
                                                std::vector<std::string>(static_cast<std::size_t>(cols)));
    const auto totals = table.totals();
    for (int i = 0; i < cols; ++i) {
        cells[0][static_cast<std::size_t>(i)] = std::to_string(i);
        const Int& tot = totals[static_cast<std::size_t>(i)];
        cells[1][static_cast<std::size_t>(i)] = tot == 0 ? "." : tot.str();
        for (int s = 0; s < rows; ++s) {
            const Int v = table.value_at(i, i + s);
            cells[static_cast<std::size_t>(s) + 2][static_cast<std::size_t>(i)] =
                v == 0 ? "." : v.str();
        }
    }

    std::size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> width(static_cast<std::size_t>(cols), 0);
    for (const auto& row : cells)
        for (int i = 0; i < cols; ++i)
            width[static_cast<std::size_t>(i)] =
                std::max(width[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(i)].size());

    std::ostringstream os;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line;
        {
            std::ostringstream lo;
            lo << std::setw(static_cast<int>(label_w)) << (r == 0 ? "" : labels[r - 1]);
            line = lo.str();
        }
        for (int i = 0; i < cols; ++i) {
            std::ostringstream co;
            co << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)]))
               << cells[r][static_cast<std::size_t>(i)];
            line += co.str();
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

inline std::string render_hilbert(const HilbertData& h, int k_generators) {
    std::ostringstream os;
    os << "series:     " << to_string(h.series) << '\n';
    os << "numerator:  " << to_string(h.numerator) << '\n';
    os << "regularity: " << h.regularity << '\n';
    if (k_generators > h.n + 1)
        os << "note: more than n+1 generators, series is conjectural (Froberg)\n";
    else if (k_generators < h.n)
        os << "note: fewer generators than variables, quotient is not artinian;"
              " shown is the series of the complete intersection on these degrees\n";
    return os.str();
}

inline std::string render_ghosts(const std::vector<GhostReport>& ghosts) {
    if (ghosts.empty()) return "no ghost degrees\n";
    std::ostringstream os;
    for (const auto& g : ghosts) {
        os << "ghost degree " << g.internal_degree << ":";
        for (std::size_t m = 0; m < g.members.size(); ++m) {
            os << (m ? ", " : " ") << "i=" << g.members[m].i
               << (g.members[m].koszul_explained ? " (koszul)" : " (non-koszul)");
        }
        os << '\n';
    }
    return os.str();
}

inline std::string render_oracle(const OracleReport& r) {
    std::ostringstream os;
    os << "prime " << r.prime << ", seed " << r.seed << ", attempt " << r.attempts
       << (r.proven ? "" : " (more than n+1 generators: comparison is conjectural)") << '\n';
    os << "degree  monomials      rank     value  expected  match\n";
    for (const auto& row : r.rows) {
        os << std::setw(6) << row.degree << "  " << std::setw(9) << row.monomial_count.str()
           << "  " << std::setw(8) << row.rank.str() << "  " << std::setw(8) << row.value.str()
           << "  " << std::setw(8) << row.expected.str() << "  "
           << (row.match ? "ok" : "MISMATCH") << '\n';
    }
    os << (r.all_match ? "all degrees match" : "mismatch after retries") << '\n';
    return os.str();
}

inline std::string render_family(const QuadricFamilyReport& r) {
    std::ostringstream os;
    const int n = 2 * r.k;
    os << "family k=" << r.k << ": " << n << " generic quadrics and one generic form of degree "
       << n << " in " << n << " variables\n";
    os << render_hilbert(r.hilbert, n + 1);
    os << render_diagram(r.table);
    os << render_ghosts(r.ghosts);
    if (r.non_koszul_entries.empty()) {
        os << "no ghost entries outside the Koszul support\n";
    } else {
        os << "ghost entries outside the Koszul support:";
        for (std::size_t m = 0; m < r.non_koszul_entries.size(); ++m) {
            const auto& [ij, v] = r.non_koszul_entries[m];
            os << (m ? ", " : " ") << "b_{" << ij.first << "," << ij.second << "} = " << v;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace genbetti
