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

#include <catch2/catch_amalgamated.hpp>

#include "genbetti/hilbert.hpp"
#include "test_util.hpp"

using namespace genbetti;

namespace {
const std::vector<int> kEightOnes(8, 1);
}

TEST_CASE("DegreeSequence validates and sorts") {
    CHECK_THROWS_AS(DegreeSequence(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({1, 1}, 1), std::invalid_argument);

    const DegreeSequence seq({3, 1, 2});
    CHECK(seq.ds == std::vector<int>{1, 2, 3});
    CHECK(seq.n() == 3);
    CHECK(seq.socle_degree() == 6);
    CHECK(seq.generator_degrees() == std::vector<int>{2, 3, 4});

    const DegreeSequence aci({1, 1}, 2);
    CHECK(aci.generator_degrees() == std::vector<int>{2, 2, 2});
}

TEST_CASE("from_generators splits off the largest degree as the extra form") {
    const DegreeSequence seq = DegreeSequence::from_generators({2, 4, 2});
    CHECK(seq.ds == std::vector<int>{1, 1});
    CHECK(seq.extra_D == 4);
    CHECK_THROWS_AS(DegreeSequence::from_generators({2}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::from_generators({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("ci_series multiplies the f factors") {
    CHECK(ci_series(DegreeSequence({1, 3})) == IntPoly{1, 2, 2, 2, 1});
    CHECK(ci_series(DegreeSequence({1, 1, 1})) == IntPoly{1, 3, 3, 1});
    CHECK(ci_series(DegreeSequence({2})) == IntPoly{1, 1, 1});
}

TEST_CASE("numerator_of") {
    CHECK(numerator_of(IntPoly{1, 2}, 2) == IntPoly{1, 0, -3, 2});
    CHECK(numerator_of(f_poly(2), 0) == f_poly(2));
    CHECK_THROWS_AS(numerator_of(f_poly(1), -1), std::invalid_argument);
}

TEST_CASE("generic_series with k <= n multiplies the f factors") {
    const HilbertData h = generic_series(2, {3});
    CHECK(h.series == IntPoly{1, 1, 1});
    CHECK(h.regularity == 2);
    // (1+t+t^2)(1-t)^2 = (1-t)(1-t^3)
    CHECK(h.numerator == IntPoly{1, -1, 0, -1, 1});

    CHECK(generic_series(3, {2, 2, 2}).series == IntPoly{1, 3, 3, 1});
    CHECK(generic_series(3, {2, 2}).series == IntPoly{1, 2, 1});
}

TEST_CASE("generic_series with k > n truncates the expansion") {
    const HilbertData h = generic_series(3, {2, 2, 2, 2});
    CHECK(h.series == IntPoly{1, 3, 2});
    CHECK(h.regularity == 2);
    CHECK(h.numerator == IntPoly{1, 0, -4, 2, 3, -2});
}

TEST_CASE("generic_series rejects bad arguments") {
    CHECK_THROWS_AS(generic_series(0, {2}), std::invalid_argument);
    CHECK_THROWS_AS(generic_series(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(generic_series(2, {1, 2}), std::invalid_argument);
}

TEST_CASE("example family A: eight quadrics and a quartic") {
    const HilbertData h = almost_ci_series(DegreeSequence(kEightOnes, 4));
    CHECK(h.series == IntPoly{1, 8, 28, 56, 69, 48});
    CHECK(h.regularity == 5);
    CHECK(h.numerator ==
          IntPoly{1, 0, -8, 0, 27, 0, -48, 48, -273, 848, -1176, 848, -315, 48});
}

TEST_CASE("example family B: eight quadrics and an octic") {
    const HilbertData h = almost_ci_series(DegreeSequence(kEightOnes, 8));
    CHECK(h.series == IntPoly{1, 8, 28, 56, 70, 56, 28, 8});
    CHECK(h.regularity == 7);
    CHECK(h.numerator ==
          IntPoly{1, 0, -8, 0, 28, 0, -56, 0, 69, 8, -84, 56, -42, 56, -36, 8});
}

TEST_CASE("almost_ci_series equals generic_series on the generator degrees") {
    const DegreeSequence seq({1, 2, 3}, 4);
    CHECK(almost_ci_series(seq) == generic_series(3, seq.generator_degrees()));
    CHECK_THROWS_AS(almost_ci_series(DegreeSequence({1, 2})), std::invalid_argument);
}

TEST_CASE("generic_series_prefix extends the series and stops at zero") {
    const auto p = generic_series_prefix(8, {2, 2, 2, 2, 2, 2, 2, 2, 4}, 8);
    const std::vector<Int> want{1, 8, 28, 56, 69, 48, 0, 0};
    CHECK(p == want);

    // for k < n the prefix is the true Hilbert function, which differs from
    // the generic_series product by design
    const auto open = generic_series_prefix(2, {2}, 6);
    CHECK(open == std::vector<Int>{1, 2, 2, 2, 2, 2});
    CHECK(generic_series(2, {2}).series == IntPoly{1, 1});
}

TEST_CASE("prefix agrees with the series for k = n and n+1") {
    testutil::for_each_degree_list(3, 4, [](const std::vector<int>& ds) {
        const int n = static_cast<int>(ds.size());
        std::vector<int> gens;
        for (int d : ds) gens.push_back(d + 1);
        for (int rounds = 0; rounds < 2; ++rounds) {
            const HilbertData h = generic_series(n, gens);
            const auto p = generic_series_prefix(n, gens, h.regularity + 3);
            for (int j = 0; j < static_cast<int>(p.size()); ++j)
                CHECK(p[static_cast<std::size_t>(j)] == h.series.coeff(j));
            gens.push_back(ds.back() + 1);  // k = n+1 on the second round
        }
    });
}

TEST_CASE("admissible degrees: frozen examples") {
    CHECK(admissible_extra_degrees(DegreeSequence(kEightOnes)) ==
          std::vector<int>{2, 4, 6, 8});
    CHECK(admissible_extra_degrees(DegreeSequence({1, 1, 1})) == std::vector<int>{3});
    CHECK(admissible_extra_degrees(DegreeSequence({1, 3})) == std::vector<int>{2, 4});
    CHECK(admissible_extra_degrees(DegreeSequence({1, 5})) == std::vector<int>{2, 3, 4, 6});
    CHECK(admissible_extra_degrees(DegreeSequence({2})) == std::vector<int>{2});
    CHECK(admissible_extra_degrees(DegreeSequence({1})).empty());
}

TEST_CASE("admissible degrees equal the direct determinability scan") {
    testutil::for_each_degree_list(4, 5, [](const std::vector<int>& ds) {
        const DegreeSequence seq(ds);
        CHECK(admissible_extra_degrees(seq) == testutil::naive_admissible(seq));
    });
}

TEST_CASE("ci_classification matches the closed form") {
    testutil::for_each_degree_list(5, 6, [](const std::vector<int>& ds) {
        const DegreeSequence seq(ds);
        const UnimodalityClass got = ci_classification(seq);
        const int d_top = ds.back();
        int rest = 0;
        for (std::size_t i = 0; i + 1 < ds.size(); ++i) rest += ds[i];
        if (d_top <= rest + 1) {
            CHECK(got.kind == UnimodKind::StrictlyUnimodal);
        } else {
            REQUIRE(got.kind == UnimodKind::Plateaued);
            CHECK(*got.plateau_start == rest);
            CHECK(*got.plateau_end == d_top);
            CHECK(*got.plateau_end - *got.plateau_start + 1 == d_top - rest + 1);
        }
    });
}
