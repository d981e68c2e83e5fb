/*
   Copyright 2026 The cyclolc Authors

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

#include "doctest.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "cyclolc/closed_form.hpp"
#include "cyclolc/residue.hpp"
#include "golden_table.hpp"

using namespace cyclolc;
using cyclolc_tests::kGoldenTable;

TEST_SUITE("closed_form") {

TEST_CASE("classification of representative pairs") {
    PairClassification first = classify(17, 41);
    CHECK(first.res_2p == ResidueClass::quadratic);
    CHECK(first.res_2q == ResidueClass::quadratic);
    CHECK(first.case_id == 1);
    CHECK(std::string(first.case_formula) == "pq-1");

    PairClassification reversed = classify(73, 17);
    CHECK(reversed.res_2p == ResidueClass::octic);
    CHECK(reversed.res_2q == ResidueClass::quadratic);
    CHECK(reversed.res_pq == ResidueClass::nonresidue);
    CHECK(reversed.case_id == 12);

    PairClassification wide = classify(17, 409);
    CHECK(wide.res_2p == ResidueClass::quadratic);
    CHECK(wide.res_2q == ResidueClass::quadratic);
    CHECK(wide.res_pq == ResidueClass::octic);
    CHECK(wide.case_id == 1);

    PairClassification quartic2 = classify(113, 313);
    CHECK(quartic2.res_2p == ResidueClass::quartic);
    CHECK(quartic2.res_2q == ResidueClass::quadratic);
    CHECK(quartic2.res_pq == ResidueClass::octic);
    CHECK(quartic2.case_id == 3);
}

TEST_CASE("closed form values for hand checked pairs") {
    CHECK(lc_closed_form(17, 41) == 696);
    CHECK(lc_closed_form(41, 17) == 696);
    CHECK(lc_closed_form(17, 73) == 1204);
    CHECK(lc_closed_form(73, 17) == 916);
    CHECK(lc_closed_form(17, 89) == 1468);
    CHECK(lc_closed_form(89, 17) == 764);
    CHECK(lc_closed_form(41, 73) == 2956);
    CHECK(lc_closed_form(73, 41) == 2956);
    CHECK(lc_closed_form(73, 89) == 3248);
    CHECK(lc_closed_form(89, 73) == 3248);
}

TEST_CASE("closed form rejects invalid pairs") {
    CHECK_THROWS_AS(lc_closed_form(17, 19), std::invalid_argument);
    CHECK_THROWS_AS(lc_closed_form(17, 17), std::invalid_argument);
    CHECK_THROWS_AS(lc_closed_form(16, 41), std::invalid_argument);
    CHECK_THROWS_AS(classify(3, 5), std::invalid_argument);
}

TEST_CASE("closed form reproduces the golden table in both orders") {
    for (const auto& row : kGoldenTable) {
        CHECK(lc_closed_form(row.p, row.q) == row.l_pq);
        CHECK(lc_closed_form(row.q, row.p) == row.l_qp);
    }
}

TEST_CASE("deficit fractions are consistent with the case id") {
    for (const auto& row : kGoldenTable) {
        for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>(row.p, row.q),
                            std::pair<std::uint64_t, std::uint64_t>(row.q, row.p)}) {
            PairClassification c = classify(p, q);
            std::uint64_t n = p * q;
            std::uint64_t deficit = c.eta_quarters * (p - 1) * (q - 1) / 4 +
                                    c.eps_halves * (p - 1) / 2 +
                                    c.kappa_halves * (q - 1) / 2;
            CHECK(lc_closed_form(p, q) == n - 1 - deficit);
        }
    }
}

TEST_CASE("half period bound holds across the golden table") {
    for (const auto& row : kGoldenTable) {
        CHECK(half_period_bound_holds(row.p, row.q));
        CHECK(half_period_bound_holds(row.q, row.p));
        CHECK(2 * row.l_pq >= row.p * row.q - 1);
        CHECK(2 * row.l_qp >= row.p * row.q - 1);
    }
    // The bound is attained exactly when both residues are octic.
    CHECK(2 * lc_closed_form(73, 89) == 73 * 89 - 1);
    CHECK(2 * lc_closed_form(89, 73) == 73 * 89 - 1);
}

TEST_CASE("predicted zero patterns follow the residue classes") {
    ZeroPattern none = predicted_zero_pattern(classify(17, 41));
    CHECK(none.block_quarters == 0);
    CHECK_FALSE(none.column_zeros);
    CHECK_FALSE(none.row_zeros);

    ZeroPattern quarter = predicted_zero_pattern(classify(73, 17));
    CHECK(quarter.block_quarters == 1);
    CHECK(quarter.column_zeros);
    CHECK_FALSE(quarter.row_zeros);

    ZeroPattern half = predicted_zero_pattern(classify(89, 17));
    CHECK(half.block_quarters == 2);
    CHECK(half.column_zeros);
    CHECK_FALSE(half.row_zeros);

    ZeroPattern octic_pair = predicted_zero_pattern(classify(73, 89));
    CHECK(octic_pair.block_quarters == 2);
    CHECK(octic_pair.column_zeros);
    CHECK(octic_pair.row_zeros);
}

TEST_CASE("zero pattern accounting reproduces the closed form") {
    for (const auto& row : kGoldenTable) {
        for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>(row.p, row.q),
                            std::pair<std::uint64_t, std::uint64_t>(row.q, row.p)}) {
            PairClassification c = classify(p, q);
            ZeroPattern z = predicted_zero_pattern(c);
            std::uint64_t e = (p - 1) * (q - 1) / 8;
            std::uint64_t block_zeros = z.block_quarters * 16;
            std::uint64_t col_zeros = z.column_zeros ? 4 : 0;
            std::uint64_t row_zeros = z.row_zeros ? 4 : 0;
            std::uint64_t l = p * q - (e / 8) * block_zeros -
                              ((p - 1) / 8) * col_zeros -
                              ((q - 1) / 8) * row_zeros - 1;
            CHECK(l == lc_closed_form(p, q));
        }
    }
}

} // TEST_SUITE("closed_form")
