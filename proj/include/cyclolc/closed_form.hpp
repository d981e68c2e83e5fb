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

#pragma once

#include <cstdint>

#include "cyclolc/residue.hpp"

namespace cyclolc {

// Complete classification of an order-8 pair (gcd(p-1, q-1) = 8) by the
// three residue symbols that determine the linear complexity:
//
//   res_2p  = class of 2 mod p
//   res_2q  = class of 2 mod q
//   res_pq  = class of p mod q
//
// The complexity deficit pq - 1 - L decomposes as
//
//   eps * (p-1)/2  +  kappa * (q-1)/2  +  eta * (p-1)(q-1)
//
// with eps, kappa in {0, 1/2} and eta in {0, 1/4, 1/2}; the integer fields
// below carry eps and kappa in halves and eta in quarters. case_id labels
// the twelve constellations in a fixed order, case_formula the matching
// closed expression.
struct PairClassification {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    ResidueClass res_2p = ResidueClass::zero;
    ResidueClass res_2q = ResidueClass::zero;
    ResidueClass res_pq = ResidueClass::zero;
    unsigned case_id = 0;            // 1..12
    const char* case_formula = "";   // e.g. "pq-1-(p-1)/2"
    unsigned eps_halves = 0;         // 0 or 1
    unsigned kappa_halves = 0;       // 0 or 1
    unsigned eta_quarters = 0;       // 0, 1 or 2
};

// Classifies (p, q). Requires distinct primes with gcd(p-1, q-1) = 8.
PairClassification classify(std::uint64_t p, std::uint64_t q);

// Linear complexity of the order-8 sequence for (p, q), computed from the
// classification. Two independent formulations (the deficit decomposition
// and the twelve-case table) are evaluated and cross-asserted on every call.
std::uint64_t lc_closed_form(std::uint64_t p, std::uint64_t q);

// L >= (pq - 1) / 2, which holds for every order-8 pair.
bool half_period_bound_holds(std::uint64_t p, std::uint64_t q);

// Predicted zero counts of the S-matrix regions, derived from the
// classification alone: the d x d block has 16 * block_quarters zeros,
// the final column 4 zeros exactly when 2 is octic mod p, the final row 4
// zeros exactly when 2 is octic mod q (the corner entry is always zero for
// p, q = 1 mod 8). Feeding these counts through the root accounting of
// lc_from_smatrix reproduces lc_closed_form.
struct ZeroPattern {
    unsigned block_quarters = 0; // 0, 1 or 2 (of 64 block entries)
    bool column_zeros = false;
    bool row_zeros = false;
};

ZeroPattern predicted_zero_pattern(const PairClassification& c);

} // namespace cyclolc
