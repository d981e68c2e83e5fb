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

#include "cyclolc/closed_form.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclolc {

using std::uint64_t;

namespace {

bool at_least_quartic(ResidueClass r) {
    return r == ResidueClass::quartic || r == ResidueClass::octic;
}

} // namespace

PairClassification classify(uint64_t p, uint64_t q) {
    if (!is_probable_prime(p) || !is_probable_prime(q) || p == q)
        throw std::invalid_argument("classify: p and q must be distinct primes");
    if (std::gcd(p - 1, q - 1) != 8)
        throw std::invalid_argument("classify: gcd(p-1, q-1) must be 8");

    PairClassification c;
    c.p = p;
    c.q = q;
    c.res_2p = power_residue_class(2, p);
    c.res_2q = power_residue_class(2, q);
    c.res_pq = power_residue_class(p % q, q);

    const ResidueClass rp = c.res_2p;
    const ResidueClass rq = c.res_2q;
    const ResidueClass rpq = c.res_pq;

    if (rp == ResidueClass::quadratic) {
        if (rq == ResidueClass::octic) {
            c.case_id = 5;
            c.case_formula = "pq-1-(q-1)/2";
        } else {
            c.case_id = 1;
            c.case_formula = "pq-1";
        }
    } else if (rp == ResidueClass::quartic) {
        if (rq == ResidueClass::quartic) {
            c.case_id = 2;
            c.case_formula = "pq-1";
        } else if (rq == ResidueClass::octic) {
            c.case_id = 6;
            c.case_formula = "pq-1-(q-1)/2";
        } else if (at_least_quartic(rpq)) {
            c.case_id = 3;
            c.case_formula = "pq-1";
        } else if (rpq == ResidueClass::quadratic) {
            c.case_id = 7;
            c.case_formula = "pq-1-(p-1)(q-1)/2";
        } else {
            c.case_id = 11;
            c.case_formula = "pq-1-(p-1)(q-1)/4";
        }
    } else { // rp is octic
        if (rq == ResidueClass::quartic) {
            c.case_id = 8;
            c.case_formula = "pq-1-(p-1)(q-1)/2-(p-1)/2";
        } else if (rq == ResidueClass::octic) {
            c.case_id = 10;
            c.case_formula = "pq-1-(p-1)(q-1)/2-(p-1)/2-(q-1)/2";
        } else if (rpq == ResidueClass::quadratic) {
            c.case_id = 4;
            c.case_formula = "pq-1-(p-1)/2";
        } else if (at_least_quartic(rpq)) {
            c.case_id = 9;
            c.case_formula = "pq-1-(p-1)(q-1)/2-(p-1)/2";
        } else {
            c.case_id = 12;
            c.case_formula = "pq-1-(p-1)(q-1)/4-(p-1)/2";
        }
    }

    c.eps_halves = rp == ResidueClass::octic ? 1 : 0;
    c.kappa_halves = rq == ResidueClass::octic ? 1 : 0;
    const bool rp_octic = rp == ResidueClass::octic;
    const bool rq_quadratic = rq == ResidueClass::quadratic;
    if ((rp_octic && at_least_quartic(rq)) ||
        (rp_octic && rq_quadratic && at_least_quartic(rpq)) ||
        (rp == ResidueClass::quartic && rq_quadratic &&
         rpq == ResidueClass::quadratic)) {
        c.eta_quarters = 2;
    } else if (at_least_quartic(rp) && rq_quadratic &&
               rpq == ResidueClass::nonresidue) {
        c.eta_quarters = 1;
    } else {
        c.eta_quarters = 0;
    }
    return c;
}

uint64_t lc_closed_form(uint64_t p, uint64_t q) {
    const PairClassification c = classify(p, q);
    const uint64_t n = p * q;
    const uint64_t hp = (p - 1) / 2;
    const uint64_t hq = (q - 1) / 2;
    const uint64_t prod = (p - 1) * (q - 1);

    uint64_t by_case = 0;
    switch (c.case_id) {
    case 1:
    case 2:
    case 3:
        by_case = n - 1;
        break;
    case 4:
        by_case = n - 1 - hp;
        break;
    case 5:
    case 6:
        by_case = n - 1 - hq;
        break;
    case 7:
        by_case = n - 1 - prod / 2;
        break;
    case 8:
    case 9:
        by_case = n - 1 - prod / 2 - hp;
        break;
    case 10:
        by_case = n - 1 - prod / 2 - hp - hq;
        break;
    case 11:
        by_case = n - 1 - prod / 4;
        break;
    case 12:
        by_case = n - 1 - prod / 4 - hp;
        break;
    default:
        throw std::logic_error("lc_closed_form: unreachable case id");
    }

    const uint64_t by_deficit = n - 1 - c.eps_halves * hp - c.kappa_halves * hq -
                                c.eta_quarters * (prod / 4);
    if (by_case != by_deficit)
        throw std::logic_error("lc_closed_form: the two formulations disagree");
    return by_case;
}

bool half_period_bound_holds(uint64_t p, uint64_t q) {
    return 2 * lc_closed_form(p, q) >= p * q - 1;
}

ZeroPattern predicted_zero_pattern(const PairClassification& c) {
    ZeroPattern z;
    const bool rq_high = at_least_quartic(c.res_2q);
    const bool rpq_high = at_least_quartic(c.res_pq);
    if (rq_high || rpq_high) {
        z.block_quarters = c.res_2p == ResidueClass::octic ? 2 : 0;
    } else if (c.res_pq == ResidueClass::quadratic) {
        z.block_quarters = c.res_2p == ResidueClass::quartic ? 2 : 0;
    } else {
        z.block_quarters = at_least_quartic(c.res_2p) ? 1 : 0;
    }
    z.column_zeros = c.res_2p == ResidueClass::octic;
    z.row_zeros = c.res_2q == ResidueClass::octic;
    return z;
}

} // namespace cyclolc
