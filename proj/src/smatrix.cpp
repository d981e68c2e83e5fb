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

#include "cyclolc/smatrix.hpp"

#include <numeric>
#include <stdexcept>

#include "cyclolc/residue.hpp"

namespace cyclolc {

using std::uint64_t;

uint64_t splitting_field_degree(uint64_t p, uint64_t q) {
    if (!is_probable_prime(p) || !is_probable_prime(q) || p == q || p < 3 || q < 3)
        throw std::invalid_argument(
            "splitting_field_degree: p and q must be distinct odd primes");
    return std::lcm(mult_order(2, p), mult_order(2, q));
}

std::vector<FieldElement> gaussian_periods(const FieldSpec& field,
                                           const FieldElement& root,
                                           uint64_t p, uint64_t g, uint64_t d) {
    if (d == 0 || (p - 1) % d != 0)
        throw std::invalid_argument("gaussian_periods: order must divide p-1");
    if (!is_primitive_root(g, p))
        throw std::invalid_argument("gaussian_periods: g must be a primitive root of p");
    if (root == field.one() || root.pow(p) != field.one())
        throw std::invalid_argument("gaussian_periods: root must have multiplicative order p");

    std::vector<FieldElement> powers(p, field.zero());
    powers[0] = field.one();
    for (uint64_t u = 1; u < p; ++u)
        powers[u] = powers[u - 1] * root;

    std::vector<FieldElement> acc(d, field.zero());
    uint64_t x = 1;
    for (uint64_t k = 0; k + 1 < p; ++k) {
        acc[k % d] = acc[k % d] + powers[x];
        x = mul_mod(x, g % p, p);
    }
    return acc;
}

std::vector<FieldElement>
half_sum_vector(const std::vector<FieldElement>& periods) {
    const size_t d = periods.size();
    if (d == 0 || d % 2 != 0)
        throw std::invalid_argument("half_sum_vector: length must be even and positive");
    std::vector<FieldElement> v(d);
    for (size_t i = 0; i < d; ++i) {
        FieldElement acc = periods[(i + d / 2) % d];
        for (size_t t = d / 2 + 1; t < d; ++t)
            acc = acc + periods[(i + t) % d];
        v[i] = acc;
    }
    return v;
}

SMatrix build_smatrix(const CyclotomyContext& ctx, const FieldSpec& field,
                      const FieldElement& alpha) {
    const uint64_t p = ctx.p;
    const uint64_t q = ctx.q;
    const uint64_t d = ctx.d;
    const uint64_t n = p * q;
    const FieldElement one = field.one();
    if (alpha.pow(n) != one || alpha.pow(p) == one || alpha.pow(q) == one)
        throw std::invalid_argument(
            "build_smatrix: alpha must be a primitive pq-th root of unity");

    const FieldElement beta = alpha.pow(q);
    const FieldElement gamma = alpha.pow(p);
    const auto sp = gaussian_periods(field, beta, p, ctx.g, d);
    const auto tq = gaussian_periods(field, gamma, q, ctx.g, d);
    const uint64_t ind = ctx.ind_q_of_p % d;

    SMatrix m;
    m.p = p;
    m.q = q;
    m.d = static_cast<unsigned>(d);
    m.s.assign((d + 1) * (d + 1), field.zero());
    auto at = [&](uint64_t i, uint64_t j) -> FieldElement& {
        return m.s[i * (d + 1) + j];
    };

    for (uint64_t i = 0; i < d; ++i) {
        for (uint64_t j = 0; j < d; ++j) {
            FieldElement acc = field.zero();
            for (uint64_t t = d / 2; t < d; ++t) {
                acc = acc + tq[(j + t + d - ind) % d] + tq[(j + t) % d] +
                      sp[(i + t) % d];
            }
            at(i, j) = acc;
        }
    }
    for (uint64_t i = 0; i < d; ++i) {
        FieldElement acc = field.zero();
        for (uint64_t t = d / 2; t < d; ++t)
            acc = acc + sp[(i + t) % d];
        at(i, d) = acc;
    }
    const bool row_constant = ((p - 1) / 2) % 2 != 0;
    for (uint64_t j = 0; j < d; ++j) {
        FieldElement acc = row_constant ? one : field.zero();
        for (uint64_t t = d / 2; t < d; ++t)
            acc = acc + tq[(j + t) % d];
        at(d, j) = acc;
    }
    at(d, d) = (((p - 1) / 2 + (q - 1) / 2) % 2 != 0) ? one : field.zero();

    // Every block entry must decompose into its final-column and final-row
    // entries; a violation means the period sums are inconsistent.
    for (uint64_t i = 0; i < d; ++i) {
        for (uint64_t j = 0; j < d; ++j) {
            if (at(i, j) != at(i, d) + at(d, j) + at(d, (j + d - ind) % d))
                throw std::logic_error("build_smatrix: decomposition identity failed");
        }
    }
    return m;
}

uint64_t lc_from_smatrix(const SMatrix& m) {
    const uint64_t p = m.p;
    const uint64_t q = m.q;
    const uint64_t d = m.d;
    const uint64_t e = std::lcm(p - 1, q - 1);
    uint64_t block = 0, column = 0, row = 0;
    for (uint64_t i = 0; i < d; ++i) {
        for (uint64_t j = 0; j < d; ++j)
            block += m.at(i, j).is_zero() ? 1 : 0;
        column += m.at(i, d).is_zero() ? 1 : 0;
    }
    for (uint64_t j = 0; j < d; ++j)
        row += m.at(d, j).is_zero() ? 1 : 0;
    const uint64_t corner = m.at(d, d).is_zero() ? 1 : 0;
    return p * q - (e / d) * block - ((p - 1) / d) * column -
           ((q - 1) / d) * row - corner;
}

bool verify_period_sum_recursion(const FieldSpec& field,
                                 const FieldElement& beta, uint64_t p,
                                 uint64_t g, uint64_t d) {
    if (d == 0 || d % 2 != 0 || (p - 1) % d != 0)
        throw std::invalid_argument(
            "verify_period_sum_recursion: d must be even and divide p-1");
    const auto full = gaussian_periods(field, beta, p, g, d);
    const auto half = gaussian_periods(field, beta, p, g, d / 2);
    const FieldElement c =
        ((p - 1) / d) % 2 != 0 ? field.one() : field.zero();
    for (uint64_t i = 0; i < d; ++i) {
        if (full[i] + full[(i + d / 2) % d] != half[i % (d / 2)])
            return false;
        FieldElement rhs = c;
        for (uint64_t j = 0; j < d / 2; ++j) {
            if (cyclotomic_number(p, g, d, d / 2, (j + d - i % d) % d) % 2 != 0)
                rhs = rhs + half[j];
        }
        if (full[i] * full[(i + d / 2) % d] != rhs)
            return false;
    }
    return true;
}

bool verify_half_sum_differences(const FieldSpec& field,
                                 const FieldElement& beta, uint64_t p,
                                 uint64_t g) {
    if ((p - 1) % 8 != 0)
        throw std::invalid_argument(
            "verify_half_sum_differences: p must be 1 (mod 8)");
    const auto v = half_sum_vector(gaussian_periods(field, beta, p, g, 8));
    const auto quarter = gaussian_periods(field, beta, p, g, 4);
    for (unsigned i = 0; i < 7; ++i) {
        if (v[i + 1] + v[i] != quarter[i % 4])
            return false;
    }
    return true;
}

OcticCheck octic_criterion(uint64_t p) {
    OcticCheck check;
    check.via_residue = power_residue_class(2, p) == ResidueClass::octic;
    const QuadraticForms forms = quadratic_form_representations(p);
    check.via_y = (p % 16 == 1 && forms.y % 8 == 0) ||
                  (p % 16 == 9 && forms.y % 8 == 4);
    return check;
}

namespace {

constexpr Sym O = Sym::zero;
constexpr Sym I = Sym::one;
constexpr Sym M = Sym::mu;
constexpr Sym M1 = Sym::mu_plus_1;
constexpr Sym E = Sym::eta;
constexpr Sym E1 = Sym::eta_plus_1;
constexpr Sym F = Sym::eta2;
constexpr Sym F1 = Sym::eta2_plus_1;

} // namespace

std::vector<std::vector<Sym>> predicted_half_sum_templates(uint64_t p) {
    const ResidueClass r2 = power_residue_class(2, p);
    const bool pm1 = p % 16 == 1;
    switch (r2) {
    case ResidueClass::octic:
        return {pm1 ? std::vector<Sym>{O, O, O, O, I, I, I, I}
                    : std::vector<Sym>{O, I, O, I, I, O, I, O}};
    case ResidueClass::quartic:
        return {pm1 ? std::vector<Sym>{M, M, M, M, M1, M1, M1, M1}
                    : std::vector<Sym>{M, M1, M, M1, M1, M, M1, M}};
    case ResidueClass::quadratic:
        if (pm1)
            return {{E, F, F1, E, E1, F1, F, E1}, {F, E, E1, F, F1, E1, E, F1}};
        return {{E, E, F, F, E1, E1, F1, F1}, {F, F, E, E, F1, F1, E1, E1}};
    default:
        throw std::logic_error(
            "predicted_half_sum_templates: 2 must be a square mod p");
    }
}

std::vector<std::vector<Sym>>
predicted_half_sum_shift_templates(uint64_t q, uint64_t shift) {
    const uint64_t s = shift % 8;
    const ResidueClass r2 = power_residue_class(2, q);
    const bool high =
        r2 == ResidueClass::quartic || r2 == ResidueClass::octic;
    if (s == 0)
        return {{O, O, O, O, O, O, O, O}};
    if (s == 4)
        return {{I, I, I, I, I, I, I, I}};
    if (s == 2 || s == 6)
        return {high ? std::vector<Sym>{I, I, O, O, I, I, O, O}
                     : std::vector<Sym>{M, M, M1, M1, M, M, M1, M1}};
    const bool qm1 = q % 16 == 1;
    const bool near_half = (s == 3 || s == 5);
    if ((!near_half && qm1) || (near_half && !qm1))
        return {high ? std::vector<Sym>{I, O, O, O, I, O, O, O}
                     : std::vector<Sym>{M, I, M1, I, M, I, M1, I}};
    return {high ? std::vector<Sym>{I, I, I, O, I, I, I, O}
                 : std::vector<Sym>{M, O, M1, O, M, O, M1, O}};
}

bool matches_up_to_rotation(const FieldSpec& field,
                            const std::vector<FieldElement>& v,
                            const std::vector<std::vector<Sym>>& templates) {
    bool need_mu = false;
    bool need_eta = false;
    for (const auto& tpl : templates) {
        for (Sym sym : tpl) {
            if (sym == M || sym == M1)
                need_mu = true;
            else if (sym == E || sym == E1 || sym == F || sym == F1)
                need_eta = true;
        }
    }
    if (need_eta && field.degree() % 4 != 0)
        return false;
    if (need_mu && field.degree() % 2 != 0)
        return false;

    const FieldElement one = field.one();
    struct Choice {
        FieldElement mu;
        FieldElement eta;
    };
    std::vector<Choice> choices;
    if (need_eta) {
        const FieldElement eta = subfield_eta(field);
        for (const FieldElement& conj :
             {eta, eta + one, eta.square(), eta.square() + one})
            choices.push_back({conj.square() + conj, conj});
    } else if (need_mu) {
        const FieldElement mu = subfield_mu(field);
        choices.push_back({mu, FieldElement{}});
        choices.push_back({mu + one, FieldElement{}});
    } else {
        choices.push_back({FieldElement{}, FieldElement{}});
    }

    const size_t len = v.size();
    for (const auto& tpl : templates) {
        if (tpl.size() != len)
            continue;
        for (const auto& choice : choices) {
            std::vector<FieldElement> inst(len);
            for (size_t i = 0; i < len; ++i) {
                switch (tpl[i]) {
                case Sym::zero:
                    inst[i] = field.zero();
                    break;
                case Sym::one:
                    inst[i] = one;
                    break;
                case Sym::mu:
                    inst[i] = choice.mu;
                    break;
                case Sym::mu_plus_1:
                    inst[i] = choice.mu + one;
                    break;
                case Sym::eta:
                    inst[i] = choice.eta;
                    break;
                case Sym::eta_plus_1:
                    inst[i] = choice.eta + one;
                    break;
                case Sym::eta2:
                    inst[i] = choice.eta.square();
                    break;
                case Sym::eta2_plus_1:
                    inst[i] = choice.eta.square() + one;
                    break;
                }
            }
            for (size_t r = 0; r < len; ++r) {
                bool all = true;
                for (size_t i = 0; i < len && all; ++i)
                    all = v[(i + r) % len] == inst[i];
                if (all)
                    return true;
            }
        }
    }
    return false;
}

} // namespace cyclolc
