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

#include "cyclolc/cyclotomy.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cyclolc/residue.hpp"

namespace cyclolc {

using std::uint64_t;

namespace {

std::vector<std::uint32_t> dlog_table(uint64_t g, uint64_t p) {
    std::vector<std::uint32_t> table(p, 0);
    uint64_t x = 1;
    for (uint64_t k = 0; k + 1 < p; ++k) {
        table[x] = static_cast<std::uint32_t>(k);
        x = mul_mod(x, g % p, p);
    }
    if (x != 1)
        throw std::logic_error("dlog_table: generator walk did not close");
    return table;
}

uint64_t isqrt(uint64_t n) {
    auto s = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n)
        --s;
    while ((s + 1) * (s + 1) <= n)
        ++s;
    return s;
}

} // namespace

CyclotomyContext build_context(uint64_t p, uint64_t q,
                               std::optional<uint64_t> g) {
    if (p < 3 || q < 3 || !is_probable_prime(p) || !is_probable_prime(q))
        throw std::invalid_argument("build_context: p and q must be odd primes");
    if (p == q)
        throw std::invalid_argument("build_context: p and q must be distinct");

    CyclotomyContext ctx;
    ctx.p = p;
    ctx.q = q;
    if (g) {
        if (!is_primitive_root(*g, p) || !is_primitive_root(*g, q))
            throw std::invalid_argument(
                "build_context: g must be a primitive root of both p and q");
        ctx.g = *g;
    } else {
        ctx.g = common_primitive_root(p, q);
    }
    ctx.d = std::gcd(p - 1, q - 1);
    ctx.e = std::lcm(p - 1, q - 1);
    ctx.f = crt_lift(ctx.g % p, p, 1, q);
    ctx.dlog_p = dlog_table(ctx.g, p);
    ctx.dlog_q = dlog_table(ctx.g, q);
    ctx.ind_p_of_q = ctx.dlog_p[q % p];
    ctx.ind_q_of_p = ctx.dlog_q[p % q];
    return ctx;
}

ClassLabel class_of(const CyclotomyContext& ctx, uint64_t k) {
    const uint64_t n = ctx.p * ctx.q;
    k %= n;
    ClassLabel label;
    if (k == 0) {
        label.kind = ClassLabel::Kind::zero;
        return label;
    }
    const auto d = static_cast<unsigned>(ctx.d);
    if (k % ctx.q == 0) {
        label.kind = ClassLabel::Kind::Q;
        label.i = ctx.dlog_p[k / ctx.q] % d;
        return label;
    }
    if (k % ctx.p == 0) {
        label.kind = ClassLabel::Kind::P;
        label.j = ctx.dlog_q[k / ctx.p] % d;
        return label;
    }
    label.kind = ClassLabel::Kind::D;
    label.i = ctx.dlog_p[k % ctx.p] % d;
    label.j = ctx.dlog_q[k % ctx.q] % d;
    return label;
}

uint64_t cyclotomic_number(uint64_t p, uint64_t g, uint64_t d, uint64_t i,
                           uint64_t j) {
    if (!is_probable_prime(p) || p < 3)
        throw std::invalid_argument("cyclotomic_number: p must be an odd prime");
    if (d == 0 || (p - 1) % d != 0)
        throw std::invalid_argument("cyclotomic_number: order must divide p-1");
    if (i >= d || j >= d)
        throw std::invalid_argument("cyclotomic_number: indices must be below the order");
    if (!is_primitive_root(g, p))
        throw std::invalid_argument("cyclotomic_number: g must be a primitive root of p");
    const auto table = dlog_table(g, p);
    uint64_t count = 0;
    for (uint64_t x = 1; x + 1 < p; ++x) {
        if (table[x] % d == i && table[x + 1] % d == j)
            ++count;
    }
    return count;
}

QuadraticForms quadratic_form_representations(uint64_t p) {
    if (!is_probable_prime(p) || p % 8 != 1)
        throw std::invalid_argument(
            "quadratic_form_representations: p must be a prime = 1 (mod 8)");
    QuadraticForms forms;
    bool have_xy = false;
    for (uint64_t y = 0; 4 * y * y < p; ++y) {
        const uint64_t r = p - 4 * y * y;
        const uint64_t s = isqrt(r);
        if (s * s == r) {
            forms.x = (s % 4 == 1) ? static_cast<std::int64_t>(s)
                                   : -static_cast<std::int64_t>(s);
            forms.y = y;
            have_xy = true;
            break;
        }
    }
    bool have_ab = false;
    for (uint64_t b = 0; 2 * b * b < p; ++b) {
        const uint64_t r = p - 2 * b * b;
        const uint64_t s = isqrt(r);
        if (s * s == r) {
            forms.a = (s % 4 == 1) ? static_cast<std::int64_t>(s)
                                   : -static_cast<std::int64_t>(s);
            forms.b = b;
            have_ab = true;
            break;
        }
    }
    if (!have_xy || !have_ab)
        throw std::logic_error(
            "quadratic_form_representations: no representation found");
    return forms;
}

std::array<uint64_t, 4> cyclotomic_numbers_order8(uint64_t p, uint64_t g) {
    static std::map<std::pair<uint64_t, uint64_t>, std::array<uint64_t, 4>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({p, g});
        if (it != cache.end())
            return it->second;
    }

    if (!is_probable_prime(p) || p % 8 != 1)
        throw std::invalid_argument(
            "cyclotomic_numbers_order8: p must be a prime = 1 (mod 8)");
    if (!is_primitive_root(g, p))
        throw std::invalid_argument(
            "cyclotomic_numbers_order8: g must be a primitive root of p");

    const QuadraticForms forms = quadratic_form_representations(p);
    const auto sp = static_cast<std::int64_t>(p);
    const std::int64_t x = forms.x;
    const auto y = static_cast<std::int64_t>(forms.y);
    const std::int64_t a = forms.a;

    const ResidueClass r2 = power_residue_class(2, p);
    const bool two_quartic =
        r2 == ResidueClass::quartic || r2 == ResidueClass::octic;
    const bool pm1 = p % 16 == 1;

    // Each entry is 64 times the cyclotomic number.
    std::array<std::int64_t, 4> n64{};
    if (two_quartic && pm1) {
        n64 = {sp - 7 - 2 * x + 8 * a, sp + 1 + 2 * x - 4 * a, sp + 1 - 2 * x,
               sp + 1 + 2 * x - 4 * a};
    } else if (two_quartic && !pm1) {
        n64 = {sp - 15 - 2 * x, sp - 7 + 2 * x + 4 * a, sp - 7 - 2 * x - 8 * a,
               sp - 7 + 2 * x + 4 * a};
    } else {
        // The sign of y is not fixed by the form alone; match (4,1) against
        // the exhaustive count for this primitive root.
        const auto brute41 =
            static_cast<std::int64_t>(cyclotomic_number(p, g, 8, 4, 1));
        const std::int64_t base =
            pm1 ? sp + 1 + 2 * x - 4 * a : sp - 7 + 2 * x + 4 * a;
        std::int64_t sy = y;
        if (base + 16 * sy != 64 * brute41)
            sy = -y;
        if (base + 16 * sy != 64 * brute41)
            throw std::logic_error(
                "cyclotomic_numbers_order8: neither sign of y matches");
        if (pm1) {
            n64 = {sp - 7 - 10 * x, base + 16 * sy, sp + 1 + 6 * x + 8 * a,
                   base - 16 * sy};
        } else {
            n64 = {sp - 15 - 10 * x - 8 * a, base + 16 * sy, sp - 7 + 6 * x,
                   base - 16 * sy};
        }
    }

    std::array<uint64_t, 4> result{};
    for (int k = 0; k < 4; ++k) {
        if (n64[k] < 0 || n64[k] % 64 != 0)
            throw std::logic_error(
                "cyclotomic_numbers_order8: expression is not 64 times a count");
        result[k] = static_cast<uint64_t>(n64[k] / 64);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(p, g), result);
    return result;
}

} // namespace cyclolc
