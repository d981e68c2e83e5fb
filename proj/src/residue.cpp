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

#include "cyclolc/residue.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cyclolc {

using std::uint64_t;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1)
        return 0;
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_probable_prime(uint64_t n) {
    if (n < 2)
        return false;
    // This witness set is known to be exact for all n < 2^64.
    constexpr uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t w : witnesses) {
        if (n % w == 0)
            return n == w;
    }
    const int s = std::countr_zero(n - 1);
    const uint64_t d = (n - 1) >> s;
    for (uint64_t w : witnesses) {
        uint64_t x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

uint64_t mult_order(uint64_t a, uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("mult_order: modulus must be at least 2");
    a %= n;
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument("mult_order: arguments are not coprime");
    uint64_t k = 1;
    uint64_t x = a;
    while (x != 1) {
        x = mul_mod(x, a, n);
        ++k;
    }
    return k;
}

namespace {

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t f = 2; f * f <= n; f += (f == 2) ? 1 : 2) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        fs.push_back(n);
    return fs;
}

bool generates_group(uint64_t g, uint64_t p,
                     const std::vector<uint64_t>& factors_of_p_minus_1) {
    g %= p;
    if (g == 0)
        return false;
    for (uint64_t f : factors_of_p_minus_1) {
        if (pow_mod(g, (p - 1) / f, p) == 1)
            return false;
    }
    return true;
}

} // namespace

bool is_primitive_root(uint64_t g, uint64_t p) {
    if (!is_probable_prime(p))
        throw std::invalid_argument("is_primitive_root: modulus must be prime");
    if (p == 2)
        return g % 2 == 1;
    return generates_group(g, p, distinct_prime_factors(p - 1));
}

uint64_t primitive_root(uint64_t p) {
    if (!is_probable_prime(p))
        throw std::invalid_argument("primitive_root: argument must be prime");
    if (p == 2)
        return 1;
    const auto factors = distinct_prime_factors(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        if (generates_group(g, p, factors))
            return g;
    }
    throw std::logic_error("primitive_root: no generator found");
}

uint64_t common_primitive_root(uint64_t p, uint64_t q) {
    if (!is_probable_prime(p) || !is_probable_prime(q))
        throw std::invalid_argument("common_primitive_root: both arguments must be prime");
    if (p == q)
        throw std::invalid_argument("common_primitive_root: primes must be distinct");
    if (p < 3 || q < 3)
        throw std::invalid_argument("common_primitive_root: primes must be odd");
    const auto fp = distinct_prime_factors(p - 1);
    const auto fq = distinct_prime_factors(q - 1);
    for (uint64_t g = 2; g < p * q; ++g) {
        if (g % p == 0 || g % q == 0)
            continue;
        if (generates_group(g, p, fp) && generates_group(g, q, fq))
            return g;
    }
    throw std::logic_error("common_primitive_root: no common generator found");
}

uint64_t crt_lift(uint64_t a, uint64_t p, uint64_t b, uint64_t q) {
    if (!is_probable_prime(p) || !is_probable_prime(q) || p == q)
        throw std::invalid_argument("crt_lift: moduli must be distinct primes");
    a %= p;
    b %= q;
    // x = a + p * t with t = (b - a) / p (mod q)
    const uint64_t inv_p = pow_mod(p % q, q - 2, q);
    const uint64_t t = mul_mod((b + q - a % q) % q, inv_p, q);
    return a + p * t;
}

uint64_t discrete_log(uint64_t g, uint64_t a, uint64_t p) {
    if (!is_probable_prime(p))
        throw std::invalid_argument("discrete_log: modulus must be prime");
    g %= p;
    a %= p;
    if (a == 0 || g == 0)
        throw std::invalid_argument("discrete_log: arguments must be nonzero mod p");
    if (a == 1)
        return 0;
    const uint64_t m =
        static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(p - 1)))) + 1;
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(m);
    uint64_t x = 1;
    for (uint64_t j = 0; j < m; ++j) {
        baby.emplace(x, j); // keeps the smallest j when g has small order
        x = mul_mod(x, g, p);
    }
    // giant factor g^(-m)
    const uint64_t c = pow_mod(pow_mod(g, m, p), p - 2, p);
    uint64_t y = a;
    for (uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(y);
        if (it != baby.end())
            return i * m + it->second;
        y = mul_mod(y, c, p);
    }
    throw std::invalid_argument("discrete_log: argument is outside the group generated by the base");
}

ResidueClass power_residue_class(uint64_t c, uint64_t p) {
    if (!is_probable_prime(p) || p % 8 != 1)
        throw std::invalid_argument("power_residue_class: modulus must be a prime = 1 (mod 8)");
    c %= p;
    if (c == 0)
        return ResidueClass::zero;
    if (pow_mod(c, (p - 1) / 8, p) == 1)
        return ResidueClass::octic;
    if (pow_mod(c, (p - 1) / 4, p) == 1)
        return ResidueClass::quartic;
    if (pow_mod(c, (p - 1) / 2, p) == 1)
        return ResidueClass::quadratic;
    return ResidueClass::nonresidue;
}

} // namespace cyclolc
