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

#include "cyclolc/gf2m.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace cyclolc {

using std::uint64_t;

struct FieldSpec::Data {
    unsigned degree = 0;
    BitPolynomial modulus;
    // Modulus bits padded to three words (degree can be 128).
    std::array<uint64_t, 3> mod_words{0, 0, 0};
};

namespace {

unsigned __int128 order_for_degree(unsigned m) {
    if (m == 128)
        return ~static_cast<unsigned __int128>(0);
    return (static_cast<unsigned __int128>(1) << m) - 1;
}

bool is_irreducible(const BitPolynomial& f, unsigned m) {
    const BitPolynomial x_mod_f = divmod(BitPolynomial::monomial(1), f).rem;
    BitPolynomial t = x_mod_f;
    for (unsigned k = 1; k <= m; ++k) {
        t = divmod(mul(t, t), f).rem;
        if (k < m) {
            if (gcd(t + x_mod_f, f).degree() != 0)
                return false;
        }
    }
    return t == x_mod_f;
}

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

bool smaller_words(const std::array<uint64_t, 2>& a,
                   const std::array<uint64_t, 2>& b) {
    return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
}

} // namespace

FieldSpec FieldSpec::build(unsigned degree) {
    if (degree < 1 || degree > 128)
        throw std::invalid_argument("FieldSpec: degree must be in [1, 128]");
    constexpr uint64_t scan_limit = uint64_t{1} << 24;
    const uint64_t cap =
        degree < 24 ? (uint64_t{1} << degree) : scan_limit;
    for (uint64_t c = 0; c < cap; ++c) {
        BitPolynomial f = BitPolynomial::monomial(degree);
        for (unsigned bit = 0; bit < 24; ++bit) {
            if ((c >> bit) & 1)
                f.set_coeff(bit, true);
        }
        if (is_irreducible(f, degree)) {
            auto data = std::make_shared<Data>();
            data->degree = degree;
            data->modulus = f;
            const auto& w = f.words();
            for (size_t i = 0; i < w.size() && i < 3; ++i)
                data->mod_words[i] = w[i];
            return FieldSpec(std::move(data));
        }
    }
    throw std::logic_error("FieldSpec: no irreducible polynomial found in scan range");
}

unsigned FieldSpec::degree() const { return data_->degree; }

const BitPolynomial& FieldSpec::modulus() const { return data_->modulus; }

FieldElement FieldSpec::zero() const { return FieldElement({0, 0}, data_); }

FieldElement FieldSpec::one() const { return FieldElement({1, 0}, data_); }

FieldElement FieldSpec::from_words(uint64_t lo, uint64_t hi) const {
    const unsigned m = data_->degree;
    bool ok = true;
    if (m < 64)
        ok = hi == 0 && (lo >> m) == 0;
    else if (m < 128)
        ok = (hi >> (m - 64)) == 0;
    if (!ok)
        throw std::invalid_argument("from_words: bits at or above the field degree");
    return FieldElement({lo, hi}, data_);
}

void FieldElement::require_bound() const {
    if (!data_)
        throw std::logic_error("FieldElement: unbound element");
}

void FieldElement::require_same_field(const FieldElement& o) const {
    require_bound();
    o.require_bound();
    if (data_ == o.data_)
        return;
    if (!(data_->modulus == o.data_->modulus))
        throw std::invalid_argument("FieldElement: elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    return FieldElement({w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]}, data_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    const unsigned m = data_->degree;
    std::array<uint64_t, 5> r{};
    for (unsigned w = 0; w < 2; ++w) {
        uint64_t bits = w_[w];
        while (bits) {
            const auto t = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            const unsigned sh = w * 64 + t;
            const size_t ws = sh / 64;
            const unsigned bs = sh % 64;
            if (bs == 0) {
                r[ws] ^= o.w_[0];
                r[ws + 1] ^= o.w_[1];
            } else {
                r[ws] ^= o.w_[0] << bs;
                r[ws + 1] ^= (o.w_[0] >> (64 - bs)) ^ (o.w_[1] << bs);
                r[ws + 2] ^= o.w_[1] >> (64 - bs);
            }
        }
    }
    const auto& mod = data_->mod_words;
    for (int k = 2 * static_cast<int>(m) - 2; k >= static_cast<int>(m); --k) {
        if ((r[static_cast<size_t>(k) / 64] >> (k % 64)) & 1) {
            const unsigned sh = static_cast<unsigned>(k) - m;
            const size_t ws = sh / 64;
            const unsigned bs = sh % 64;
            if (bs == 0) {
                r[ws] ^= mod[0];
                r[ws + 1] ^= mod[1];
                r[ws + 2] ^= mod[2];
            } else {
                r[ws] ^= mod[0] << bs;
                r[ws + 1] ^= (mod[0] >> (64 - bs)) ^ (mod[1] << bs);
                r[ws + 2] ^= (mod[1] >> (64 - bs)) ^ (mod[2] << bs);
                r[ws + 3] ^= mod[2] >> (64 - bs);
            }
        }
    }
    return FieldElement({r[0], r[1]}, data_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(o);
    return w_ == o.w_;
}

FieldElement FieldElement::square() const { return *this * *this; }

FieldElement FieldElement::pow(unsigned __int128 e) const {
    require_bound();
    FieldElement result({1, 0}, data_);
    FieldElement base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        base = base.square();
        e >>= 1;
    }
    return result;
}

FieldElement FieldElement::inverse() const {
    require_bound();
    if (is_zero())
        throw std::invalid_argument("FieldElement: zero has no inverse");
    return pow(order_for_degree(data_->degree) - 1);
}

std::string FieldElement::to_hex() const {
    require_bound();
    char buf[40];
    if (w_[1])
        std::snprintf(buf, sizeof buf, "%llx%016llx",
                      static_cast<unsigned long long>(w_[1]),
                      static_cast<unsigned long long>(w_[0]));
    else
        std::snprintf(buf, sizeof buf, "%llx",
                      static_cast<unsigned long long>(w_[0]));
    return buf;
}

unsigned __int128 group_order(const FieldSpec& field) {
    return order_for_degree(field.degree());
}

FieldElement primitive_nth_root(const FieldSpec& field, uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("primitive_nth_root: n must be positive");
    const unsigned __int128 ord = group_order(field);
    if (ord % n != 0)
        throw std::invalid_argument("primitive_nth_root: n does not divide the group order");
    const unsigned __int128 cofactor = ord / n;
    const auto factors = distinct_prime_factors(n);
    const FieldElement one = field.one();
    const uint64_t cap =
        field.degree() < 20 ? (uint64_t{1} << field.degree()) : (uint64_t{1} << 20);
    for (uint64_t cand = 1; cand < cap; ++cand) {
        const FieldElement x = field.from_words(cand).pow(cofactor);
        if (x.is_zero())
            continue;
        bool full_order = true;
        for (uint64_t r : factors) {
            if (x.pow(n / r) == one) {
                full_order = false;
                break;
            }
        }
        if (full_order)
            return x;
    }
    throw std::logic_error("primitive_nth_root: no element of the requested order found");
}

FieldElement subfield_mu(const FieldSpec& field) {
    if (field.degree() % 2 != 0)
        throw std::invalid_argument("subfield_mu: field degree must be even");
    const FieldElement r = primitive_nth_root(field, 3);
    const FieldElement r2 = r.square();
    return smaller_words(r.words(), r2.words()) ? r : r2;
}

FieldElement subfield_eta(const FieldSpec& field) {
    if (field.degree() % 4 != 0)
        throw std::invalid_argument("subfield_eta: field degree must be a multiple of 4");
    const FieldElement mu = subfield_mu(field);
    const FieldElement eps = primitive_nth_root(field, 15);
    const FieldElement one = field.one();
    FieldElement best;
    bool found = false;
    for (unsigned k : {1u, 2u, 4u, 7u, 8u, 11u, 13u, 14u}) {
        const FieldElement c = eps.pow(k);
        if (c.square() + c == mu && c.square().square() + c == one) {
            if (!found || smaller_words(c.words(), best.words())) {
                best = c;
                found = true;
            }
        }
    }
    if (!found)
        throw std::logic_error("subfield_eta: no quartic subfield generator found");
    return best;
}

} // namespace cyclolc
