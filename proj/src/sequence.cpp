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

#include "cyclolc/sequence.hpp"

#include <bit>
#include <stdexcept>

#include "cyclolc/residue.hpp"

namespace cyclolc {

using std::uint64_t;

BitSequence::BitSequence(uint64_t period)
    : period_(period), words_((period + 63) / 64, 0) {
    if (period == 0)
        throw std::invalid_argument("BitSequence: period must be positive");
}

bool BitSequence::bit(uint64_t i) const {
    if (i >= period_)
        throw std::out_of_range("BitSequence::bit: index out of range");
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BitSequence::set(uint64_t i, bool v) {
    if (i >= period_)
        throw std::out_of_range("BitSequence::set: index out of range");
    const uint64_t mask = uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

uint64_t BitSequence::ones() const {
    uint64_t total = 0;
    for (uint64_t w : words_)
        total += static_cast<uint64_t>(std::popcount(w));
    return total;
}

BitSequence generate(const CyclotomyContext& ctx) {
    const uint64_t p = ctx.p;
    const uint64_t q = ctx.q;
    const uint64_t n = p * q;
    const uint64_t d = ctx.d;
    BitSequence s(n);

    // Units: D_j for d/2 <= j < d, walking t in steps of g^d.
    const uint64_t gd_n = pow_mod(ctx.g, d, n);
    for (uint64_t j = d / 2; j < d; ++j) {
        for (uint64_t v = 0; v < d; ++v) {
            uint64_t x = mul_mod(pow_mod(ctx.g, j, n), pow_mod(ctx.f, v, n), n);
            for (uint64_t t = 0; t < ctx.e / d; ++t) {
                s.set(x);
                x = mul_mod(x, gd_n, n);
            }
        }
    }

    // Multiples of q: q * D_i over Z_p for d/2 <= i < d.
    const uint64_t gd_p = pow_mod(ctx.g, d, p);
    for (uint64_t i = d / 2; i < d; ++i) {
        uint64_t x = pow_mod(ctx.g, i, p);
        for (uint64_t t = 0; t < (p - 1) / d; ++t) {
            s.set(q * x);
            x = mul_mod(x, gd_p, p);
        }
    }

    // Multiples of p: p * D_j over Z_q for d/2 <= j < d.
    const uint64_t gd_q = pow_mod(ctx.g, d, q);
    for (uint64_t j = d / 2; j < d; ++j) {
        uint64_t x = pow_mod(ctx.g, j, q);
        for (uint64_t t = 0; t < (q - 1) / d; ++t) {
            s.set(p * x);
            x = mul_mod(x, gd_q, q);
        }
    }

    if (s.ones() != (n - 1) / 2)
        throw std::logic_error("generate: support size is not (pq-1)/2");
    return s;
}

BitSequence generate_by_labels(const CyclotomyContext& ctx) {
    const uint64_t n = ctx.p * ctx.q;
    const unsigned half = static_cast<unsigned>(ctx.d) / 2;
    BitSequence s(n);
    for (uint64_t k = 1; k < n; ++k) {
        const ClassLabel label = class_of(ctx, k);
        bool member = false;
        switch (label.kind) {
        case ClassLabel::Kind::D:
        case ClassLabel::Kind::P:
            member = label.j >= half;
            break;
        case ClassLabel::Kind::Q:
            member = label.i >= half;
            break;
        case ClassLabel::Kind::zero:
            break;
        }
        if (member)
            s.set(k);
    }
    return s;
}

std::pair<uint64_t, uint64_t> balance(const BitSequence& s) {
    const uint64_t ones = s.ones();
    return {ones, s.period() - ones};
}

} // namespace cyclolc
