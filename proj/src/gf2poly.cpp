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

#include "cyclolc/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace cyclolc {

using std::uint64_t;

void BitPolynomial::drop_leading_words() {
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

void BitPolynomial::recompute_degree(std::int64_t top_word) {
    auto w = std::min(top_word, static_cast<std::int64_t>(words_.size()) - 1);
    while (w >= 0 && words_[static_cast<size_t>(w)] == 0)
        --w;
    if (w < 0) {
        words_.clear();
        degree_ = -1;
        return;
    }
    words_.resize(static_cast<size_t>(w) + 1);
    degree_ = w * 64 + (63 - std::countl_zero(words_[static_cast<size_t>(w)]));
}

BitPolynomial BitPolynomial::one() {
    BitPolynomial r;
    r.words_ = {1};
    r.degree_ = 0;
    return r;
}

BitPolynomial BitPolynomial::monomial(uint64_t n) {
    BitPolynomial r;
    r.words_.assign(n / 64 + 1, 0);
    r.words_[n / 64] = uint64_t{1} << (n % 64);
    r.degree_ = static_cast<std::int64_t>(n);
    return r;
}

BitPolynomial BitPolynomial::x_pow_plus_one(uint64_t n) {
    if (n == 0)
        return BitPolynomial{}; // x^0 + 1 vanishes over GF(2)
    BitPolynomial r = monomial(n);
    r.words_[0] |= 1;
    return r;
}

bool BitPolynomial::coeff(uint64_t i) const {
    if (degree_ < 0 || i > static_cast<uint64_t>(degree_))
        return false;
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BitPolynomial::set_coeff(uint64_t i, bool v) {
    if (v) {
        if (i / 64 >= words_.size())
            words_.resize(i / 64 + 1, 0);
        words_[i / 64] |= uint64_t{1} << (i % 64);
        degree_ = std::max(degree_, static_cast<std::int64_t>(i));
    } else if (i / 64 < words_.size()) {
        words_[i / 64] &= ~(uint64_t{1} << (i % 64));
        if (static_cast<std::int64_t>(i) == degree_)
            recompute_degree(static_cast<std::int64_t>(i / 64));
    }
}

uint64_t BitPolynomial::term_count() const {
    uint64_t total = 0;
    for (uint64_t w : words_)
        total += static_cast<uint64_t>(std::popcount(w));
    return total;
}

BitPolynomial& BitPolynomial::operator+=(const BitPolynomial& rhs) {
    if (rhs.words_.size() > words_.size())
        words_.resize(rhs.words_.size(), 0);
    for (size_t i = 0; i < rhs.words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    recompute_degree(static_cast<std::int64_t>(words_.size()) - 1);
    return *this;
}

void BitPolynomial::add_shifted(const BitPolynomial& rhs, uint64_t shift) {
    if (rhs.is_zero())
        throw std::invalid_argument("add_shifted: rhs must be nonzero");
    if (&rhs == this)
        throw std::invalid_argument("add_shifted: rhs must not alias the target");
    const uint64_t new_top = static_cast<uint64_t>(rhs.degree_) + shift;
    if (new_top / 64 >= words_.size())
        words_.resize(new_top / 64 + 1, 0);
    const size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    if (bs == 0) {
        for (size_t i = 0; i < rhs.words_.size(); ++i)
            words_[ws + i] ^= rhs.words_[i];
    } else {
        uint64_t carry = 0;
        for (size_t i = 0; i < rhs.words_.size(); ++i) {
            words_[ws + i] ^= (rhs.words_[i] << bs) | carry;
            carry = rhs.words_[i] >> (64 - bs);
        }
        if (carry)
            words_[ws + rhs.words_.size()] ^= carry;
    }
    const auto top = static_cast<std::int64_t>(new_top);
    if (top > degree_)
        degree_ = top;
    else if (top == degree_)
        recompute_degree(degree_ / 64);
}

BitPolynomial gcd(BitPolynomial a, BitPolynomial b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd: both inputs are zero");
    while (!b.is_zero()) {
        while (a.degree_ >= b.degree_) {
            a.add_shifted(b, static_cast<uint64_t>(a.degree_ - b.degree_));
            if (a.is_zero())
                break;
        }
        std::swap(a, b);
    }
    return a;
}

DivMod divmod(const BitPolynomial& a, const BitPolynomial& b) {
    if (b.is_zero())
        throw std::invalid_argument("divmod: division by zero");
    DivMod r;
    r.rem = a;
    while (r.rem.degree_ >= b.degree_) {
        const auto shift = static_cast<uint64_t>(r.rem.degree_ - b.degree_);
        r.quot.set_coeff(shift, true);
        r.rem.add_shifted(b, shift);
        if (r.rem.is_zero())
            break;
    }
    return r;
}

BitPolynomial mul(const BitPolynomial& a, const BitPolynomial& b) {
    BitPolynomial r;
    if (a.is_zero() || b.is_zero())
        return r;
    for (size_t w = 0; w < a.words_.size(); ++w) {
        uint64_t bits = a.words_[w];
        while (bits) {
            const unsigned t = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            r.add_shifted(b, w * 64 + t);
        }
    }
    return r;
}

BitPolynomial from_sequence(const BitSequence& s) {
    BitPolynomial r;
    r.words_ = s.words();
    r.recompute_degree(static_cast<std::int64_t>(r.words_.size()) - 1);
    return r;
}

uint64_t linear_complexity_gcd(const BitSequence& s) {
    const BitPolynomial sp = from_sequence(s);
    if (sp.is_zero())
        return 0;
    const uint64_t n = s.period();
    const BitPolynomial g = gcd(BitPolynomial::x_pow_plus_one(n), sp);
    return n - static_cast<uint64_t>(g.degree());
}

BitPolynomial minimal_polynomial(const BitSequence& s) {
    const BitPolynomial sp = from_sequence(s);
    if (sp.is_zero())
        return BitPolynomial::one();
    const BitPolynomial xn1 = BitPolynomial::x_pow_plus_one(s.period());
    return divmod(xn1, gcd(xn1, sp)).quot;
}

BerlekampMasseyResult berlekamp_massey(const BitSequence& s) {
    const uint64_t n = s.period();
    // Window of the most recent bits: bit i holds s_(step-i). Connection
    // polynomial degrees never exceed n, so n+1 window bits suffice.
    const size_t wn = n / 64 + 2;
    std::vector<uint64_t> window(wn, 0);
    BitPolynomial c = BitPolynomial::one();
    BitPolynomial b = BitPolynomial::one();
    uint64_t complexity = 0;
    uint64_t gap = 1;

    for (uint64_t step = 0; step < 2 * n; ++step) {
        uint64_t carry = s.bit(step % n) ? 1 : 0;
        for (size_t i = 0; i < wn; ++i) {
            const uint64_t next = window[i] >> 63;
            window[i] = (window[i] << 1) | carry;
            carry = next;
        }
        const auto& cw = c.words();
        if (cw.size() > wn)
            throw std::logic_error("berlekamp_massey: connection outgrew the window");
        uint64_t acc = 0;
        for (size_t i = 0; i < cw.size(); ++i)
            acc ^= cw[i] & window[i];
        if (std::popcount(acc) & 1) {
            if (2 * complexity <= step) {
                BitPolynomial t = c;
                c.add_shifted(b, gap);
                complexity = step + 1 - complexity;
                b = std::move(t);
                gap = 1;
            } else {
                c.add_shifted(b, gap);
                ++gap;
            }
        } else {
            ++gap;
        }
    }
    return {complexity, std::move(c)};
}

std::string to_hex(const BitPolynomial& a) {
    if (a.is_zero())
        return "0";
    const auto nibbles = static_cast<uint64_t>(a.degree()) / 4 + 1;
    std::string out(nibbles, '0');
    for (uint64_t t = 0; t < nibbles; ++t) {
        unsigned v = 0;
        for (unsigned bit = 0; bit < 4; ++bit)
            v |= static_cast<unsigned>(a.coeff(4 * t + bit)) << bit;
        out[t] = "0123456789abcdef"[v];
    }
    return out;
}

BitPolynomial from_hex(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("from_hex: empty input");
    BitPolynomial r;
    for (size_t t = 0; t < s.size(); ++t) {
        const char ch = s[t];
        unsigned v = 0;
        if (ch >= '0' && ch <= '9')
            v = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            v = static_cast<unsigned>(ch - 'a') + 10;
        else if (ch >= 'A' && ch <= 'F')
            v = static_cast<unsigned>(ch - 'A') + 10;
        else
            throw std::invalid_argument("from_hex: invalid hex digit");
        for (unsigned bit = 0; bit < 4; ++bit) {
            if ((v >> bit) & 1)
                r.set_coeff(4 * t + bit, true);
        }
    }
    return r;
}

} // namespace cyclolc
