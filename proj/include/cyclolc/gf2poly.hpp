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
#include <string>
#include <string_view>
#include <vector>

#include "cyclolc/sequence.hpp"

namespace cyclolc {

struct DivMod;

// Dense polynomial over GF(2), bit-packed (coefficient of x^i is bit i%64 of
// word i/64). Always kept normalized: no trailing zero words, degree() is
// exact, and the zero polynomial has degree -1.
class BitPolynomial {
  public:
    BitPolynomial() = default; // zero polynomial

    static BitPolynomial one();
    static BitPolynomial monomial(std::uint64_t n);       // x^n
    static BitPolynomial x_pow_plus_one(std::uint64_t n); // x^n + 1

    bool is_zero() const { return degree_ < 0; }
    std::int64_t degree() const { return degree_; }
    bool coeff(std::uint64_t i) const;
    void set_coeff(std::uint64_t i, bool v);
    std::uint64_t term_count() const;

    BitPolynomial& operator+=(const BitPolynomial& rhs);
    friend BitPolynomial operator+(BitPolynomial a, const BitPolynomial& b) {
        a += b;
        return a;
    }
    friend bool operator==(const BitPolynomial& a, const BitPolynomial& b) {
        return a.degree_ == b.degree_ && a.words_ == b.words_;
    }

    // *this += rhs * x^shift. rhs must be nonzero and not alias *this.
    void add_shifted(const BitPolynomial& rhs, std::uint64_t shift);

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::vector<std::uint64_t> words_;
    std::int64_t degree_ = -1;

    void drop_leading_words();
    void recompute_degree(std::int64_t top_word);

    friend BitPolynomial gcd(BitPolynomial a, BitPolynomial b);
    friend struct DivMod;
    friend DivMod divmod(const BitPolynomial& a, const BitPolynomial& b);
    friend BitPolynomial mul(const BitPolynomial& a, const BitPolynomial& b);
    friend BitPolynomial from_sequence(const BitSequence& s);
};

// Euclidean gcd via word-shifted reductions. gcd(a, 0) = a; throws when both
// inputs are zero. The result is the unique monic gcd (monic is automatic
// over GF(2)).
BitPolynomial gcd(BitPolynomial a, BitPolynomial b);

struct DivMod {
    BitPolynomial quot;
    BitPolynomial rem;
};

// a = quot * b + rem with deg(rem) < deg(b). Throws on division by zero.
DivMod divmod(const BitPolynomial& a, const BitPolynomial& b);

// Schoolbook product. Intended for small operands (field moduli,
// irreducibility testing), not for period-length polynomials.
BitPolynomial mul(const BitPolynomial& a, const BitPolynomial& b);

// S(x) = sum of x^i over the support of one period.
BitPolynomial from_sequence(const BitSequence& s);

// Linear complexity of the periodic extension of s, as
// period - deg gcd(x^period + 1, S(x)). Zero sequences give 0.
std::uint64_t linear_complexity_gcd(const BitSequence& s);

// Minimal polynomial (x^period + 1) / gcd(x^period + 1, S(x)); the monic
// generator m(x) = 1 + c_1 x + ... + c_L x^L of the shortest recurrence
// s_n = sum c_i s_(n-i). Zero sequences give 1.
BitPolynomial minimal_polynomial(const BitSequence& s);

struct BerlekampMasseyResult {
    std::uint64_t complexity = 0;
    BitPolynomial connection; // 1 + c_1 x + ... + c_L x^L
};

// Berlekamp-Massey over GF(2), run on exactly 2*period bits of the periodic
// extension, which pins the true linear complexity of the periodic sequence.
BerlekampMasseyResult berlekamp_massey(const BitSequence& s);

// Hex serialization, lowest coefficient first: hex digit t encodes the
// coefficients of x^(4t) .. x^(4t+3), with x^(4t) in the digit's bit 0.
// The zero polynomial serializes as "0".
std::string to_hex(const BitPolynomial& a);
BitPolynomial from_hex(std::string_view s);

} // namespace cyclolc
