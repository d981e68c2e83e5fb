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

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "cyclolc/gf2poly.hpp"

namespace cyclolc {

class FieldElement;

// GF(2^m) for 1 <= m <= 128, represented as GF(2)[z] modulo the
// lexicographically smallest irreducible polynomial of degree m (polynomials
// ordered by their coefficient bits read as an integer). Field data is
// shared by the elements, so a FieldSpec may be copied and moved freely and
// elements stay valid. Two FieldSpec instances with equal moduli describe
// the same field.
class FieldSpec {
  public:
    static FieldSpec build(unsigned degree);

    unsigned degree() const;
    const BitPolynomial& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    // Element with representation bits (hi:lo); bits at or above the degree
    // must be zero.
    FieldElement from_words(std::uint64_t lo, std::uint64_t hi = 0) const;

  private:
    struct Data;
    std::shared_ptr<const Data> data_;

    explicit FieldSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    friend class FieldElement;
};

// Value-semantic element of a FieldSpec. Mixing elements of different fields
// (distinct moduli) in any operation throws. Default-constructed elements
// are unbound and unusable until assigned from a bound one.
class FieldElement {
  public:
    FieldElement() = default;

    bool is_bound() const { return data_ != nullptr; }
    bool is_zero() const { return w_[0] == 0 && w_[1] == 0; }
    std::array<std::uint64_t, 2> words() const { return w_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement square() const;
    FieldElement pow(unsigned __int128 e) const;
    FieldElement inverse() const;

    // Representation bits as a bare lowercase hex integer ("0" for zero).
    std::string to_hex() const;

  private:
    std::array<std::uint64_t, 2> w_{0, 0};
    std::shared_ptr<const FieldSpec::Data> data_;

    FieldElement(std::array<std::uint64_t, 2> w,
                 std::shared_ptr<const FieldSpec::Data> d)
        : w_(w), data_(std::move(d)) {}

    void require_bound() const;
    void require_same_field(const FieldElement& o) const;

    friend class FieldSpec;
};

// Multiplicative group order 2^m - 1 of the field.
unsigned __int128 group_order(const FieldSpec& field);

// Deterministic element of multiplicative order exactly n: the first
// candidate base (by integer representation) whose (2^m - 1)/n power has
// order n. Requires n >= 1 and n | 2^m - 1.
FieldElement primitive_nth_root(const FieldSpec& field, std::uint64_t n);

// The GF(4) generator mu with mu^2 + mu + 1 = 0, choosing the root with the
// smaller integer representation. Requires 2 | m.
FieldElement subfield_mu(const FieldSpec& field);

// The GF(16) generator eta with eta^2 + eta = mu (for the mu above), which
// also satisfies eta^4 + eta + 1 = 0; again the smaller-representation root.
// Requires 4 | m.
FieldElement subfield_eta(const FieldSpec& field);

} // namespace cyclolc
