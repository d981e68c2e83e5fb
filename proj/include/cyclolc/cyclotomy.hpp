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
#include <optional>
#include <vector>

namespace cyclolc {

// Everything needed to partition Z/pq into the generalized cyclotomic
// classes
//
//   D_j  = { g^(j+dt) f^v mod pq : 0 <= t < e/d, 0 <= v < d }   (units)
//   P_j  = p * { g^(j+dt) mod q : 0 <= t < (q-1)/d }            (multiples of p)
//   Q_i  = q * { g^(i+dt) mod p : 0 <= t < (p-1)/d }            (multiples of q)
//
// where g is a common primitive root of the distinct odd primes p and q,
// d = gcd(p-1, q-1), e = lcm(p-1, q-1), and f = g (mod p), f = 1 (mod q).
// All fields are immutable after construction; sharing a context across
// threads is safe.
struct CyclotomyContext {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t g = 0;
    std::uint64_t f = 0;
    std::uint64_t d = 0; // gcd(p-1, q-1)
    std::uint64_t e = 0; // lcm(p-1, q-1)
    std::uint64_t ind_p_of_q = 0; // discrete log of q base g, modulo p
    std::uint64_t ind_q_of_p = 0; // discrete log of p base g, modulo q
    // dlog_p[x] = k with g^k = x (mod p) for x in [1, p); entry 0 is unused.
    std::vector<std::uint32_t> dlog_p;
    std::vector<std::uint32_t> dlog_q;
};

// Builds the context for distinct odd primes p, q. When g is omitted the
// smallest common primitive root is used; an explicit g must be a primitive
// root of both primes.
CyclotomyContext build_context(std::uint64_t p, std::uint64_t q,
                               std::optional<std::uint64_t> g = std::nullopt);

// Class membership of a residue k mod pq. Units carry both indices: i is the
// p-side index (k mod p lies in D_i of Z_p) and j the q-side index. Q labels
// carry i only (the quotient k/q classified mod p), P labels carry j only.
struct ClassLabel {
    enum class Kind : unsigned char { zero, D, P, Q };
    Kind kind = Kind::zero;
    unsigned i = 0;
    unsigned j = 0;

    bool operator==(const ClassLabel&) const = default;
};

ClassLabel class_of(const CyclotomyContext& ctx, std::uint64_t k);

// Classical cyclotomic number (i, j)_d over Z_p: the number of x in D_i
// (classes of index d cut by the primitive root g) with x + 1 in D_j.
// Computed by exhaustive count.
std::uint64_t cyclotomic_number(std::uint64_t p, std::uint64_t g,
                                std::uint64_t d, std::uint64_t i,
                                std::uint64_t j);

// The two binary quadratic form representations of a prime p = 1 (mod 8):
//
//   p = x^2 + 4 y^2   with x = 1 (mod 4), y >= 0
//   p = a^2 + 2 b^2   with a = 1 (mod 4), b >= 0
//
// Both are unique up to the sign of y resp. b, which is left unresolved
// here (the nonnegative representative is returned).
struct QuadraticForms {
    std::int64_t x = 0;
    std::uint64_t y = 0;
    std::int64_t a = 0;
    std::uint64_t b = 0;
};

QuadraticForms quadratic_form_representations(std::uint64_t p);

// The four cyclotomic numbers (4,0)_8, (4,1)_8, (4,2)_8, (4,3)_8 of order 8
// evaluated from the closed-form polynomial expressions in x, y, a above.
// The column of the formula table is selected by p mod 16 and the residue
// class of 2; the sign of y (which only enters when 2 is not a quartic
// residue) is fixed by matching (4,1)_8 against the exhaustive count for
// the given primitive root g. Results are cached per (p, g).
std::array<std::uint64_t, 4> cyclotomic_numbers_order8(std::uint64_t p,
                                                       std::uint64_t g);

} // namespace cyclolc
