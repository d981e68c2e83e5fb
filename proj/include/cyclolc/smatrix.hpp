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
#include <vector>

#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/gf2m.hpp"

namespace cyclolc {

// Degree of the splitting field GF(2^m) of x^pq - 1: the multiplicative
// order of 2 modulo pq (the lcm of the orders modulo p and q).
std::uint64_t splitting_field_degree(std::uint64_t p, std::uint64_t q);

// Gaussian period sums of order d for the prime p: entry i is
// sum over u in D_i of root^u, where D_i = { g^(i+dt) mod p } and root is a
// fixed element of multiplicative order p. Requires d | p-1.
std::vector<FieldElement> gaussian_periods(const FieldSpec& field,
                                           const FieldElement& root,
                                           std::uint64_t p, std::uint64_t g,
                                           std::uint64_t d);

// v[i] = sum of periods[(i+t) mod d] for d/2 <= t < d. Applied to the period
// sums of beta (order p) this is the final-column vector of the S-matrix;
// applied to gamma (order q) it is the final row up to a constant.
std::vector<FieldElement>
half_sum_vector(const std::vector<FieldElement>& periods);

// The (d+1) x (d+1) matrix of sequence-polynomial evaluations grouped by
// class: entry (i, j) with i, j < d is S(alpha^k) for k in D with p-side
// index shifted into row i and q-side index j; column d collects the Q
// classes, row d the P classes, and the corner is S(1).
struct SMatrix {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    unsigned d = 0;
    std::vector<FieldElement> s; // (d+1)*(d+1) entries, row-major

    const FieldElement& at(unsigned i, unsigned j) const {
        return s[i * (d + 1) + j];
    }
};

// Builds the matrix from closed-form period sums (no length-pq polynomial is
// evaluated). alpha must be a primitive pq-th root of unity in the field.
SMatrix build_smatrix(const CyclotomyContext& ctx, const FieldSpec& field,
                      const FieldElement& alpha);

// Linear complexity from the zero pattern: every zero among the d*d block
// entries accounts for e/d roots of the minimal polynomial's complement,
// column-d zeros for (p-1)/d, row-d zeros for (q-1)/d, and the corner for 1.
std::uint64_t lc_from_smatrix(const SMatrix& m);

// Checks the order-halving identities of the period sums, for even d | p-1:
//
//   S_d(i) + S_d(i + d/2)  =  S_(d/2)(i)
//   S_d(i) * S_d(i + d/2)  =  sum_j [(d/2, j-i)_d mod 2] S_(d/2)(j)  +  c
//
// with c = 1 exactly when (p-1)/d is odd. beta must have order p.
bool verify_period_sum_recursion(const FieldSpec& field,
                                 const FieldElement& beta, std::uint64_t p,
                                 std::uint64_t g, std::uint64_t d);

// Checks, at d = 8, that consecutive half-sum vector entries differ by the
// order-4 period sums: v[i+1] + v[i] = S_4(i) for 0 <= i < 7.
bool verify_half_sum_differences(const FieldSpec& field,
                                 const FieldElement& beta, std::uint64_t p,
                                 std::uint64_t g);

// Two equivalent characterizations of 2 being an octic residue mod p
// (p = 1 mod 8, p = x^2 + 4y^2): the Euler criterion, and the congruence
// test on y (p = 1 mod 16 with y = 0 mod 8, or p = 9 mod 16 with y = 4
// mod 8).
struct OcticCheck {
    bool via_residue = false;
    bool via_y = false;
};

OcticCheck octic_criterion(std::uint64_t p);

// Symbolic entries for predicted case vectors, instantiated against a
// field's mu (GF(4)) and eta (GF(16)).
enum class Sym : unsigned char {
    zero,
    one,
    mu,
    mu_plus_1,
    eta,
    eta_plus_1,
    eta2,
    eta2_plus_1,
};

// Predicted half-sum vector shapes for a prime p = 1 (mod 8), selected by
// p mod 16 and the residue class of 2. Octic and quartic classes determine
// the vector up to rotation (one template); the quadratic class leaves two
// rotation-inequivalent candidates.
std::vector<std::vector<Sym>> predicted_half_sum_templates(std::uint64_t p);

// Predicted shape of w[j] = v[j] + v[(j - shift) mod 8] where v is the
// half-sum vector of the order-q periods and shift is the index of p in the
// q-side class partition. Selected by shift mod 8, q mod 16, and the residue
// class of 2 mod q.
std::vector<std::vector<Sym>>
predicted_half_sum_shift_templates(std::uint64_t q, std::uint64_t shift);

// True when some rotation of v equals some template instantiated under some
// admissible (mu, eta) conjugate choice. Returns false when the field lacks
// the subfield a template needs.
bool matches_up_to_rotation(const FieldSpec& field,
                            const std::vector<FieldElement>& v,
                            const std::vector<std::vector<Sym>>& templates);

} // namespace cyclolc
