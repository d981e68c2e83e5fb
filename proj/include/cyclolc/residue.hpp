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

namespace cyclolc {

// Largest k in {2, 4, 8} such that c is a k-th power residue modulo p,
// graded down to nonresidue (1) for quadratic nonresidues and zero (0)
// for c = 0 (mod p). Enumerator values are the k themselves.
enum class ResidueClass : unsigned {
    zero = 0,
    nonresidue = 1,
    quadratic = 2,
    quartic = 4,
    octic = 8,
};

// (a * b) mod m, overflow-free for all 64-bit operands. m must be nonzero.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// (a ^ e) mod m by square and multiply. m must be nonzero.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Miller-Rabin with a witness set that is deterministic for all 64-bit n.
bool is_probable_prime(std::uint64_t n);

// Least k >= 1 with a^k = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);

// True when g (mod p) generates the full multiplicative group of the prime p.
bool is_primitive_root(std::uint64_t g, std::uint64_t p);

// Smallest primitive root of the prime p.
std::uint64_t primitive_root(std::uint64_t p);

// Smallest g >= 2 that is a primitive root of both distinct odd primes p and q.
std::uint64_t common_primitive_root(std::uint64_t p, std::uint64_t q);

// The unique x in [0, pq) with x = a (mod p) and x = b (mod q), for distinct
// primes p and q.
std::uint64_t crt_lift(std::uint64_t a, std::uint64_t p, std::uint64_t b,
                       std::uint64_t q);

// Least k >= 0 with g^k = a (mod p), via baby-step giant-step. p must be
// prime and a nonzero mod p; throws if a is outside the group generated by g.
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t p);

// Euler-criterion ladder: classifies c as an octic / quartic / quadratic
// residue or nonresidue modulo the prime p, which must satisfy p = 1 (mod 8).
ResidueClass power_residue_class(std::uint64_t c, std::uint64_t p);

} // namespace cyclolc
