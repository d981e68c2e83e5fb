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

#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "cyclolc/gf2m.hpp"
#include "cyclolc/gf2poly.hpp"

using namespace cyclolc;

namespace {

// Exhaustively verifies irreducibility for degrees small enough to factor
// by trial division.
bool brute_force_irreducible(const BitPolynomial& f) {
    int deg = static_cast<int>(f.degree());
    if (deg < 1) {
        return false;
    }
    for (std::uint64_t bits = 2; bits < (1ULL << (deg / 2 + 1)); ++bits) {
        BitPolynomial candidate;
        for (int i = 0; i < 64; ++i) {
            if ((bits >> i) & 1) {
                candidate.set_coeff(static_cast<std::uint64_t>(i), true);
            }
        }
        if (candidate.degree() < 1 || candidate.degree() >= deg) {
            continue;
        }
        if (divmod(f, candidate).rem.is_zero()) {
            return false;
        }
    }
    return true;
}

BitPolynomial poly_from_bits(std::uint64_t bits) {
    BitPolynomial f;
    for (int i = 0; i < 64; ++i) {
        if ((bits >> i) & 1) {
            f.set_coeff(static_cast<std::uint64_t>(i), true);
        }
    }
    return f;
}

} // namespace

TEST_SUITE("gf2m") {

TEST_CASE("field moduli are the minimal irreducible polynomials") {
    CHECK(FieldSpec::build(1).modulus() == poly_from_bits(0b10));
    CHECK(FieldSpec::build(2).modulus() == poly_from_bits(0b111));
    CHECK(FieldSpec::build(4).modulus() == poly_from_bits(0b10011));

    for (unsigned m : {2u, 3u, 4u, 5u, 8u, 9u, 11u}) {
        FieldSpec field = FieldSpec::build(m);
        BitPolynomial f = field.modulus();
        REQUIRE(f.degree() == static_cast<int>(m));
        CHECK(brute_force_irreducible(f));
        // Every smaller polynomial with the same leading term factors.
        std::uint64_t top = 1ULL << m;
        std::uint64_t tail = f.words()[0] & (top - 1);
        for (std::uint64_t smaller = 0; smaller < tail; ++smaller) {
            CHECK_FALSE(brute_force_irreducible(poly_from_bits(top | smaller)));
        }
    }
}

TEST_CASE("fields with equal moduli compare equal through elements") {
    FieldSpec a = FieldSpec::build(4);
    FieldSpec b = FieldSpec::build(4);
    FieldElement x = a.from_words(5);
    FieldElement y = b.from_words(5);
    CHECK(x == y);
    CHECK((x + y).is_zero());
}

TEST_CASE("arithmetic in the sixteen element field") {
    FieldSpec field = FieldSpec::build(4);
    FieldElement z = field.from_words(2);
    CHECK((z * z) == field.from_words(4));
    // z^4 = z + 1 under the modulus z^4 + z + 1.
    CHECK(z.pow(4) == field.from_words(3));
    CHECK(z.pow(15) == field.one());

    for (std::uint64_t v = 1; v < 16; ++v) {
        FieldElement x = field.from_words(v);
        CHECK((x * x.inverse()) == field.one());
        CHECK(x.square() == x * x);
        CHECK(x.pow(15) == field.one());
        CHECK((x + x).is_zero());
    }
    CHECK_THROWS_AS(field.zero().inverse(), std::invalid_argument);
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    FieldSpec field = FieldSpec::build(8);
    unsigned fixed = 0;
    for (std::uint64_t v = 0; v < 256; ++v) {
        FieldElement x = field.from_words(v);
        if (x.square() == x) {
            ++fixed;
        }
    }
    CHECK(fixed == 2);
}

TEST_CASE("group order covers the full word sizes") {
    CHECK(group_order(FieldSpec::build(4)) == 15);
    CHECK(group_order(FieldSpec::build(64)) ==
          static_cast<unsigned __int128>(~0ULL));
    unsigned __int128 all = ~static_cast<unsigned __int128>(0);
    CHECK(group_order(FieldSpec::build(128)) == all);
}

TEST_CASE("elements from different fields refuse to mix") {
    FieldSpec small = FieldSpec::build(2);
    FieldSpec large = FieldSpec::build(4);
    FieldElement a = small.from_words(2);
    FieldElement b = large.from_words(2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    FieldElement unbound;
    CHECK_FALSE(unbound.is_bound());
    CHECK_THROWS_AS(unbound + a, std::logic_error);
}

TEST_CASE("from_words validates the degree bound") {
    FieldSpec f4 = FieldSpec::build(4);
    CHECK_THROWS_AS(f4.from_words(16), std::invalid_argument);
    FieldSpec f64 = FieldSpec::build(64);
    CHECK_THROWS_AS(f64.from_words(0, 1), std::invalid_argument);
    FieldSpec f65 = FieldSpec::build(65);
    CHECK(f65.from_words(0, 1).pow(3) == f65.from_words(0, 1).square() * f65.from_words(0, 1));
    CHECK_THROWS_AS(f65.from_words(0, 2), std::invalid_argument);
}

TEST_CASE("primitive roots of unity have exact order") {
    FieldSpec field = FieldSpec::build(4);
    FieldElement w = primitive_nth_root(field, 15);
    FieldElement acc = field.one();
    for (unsigned k = 1; k < 15; ++k) {
        acc = acc * w;
        CHECK(acc != field.one());
    }
    CHECK((acc * w) == field.one());

    FieldElement five = primitive_nth_root(field, 5);
    CHECK(five.pow(5) == field.one());
    CHECK(five.pow(1) != field.one());
    CHECK(five != field.one());

    CHECK(primitive_nth_root(field, 1) == field.one());
    CHECK_THROWS_AS(primitive_nth_root(field, 7), std::invalid_argument);

    // Deterministic selection.
    CHECK(primitive_nth_root(field, 15) == w);
}

TEST_CASE("roots of unity in the splitting field of p = 17") {
    FieldSpec field = FieldSpec::build(8);
    FieldElement beta = primitive_nth_root(field, 17);
    CHECK(beta.pow(17) == field.one());
    CHECK(beta != field.one());
    // The powers enumerate 17 distinct values.
    std::vector<FieldElement> seen;
    FieldElement acc = field.one();
    for (unsigned k = 0; k < 17; ++k) {
        for (const FieldElement& prev : seen) {
            CHECK(prev != acc);
        }
        seen.push_back(acc);
        acc = acc * beta;
    }
}

TEST_CASE("quartic subfield constants") {
    FieldSpec f4 = FieldSpec::build(4);
    CHECK(subfield_mu(f4) == f4.from_words(6));
    CHECK(subfield_eta(f4) == f4.from_words(2));

    for (unsigned m : {2u, 4u, 8u, 12u}) {
        FieldSpec field = FieldSpec::build(m);
        FieldElement mu = subfield_mu(field);
        CHECK((mu.square() + mu) == field.one());
        CHECK(mu != field.zero());
        if (m % 4 == 0) {
            FieldElement eta = subfield_eta(field);
            CHECK((eta.square() + eta) == mu);
            CHECK((eta.pow(4) + eta) == field.one());
        }
    }

    CHECK_THROWS_AS(subfield_mu(FieldSpec::build(9)), std::invalid_argument);
    CHECK_THROWS_AS(subfield_eta(FieldSpec::build(2)), std::invalid_argument);
}

TEST_CASE("hex rendering of field elements") {
    FieldSpec field = FieldSpec::build(4);
    CHECK(field.zero().to_hex() == "0");
    CHECK(field.one().to_hex() == "1");
    CHECK(field.from_words(10).to_hex() == "a");
    FieldSpec wide = FieldSpec::build(72);
    FieldElement top = wide.from_words(0, 0x80);
    CHECK(top.to_hex() == "800000000000000000");
}

TEST_CASE("splitting field arithmetic for the working pair") {
    FieldSpec field = FieldSpec::build(40);
    FieldElement alpha = primitive_nth_root(field, 697);
    CHECK(alpha.pow(697) == field.one());
    CHECK(alpha.pow(17) != field.one());
    CHECK(alpha.pow(41) != field.one());
    FieldElement beta = alpha.pow(41);
    CHECK(beta.pow(17) == field.one());
}

} // TEST_SUITE("gf2m")
