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
#include <utility>
#include <vector>

#include "cyclolc/cyclotomy.hpp"

namespace cyclolc {

// One period of a binary sequence, bit-packed into 64-bit words
// (bit i lives in word i/64 at position i%64).
class BitSequence {
  public:
    explicit BitSequence(std::uint64_t period);

    std::uint64_t period() const { return period_; }
    bool bit(std::uint64_t i) const;
    void set(std::uint64_t i, bool v = true);
    std::uint64_t ones() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::uint64_t period_ = 0;
    std::vector<std::uint64_t> words_;
};

// The balanced binary sequence of period pq whose support is the union of
// the classes D_j, P_j, Q_j for d/2 <= j < d. Built directly from the
// defining generator orbits.
BitSequence generate(const CyclotomyContext& ctx);

// Same sequence built per-position from class_of labels. For units the
// q-side index decides membership. Exists as an independent construction to
// cross-check against generate().
BitSequence generate_by_labels(const CyclotomyContext& ctx);

// (ones, zeros) of one period.
std::pair<std::uint64_t, std::uint64_t> balance(const BitSequence& s);

} // namespace cyclolc
