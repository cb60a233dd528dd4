// Copyright 2026 The colorcode authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLORCODE_CELL_HPP
#define COLORCODE_CELL_HPP

#include <array>
#include <cstdint>

namespace colorcode::cell {

// Exact probability kernels for the 4-qubit basic cell.
//
// Patterns are 4-bit masks with bit k = e_k; split syndromes are 3-bit masks
// with bit i = s_i. The in-cell supports of the three mid-edge checks are
// s0 -> {e0,e1,e3}, s1 -> {e0,e2,e3}, s2 -> {e1,e2,e3}; the complement
// operator {e0,e1,e2} flips all three corner checks and no mid-edge check.

inline constexpr std::array<std::uint8_t, 3> kCheckSupport = {
    0b1011,  // s0: e0, e1, e3
    0b1101,  // s1: e0, e2, e3
    0b1110,  // s2: e1, e2, e3
};
inline constexpr std::uint8_t kComplement = 0b0111;  // e0, e1, e2

inline constexpr double kProbFloor = 1e-9;

inline double clamp_prob(double p) {
  if (p < kProbFloor) return kProbFloor;
  if (p > 1.0 - kProbFloor) return 1.0 - kProbFloor;
  return p;
}

// Coset representative for a split syndrome: XOR of check supports over the
// set syndrome bits. Linear by construction, canonical(0) = 0.
inline std::uint8_t canonical_estimate(std::uint8_t syndrome) {
  std::uint8_t e = 0;
  for (int i = 0; i < 3; ++i)
    if ((syndrome >> i) & 1) e ^= kCheckSupport[i];
  return e;
}

// In-cell mid-edge syndrome of a pattern.
std::uint8_t cell_syndrome(std::uint8_t pattern);

// Product probability of a 4-bit pattern under independent per-qubit priors.
double pattern_prob(std::uint8_t pattern, const std::array<double, 4>& priors);

// P(s) = p(canonical(s)) + p(canonical(s) ^ complement); sums to 1 over the
// eight syndromes.
double split_likelihood(std::uint8_t syndrome, const std::array<double, 4>& priors);

// Probability that the rescaled qubit is in error given the split syndrome.
double rescaled_hard(std::uint8_t syndrome, const std::array<double, 4>& priors);

// Soft rule: expectation of rescaled_hard over the split-syndrome
// distribution induced by the three (independent) mid-edge beliefs.
double rescaled_soft(const std::array<double, 3>& beliefs,
                     const std::array<double, 4>& priors);

// Same quantity evaluated through the reference-splitting machinery: the
// applied correction is the canonical estimate of `reference` and each
// candidate splitting is related to it by the half-stabilizer flipping their
// difference. Agrees with rescaled_soft for every reference.
double rescaled_soft_with_reference(const std::array<double, 3>& beliefs,
                                    const std::array<double, 4>& priors,
                                    std::uint8_t reference);

}  // namespace colorcode::cell

#endif  // COLORCODE_CELL_HPP
