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

#include "cell.hpp"

#include <bit>

namespace colorcode::cell {

std::uint8_t cell_syndrome(std::uint8_t pattern) {
  std::uint8_t s = 0;
  for (int i = 0; i < 3; ++i)
    if (std::popcount(static_cast<unsigned>(pattern & kCheckSupport[i])) & 1)
      s |= std::uint8_t{1} << i;
  return s;
}

double pattern_prob(std::uint8_t pattern, const std::array<double, 4>& priors) {
  double p = 1.0;
  for (int k = 0; k < 4; ++k) {
    double pk = clamp_prob(priors[k]);
    p *= ((pattern >> k) & 1) ? pk : 1.0 - pk;
  }
  return p;
}

double split_likelihood(std::uint8_t syndrome,
                        const std::array<double, 4>& priors) {
  std::uint8_t e = canonical_estimate(syndrome);
  return pattern_prob(e, priors) + pattern_prob(e ^ kComplement, priors);
}

double rescaled_hard(std::uint8_t syndrome,
                     const std::array<double, 4>& priors) {
  std::uint8_t e = canonical_estimate(syndrome);
  double pe = pattern_prob(e, priors);
  double pc = pattern_prob(e ^ kComplement, priors);
  return pc / (pe + pc);
}

namespace {
double syndrome_weight(std::uint8_t syndrome, const std::array<double, 3>& beliefs) {
  double w = 1.0;
  for (int i = 0; i < 3; ++i) {
    double b = clamp_prob(beliefs[i]);
    w *= ((syndrome >> i) & 1) ? b : 1.0 - b;
  }
  return w;
}
}  // namespace

double rescaled_soft(const std::array<double, 3>& beliefs,
                     const std::array<double, 4>& priors) {
  double p = 0.0;
  for (std::uint8_t s = 0; s < 8; ++s)
    p += rescaled_hard(s, priors) * syndrome_weight(s, beliefs);
  return p;
}

double rescaled_soft_with_reference(const std::array<double, 3>& beliefs,
                                    const std::array<double, 4>& priors,
                                    std::uint8_t reference) {
  std::uint8_t applied = canonical_estimate(reference);
  double p = 0.0;
  for (std::uint8_t s = 0; s < 8; ++s) {
    // Half-stabilizer converting the reference splitting into s.
    std::uint8_t diff = s ^ reference;
    std::uint8_t half_stab = 0;
    for (int i = 0; i < 3; ++i)
      if ((diff >> i) & 1) half_stab ^= kCheckSupport[i];
    std::uint8_t no_correction = applied ^ half_stab;
    double p0 = pattern_prob(no_correction, priors);
    double p1 = pattern_prob(no_correction ^ kComplement, priors);
    p += (p1 / (p0 + p1)) * syndrome_weight(s, beliefs);
  }
  return p;
}

}  // namespace colorcode::cell
