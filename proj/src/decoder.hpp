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

#ifndef COLORCODE_DECODER_HPP
#define COLORCODE_DECODER_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "f2.hpp"
#include "lattice.hpp"
#include "messaging.hpp"

namespace colorcode {

enum class DecodeMode { Hard, Soft };

struct DecodeConfig {
  DecodeMode mode = DecodeMode::Soft;
  int bp_iterations = 2;
  int split_rounds = 3;
  SplitRule split_rule = SplitRule::MostLikely;
  bool corner_lookahead = true;
  std::uint64_t seed = 0;
};

struct LevelTrace {
  int level = 0;
  std::vector<std::uint8_t> splits;     // per cell, 3-bit split syndrome
  std::vector<std::uint8_t> estimates;  // per cell, 4-bit local estimate
  BitVector coarse_syndrome;
  std::vector<double> coarse_priors;
};

struct DecodeResult {
  BitVector estimate;  // over physical qubits; syndrome matches the input
  std::vector<LevelTrace> traces;  // level m first, level 1 last
  DecodeConfig config;
};

struct BaseMlResult {
  BitVector estimate;
  int class_index = 0;  // winning class, relative to the syndrome-solve rep
};

// Recursive rescaling decoder. Pure function of (hierarchy, syndrome, config);
// one instance may serve any number of threads concurrently.
class Decoder {
 public:
  explicit Decoder(const LatticeHierarchy& hierarchy);

  const LatticeHierarchy& hierarchy() const { return hier_; }

  DecodeResult decode(const BitVector& syndrome, double p,
                      const DecodeConfig& config = {}) const;

  // One splitting/rescaling pass at level >= 1: consumes the priors and
  // syndrome of that level, returns the trace holding the coarse ones.
  LevelTrace level_pass(int level, const std::vector<double>& priors,
                        const BitVector& syndrome, const DecodeConfig& config,
                        std::mt19937_64& rng) const;

  // Exact prior-weighted maximum likelihood over the 16 logical classes of
  // the 18-qubit base code (2048 coset patterns). Throws on a syndrome
  // outside the image of the base check matrix.
  BaseMlResult base_ml_decode(const std::vector<double>& priors,
                              const BitVector& syndrome) const;

  // Walks the traces from the base estimate back to a physical-qubit pattern.
  BitVector expand_downward(const std::vector<LevelTrace>& traces,
                            const BitVector& base_estimate) const;

 private:
  const LatticeHierarchy& hier_;

  // Base-level tables (18-bit patterns as uint32 masks).
  std::array<std::uint32_t, 128> stabilizers_{};
  std::array<std::uint32_t, 16> logical_reps_{};
  std::vector<BitVector> solve_rows_;        // row transform R with H = R^-1 * RREF
  std::vector<std::size_t> solve_pivots_;
  std::vector<std::size_t> invalid_rows_;    // zero RREF rows: (R*s) must vanish there
};

}  // namespace colorcode

#endif  // COLORCODE_DECODER_HPP
