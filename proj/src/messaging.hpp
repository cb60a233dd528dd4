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

#ifndef COLORCODE_MESSAGING_HPP
#define COLORCODE_MESSAGING_HPP

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "f2.hpp"
#include "lattice.hpp"

namespace colorcode {

// Per-level belief state: per-qubit error priors and, for every cell, the
// cell's belief that its share of each of its three mid-edge checks is 1.
struct BeliefState {
  std::vector<double> priors;
  std::vector<std::array<double, 3>> beliefs;  // per cell, per local edge
};

enum class SplitRule { MostLikely, Sampled };

// Probability-domain sum-product on the Tanner graph of H with parity targets
// equal to the syndrome, flooding schedule. iterations == 0 returns the
// priors unchanged.
std::vector<double> bp_update(const std::vector<double>& priors,
                              const BinaryMatrix& h, const BitVector& syndrome,
                              int iterations);

// Same, on a prebuilt check -> qubits adjacency.
std::vector<double> bp_update(const std::vector<double>& priors,
                              const std::vector<std::vector<int>>& check_qubits,
                              const BitVector& syndrome, int iterations);

// Bayesian update of every corner qubit's prior from its corner-check value
// and the five external qubits' priors. All updates are computed from the
// pre-update priors and applied simultaneously.
std::vector<double> corner_lookahead(const std::vector<double>& priors,
                                     const LevelGeometry& g,
                                     const BitVector& syndrome);

// Initial split beliefs: probability of odd error parity on each mid-edge
// check's in-cell support.
std::vector<std::array<double, 3>> init_split_beliefs(
    const std::vector<double>& priors, const LevelGeometry& g);

// Conditions the two sides' beliefs for one shared check on the measured bit:
// s = 0 makes the shares agree, s = 1 makes them complementary.
std::pair<double, double> consistency_update(double p_top, double p_low, int s);

// consistency_update applied to every shared edge, in place.
void enforce_consistency(BeliefState& state, const LevelGeometry& g,
                         const BitVector& syndrome);

// One synchronous round: every cell recomputes its outgoing belief on each
// edge from its priors and its beliefs on the other two edges, then
// consistency is enforced per shared check.
void split_round(BeliefState& state, const LevelGeometry& g,
                 const BitVector& syndrome);

// Hard decision per shared edge; side 0 is resolved by the rule and side 1
// takes the complement w.r.t. the measured bit, so the shares always XOR to
// the syndrome. Returns the 3-bit split syndrome of every cell.
std::vector<std::uint8_t> finalize_splits(const BeliefState& state,
                                          const LevelGeometry& g,
                                          const BitVector& syndrome,
                                          SplitRule rule, std::mt19937_64& rng);

}  // namespace colorcode

#endif  // COLORCODE_MESSAGING_HPP
