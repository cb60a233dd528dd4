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

#ifndef COLORCODE_MONTECARLO_HPP
#define COLORCODE_MONTECARLO_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "decoder.hpp"
#include "f2.hpp"

namespace colorcode {

struct TrialRecord {
  int m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int error_weight = 0;
  bool success = false;  // residual is a stabilizer product
};

struct BatchStats {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0.0;
  double ci_lo = 0.0;  // Wilson 95% interval
  double ci_hi = 0.0;
};

struct CurvePoint {
  double p = 0.0;
  double rate = 0.0;
  std::uint64_t trials = 0;
};

struct Curve {
  int m = 0;
  std::vector<CurvePoint> points;  // sorted by p
};

struct PairCrossing {
  int m_low = 0;
  int m_high = 0;
  double crossing = 0.0;
};

struct ThresholdEstimate {
  double p_th = 0.0;
  double spread = 0.0;  // max pairwise difference between crossings
  std::vector<PairCrossing> pairs;
};

// Stateless counter-based seed derivation, so batch results are independent
// of how trials are distributed over workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

BitVector sample_error(std::size_t n, double p, std::mt19937_64& rng);

TrialRecord run_trial(const Decoder& decoder, double p,
                      const DecodeConfig& config, std::uint64_t trial_seed);

// `workers` <= 0 means hardware concurrency. Bit-identical for any count.
BatchStats run_batch(const Decoder& decoder, double p, std::uint64_t trials,
                     std::uint64_t master_seed, int workers,
                     const DecodeConfig& config);

std::pair<double, double> wilson_interval(std::uint64_t failures,
                                          std::uint64_t trials,
                                          double z = 1.959963984540054);

// Crossing of log-rate curves for each adjacent size pair, by piecewise
// log-linear interpolation. Throws std::runtime_error("no crossing") when a
// pair does not intersect within the sampled p range.
ThresholdEstimate estimate_threshold(const std::vector<Curve>& curves);

}  // namespace colorcode

#endif  // COLORCODE_MONTECARLO_HPP
