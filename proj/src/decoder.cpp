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

#include "decoder.hpp"

#include <bit>
#include <stdexcept>

#include "cell.hpp"

namespace colorcode {

namespace {
constexpr int kBaseQubits = 18;
constexpr int kBaseChecks = 9;

std::uint32_t to_mask(const BitVector& v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) m |= std::uint32_t{1} << i;
  return m;
}
}  // namespace

Decoder::Decoder(const LatticeHierarchy& hierarchy) : hier_(hierarchy) {
  const BinaryMatrix& h = hier_.check_matrix(0);

  // Row-reduce [H | I] so the transform R with RREF(H) = R*H comes along.
  BinaryMatrix aug(kBaseChecks, kBaseQubits + kBaseChecks);
  for (int r = 0; r < kBaseChecks; ++r) {
    for (int c = 0; c < kBaseQubits; ++c) aug.set(r, c, h.get(r, c));
    aug.set(r, kBaseQubits + r, true);
  }
  GaussResult g = gauss_reduce(aug);

  std::vector<std::uint32_t> generators;
  for (std::size_t i = 0; i < g.rank; ++i) {
    BitVector transform(kBaseChecks);
    for (int c = 0; c < kBaseChecks; ++c)
      transform.set(c, g.reduced.get(i, kBaseQubits + c));
    if (g.pivots[i] < kBaseQubits) {
      solve_rows_.push_back(transform);
      solve_pivots_.push_back(g.pivots[i]);
      std::uint32_t mask = 0;
      for (int c = 0; c < kBaseQubits; ++c)
        if (g.reduced.get(i, c)) mask |= std::uint32_t{1} << c;
      generators.push_back(mask);
    } else {
      // Left-null row of H: a validity constraint on syndromes.
      invalid_rows_.push_back(solve_rows_.size());
      solve_rows_.push_back(transform);
    }
  }
  if (generators.size() != 7)
    throw std::logic_error("base check matrix rank != 7");

  stabilizers_[0] = 0;
  for (std::uint32_t t = 1; t < 128; ++t)
    stabilizers_[t] = stabilizers_[t & (t - 1)] ^ generators[std::countr_zero(t)];

  std::vector<BitVector> quotient = quotient_basis(h);
  if (quotient.size() != 4)
    throw std::logic_error("base code does not encode 4 qubits");
  std::array<std::uint32_t, 4> logical_gen{};
  for (int i = 0; i < 4; ++i) logical_gen[i] = to_mask(quotient[i]);
  logical_reps_[0] = 0;
  for (std::uint32_t t = 1; t < 16; ++t)
    logical_reps_[t] = logical_reps_[t & (t - 1)] ^ logical_gen[std::countr_zero(t)];
}

BaseMlResult Decoder::base_ml_decode(const std::vector<double>& priors,
                                     const BitVector& syndrome) const {
  if (priors.size() != kBaseQubits || syndrome.size() != kBaseChecks)
    throw std::invalid_argument("base_ml_decode: length mismatch");

  std::uint32_t rep = 0;
  std::size_t solve_index = 0;
  std::size_t invalid_cursor = 0;
  for (std::size_t i = 0; i < solve_rows_.size(); ++i) {
    bool y = solve_rows_[i].dot(syndrome);
    if (invalid_cursor < invalid_rows_.size() && invalid_rows_[invalid_cursor] == i) {
      if (y)
        throw std::runtime_error(
            "base_ml_decode: syndrome outside the image of the check matrix");
      ++invalid_cursor;
    } else {
      if (y) rep |= std::uint32_t{1} << solve_pivots_[solve_index];
      ++solve_index;
    }
  }

  // Relative pattern probabilities as products of odds, via two half tables.
  std::array<double, 18> odds;
  for (int i = 0; i < kBaseQubits; ++i) {
    double p = cell::clamp_prob(priors[i]);
    odds[i] = p / (1.0 - p);
  }
  std::array<double, 512> lo, hi;
  lo[0] = hi[0] = 1.0;
  for (std::uint32_t t = 1; t < 512; ++t) {
    int b = std::countr_zero(t);
    lo[t] = lo[t & (t - 1)] * odds[b];
    hi[t] = hi[t & (t - 1)] * odds[b + 9];
  }

  int best_class = 0;
  double best_prob = -1.0;
  for (int cls = 0; cls < 16; ++cls) {
    std::uint32_t base = rep ^ logical_reps_[cls];
    double total = 0.0;
    for (std::uint32_t stab : stabilizers_) {
      std::uint32_t pat = base ^ stab;
      total += lo[pat & 511] * hi[pat >> 9];
    }
    if (total > best_prob) {
      best_prob = total;
      best_class = cls;
    }
  }

  BaseMlResult result;
  result.class_index = best_class;
  result.estimate = BitVector(kBaseQubits);
  std::uint32_t chosen = rep ^ logical_reps_[best_class];
  for (int i = 0; i < kBaseQubits; ++i)
    if ((chosen >> i) & 1) result.estimate.set(i, true);
  return result;
}

LevelTrace Decoder::level_pass(int level, const std::vector<double>& priors,
                               const BitVector& syndrome,
                               const DecodeConfig& config,
                               std::mt19937_64& rng) const {
  if (level < 1)
    throw std::invalid_argument("level_pass: base level is not decomposed");
  const LevelGeometry& g = hier_.level(level);

  BeliefState state;
  state.priors = config.corner_lookahead
                     ? corner_lookahead(priors, g, syndrome)
                     : priors;
  state.beliefs = init_split_beliefs(state.priors, g);
  enforce_consistency(state, g, syndrome);

  if (config.mode == DecodeMode::Soft)
    for (int r = 0; r < config.split_rounds; ++r) split_round(state, g, syndrome);

  LevelTrace trace;
  trace.level = level;
  trace.splits = finalize_splits(state, g, syndrome, config.split_rule, rng);

  trace.estimates.resize(g.cells.size());
  for (std::size_t c = 0; c < g.cells.size(); ++c)
    trace.estimates[c] = cell::canonical_estimate(trace.splits[c]);

  // Coarse syndrome: the corner residual after the local corrections.
  const LevelGeometry& coarse = hier_.level(level - 1);
  trace.coarse_syndrome = BitVector(coarse.num_checks());
  for (const CornerInfo& corner : g.corners) {
    int bit = syndrome.get(corner.check) ? 1 : 0;
    for (int k = 0; k < 6; ++k)
      bit ^= (trace.estimates[corner.cell[k]] >> corner.corner_index[k]) & 1;
    trace.coarse_syndrome.set(corner.coarse_check, bit);
  }

  trace.coarse_priors.resize(g.cells.size());
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    std::array<double, 4> cell_priors;
    for (int k = 0; k < 4; ++k)
      cell_priors[k] = state.priors[g.cells[c].qubits[k]];
    double p = config.mode == DecodeMode::Soft
                   ? cell::rescaled_soft(state.beliefs[c], cell_priors)
                   : cell::rescaled_hard(trace.splits[c], cell_priors);
    trace.coarse_priors[c] = cell::clamp_prob(p);
  }
  return trace;
}

BitVector Decoder::expand_downward(const std::vector<LevelTrace>& traces,
                                   const BitVector& base_estimate) const {
  BitVector coarse = base_estimate;
  for (auto it = traces.rbegin(); it != traces.rend(); ++it) {
    const LevelGeometry& g = hier_.level(it->level);
    BitVector fine(g.num_qubits());
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      std::uint8_t mask = it->estimates[c];
      if (coarse.get(c)) mask ^= cell::kComplement;
      for (int k = 0; k < 4; ++k)
        if ((mask >> k) & 1) fine.set(g.cells[c].qubits[k], true);
    }
    coarse = std::move(fine);
  }
  return coarse;
}

DecodeResult Decoder::decode(const BitVector& syndrome, double p,
                             const DecodeConfig& config) const {
  const LevelGeometry& top = hier_.top();
  if (static_cast<int>(syndrome.size()) != top.num_checks())
    throw std::invalid_argument("decode: syndrome length mismatch");
  if (p < 0.0 || p > 0.5)
    throw std::invalid_argument("decode: channel error rate must be in [0, 0.5]");

  std::mt19937_64 rng(config.seed);
  std::vector<double> priors(top.num_qubits(), cell::clamp_prob(p));
  if (config.bp_iterations > 0)
    priors = bp_update(priors, top.check_qubits, syndrome, config.bp_iterations);

  DecodeResult result;
  result.config = config;
  BitVector syn = syndrome;
  for (int level = hier_.m(); level >= 1; --level) {
    result.traces.push_back(level_pass(level, priors, syn, config, rng));
    priors = result.traces.back().coarse_priors;
    syn = result.traces.back().coarse_syndrome;
  }
  BaseMlResult base = base_ml_decode(priors, syn);
  result.estimate = expand_downward(result.traces, base.estimate);
  return result;
}

}  // namespace colorcode
