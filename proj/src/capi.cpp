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

#include "colorcode.h"

#include <bit>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>

#include "decoder.hpp"
#include "lattice.hpp"
#include "montecarlo.hpp"

using namespace colorcode;

struct cc_code {
  LatticeHierarchy hierarchy;
  Decoder decoder;

  explicit cc_code(int m) : hierarchy(m), decoder(hierarchy) {}
};

namespace {

thread_local std::string g_last_error;

cc_status fail(cc_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
cc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(CC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CC_ERR_INTERNAL, e.what());
  }
}

BitVector to_bitvector(const uint8_t* bits, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (bits[i]) v.set(i, true);
  return v;
}

void from_bitvector(const BitVector& v, uint8_t* out) {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i) ? 1 : 0;
}

DecodeConfig to_config(const cc_decode_config* c) {
  DecodeConfig cfg;
  if (!c) return cfg;
  cfg.mode = c->mode == CC_MODE_HARD ? DecodeMode::Hard : DecodeMode::Soft;
  cfg.bp_iterations = c->bp_iterations;
  cfg.split_rounds = c->split_rounds;
  cfg.split_rule = c->split_rule == CC_SPLIT_SAMPLED ? SplitRule::Sampled
                                                     : SplitRule::MostLikely;
  cfg.corner_lookahead = c->corner_lookahead != 0;
  cfg.seed = c->seed;
  return cfg;
}

}  // namespace

extern "C" {

const char* cc_status_message(cc_status status) {
  switch (status) {
    case CC_OK: return "ok";
    case CC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CC_ERR_LENGTH_MISMATCH: return "length mismatch";
    case CC_ERR_INVALID_SYNDROME: return "syndrome outside the check-matrix image";
    case CC_ERR_NO_CROSSING: return "no crossing";
    case CC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cc_last_error(void) { return g_last_error.c_str(); }

cc_status cc_code_create(int m, cc_code** out) {
  if (!out) return fail(CC_ERR_INVALID_ARGUMENT, "out must not be null");
  *out = nullptr;
  return guarded([&] {
    *out = new cc_code(m);
    return CC_OK;
  });
}

void cc_code_free(cc_code* code) { delete code; }

int cc_code_m(const cc_code* code) { return code->hierarchy.m(); }
int cc_code_num_qubits(const cc_code* code) {
  return code->hierarchy.top().num_qubits();
}
int cc_code_num_checks(const cc_code* code) {
  return code->hierarchy.top().num_checks();
}
int cc_code_num_logical(const cc_code*) { return 4; }
int cc_code_distance(const cc_code* code) {
  return 1 << (code->hierarchy.m() + 2);
}
int cc_code_num_levels(const cc_code* code) {
  return code->hierarchy.num_levels();
}

cc_status cc_code_level_info(const cc_code* code, int level, int* side,
                             int* num_qubits, int* num_checks) {
  if (!code || level < 0 || level > code->hierarchy.m())
    return fail(CC_ERR_INVALID_ARGUMENT, "level out of range");
  const LevelGeometry& g = code->hierarchy.level(level);
  if (side) *side = g.L;
  if (num_qubits) *num_qubits = g.num_qubits();
  if (num_checks) *num_checks = g.num_checks();
  return CC_OK;
}

cc_status cc_syndrome(const cc_code* code, const uint8_t* error_bits,
                      uint8_t* syndrome_out) {
  if (!code || !error_bits || !syndrome_out)
    return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    BitVector e = to_bitvector(error_bits, code->hierarchy.top().num_qubits());
    from_bitvector(code->hierarchy.syndrome_of(code->hierarchy.m(), e),
                   syndrome_out);
    return CC_OK;
  });
}

cc_status cc_is_stabilizer(const cc_code* code, const uint8_t* pattern,
                           int* result) {
  if (!code || !pattern || !result)
    return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    BitVector v = to_bitvector(pattern, code->hierarchy.top().num_qubits());
    *result = code->hierarchy.stabilizer_reducer().contains(v) ? 1 : 0;
    return CC_OK;
  });
}

cc_status cc_sample_error(const cc_code* code, double p, uint64_t seed,
                          uint8_t* error_out) {
  if (!code || !error_out)
    return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  if (p < 0.0 || p > 1.0)
    return fail(CC_ERR_INVALID_ARGUMENT, "p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  from_bitvector(sample_error(code->hierarchy.top().num_qubits(), p, rng),
                 error_out);
  return CC_OK;
}

void cc_decode_config_init(cc_decode_config* config) {
  if (!config) return;
  config->mode = CC_MODE_SOFT;
  config->bp_iterations = 2;
  config->split_rounds = 3;
  config->split_rule = CC_SPLIT_MOST_LIKELY;
  config->corner_lookahead = 1;
  config->seed = 0;
}

cc_status cc_decode(const cc_code* code, const uint8_t* syndrome, double p,
                    const cc_decode_config* config, uint8_t* estimate_out,
                    uint32_t* split_counts) {
  if (!code || !syndrome || !estimate_out)
    return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    BitVector s = to_bitvector(syndrome, code->hierarchy.top().num_checks());
    try {
      DecodeResult result = code->decoder.decode(s, p, to_config(config));
      from_bitvector(result.estimate, estimate_out);
      if (split_counts) {
        for (std::size_t i = 0; i < result.traces.size(); ++i) {
          uint32_t count = 0;
          for (std::uint8_t split : result.traces[i].splits)
            count += std::popcount(static_cast<unsigned>(split));
          split_counts[i] = count;
        }
      }
      return CC_OK;
    } catch (const std::runtime_error& e) {
      return fail(CC_ERR_INVALID_SYNDROME, e.what());
    }
  });
}

cc_status cc_run_batch(const cc_code* code, double p, uint64_t trials,
                       uint64_t master_seed, int workers,
                       const cc_decode_config* config, cc_batch_stats* out) {
  if (!code || !out) return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    BatchStats stats =
        run_batch(code->decoder, p, trials, master_seed, workers, to_config(config));
    out->trials = stats.trials;
    out->failures = stats.failures;
    out->rate = stats.rate;
    out->ci_lo = stats.ci_lo;
    out->ci_hi = stats.ci_hi;
    return CC_OK;
  });
}

cc_status cc_estimate_threshold(const cc_curve_point* points, size_t num_points,
                                double* p_th, double* spread,
                                cc_threshold_pair* pairs_out,
                                size_t pairs_capacity, size_t* num_pairs) {
  if (!points || !p_th || !spread)
    return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::map<int, Curve> by_size;
    for (size_t i = 0; i < num_points; ++i) {
      Curve& c = by_size[points[i].m];
      c.m = points[i].m;
      c.points.push_back({points[i].p, points[i].rate, points[i].trials});
    }
    std::vector<Curve> curves;
    for (auto& [m, c] : by_size) {
      std::sort(c.points.begin(), c.points.end(),
                [](const CurvePoint& a, const CurvePoint& b) { return a.p < b.p; });
      curves.push_back(std::move(c));
    }
    try {
      ThresholdEstimate est = estimate_threshold(curves);
      *p_th = est.p_th;
      *spread = est.spread;
      if (num_pairs) *num_pairs = est.pairs.size();
      if (pairs_out) {
        for (size_t i = 0; i < est.pairs.size() && i < pairs_capacity; ++i) {
          pairs_out[i].m_low = est.pairs[i].m_low;
          pairs_out[i].m_high = est.pairs[i].m_high;
          pairs_out[i].crossing = est.pairs[i].crossing;
        }
      }
      return CC_OK;
    } catch (const std::runtime_error& e) {
      return fail(CC_ERR_NO_CROSSING, e.what());
    }
  });
}

cc_status cc_verify_rescalable(int n, int* rescalable) {
  if (!rescalable) return fail(CC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *rescalable = verify_rescalable(n) ? 1 : 0;
    return CC_OK;
  });
}

}  // extern "C"
