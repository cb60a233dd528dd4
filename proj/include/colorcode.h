/* Copyright 2026 The colorcode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the hexagonal color-code decoding engine.
 *
 * A cc_code handle owns the lattice hierarchy and decoder tables for one code
 * size m (n = 18*4^m qubits). Handles are immutable after creation and may be
 * shared across threads. Bit arrays are uint8_t buffers, one byte per bit;
 * qubits are enumerated square-major (y outer, x inner, Lower triangle before
 * Upper), checks row-major by vertex.
 */

#ifndef COLORCODE_H
#define COLORCODE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_ERR_INVALID_ARGUMENT = 1,
  CC_ERR_LENGTH_MISMATCH = 2,
  CC_ERR_INVALID_SYNDROME = 3,
  CC_ERR_NO_CROSSING = 4,
  CC_ERR_INTERNAL = 5
} cc_status;

/* Static string for a status code. */
const char* cc_status_message(cc_status status);

/* Message of the most recent failure on this thread (empty string if none). */
const char* cc_last_error(void);

typedef struct cc_code cc_code;

cc_status cc_code_create(int m, cc_code** out);
void cc_code_free(cc_code* code);

int cc_code_m(const cc_code* code);
int cc_code_num_qubits(const cc_code* code);   /* top level, 18*4^m */
int cc_code_num_checks(const cc_code* code);   /* top level, 9*4^m */
int cc_code_num_logical(const cc_code* code);  /* always 4 */
int cc_code_distance(const cc_code* code);     /* 2^(m+2) */
int cc_code_num_levels(const cc_code* code);   /* m + 1 */

/* Level l in [0, m]; 0 is the coarsest (L = 3). */
cc_status cc_code_level_info(const cc_code* code, int level, int* side,
                             int* num_qubits, int* num_checks);

/* syndrome_out has cc_code_num_checks entries. */
cc_status cc_syndrome(const cc_code* code, const uint8_t* error_bits,
                      uint8_t* syndrome_out);

/* 1 if the pattern is a product of stabilizer generators, else 0. */
cc_status cc_is_stabilizer(const cc_code* code, const uint8_t* pattern,
                           int* result);

/* Independent bit flips with probability p, reproducible from the seed. */
cc_status cc_sample_error(const cc_code* code, double p, uint64_t seed,
                          uint8_t* error_out);

#define CC_MODE_HARD 0
#define CC_MODE_SOFT 1
#define CC_SPLIT_MOST_LIKELY 0
#define CC_SPLIT_SAMPLED 1

typedef struct cc_decode_config {
  int mode;             /* CC_MODE_* */
  int bp_iterations;
  int split_rounds;
  int split_rule;       /* CC_SPLIT_* */
  int corner_lookahead; /* 0 or 1 */
  uint64_t seed;
} cc_decode_config;

/* Defaults: soft mode, 2 BP iterations, 3 split rounds, most-likely splits,
 * corner look-ahead on, seed 0. */
void cc_decode_config_init(cc_decode_config* config);

/* estimate_out has cc_code_num_qubits entries; its syndrome always equals the
 * input. split_counts (optional, length m, level m first) receives the number
 * of cell-side syndrome shares set to 1 at each level. */
cc_status cc_decode(const cc_code* code, const uint8_t* syndrome, double p,
                    const cc_decode_config* config, uint8_t* estimate_out,
                    uint32_t* split_counts);

typedef struct cc_batch_stats {
  uint64_t trials;
  uint64_t failures;
  double rate;
  double ci_lo; /* Wilson 95% */
  double ci_hi;
} cc_batch_stats;

/* Monte Carlo batch; per-trial seeds derive from (master_seed, index), so the
 * result is bit-identical for any worker count. workers <= 0 selects the
 * hardware concurrency. */
cc_status cc_run_batch(const cc_code* code, double p, uint64_t trials,
                       uint64_t master_seed, int workers,
                       const cc_decode_config* config, cc_batch_stats* out);

typedef struct cc_curve_point {
  int m;
  double p;
  double rate;
  uint64_t trials;
} cc_curve_point;

typedef struct cc_threshold_pair {
  int m_low;
  int m_high;
  double crossing;
} cc_threshold_pair;

/* Threshold from failure-rate curves: log-linear crossing per adjacent size
 * pair, mean and max pairwise spread. pairs_out may be NULL; otherwise it
 * receives up to pairs_capacity entries and *num_pairs the true count. */
cc_status cc_estimate_threshold(const cc_curve_point* points, size_t num_points,
                                double* p_th, double* spread,
                                cc_threshold_pair* pairs_out,
                                size_t pairs_capacity, size_t* num_pairs);

/* 1 iff a side-n triangular cell admits an interior pattern flipping exactly
 * its three corner checks (true exactly when n mod 3 != 0). */
cc_status cc_verify_rescalable(int n, int* rescalable);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COLORCODE_H */
