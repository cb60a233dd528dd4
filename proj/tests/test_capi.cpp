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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "colorcode.h"

namespace {

struct Handle {
  cc_code* code = nullptr;
  explicit Handle(int m) { REQUIRE(cc_code_create(m, &code) == CC_OK); }
  ~Handle() { cc_code_free(code); }
};

}  // namespace

TEST_CASE("code parameters through the C API") {
  Handle h(1);
  CHECK(cc_code_m(h.code) == 1);
  CHECK(cc_code_num_qubits(h.code) == 72);
  CHECK(cc_code_num_checks(h.code) == 36);
  CHECK(cc_code_num_logical(h.code) == 4);
  CHECK(cc_code_distance(h.code) == 8);
  CHECK(cc_code_num_levels(h.code) == 2);

  int side = 0, nq = 0, nc = 0;
  CHECK(cc_code_level_info(h.code, 0, &side, &nq, &nc) == CC_OK);
  CHECK(side == 3);
  CHECK(nq == 18);
  CHECK(nc == 9);
  CHECK(cc_code_level_info(h.code, 5, &side, &nq, &nc) ==
        CC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sample, syndrome, decode round trip") {
  Handle h(1);
  std::vector<uint8_t> error(72), syndrome(36), estimate(72), residual(72);
  REQUIRE(cc_sample_error(h.code, 0.06, 77, error.data()) == CC_OK);
  REQUIRE(cc_syndrome(h.code, error.data(), syndrome.data()) == CC_OK);

  cc_decode_config cfg;
  cc_decode_config_init(&cfg);
  CHECK(cfg.mode == CC_MODE_SOFT);
  CHECK(cfg.bp_iterations == 2);
  CHECK(cfg.split_rounds == 3);
  CHECK(cfg.split_rule == CC_SPLIT_MOST_LIKELY);
  CHECK(cfg.corner_lookahead == 1);

  uint32_t split_counts[1] = {0};
  REQUIRE(cc_decode(h.code, syndrome.data(), 0.06, &cfg, estimate.data(),
                    split_counts) == CC_OK);

  // The estimate reproduces the syndrome.
  std::vector<uint8_t> syndrome2(36);
  REQUIRE(cc_syndrome(h.code, estimate.data(), syndrome2.data()) == CC_OK);
  CHECK(syndrome2 == syndrome);

  // A stabilizer pattern has an all-zero syndrome and passes cc_is_stabilizer.
  for (int i = 0; i < 72; ++i) residual[i] = error[i] ^ estimate[i];
  int is_stab = -1;
  std::vector<uint8_t> rsynd(36);
  REQUIRE(cc_is_stabilizer(h.code, residual.data(), &is_stab) == CC_OK);
  REQUIRE(cc_syndrome(h.code, residual.data(), rsynd.data()) == CC_OK);
  bool zero = true;
  for (uint8_t b : rsynd) zero = zero && b == 0;
  CHECK(zero);
  CHECK((is_stab == 0 || is_stab == 1));
}

TEST_CASE("decode is reproducible and null-safe") {
  Handle h(1);
  std::vector<uint8_t> error(72), syndrome(36), e1(72), e2(72);
  REQUIRE(cc_sample_error(h.code, 0.08, 5, error.data()) == CC_OK);
  REQUIRE(cc_syndrome(h.code, error.data(), syndrome.data()) == CC_OK);
  REQUIRE(cc_decode(h.code, syndrome.data(), 0.08, nullptr, e1.data(),
                    nullptr) == CC_OK);
  REQUIRE(cc_decode(h.code, syndrome.data(), 0.08, nullptr, e2.data(),
                    nullptr) == CC_OK);
  CHECK(e1 == e2);
  CHECK(cc_decode(h.code, nullptr, 0.08, nullptr, e1.data(), nullptr) ==
        CC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("invalid syndrome is rejected with a message") {
  Handle h(1);
  std::vector<uint8_t> syndrome(36, 0);
  syndrome[0] = 1;  // a single fired check violates the color parities
  std::vector<uint8_t> estimate(72);
  CHECK(cc_decode(h.code, syndrome.data(), 0.05, nullptr, estimate.data(),
                  nullptr) == CC_ERR_INVALID_SYNDROME);
  CHECK(std::strlen(cc_last_error()) > 0);
}

TEST_CASE("invalid construction arguments") {
  cc_code* code = nullptr;
  CHECK(cc_code_create(-1, &code) == CC_ERR_INVALID_ARGUMENT);
  CHECK(code == nullptr);
  CHECK(cc_code_create(1, nullptr) == CC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("batch statistics and worker independence") {
  Handle h(1);
  cc_batch_stats s1, s3;
  REQUIRE(cc_run_batch(h.code, 0.08, 200, 11, 1, nullptr, &s1) == CC_OK);
  REQUIRE(cc_run_batch(h.code, 0.08, 200, 11, 3, nullptr, &s3) == CC_OK);
  CHECK(s1.failures == s3.failures);
  CHECK(s1.trials == 200);
  CHECK(s1.rate == doctest::Approx(s1.failures / 200.0));
  CHECK(s1.ci_lo <= s1.rate);
  CHECK(s1.ci_hi >= s1.rate);
}

TEST_CASE("threshold estimation through the C API") {
  std::vector<cc_curve_point> pts = {
      {1, 0.1, 0.01, 100000},  {1, 0.2, 0.04, 100000},
      {2, 0.1, 0.001, 100000}, {2, 0.2, 0.16, 100000},
  };
  double p_th = 0.0, spread = -1.0;
  cc_threshold_pair pairs[4];
  size_t num_pairs = 0;
  REQUIRE(cc_estimate_threshold(pts.data(), pts.size(), &p_th, &spread, pairs,
                                4, &num_pairs) == CC_OK);
  CHECK(num_pairs == 1);
  CHECK(pairs[0].m_low == 1);
  CHECK(pairs[0].m_high == 2);
  CHECK(p_th == doctest::Approx(0.1624196350581785).epsilon(1e-12));
  CHECK(spread == 0.0);

  // Parallel curves: no crossing.
  std::vector<cc_curve_point> flat = {
      {1, 0.1, 0.01, 1000}, {1, 0.2, 0.02, 1000},
      {2, 0.1, 0.001, 1000}, {2, 0.2, 0.002, 1000},
  };
  CHECK(cc_estimate_threshold(flat.data(), flat.size(), &p_th, &spread, nullptr,
                              0, nullptr) == CC_ERR_NO_CROSSING);
}

TEST_CASE("rescalability through the C API") {
  for (int n = 1; n <= 8; ++n) {
    int r = -1;
    REQUIRE(cc_verify_rescalable(n, &r) == CC_OK);
    CHECK(r == (n % 3 != 0 ? 1 : 0));
  }
}
