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

#include <set>

#include "montecarlo.hpp"

using namespace colorcode;

TEST_CASE("derive_seed is deterministic and collision-free over a range") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    std::uint64_t s = derive_seed(42, i);
    CHECK(s == derive_seed(42, i));
    seen.insert(s);
  }
  CHECK(seen.size() == 10000);
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("sample_error statistics") {
  std::mt19937_64 rng(1);
  std::size_t total = 0;
  for (int rep = 0; rep < 200; ++rep) total += sample_error(1000, 0.1, rng).weight();
  double mean = static_cast<double>(total) / 200.0;
  CHECK(mean > 90.0);
  CHECK(mean < 110.0);
  CHECK(sample_error(64, 0.0, rng).is_zero());
}

TEST_CASE("wilson_interval frozen values") {
  auto [lo0, hi0] = wilson_interval(0, 100);
  CHECK(lo0 == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(hi0 == doctest::Approx(0.03699349820698568).epsilon(1e-12));
  auto [lo10, hi10] = wilson_interval(10, 100);
  CHECK(lo10 == doctest::Approx(0.0552291370606751).epsilon(1e-12));
  CHECK(hi10 == doctest::Approx(0.17436566150491345).epsilon(1e-12));
  // The interval brackets the point estimate.
  CHECK(lo10 < 0.1);
  CHECK(hi10 > 0.1);
}

TEST_CASE("run_trial success means a stabilizer residual") {
  LatticeHierarchy hier(1);
  Decoder dec(hier);
  DecodeConfig cfg;
  int successes = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRecord r = run_trial(dec, 0.02, cfg, derive_seed(7, t));
    CHECK(r.m == 1);
    CHECK(r.p == 0.02);
    if (r.success) ++successes;
  }
  CHECK(successes > 40);  // p = 0.02 is deep below threshold
}

TEST_CASE("run_batch is independent of the worker count") {
  LatticeHierarchy hier(1);
  Decoder dec(hier);
  DecodeConfig cfg;
  BatchStats one = run_batch(dec, 0.08, 300, 99, 1, cfg);
  BatchStats four = run_batch(dec, 0.08, 300, 99, 4, cfg);
  BatchStats def = run_batch(dec, 0.08, 300, 99, 0, cfg);
  CHECK(one.failures == four.failures);
  CHECK(one.failures == def.failures);
  CHECK(one.trials == 300);
  CHECK(one.rate == doctest::Approx(one.failures / 300.0).epsilon(1e-12));
  CHECK(one.ci_lo <= one.rate);
  CHECK(one.ci_hi >= one.rate);
  CHECK_THROWS_AS(run_batch(dec, 0.08, 0, 1, 1, cfg), std::invalid_argument);
}

TEST_CASE("estimate_threshold on synthetic crossing curves") {
  Curve a, b;
  a.m = 1;
  a.points = {{0.1, 0.01, 100000}, {0.2, 0.04, 100000}};
  b.m = 2;
  b.points = {{0.1, 0.001, 100000}, {0.2, 0.16, 100000}};
  ThresholdEstimate est = estimate_threshold({a, b});
  REQUIRE(est.pairs.size() == 1);
  CHECK(est.pairs[0].m_low == 1);
  CHECK(est.pairs[0].m_high == 2);
  CHECK(est.p_th == doctest::Approx(0.1624196350581785).epsilon(1e-12));
  CHECK(est.spread == 0.0);
}

TEST_CASE("estimate_threshold averages adjacent pairs") {
  Curve a, b, c;
  a.m = 1;
  a.points = {{0.1, 0.01, 1000}, {0.3, 0.04, 1000}};
  b.m = 2;
  b.points = {{0.1, 0.001, 1000}, {0.3, 0.16, 1000}};
  c.m = 3;
  c.points = {{0.1, 0.0001, 1000}, {0.3, 0.64, 1000}};
  ThresholdEstimate est = estimate_threshold({c, a, b});  // order-insensitive
  REQUIRE(est.pairs.size() == 2);
  CHECK(est.pairs[0].m_low == 1);
  CHECK(est.pairs[1].m_high == 3);
  CHECK(est.p_th ==
        doctest::Approx((est.pairs[0].crossing + est.pairs[1].crossing) / 2)
            .epsilon(1e-12));
  CHECK(est.spread ==
        doctest::Approx(std::abs(est.pairs[0].crossing - est.pairs[1].crossing))
            .epsilon(1e-12));
}

TEST_CASE("estimate_threshold reports a missing crossing") {
  Curve a, b;
  a.m = 1;
  a.points = {{0.1, 0.01, 1000}, {0.2, 0.02, 1000}};
  b.m = 2;
  b.points = {{0.1, 0.001, 1000}, {0.2, 0.002, 1000}};  // strictly below
  CHECK_THROWS_AS(estimate_threshold({a, b}), std::runtime_error);
  CHECK_THROWS_AS(estimate_threshold({a}), std::invalid_argument);
}

TEST_CASE("zero-failure points use the half-count floor") {
  // Curve b has a zero rate at the first point; with the 0.5/trials floor the
  // log-difference is finite and a crossing exists.
  Curve a, b;
  a.m = 1;
  a.points = {{0.1, 0.01, 1000}, {0.2, 0.04, 1000}};
  b.m = 2;
  b.points = {{0.1, 0.0, 1000}, {0.2, 0.16, 1000}};
  ThresholdEstimate est = estimate_threshold({a, b});
  CHECK(est.p_th > 0.1);
  CHECK(est.p_th < 0.2);
}
